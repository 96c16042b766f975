#pragma once

#include <stdexcept>
#include <string>

namespace mci {

enum class ErrorKind {
  invalid_input,
  signature_mismatch,
  unsupported_check,
  bad_prime,
  ideal_invalid,
  ideal_not_unary_stable,
  precondition_violation,
  internal,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace mci
