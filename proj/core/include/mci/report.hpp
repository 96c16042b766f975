#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace mci {

using json = nlohmann::json;

enum class Status { pass, fail, not_checked, holds_by_construction };

const char* to_string(Status s);

struct CheckEntry {
  std::string name;
  Status status = Status::pass;
  json witness;  // null when absent
};

/// Outcome of a check command: one entry per named check, plus free-form
/// details. The verdict fails iff some entry failed; otherwise any
/// "not-checked" entry makes the verdict not-checked, never pass.
class Report {
 public:
  explicit Report(std::string command = {}) : command_(std::move(command)) {}

  void add(std::string name, Status status, json witness = nullptr);
  void add_pass(std::string name) { add(std::move(name), Status::pass); }
  void add_fail(std::string name, json witness) { add(std::move(name), Status::fail, std::move(witness)); }
  void add_not_checked(std::string name, std::string reason) {
    add(std::move(name), Status::not_checked, json{{"reason", std::move(reason)}});
  }
  void add_by_construction(std::string name) { add(std::move(name), Status::holds_by_construction); }
  /// Adds a pass entry when `witness` is null, otherwise a fail entry.
  void add_check(std::string name, json witness);

  /// Appends the entries of `other`, prefixing their names.
  void merge(const Report& other, const std::string& prefix = {});

  Status verdict() const;
  bool passed() const { return verdict() == Status::pass; }
  bool failed() const { return verdict() == Status::fail; }

  const std::string& command() const { return command_; }
  void set_command(std::string c) { command_ = std::move(c); }
  const std::vector<CheckEntry>& entries() const { return entries_; }
  const CheckEntry* find(const std::string& name) const;
  /// First failing entry, if any.
  const CheckEntry* first_failure() const;

  json& details() { return details_; }
  const json& details() const { return details_; }

  void set_timing_ms(double ms) { timing_ms_ = ms; }
  json to_json(bool include_timing = true) const;

 private:
  std::string command_;
  std::vector<CheckEntry> entries_;
  json details_ = json::object();
  double timing_ms_ = 0.0;
};

/// Upper bound on evaluated tuples in exhaustive checks (default 2^24,
/// overridable via MCI_ENUM_CAP).
std::uint64_t enumeration_cap();

/// Temporarily overrides the enumeration cap (tests).
class ScopedEnumerationCap {
 public:
  explicit ScopedEnumerationCap(std::uint64_t cap);
  ~ScopedEnumerationCap();
  ScopedEnumerationCap(const ScopedEnumerationCap&) = delete;
  ScopedEnumerationCap& operator=(const ScopedEnumerationCap&) = delete;

 private:
  std::uint64_t previous_;
};

/// a^b saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t a, std::uint64_t b);

}  // namespace mci
