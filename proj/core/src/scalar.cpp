#include "mci/scalar.hpp"

#include <charconv>

#include "mci/errors.hpp"

namespace mci {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_input: return "invalid-input";
    case ErrorKind::signature_mismatch: return "signature-mismatch";
    case ErrorKind::unsupported_check: return "unsupported-check";
    case ErrorKind::bad_prime: return "bad-prime";
    case ErrorKind::ideal_invalid: return "ideal-invalid";
    case ErrorKind::ideal_not_unary_stable: return "ideal-not-unary-stable";
    case ErrorKind::precondition_violation: return "precondition-violation";
    case ErrorKind::internal: return "internal-error";
  }
  return "unknown";
}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p) || p > kMaxPrime)
    fail(ErrorKind::invalid_input, "field modulus must be a prime <= 97, got " + std::to_string(p));
  Field f;
  f.modulus_ = p;
  return f;
}

std::string Field::name() const { return is_rational() ? "Q" : "F" + std::to_string(modulus_); }

namespace {

std::uint32_t reduce(long value, std::uint32_t p) {
  long r = value % static_cast<long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t reduce(const mpz_class& value, std::uint32_t p) {
  mpz_class r = value % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // Fermat; p is tiny.
  std::uint64_t result = 1, base = a, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

Scalar Scalar::zero(const Field& f) { return from_int(f, 0); }
Scalar Scalar::one(const Field& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const Field& f, long value) {
  Scalar s;
  s.modulus_ = f.characteristic();
  if (s.modulus_ == 0)
    s.value_ = value;
  else
    s.residue_ = reduce(value, s.modulus_);
  return s;
}

Scalar Scalar::from_rational(const Field& f, const mpq_class& q) {
  Scalar s;
  s.modulus_ = f.characteristic();
  if (s.modulus_ == 0) {
    s.value_ = q;
    s.value_.canonicalize();
    return s;
  }
  std::uint32_t den = reduce(q.get_den(), s.modulus_);
  if (den == 0)
    fail(ErrorKind::bad_prime, "denominator of " + q.get_str() + " is divisible by " +
                                   std::to_string(s.modulus_));
  std::uint64_t num = reduce(q.get_num(), s.modulus_);
  s.residue_ = static_cast<std::uint32_t>(num * inverse_mod(den, s.modulus_) % s.modulus_);
  return s;
}

Scalar Scalar::parse(const Field& f, std::string_view text) {
  auto trimmed = text;
  while (!trimmed.empty() && trimmed.front() == ' ') trimmed.remove_prefix(1);
  while (!trimmed.empty() && trimmed.back() == ' ') trimmed.remove_suffix(1);
  if (trimmed.empty()) fail(ErrorKind::invalid_input, "empty scalar");
  mpq_class q;
  try {
    std::string s(trimmed);
    if (s.front() == '+') s.erase(0, 1);
    if (q.set_str(s, 10) != 0) throw std::invalid_argument(s);
    if (q.get_den() == 0) throw std::invalid_argument(s);
  } catch (const std::invalid_argument&) {
    fail(ErrorKind::invalid_input, "malformed scalar '" + std::string(text) + "'");
  }
  q.canonicalize();
  return from_rational(f, q);
}

bool Scalar::is_zero() const { return modulus_ == 0 ? value_ == 0 : residue_ == 0; }
bool Scalar::is_one() const { return modulus_ == 0 ? value_ == 1 : residue_ == 1; }

void Scalar::check_same_field(const Scalar& other) const {
  if (modulus_ != other.modulus_)
    fail(ErrorKind::signature_mismatch, "scalars from different fields: " + field().name() +
                                            " vs " + other.field().name());
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (modulus_ == 0)
    r.value_ = -value_;
  else
    r.residue_ = residue_ == 0 ? 0 : modulus_ - residue_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  check_same_field(other);
  if (modulus_ == 0)
    value_ += other.value_;
  else
    residue_ = (residue_ + other.residue_) % modulus_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  check_same_field(other);
  if (modulus_ == 0)
    value_ -= other.value_;
  else
    residue_ = (residue_ + modulus_ - other.residue_) % modulus_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  check_same_field(other);
  if (modulus_ == 0)
    value_ *= other.value_;
  else
    residue_ = static_cast<std::uint32_t>(std::uint64_t{residue_} * other.residue_ % modulus_);
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(ErrorKind::internal, "division by zero");
  Scalar r = *this;
  if (modulus_ == 0)
    r.value_ = 1 / value_;
  else
    r.residue_ = inverse_mod(residue_, modulus_);
  return r;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  check_same_field(other);
  return *this *= other.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.modulus_ != b.modulus_) return false;
  return a.modulus_ == 0 ? a.value_ == b.value_ : a.residue_ == b.residue_;
}

std::string Scalar::to_string() const {
  if (modulus_ != 0) return std::to_string(residue_);
  return value_.get_str();
}

}  // namespace mci
