#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace mci {

/// Coefficient field of a linear object: either the rationals or F_p for a
/// prime p <= 97.
class Field {
 public:
  static constexpr std::uint32_t kMaxPrime = 97;

  Field() = default;
  static Field rationals() { return Field{}; }
  static Field prime(std::uint32_t p);

  bool is_rational() const { return modulus_ == 0; }
  std::uint32_t characteristic() const { return modulus_; }

  /// "Q" or "F3" etc.
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  std::uint32_t modulus_ = 0;
};

bool is_prime(std::uint32_t n);

/// An exact field element. Rationals are kept in lowest terms with a positive
/// denominator (GMP canonical form); residues live in [0, p).
class Scalar {
 public:
  Scalar() = default;

  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar from_int(const Field& f, long value);
  static Scalar from_rational(const Field& f, const mpq_class& q);

  /// Parses "a", "-a" or "a/b". Over F_p the denominator must be invertible.
  static Scalar parse(const Field& f, std::string_view text);

  Field field() const { return modulus_ == 0 ? Field::rationals() : Field::prime(modulus_); }
  bool is_zero() const;
  bool is_one() const;

  /// Rational value (only meaningful over Q).
  const mpq_class& rational() const { return value_; }
  /// Residue in [0, p) (only meaningful over F_p).
  std::uint32_t residue() const { return residue_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// "a/b" (or "a" when integral) over Q; the residue over F_p.
  std::string to_string() const;

 private:
  void check_same_field(const Scalar& other) const;

  std::uint32_t modulus_ = 0;
  std::uint32_t residue_ = 0;
  mpq_class value_;
};

}  // namespace mci
