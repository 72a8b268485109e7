#pragma once

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace gridtrail {

using Rational = mpq_class;
using Integer = mpz_class;

/// Exact element of the number field Q(sqrt2, sqrt3), stored as
/// q0 + q1*sqrt2 + q2*sqrt3 + q3*sqrt6 with canonical rational coefficients.
///
/// The basis {1, sqrt2, sqrt3, sqrt6} is linearly independent over Q, so
/// equality is component-wise and the ordering below is decided exactly.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(std::int64_t value);  // NOLINT(google-explicit-constructor)
  explicit QuadExt(const Rational& value);
  QuadExt(Rational q0, Rational q1, Rational q2, Rational q3);

  static QuadExt sqrt2();
  static QuadExt sqrt3();
  static QuadExt sqrt6();

  /// Coefficient of basis element i (0 -> 1, 1 -> sqrt2, 2 -> sqrt3, 3 -> sqrt6).
  const Rational& coeff(std::size_t i) const { return c_[i]; }
  const std::array<Rational, 4>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;

  QuadExt& operator+=(const QuadExt& rhs);
  QuadExt& operator-=(const QuadExt& rhs);
  QuadExt& operator*=(const QuadExt& rhs);
  QuadExt& operator/=(const QuadExt& rhs);

  friend QuadExt operator+(QuadExt lhs, const QuadExt& rhs) { return lhs += rhs; }
  friend QuadExt operator-(QuadExt lhs, const QuadExt& rhs) { return lhs -= rhs; }
  friend QuadExt operator*(QuadExt lhs, const QuadExt& rhs) { return lhs *= rhs; }
  friend QuadExt operator/(QuadExt lhs, const QuadExt& rhs) { return lhs /= rhs; }
  QuadExt operator-() const;

  /// Multiplicative inverse. Throws DomainError for zero.
  QuadExt inverse() const;

  friend bool operator==(const QuadExt& a, const QuadExt& b) { return a.c_ == b.c_; }
  friend std::strong_ordering operator<=>(const QuadExt& a, const QuadExt& b);

  /// Human readable form, e.g. "1 - sqrt2" or "2*sqrt3 - 1/2*sqrt6".
  std::string to_string() const;

  /// Decimal approximation with `digits` significant digits. Display only.
  std::string to_decimal(int digits) const;
  double to_double() const;

 private:
  void canonicalize();

  std::array<Rational, 4> c_{};
};

/// Exact sign of a real number in Q(sqrt2, sqrt3): -1, 0 or +1.
int sign(const QuadExt& x);

/// Exact sign of a + b*sqrt2.
int sign_sqrt2(const Rational& a, const Rational& b);

std::ostream& operator<<(std::ostream& os, const QuadExt& x);

}  // namespace gridtrail
