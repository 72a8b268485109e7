#include "gridtrail/quad_ext.hpp"

#include <cassert>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "gridtrail/errors.hpp"

namespace gridtrail {

namespace {

int sgn(const Rational& q) { return ::sgn(q); }

}  // namespace

QuadExt::QuadExt(std::int64_t value) {
  c_[0] = Rational(static_cast<long>(value));
}

QuadExt::QuadExt(const Rational& value) {
  c_[0] = value;
  canonicalize();
}

QuadExt::QuadExt(Rational q0, Rational q1, Rational q2, Rational q3)
    : c_{std::move(q0), std::move(q1), std::move(q2), std::move(q3)} {
  canonicalize();
}

QuadExt QuadExt::sqrt2() { return {0, 1, 0, 0}; }
QuadExt QuadExt::sqrt3() { return {0, 0, 1, 0}; }
QuadExt QuadExt::sqrt6() { return {0, 0, 0, 1}; }

void QuadExt::canonicalize() {
  for (auto& q : c_) q.canonicalize();
}

bool QuadExt::is_zero() const {
  return sgn(c_[0]) == 0 && sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

bool QuadExt::is_rational() const {
  return sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

QuadExt& QuadExt::operator+=(const QuadExt& rhs) {
  for (std::size_t i = 0; i < 4; ++i) c_[i] += rhs.c_[i];
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& rhs) {
  for (std::size_t i = 0; i < 4; ++i) c_[i] -= rhs.c_[i];
  return *this;
}

// sqrt2*sqrt3 = sqrt6, sqrt2*sqrt6 = 2*sqrt3, sqrt3*sqrt6 = 3*sqrt2.
QuadExt& QuadExt::operator*=(const QuadExt& rhs) {
  const auto& a = c_;
  const auto& b = rhs.c_;
  Rational r0 = a[0] * b[0] + 2 * a[1] * b[1] + 3 * a[2] * b[2] + 6 * a[3] * b[3];
  Rational r1 = a[0] * b[1] + a[1] * b[0] + 3 * (a[2] * b[3] + a[3] * b[2]);
  Rational r2 = a[0] * b[2] + a[2] * b[0] + 2 * (a[1] * b[3] + a[3] * b[1]);
  Rational r3 = a[0] * b[3] + a[3] * b[0] + a[1] * b[2] + a[2] * b[1];
  c_ = {std::move(r0), std::move(r1), std::move(r2), std::move(r3)};
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& rhs) { return *this *= rhs.inverse(); }

QuadExt QuadExt::operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }

// Write x = A + B*sqrt3 with A, B in Q(sqrt2). Then
//   1/x = (A - B*sqrt3) / N,  N = A^2 - 3B^2 = n0 + n1*sqrt2,
//   1/N = (n0 - n1*sqrt2) / (n0^2 - 2 n1^2).
QuadExt QuadExt::inverse() const {
  if (is_zero()) throw DomainError("QuadExt: division by zero");
  const QuadExt conj3{c_[0], c_[1], -c_[2], -c_[3]};
  const QuadExt norm3 = *this * conj3;  // lies in Q(sqrt2)
  const Rational& n0 = norm3.c_[0];
  const Rational& n1 = norm3.c_[1];
  const Rational norm2 = n0 * n0 - 2 * n1 * n1;
  assert(sgn(norm2) != 0);
  QuadExt r = conj3 * QuadExt{n0, -n1, 0, 0};
  for (auto& q : r.c_) q /= norm2;
  return r;
}

int sign_sqrt2(const Rational& a, const Rational& b) {
  const int sa = sgn(a);
  const int sb = sgn(b);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: the larger of a^2 and 2b^2 wins. Equality is impossible
  // because sqrt2 is irrational.
  const int cmp = ::cmp(Rational(a * a), Rational(2 * b * b));
  assert(cmp != 0);
  return cmp > 0 ? sa : sb;
}

int sign(const QuadExt& x) {
  const auto& q = x.coeffs();
  const int sa = sign_sqrt2(q[0], q[1]);  // A = q0 + q1 sqrt2
  const int sb = sign_sqrt2(q[2], q[3]);  // B = q2 + q3 sqrt2
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // A^2 - 3B^2, expanded in Q(sqrt2); never zero since sqrt3 is not in Q(sqrt2).
  const Rational n0 = q[0] * q[0] + 2 * q[1] * q[1] - 3 * q[2] * q[2] - 6 * q[3] * q[3];
  const Rational n1 = 2 * q[0] * q[1] - 6 * q[2] * q[3];
  const int sn = sign_sqrt2(n0, n1);
  assert(sn != 0);
  return sn > 0 ? sa : sb;
}

std::strong_ordering operator<=>(const QuadExt& a, const QuadExt& b) {
  const int s = sign(a - b);
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string QuadExt::to_string() const {
  static const char* const kBasis[4] = {"", "sqrt2", "sqrt3", "sqrt6"};
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < 4; ++i) {
    const Rational& q = c_[i];
    if (sgn(q) == 0) continue;
    Rational mag = abs(q);
    if (first) {
      if (sgn(q) < 0) os << '-';
    } else {
      os << (sgn(q) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
    } else if (mag == 1) {
      os << kBasis[i];
    } else {
      os << mag.get_str() << '*' << kBasis[i];
    }
  }
  if (first) os << '0';
  return os.str();
}

std::string QuadExt::to_decimal(int digits) const {
  // Enough guard bits that every shown digit is correct.
  const mp_bitcnt_t bits = static_cast<mp_bitcnt_t>(digits) * 4 + 64;
  mpf_class sum(0, bits);
  static const int kRadicand[4] = {1, 2, 3, 6};
  for (std::size_t i = 0; i < 4; ++i) {
    if (sgn(c_[i]) == 0) continue;
    mpf_class term(c_[i], bits);
    if (i > 0) term *= sqrt(mpf_class(kRadicand[i], bits));
    sum += term;
  }
  std::ostringstream os;
  os << std::setprecision(digits) << sum;
  return os.str();
}

double QuadExt::to_double() const { return std::stod(to_decimal(20)); }

std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.to_string(); }

}  // namespace gridtrail
