#pragma once

#include <gmpxx.h>

#include <concepts>
#include <string>

namespace slodowy::exact {

// r + s*sqrt(2) with r, s rational.
class Scalar {
 public:
  Scalar() = default;
  template <std::integral I>
  Scalar(I v) : r_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(mpq_class rational, mpq_class sqrt2_part = 0);  // NOLINT(google-explicit-constructor)

  static Scalar fraction(long num, long den);
  static Scalar sqrt2() { return Scalar(mpq_class(0), mpq_class(1)); }

  const mpq_class& rational_part() const { return r_; }
  const mpq_class& sqrt2_part() const { return s_; }

  bool is_zero() const { return sgn(r_) == 0 && sgn(s_) == 0; }
  bool is_one() const { return r_ == 1 && sgn(s_) == 0; }
  bool is_rational() const { return sgn(s_) == 0; }

  Scalar inverse() const;
  Scalar conjugate() const { return Scalar(r_, -s_); }

  Scalar operator-() const { return Scalar(-r_, -s_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.r_ == b.r_ && a.s_ == b.s_; }

  // "p/q" when rational, "(p/q + (r/s)*sqrt2)" otherwise.
  std::string to_string() const;

 private:
  mpq_class r_;
  mpq_class s_;
};

std::string rational_string(const mpq_class& q);

}  // namespace slodowy::exact
