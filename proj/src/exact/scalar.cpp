#include "slodowy/exact/scalar.hpp"

#include "slodowy/errors.hpp"

namespace slodowy::exact {

Scalar::Scalar(mpq_class rational, mpq_class sqrt2_part) : r_(std::move(rational)), s_(std::move(sqrt2_part)) {
  r_.canonicalize();
  s_.canonicalize();
}

Scalar Scalar::fraction(long num, long den) {
  if (den == 0) throw InputError("zero denominator");
  return Scalar(mpq_class(num, den));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero Scalar");
  // (r + s√2)^{-1} = (r − s√2) / (r² − 2s²); the norm is nonzero since √2 is irrational.
  mpq_class norm = r_ * r_ - 2 * s_ * s_;
  return Scalar(mpq_class(r_ / norm), mpq_class(-s_ / norm));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  r_ += o.r_;
  s_ += o.s_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  r_ -= o.r_;
  s_ -= o.s_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (sgn(s_) == 0 && sgn(o.s_) == 0) {
    r_ *= o.r_;
    return *this;
  }
  mpq_class r = r_ * o.r_ + 2 * s_ * o.s_;
  mpq_class s = r_ * o.s_ + s_ * o.r_;
  r_ = std::move(r);
  s_ = std::move(s);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_rational()) {
    if (sgn(o.r_) == 0) throw std::domain_error("division by zero Scalar");
    r_ /= o.r_;
    s_ /= o.r_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string rational_string(const mpq_class& q) { return q.get_str(); }

std::string Scalar::to_string() const {
  if (is_rational()) return rational_string(r_);
  return "(" + rational_string(r_) + " + (" + rational_string(s_) + ")*sqrt2)";
}

}  // namespace slodowy::exact
