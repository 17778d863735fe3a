#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "liftcert/errors.hpp"

namespace liftcert {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Tagged numeric value: exact rational or IEEE double. The two tags never
// mix silently; arithmetic between different tags throws DomainError and the
// only way to an approximate value is the explicit to_double().
class Scalar {
 public:
  Scalar() : exact_(true), r_(0), f_(0) {}
  Scalar(int v) : exact_(true), r_(v), f_(0) {}
  Scalar(long long v) : exact_(true), r_(v), f_(0) {}

  static Scalar exact(Rational r) {
    Scalar s;
    s.exact_ = true;
    s.r_ = std::move(r);
    return s;
  }
  static Scalar real(double v) {
    Scalar s;
    s.exact_ = false;
    s.f_ = v;
    return s;
  }

  bool is_exact() const { return exact_; }

  const Rational& rat() const {
    if (!exact_) throw DomainError("Scalar: float value used where an exact rational is required");
    return r_;
  }
  double flt() const {
    if (exact_) throw DomainError("Scalar: exact value used where a float is required");
    return f_;
  }
  // Explicit promotion; allowed for both tags.
  double to_double() const { return exact_ ? r_.convert_to<double>() : f_; }

  Scalar operator+(const Scalar& o) const {
    check_same(o);
    return exact_ ? exact(r_ + o.r_) : real(f_ + o.f_);
  }
  Scalar operator-(const Scalar& o) const {
    check_same(o);
    return exact_ ? exact(r_ - o.r_) : real(f_ - o.f_);
  }
  Scalar operator*(const Scalar& o) const {
    check_same(o);
    return exact_ ? exact(r_ * o.r_) : real(f_ * o.f_);
  }
  Scalar operator/(const Scalar& o) const {
    check_same(o);
    if (o.is_zero()) throw DomainError("Scalar: division by zero");
    return exact_ ? exact(r_ / o.r_) : real(f_ / o.f_);
  }
  Scalar operator-() const { return exact_ ? exact(-r_) : real(-f_); }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const {
    check_same(o);
    return exact_ ? r_ == o.r_ : f_ == o.f_;
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  bool operator<(const Scalar& o) const {
    check_same(o);
    return exact_ ? r_ < o.r_ : f_ < o.f_;
  }
  bool operator<=(const Scalar& o) const { return *this < o || *this == o; }
  bool operator>(const Scalar& o) const { return o < *this; }
  bool operator>=(const Scalar& o) const { return o <= *this; }

  bool is_zero() const { return exact_ ? r_.is_zero() : f_ == 0.0; }
  int sign() const {
    if (exact_) return r_.sign();
    return f_ > 0 ? 1 : (f_ < 0 ? -1 : 0);
  }

  // Exact: canonical "n" or "n/d". Float: shortest round-trip decimal.
  std::string str() const;

  // Parses an exact rational from "n", "n/d", or a decimal string with an
  // optional exponent ("1.5", "-3.25e2"). Decimal forms are exact: 0.1 = 1/10.
  static Scalar parse_exact(const std::string& text);

 private:
  void check_same(const Scalar& o) const {
    if (exact_ != o.exact_)
      throw DomainError("Scalar: mixed exact/float arithmetic (use to_double() to promote explicitly)");
  }

  bool exact_;
  Rational r_;
  double f_;
};

}  // namespace liftcert
