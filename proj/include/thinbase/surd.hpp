#pragma once

// Exact arithmetic in the field Q(sqrt2, sqrt3).
//
// Elements are a + b*sqrt2 + c*sqrt3 + d*sqrt6 with rational coefficients.
// Every breakpoint of the bound curves (2/sqrt3, sqrt2, 7/(2 sqrt3), 2 sqrt2,
// 3/2, 5/3, 2) lives in this field, so branch agreement at a breakpoint can be
// checked as an exact identity instead of a floating-point comparison.

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

namespace thinbase {

class QuadSurd {
 public:
  using rational = boost::multiprecision::cpp_rational;
  using decimal = boost::multiprecision::cpp_dec_float_50;

  QuadSurd() = default;
  QuadSurd(long long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  QuadSurd(rational a, rational b, rational c, rational d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

  static QuadSurd ratio(long long num, long long den) {
    return QuadSurd(rational(num, den), 0, 0, 0);
  }
  static QuadSurd sqrt2() { return QuadSurd(0, 1, 0, 0); }
  static QuadSurd sqrt3() { return QuadSurd(0, 0, 1, 0); }

  bool is_rational() const { return b_ == 0 && c_ == 0 && d_ == 0; }
  const rational& rational_part() const { return a_; }

  decimal to_decimal() const {
    using boost::multiprecision::sqrt;
    return decimal(a_) + decimal(b_) * sqrt(decimal(2)) +
           decimal(c_) * sqrt(decimal(3)) + decimal(d_) * sqrt(decimal(6));
  }
  double to_double() const { return to_decimal().convert_to<double>(); }

  friend bool operator==(const QuadSurd& x, const QuadSurd& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }

  friend QuadSurd operator+(const QuadSurd& x, const QuadSurd& y) {
    return {x.a_ + y.a_, x.b_ + y.b_, x.c_ + y.c_, x.d_ + y.d_};
  }
  friend QuadSurd operator-(const QuadSurd& x, const QuadSurd& y) {
    return {x.a_ - y.a_, x.b_ - y.b_, x.c_ - y.c_, x.d_ - y.d_};
  }
  friend QuadSurd operator-(const QuadSurd& x) { return {-x.a_, -x.b_, -x.c_, -x.d_}; }

  friend QuadSurd operator*(const QuadSurd& x, const QuadSurd& y) {
    // sqrt2*sqrt3 = sqrt6, sqrt2*sqrt6 = 2 sqrt3, sqrt3*sqrt6 = 3 sqrt2.
    const rational a = x.a_ * y.a_ + 2 * x.b_ * y.b_ + 3 * x.c_ * y.c_ + 6 * x.d_ * y.d_;
    const rational b = x.a_ * y.b_ + x.b_ * y.a_ + 3 * (x.c_ * y.d_ + x.d_ * y.c_);
    const rational c = x.a_ * y.c_ + x.c_ * y.a_ + 2 * (x.b_ * y.d_ + x.d_ * y.b_);
    const rational d = x.a_ * y.d_ + x.d_ * y.a_ + x.b_ * y.c_ + x.c_ * y.b_;
    return {a, b, c, d};
  }

  QuadSurd inverse() const {
    if (*this == QuadSurd()) throw std::domain_error("QuadSurd: division by zero");
    // x * conj3(x) lies in Q(sqrt2); y * conj2(y) lies in Q.
    const QuadSurd x3 = conj3();
    const QuadSurd y = *this * x3;
    const QuadSurd y2 = y.conj2();
    const rational norm = (y * y2).a_;
    const QuadSurd num = x3 * y2;
    return {num.a_ / norm, num.b_ / norm, num.c_ / norm, num.d_ / norm};
  }

  friend QuadSurd operator/(const QuadSurd& x, const QuadSurd& y) { return x * y.inverse(); }

 private:
  QuadSurd conj3() const { return {a_, b_, -c_, -d_}; }
  QuadSurd conj2() const { return {a_, -b_, c_, -d_}; }

  rational a_{0};
  rational b_{0};
  rational c_{0};
  rational d_{0};
};

}  // namespace thinbase
