#pragma once

// Closed-form bounds on s(k, n) = max |A + A| and d(k, n) = max |A - A| over
// k-subsets A of [n], their scaled limits s(c), d(c) with k ~ c sqrt(n), the
// Fourier series check for the sum-set upper bound, and the numeric constants
// that go with them.

#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "thinbase/surd.hpp"

namespace thinbase::bounds {

// Number-type hooks so the same formula text serves both double sampling and
// exact breakpoint identities over QuadSurd.
template <class T>
struct NumberTraits;

template <>
struct NumberTraits<double> {
  static double sqrt2() { return std::sqrt(2.0); }
  static double sqrt3() { return std::sqrt(3.0); }
  static double ratio(long long num, long long den) {
    return static_cast<double>(num) / static_cast<double>(den);
  }
};

template <>
struct NumberTraits<QuadSurd> {
  static QuadSurd sqrt2() { return QuadSurd::sqrt2(); }
  static QuadSurd sqrt3() { return QuadSurd::sqrt3(); }
  static QuadSurd ratio(long long num, long long den) { return QuadSurd::ratio(num, den); }
};

namespace formulas {

template <class T>
T q(long long num, long long den = 1) {
  return NumberTraits<T>::ratio(num, den);
}

// Breakpoints of the lower-bound curves.
template <class T> T sidon_limit() { return q<T>(2) / NumberTraits<T>::sqrt3(); }      // 2/sqrt3
template <class T> T reflect_switch() { return NumberTraits<T>::sqrt2(); }             // sqrt2
template <class T> T aps_switch() { return q<T>(7) / (q<T>(2) * NumberTraits<T>::sqrt3()); }  // c0
template <class T> T rohrbach_limit() { return q<T>(2) * NumberTraits<T>::sqrt2(); }   // c1

// s(c) lower bounds.
template <class T> T sidon_sums(const T& c) { return c * c / q<T>(2); }

template <class T> T reflect_low(const T& c) {
  const T c2 = c * c;
  return -q<T>(5, 8) * c2 + q<T>(9, 2) - q<T>(6) / c2 + q<T>(8, 3) / (c2 * c2);
}

template <class T> T reflect_high(const T& c) {
  const T c2 = c * c;
  return q<T>(3, 8) * c2 - q<T>(3, 2) + q<T>(6) / c2 - q<T>(16, 3) / (c2 * c2);
}

template <class T> T aps_low(const T& c) { return q<T>(9, 28) * c * c; }

// Block-length coefficient for the high branch: linear in c through
// (c0, sqrt3/4) and (c1, 1/sqrt2).
template <class T> T aps_alpha(const T& c) {
  const T a0 = NumberTraits<T>::sqrt3() / q<T>(4);
  const T a1 = q<T>(1) / NumberTraits<T>::sqrt2();
  const T c0 = aps_switch<T>();
  const T c1 = rohrbach_limit<T>();
  return a0 + (c - c0) * (a1 - a0) / (c1 - c0);
}

template <class T> T aps_high(const T& c) {
  const T a = aps_alpha(c);
  return -c * c + q<T>(7) * a * c + c / a - q<T>(11) * a * a - q<T>(2) -
         q<T>(1) / (q<T>(4) * a * a);
}

// d(c) lower bounds.
template <class T> T sidon_diffs(const T& c) { return c * c; }

template <class T> T diff_reflect(const T& c) {
  const T c2 = c * c;
  return -c2 * c2 / q<T>(3) + q<T>(2) * c2 - q<T>(2) + q<T>(4, 3) / c2;
}

template <class T> T diff_third(const T& c) { return q<T>(2, 3) * c * c; }

template <class T> T diff_cubic_low(const T& c) {
  const T c1 = c - q<T>(1);
  return (q<T>(4) * c * c * c - q<T>(19) * c * c + q<T>(34) * c - q<T>(21)) /
         (q<T>(2) * c1 * c1);
}

template <class T> T diff_cubic_high(const T& c) {
  const T c1 = c - q<T>(1);
  return (q<T>(2) * c * c * c - q<T>(5) * c * c + q<T>(2) * c + q<T>(2)) / (c1 * c1);
}

}  // namespace formulas

// 1/4 - 1/(pi+2)^2
double s_upper_coefficient();

struct BoundValue {
  double value = 0;
  std::string formula_id;
  bool asymptotic = false;  // carries an unquantified o(1) term
};

// min(k(k+1)/2, 2n-1, n + k^2 (1/4 - 1/(pi+2)^2)).
BoundValue s_upper(std::int64_t k, std::int64_t n);
// min(2n-1, k(k-1)+1, and 2k sqrt(n) - n when k >= sqrt(n)).
BoundValue d_upper(std::int64_t k, std::int64_t n);

struct CurveValue {
  double y = 0;
  std::string_view formula_id;
};

// Pointwise maximum of the applicable lower-bound formulas at c > 0.
CurveValue s_lower_curve(double c);
CurveValue d_lower_curve(double c);
// Scaled limits of the upper bounds (pointwise minimum).
CurveValue s_upper_curve(double c);
CurveValue d_upper_curve(double c);

enum class Curve { SUpper, SLower, DUpper, DLower };

std::string_view curve_name(Curve which) noexcept;
// Throws std::invalid_argument for an unknown name.
Curve parse_curve(std::string_view name);

struct CurveRow {
  double c = 0;
  double y = 0;
  std::string formula_id;
};

struct CurveTable {
  Curve which = Curve::SLower;
  std::vector<CurveRow> rows;
};

CurveValue evaluate(Curve which, double c);
// Samples c_min, c_min + step, ... up to c_max inclusive.
CurveTable curve_samples(Curve which, double c_min, double c_max, double step);

// (pi/2) sin x + sum over even t in [2, terms] of 2/(t^2-1) cos(tx).
double fourier_partial(double x, std::int64_t terms);
// 1 on [0, pi], 1 + pi sin x on [pi, 2pi].
double r_target(double x);
// Sum over even t > terms of 2/(t^2-1); telescopes to 1/(2 floor(terms/2) + 1).
double fourier_tail(std::int64_t terms);

struct Constant {
  std::string name;
  double value = 0;
  std::string decimal;  // 20 significant digits
};

struct BoundConstants {
  std::vector<Constant> values;
  // The closed form of the weight threshold evaluates to ~1.7379, while its
  // quoted decimal is 0.323; both are exposed and flagged.
  bool lambda_discrepancy = false;

  const Constant& get(std::string_view name) const;
};

BoundConstants constants();

}  // namespace thinbase::bounds
