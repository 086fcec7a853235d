#include "thinbase/bounds.hpp"

#include <algorithm>
#include <boost/math/constants/constants.hpp>
#include <iomanip>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace thinbase::bounds {

namespace {

namespace f = formulas;

// Closed intervals are matched with a little slack so breakpoints computed in
// floating point still select both adjacent branches.
constexpr double kEdge = 1e-12;

bool in_range(double c, double lo, double hi) {
  return c >= lo - kEdge && c <= hi + kEdge;
}

struct Candidate {
  double y;
  std::string_view id;
};

CurveValue pick_max(std::initializer_list<Candidate> list) {
  CurveValue best{-1.0, ""};
  for (const auto& cand : list) {
    if (cand.id.empty()) continue;
    if (cand.y > best.y) best = {cand.y, cand.id};
  }
  return best;
}

CurveValue pick_min(std::initializer_list<Candidate> list) {
  CurveValue best{0.0, ""};
  bool first = true;
  for (const auto& cand : list) {
    if (cand.id.empty()) continue;
    if (first || cand.y < best.y) best = {cand.y, cand.id};
    first = false;
  }
  return best;
}

constexpr Candidate kSkip{0.0, ""};

}  // namespace

double s_upper_coefficient() {
  const double pi2 = std::numbers::pi + 2.0;
  return 0.25 - 1.0 / (pi2 * pi2);
}

BoundValue s_upper(std::int64_t k, std::int64_t n) {
  if (k < 1 || n < 1) throw std::invalid_argument("s_upper: k and n must be positive");
  const double binomial = static_cast<double>(k) * static_cast<double>(k + 1) / 2.0;
  const double trivial = 2.0 * static_cast<double>(n) - 1.0;
  const double fourier = static_cast<double>(n) +
                         static_cast<double>(k) * static_cast<double>(k) * s_upper_coefficient();
  BoundValue out{binomial, "binomial", false};
  if (trivial < out.value) out = {trivial, "trivial", false};
  if (fourier < out.value) out = {fourier, "fourier", true};
  return out;
}

BoundValue d_upper(std::int64_t k, std::int64_t n) {
  if (k < 1 || n < 1) throw std::invalid_argument("d_upper: k and n must be positive");
  const double trivial = 2.0 * static_cast<double>(n) - 1.0;
  const double pairs = static_cast<double>(k) * static_cast<double>(k - 1) + 1.0;
  BoundValue out{trivial, "trivial", false};
  if (pairs < out.value) out = {pairs, "binomial", false};
  const double root = std::sqrt(static_cast<double>(n));
  if (static_cast<double>(k) >= root) {
    const double window = 2.0 * static_cast<double>(k) * root - static_cast<double>(n);
    if (window < out.value) out = {window, "window", true};
  }
  return out;
}

CurveValue s_lower_curve(double c) {
  if (!(c > 0)) throw std::invalid_argument("s_lower_curve: c must be positive");
  const double sidon = f::sidon_limit<double>();
  const double mid = f::reflect_switch<double>();
  const double c0 = f::aps_switch<double>();
  const double c1 = f::rohrbach_limit<double>();
  return pick_max({
      c <= sidon + kEdge ? Candidate{f::sidon_sums(c), "sidon"} : kSkip,
      in_range(c, sidon, mid) ? Candidate{f::reflect_low(c), "reflect-low"} : kSkip,
      in_range(c, mid, 2.0) ? Candidate{f::reflect_high(c), "reflect-high"} : kSkip,
      c <= c0 + kEdge ? Candidate{f::aps_low(c), "aps-low"} : kSkip,
      in_range(c, c0, c1) ? Candidate{f::aps_high(c), "aps-high"} : kSkip,
      c >= c1 - kEdge ? Candidate{2.0, "rohrbach"} : kSkip,
  });
}

CurveValue d_lower_curve(double c) {
  if (!(c > 0)) throw std::invalid_argument("d_lower_curve: c must be positive");
  const double root2 = std::sqrt(2.0);
  return pick_max({
      c <= 1.0 + kEdge ? Candidate{f::sidon_diffs(c), "sidon"} : kSkip,
      in_range(c, 1.0, root2) ? Candidate{f::diff_reflect(c), "diff-reflect"} : kSkip,
      in_range(c, root2, 1.5) ? Candidate{f::diff_third(c), "aps-third"} : kSkip,
      in_range(c, 1.5, 5.0 / 3.0) ? Candidate{f::diff_cubic_low(c), "aps-cubic-low"} : kSkip,
      in_range(c, 5.0 / 3.0, 2.0) ? Candidate{f::diff_cubic_high(c), "aps-cubic-high"} : kSkip,
      c >= 2.0 - kEdge ? Candidate{2.0, "full"} : kSkip,
  });
}

CurveValue s_upper_curve(double c) {
  if (!(c > 0)) throw std::invalid_argument("s_upper_curve: c must be positive");
  return pick_min({
      {c * c / 2.0, "binomial"},
      {2.0, "trivial"},
      {1.0 + c * c * s_upper_coefficient(), "fourier"},
  });
}

CurveValue d_upper_curve(double c) {
  if (!(c > 0)) throw std::invalid_argument("d_upper_curve: c must be positive");
  return pick_min({
      {c * c, "binomial"},
      {2.0, "trivial"},
      c >= 1.0 ? Candidate{2.0 * c - 1.0, "window"} : kSkip,
  });
}

std::string_view curve_name(Curve which) noexcept {
  switch (which) {
    case Curve::SUpper:
      return "s-upper";
    case Curve::SLower:
      return "s-lower";
    case Curve::DUpper:
      return "d-upper";
    case Curve::DLower:
      return "d-lower";
  }
  return "";
}

Curve parse_curve(std::string_view name) {
  for (Curve c : {Curve::SUpper, Curve::SLower, Curve::DUpper, Curve::DLower}) {
    if (curve_name(c) == name) return c;
  }
  throw std::invalid_argument("unknown curve '" + std::string(name) + "'");
}

CurveValue evaluate(Curve which, double c) {
  switch (which) {
    case Curve::SUpper:
      return s_upper_curve(c);
    case Curve::SLower:
      return s_lower_curve(c);
    case Curve::DUpper:
      return d_upper_curve(c);
    case Curve::DLower:
      return d_lower_curve(c);
  }
  return {};
}

CurveTable curve_samples(Curve which, double c_min, double c_max, double step) {
  if (!(c_min > 0) || !(c_max > c_min) || !(step > 0)) {
    throw std::invalid_argument("curve_samples: need 0 < min < max and step > 0");
  }
  CurveTable table;
  table.which = which;
  const double slack = 1e-9 * step;
  for (std::int64_t i = 0;; ++i) {
    const double c = c_min + static_cast<double>(i) * step;
    if (c > c_max + slack) break;
    const CurveValue v = evaluate(which, c);
    table.rows.push_back({c, v.y, std::string(v.formula_id)});
  }
  return table;
}

double fourier_partial(double x, std::int64_t terms) {
  if (terms < 2) throw std::invalid_argument("fourier_partial: need at least 2 terms");
  double sum = 0.0;
  // Smallest coefficients first.
  for (std::int64_t t = terms - (terms % 2); t >= 2; t -= 2) {
    const double td = static_cast<double>(t);
    sum += 2.0 / (td * td - 1.0) * std::cos(td * x);
  }
  return std::numbers::pi / 2.0 * std::sin(x) + sum;
}

double r_target(double x) {
  if (x <= std::numbers::pi) return 1.0;
  return 1.0 + std::numbers::pi * std::sin(x);
}

double fourier_tail(std::int64_t terms) {
  return 1.0 / static_cast<double>(2 * (terms / 2) + 1);
}

const Constant& BoundConstants::get(std::string_view name) const {
  for (const auto& c : values) {
    if (c.name == name) return c;
  }
  throw std::out_of_range("unknown constant '" + std::string(name) + "'");
}

BoundConstants constants() {
  using dec = QuadSurd::decimal;
  using boost::multiprecision::sqrt;
  const dec pi = boost::math::constants::pi<dec>();
  const dec root2 = sqrt(dec(2));
  const dec root3 = sqrt(dec(3));

  auto entry = [](std::string name, const dec& v) {
    std::ostringstream os;
    os << std::setprecision(20) << v;
    return Constant{std::move(name), v.convert_to<double>(), os.str()};
  };

  BoundConstants out;
  const dec lambda = (2 * root2 - 4 + pi * (4 - root2)) / 4;
  const dec b_sup = dec(1) / 2 - 2 / ((2 + (1 + 2 * root2) * pi) * (2 + (1 + 2 * root2) * pi));
  const dec s_coeff = dec(1) / 4 - 1 / ((pi + 2) * (pi + 2));
  const dec quasi = 1 / sqrt(dec(1) / 4 + 1 / ((pi + 2) * (pi + 2)));
  out.values = {
      entry("lambda_formula", lambda),
      Constant{"lambda_quoted", 0.323, "0.323"},
      entry("b_sup_upper", b_sup),
      entry("s_upper_coeff", s_coeff),
      entry("quasi_sidon_coeff", quasi),
      entry("wood_coeff", dec(288) / 121),
      entry("quasi_sidon_construction_coeff", 2 / root3),
      entry("magic_lower_coeff", dec(2) / 7),
      entry("sidon_half_bound", dec(1) / 2 - 1 / (4 * pi * pi)),
  };
  out.lambda_discrepancy = abs(lambda - dec("0.323")) > dec("0.001");
  return out;
}

}  // namespace thinbase::bounds
