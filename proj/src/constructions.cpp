#include "thinbase/constructions.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include "thinbase/bounds.hpp"
#include "thinbase/errors.hpp"
#include "thinbase/ff.hpp"

namespace thinbase {

using value_type = IntSet::value_type;

namespace {

std::string join(const IntSet& s, std::size_t limit = 16) {
  std::ostringstream os;
  os << '{';
  std::size_t i = 0;
  for (auto v : s) {
    if (i == limit) {
      os << ",...";
      break;
    }
    if (i++) os << ',';
    os << v;
  }
  os << '}';
  return os.str();
}

Check check_equal(std::string property, std::int64_t got, std::int64_t want) {
  return {std::move(property), got == want,
          got == want ? "" : "got " + std::to_string(got) + ", want " + std::to_string(want)};
}

Check check_within(std::string property, const IntSet& s, value_type lo, value_type hi) {
  if (s.empty() || (s.min() >= lo && s.max() <= hi)) return {std::move(property), true, ""};
  const value_type bad = s.min() < lo ? s.min() : s.max();
  return {std::move(property), false, "element " + std::to_string(bad)};
}

Check check_covers(std::string property, const IntSet& sums, value_type lo, value_type hi) {
  const IntSet missing = missing_in_interval(sums, lo, hi);
  return {std::move(property), missing.empty(),
          missing.empty() ? "" : "missing " + join(missing)};
}

value_type floor_of(double x) { return static_cast<value_type>(std::floor(x + 1e-9)); }

// Keeps x in [1, n]; elements pushed past either end are dropped.
IntSet clip(const IntSet& s, value_type n) { return s.slice(1, n); }

// Shift pairs are drawn up front so the argmax does not depend on evaluation
// order. Raw 64-bit draws reduced mod the range keep the stream portable.
std::vector<std::pair<value_type, value_type>> draw_pairs(std::uint64_t seed,
                                                          std::int64_t trials,
                                                          value_type hi) {
  std::mt19937_64 rng(seed);
  const auto span = static_cast<std::uint64_t>(hi);
  std::vector<std::pair<value_type, value_type>> out;
  out.reserve(static_cast<std::size_t>(trials));
  for (std::int64_t i = 0; i < trials; ++i) {
    const auto s = static_cast<value_type>(1 + rng() % span);
    const auto t = static_cast<value_type>(1 + rng() % span);
    out.emplace_back(s, t);
  }
  return out;
}

value_type shift_range(value_type n) {
  return std::max<value_type>(1, floor_of(Slack::kRandomShift * Slack::kRandomShift *
                                          static_cast<double>(n)));
}

void require_n(value_type n, const char* who) {
  if (n < 4) throw std::invalid_argument(std::string(who) + ": n must be at least 4");
}

}  // namespace

std::optional<ParamValue> ConstructionReport::param(const std::string& key) const {
  for (const auto& [k, v] : params) {
    if (k == key) return v;
  }
  return std::nullopt;
}

IntSet bose_chowla(std::uint64_t p) {
  const auto ctx = ff::Fp2Context::make(p);
  std::vector<value_type> out;
  out.reserve(p);
  ff::Fp2Element x = ctx.one();
  // g^a - theta in GF(p) exactly when the theta-coefficient of g^a is 1.
  for (std::uint64_t a = 1; a < ctx.group_order(); ++a) {
    x = ctx.mul(x, ctx.generator());
    if (x.c1 == 1) out.push_back(static_cast<value_type>(a));
  }
  return IntSet::from_sorted(std::move(out));
}

IntSet sidon_of_size(std::size_t size) {
  if (size == 0) return {};
  const std::uint64_t p = ff::next_prime(std::max<std::uint64_t>(3, size));
  if (p > ff::Fp2Context::kMaxPrime) {
    throw InfeasibleError("no usable prime for a Sidon set of size " + std::to_string(size));
  }
  return bose_chowla(p).smallest(size);
}

IntSet mrose(value_type t) {
  if (t <= 0) throw std::invalid_argument("mrose: t must be positive");
  const value_type t2 = t * t;
  IntSet out = from_ap(0, 1, t);
  out = set_union(out, from_ap(2 * t, t, 3 * t2 + t));
  out = set_union(out, from_ap(3 * t2 + 2 * t, t + 1, 4 * t2 + 2 * t - 1));
  out = set_union(out, from_ap(6 * t2 + 4 * t, 1, 6 * t2 + 5 * t));
  out = set_union(out, from_ap(10 * t2 + 7 * t, 1, 10 * t2 + 8 * t));
  return out;
}

IntSet rohrbach(value_type r) {
  if (r <= 1) throw std::invalid_argument("rohrbach: r must be at least 2");
  const value_type n = 2 * r * r;
  IntSet out = IntSet::interval(0, r - 1);
  out = set_union(out, from_ap(r, r, n));
  out = set_union(out, IntSet::interval(n - r + 1, n));
  return out;
}

ConstructionReport describe_bose_chowla(std::uint64_t p) {
  ConstructionReport rep;
  rep.name = "bose-chowla";
  rep.params = {{"p", static_cast<std::int64_t>(p)}};
  rep.set = bose_chowla(p);
  const auto order = static_cast<value_type>(p * p - 1);
  rep.sumset_size = sumset_size(rep.set);
  rep.checks.push_back(check_equal("size", static_cast<std::int64_t>(rep.set.size()),
                                   static_cast<std::int64_t>(p)));
  rep.checks.push_back(check_within("range", rep.set, 1, order));
  const auto k = rep.set.size();
  rep.checks.push_back(check_equal("sidon", static_cast<std::int64_t>(*rep.sumset_size),
                                   static_cast<std::int64_t>(k * (k + 1) / 2)));
  return rep;
}

ConstructionReport describe_mrose(value_type t) {
  ConstructionReport rep;
  rep.name = "mrose";
  rep.params = {{"t", t}};
  rep.set = mrose(t);
  const value_type top = 14 * t * t + 10 * t - 1;
  const IntSet sums = sumset(rep.set);
  rep.sumset_size = sums.size();
  rep.checks.push_back(check_equal("size", static_cast<std::int64_t>(rep.set.size()), 7 * t + 3));
  rep.checks.push_back(check_within("range", rep.set, 0, 10 * t * t + 8 * t));
  rep.checks.push_back(check_covers("sumset-covers", sums, 0, top));
  // Exceptional values of the distinct-summand sum-set; only containment in
  // {0, 8t^2+4t-2} is required downstream. The witness records the exact set.
  const IntSet missing = missing_in_interval(restricted_sumset(rep.set), 0, top);
  const IntSet allowed{0, 8 * t * t + 4 * t - 2};
  rep.checks.push_back({"restricted-missing", is_subset(missing, allowed),
                        "missing " + join(missing)});
  return rep;
}

ConstructionReport describe_rohrbach(value_type r) {
  ConstructionReport rep;
  rep.name = "rohrbach";
  const value_type n = 2 * r * r;
  rep.params = {{"r", r}, {"n", n}};
  rep.set = rohrbach(r);
  const IntSet sums = sumset(rep.set);
  rep.sumset_size = sums.size();
  rep.checks.push_back({"size", rep.set.size() <= static_cast<std::size_t>(4 * r),
                        "size " + std::to_string(rep.set.size())});
  rep.checks.push_back(check_within("range", rep.set, 0, n));
  rep.checks.push_back(check_covers("sumset-covers", sums, 0, 2 * n));
  return rep;
}

ConstructionReport quasi_sidon_reflect(value_type n, double c, std::int64_t trials,
                                       std::uint64_t seed) {
  require_n(n, "quasi_sidon_reflect");
  if (!(c > 0) || c > 2.0 + 1e-12) {
    throw std::invalid_argument("quasi_sidon_reflect: c must lie in (0, 2]");
  }
  if (trials < 1) throw std::invalid_argument("quasi_sidon_reflect: trials must be positive");

  const double root = std::sqrt(static_cast<double>(n));
  const value_type window = floor_of(c * c * static_cast<double>(n) / 4.0);
  const auto size = static_cast<std::size_t>(std::max<value_type>(0, floor_of(c * root / 2.0)));
  if (size < 2) {
    throw InfeasibleError("quasi_sidon_reflect: need a Sidon set of size >= 2, got " +
                          std::to_string(size));
  }
  const IntSet core = sidon_of_size(size);

  const value_type shift_hi = shift_range(n);
  IntSet best;
  std::size_t best_sums = 0;
  std::pair<value_type, value_type> best_shift{0, 0};
  for (const auto& [s, t] : draw_pairs(seed, trials, shift_hi)) {
    IntSet x = clip(set_union(core.shifted(s), core.reflected(n - t)), n);
    const std::size_t sums = sumset_size(x);
    const bool better = best.empty() || sums > best_sums ||
                        (sums == best_sums && std::pair{s, t} < best_shift);
    if (better) {
      best = std::move(x);
      best_sums = sums;
      best_shift = {s, t};
    }
  }

  ConstructionReport rep;
  rep.name = "quasi-sidon-reflect";
  rep.params = {{"n", n},           {"c", c},
                {"trials", trials}, {"seed", static_cast<std::int64_t>(seed)},
                {"epsilon", Slack::kRandomShift},
                {"window", window}, {"sidon_size", static_cast<std::int64_t>(size)},
                {"s", best_shift.first}, {"t", best_shift.second}};
  rep.set = std::move(best);
  rep.sumset_size = best_sums;
  rep.predicted_density = c <= bounds::formulas::sidon_limit<double>() + 1e-12
                              ? bounds::formulas::sidon_sums(c)
                          : c <= std::sqrt(2.0) ? bounds::formulas::reflect_low(c)
                                                : bounds::formulas::reflect_high(c);
  rep.checks.push_back({"sidon-core", is_sidon(core), join(core)});
  rep.checks.push_back(check_within("range", rep.set, 1, n));
  return rep;
}

ConstructionReport quasi_sidon_aps(value_type n, double c) {
  require_n(n, "quasi_sidon_aps");
  const double c0 = bounds::formulas::aps_switch<double>();
  const double c1 = bounds::formulas::rohrbach_limit<double>();
  if (!(c > 0) || c > c1 + 1e-12) {
    throw std::invalid_argument("quasi_sidon_aps: c must lie in (0, 2 sqrt2]");
  }
  const double root = std::sqrt(static_cast<double>(n));
  const value_type k = floor_of(c * root);
  const value_type l = c <= c0 ? floor_of(3.0 * c / 14.0 * root)
                               : floor_of(bounds::formulas::aps_alpha(c) * root);
  const value_type len = k / 2 - l;
  if (l < 1 || len < 1) {
    throw InfeasibleError("quasi_sidon_aps: degenerate blocks (k = " + std::to_string(k) +
                          ", l = " + std::to_string(l) + ")");
  }
  const value_type mid = n / 2;
  IntSet x = set_union(IntSet::interval(1, l), IntSet::interval(n - l + 1, n));
  x = set_union(x, from_ap(mid, -l, mid - (len - 1) * l));
  x = set_union(x, from_ap(mid, l + 1, mid + (len - 1) * (l + 1)));
  x = clip(x, n);

  ConstructionReport rep;
  rep.name = "quasi-sidon-aps";
  rep.params = {{"n", n}, {"c", c}, {"k", k}, {"l", l}, {"progression_length", len}};
  rep.set = std::move(x);
  rep.sumset_size = sumset_size(rep.set);
  rep.predicted_density = c <= c0 ? bounds::formulas::aps_low(c) : bounds::formulas::aps_high(c);
  rep.checks.push_back(check_within("range", rep.set, 1, n));
  return rep;
}

ConstructionReport diff_reflect(value_type n, double c, std::int64_t trials,
                                std::uint64_t seed) {
  require_n(n, "diff_reflect");
  if (!(c >= 1.0 - 1e-12) || c > std::sqrt(2.0) + 1e-12) {
    throw std::invalid_argument("diff_reflect: c must lie in [1, sqrt2]");
  }
  if (trials < 1) throw std::invalid_argument("diff_reflect: trials must be positive");

  const value_type b = floor_of(static_cast<double>(n) / (c * c));
  const auto size = static_cast<std::size_t>(floor_of(std::sqrt(static_cast<double>(b))));
  if (size < 2) {
    throw InfeasibleError("diff_reflect: need a Sidon set of size >= 2, got " +
                          std::to_string(size));
  }
  const IntSet base = sidon_of_size(size).slice(1, b);
  const IntSet upper = base.shifted(b).slice(1, n);

  const value_type shift_hi = shift_range(n);
  IntSet best;
  std::size_t best_diffs = 0;
  value_type best_t = 0;
  // Only the second coordinate of each drawn pair is used as the shift.
  for (const auto& [unused, t] : draw_pairs(seed, trials, shift_hi)) {
    (void)unused;
    IntSet a = clip(set_union(base, upper.shifted(t)), n);
    const std::size_t diffs = diffset_size(a);
    if (best.empty() || diffs > best_diffs || (diffs == best_diffs && t < best_t)) {
      best = std::move(a);
      best_diffs = diffs;
      best_t = t;
    }
  }

  ConstructionReport rep;
  rep.name = "diff-reflect";
  rep.params = {{"n", n},           {"c", c},
                {"trials", trials}, {"seed", static_cast<std::int64_t>(seed)},
                {"b", b},           {"sidon_size", static_cast<std::int64_t>(base.size())},
                {"t", best_t}};
  rep.set = std::move(best);
  rep.diffset_size = best_diffs;
  rep.predicted_density = bounds::formulas::diff_reflect(c);
  rep.checks.push_back({"sidon-core", is_sidon(base), join(base)});
  rep.checks.push_back(check_within("range", rep.set, 1, n));
  return rep;
}

double diff_aps_default_beta(double c) {
  if (c <= 1.5) return c / 3.0;
  if (c <= 2.0) return c - 1.0;
  return 1.0;
}

ConstructionReport diff_aps(value_type n, double c, std::optional<double> beta_opt) {
  require_n(n, "diff_aps");
  if (!(c >= std::sqrt(2.0) - 1e-12)) {
    throw std::invalid_argument("diff_aps: c must be at least sqrt2");
  }
  const double beta = beta_opt.value_or(diff_aps_default_beta(c));
  if (!(beta > 0) || beta > c + 1e-12) {
    throw std::invalid_argument("diff_aps: beta must lie in (0, c]");
  }
  const double root = std::sqrt(static_cast<double>(n));
  const value_type b = floor_of(beta * root);
  const value_type len = floor_of((c - beta) * root / 2.0);
  if (b < 2 || len < 1) {
    throw InfeasibleError("diff_aps: degenerate blocks (b = " + std::to_string(b) +
                          ", length = " + std::to_string(len) + ")");
  }
  const value_type start = floor_of((1.0 - beta * (c - beta) / 2.0) * static_cast<double>(n));
  IntSet a = IntSet::interval(1, b);
  a = set_union(a, from_ap(start, -b, start - (len - 1) * b));
  a = set_union(a, from_ap(start, b - 1, start + (len - 1) * (b - 1)));
  a = clip(a, n);

  ConstructionReport rep;
  rep.name = "diff-aps";
  rep.params = {{"n", n}, {"c", c}, {"beta", beta}, {"b", b},
                {"progression_length", len}, {"start", start}};
  rep.set = std::move(a);
  rep.diffset_size = diffset_size(rep.set);
  rep.predicted_density = bounds::d_lower_curve(c).y;
  rep.checks.push_back(check_within("range", rep.set, 1, n));
  return rep;
}

}  // namespace thinbase
