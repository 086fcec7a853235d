#pragma once

// Explicit Sidon sets, additive bases and the sum/difference-rich sets built
// from them.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "thinbase/intset.hpp"
#include "thinbase/report.hpp"

namespace thinbase {

// Acceptance-style slack constants. The constructions target limiting
// densities; at desk-scale n the lower-order terms are absorbed here.
struct Slack {
  static constexpr double kRandomShift = 0.1;  // shifts drawn from [1, eps^2 n]
  static constexpr double kDensity = 0.1;
  static constexpr double kFullDifferences = 0.05;
};

using ParamValue = std::variant<std::int64_t, double>;

struct ConstructionReport {
  std::string name;
  std::vector<std::pair<std::string, ParamValue>> params;
  IntSet set;
  std::optional<std::size_t> sumset_size;
  std::optional<std::size_t> diffset_size;
  std::vector<Check> checks;

  // Limiting density the construction aims for (|X+X|/n or |A-A|/n).
  std::optional<double> predicted_density;

  bool ok() const { return all_pass(checks); }
  std::optional<ParamValue> param(const std::string& key) const;
};

// {a in [1, p^2-1] : g^a - theta in GF(p)} for the GF(p^2) generator g.
// A Sidon set of size p. Throws std::invalid_argument unless p is an odd prime.
IntSet bose_chowla(std::uint64_t p);

// The size smallest elements of bose_chowla(q) for the smallest odd prime
// q >= size. Keeps the maximum near size^2.
IntSet sidon_of_size(std::size_t size);

// Five-progression additive basis of size 7t+3 inside [0, 10t^2+8t] whose
// sum-set covers [0, 14t^2+10t-1].
IntSet mrose(std::int64_t t);

// [0, r-1] u {r, 2r, ..., 2r^2} u [n-r+1, n] with n = 2r^2: at most 4r
// elements, sum-set covers [0, 2n].
IntSet rohrbach(std::int64_t r);

// Report wrappers that attach the verified properties.
ConstructionReport describe_bose_chowla(std::uint64_t p);
ConstructionReport describe_mrose(std::int64_t t);
ConstructionReport describe_rohrbach(std::int64_t r);

// X = (s + A) u (n - t - A) for a Sidon set A of about (c/2) sqrt(n)
// elements; best of `trials` random shift pairs. Requires 0 < c <= 2.
ConstructionReport quasi_sidon_reflect(std::int64_t n, double c,
                                       std::int64_t trials, std::uint64_t seed);

// Two end blocks plus two progressions from n/2 with steps -l and l+1.
// Requires 0 < c <= 2 sqrt2.
ConstructionReport quasi_sidon_aps(std::int64_t n, double c);

// Sidon set B in [n/c^2] plus a randomly shifted copy of (B + b) within [n].
// Requires 1 <= c <= sqrt2.
ConstructionReport diff_reflect(std::int64_t n, double c, std::int64_t trials,
                                std::uint64_t seed);

// Piecewise block parameter for diff_aps.
double diff_aps_default_beta(double c);

// B = [b] plus progressions with steps -b and b-1, b = floor(beta sqrt n).
// Requires c >= sqrt2 and 0 < beta <= c.
ConstructionReport diff_aps(std::int64_t n, double c,
                            std::optional<double> beta = std::nullopt);

}  // namespace thinbase
