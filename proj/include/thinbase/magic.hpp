#pragma once

// Edge-magic labellings: a total labelling of a graph with
// l(u) + l(v) + l(uv) = s on every edge.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "thinbase/intset.hpp"
#include "thinbase/report.hpp"
#include "thinbase/search.hpp"

namespace thinbase::magic {

enum class Mode { Bijective, Injection };

std::string_view mode_name(Mode m) noexcept;
// Throws std::invalid_argument for anything but "bijective" / "injection".
Mode parse_mode(std::string_view name);

struct MagicLabelling {
  Mode mode = Mode::Bijective;
  std::int64_t n = 0;
  std::int64_t magic_sum = 0;
  std::vector<std::int64_t> vertex_labels;                    // indexed by vertex
  std::vector<std::pair<std::int64_t, std::int64_t>> edges;   // 0-based, u < v
  std::vector<std::int64_t> edge_labels;                      // parallel to edges

  std::size_t edge_count() const noexcept { return edges.size(); }
  friend bool operator==(const MagicLabelling&, const MagicLabelling&) = default;
};

// Every invariant for the labelling's mode, each with its first counterexample.
std::vector<Check> verify(const MagicLabelling& l);
inline bool is_valid(const MagicLabelling& l) { return all_pass(verify(l)); }

// Precondition report for build_from_basis; empty when all hold.
std::vector<Check> basis_violations(const IntSet& a, std::int64_t k, std::int64_t m);

// Bijective labelling on |A| vertices with m - |A| edges and magic sum k + m.
// Vertex i gets a_i; each c in [m] \ A becomes the edge {i, j} with
// a_i + a_j = s - c, smallest i then smallest j. Edges are listed by label.
// Requires min A = 1, max A <= m and s - c in A (+) A for every such c
// (implied by A (+) A covering [k, k+m-1]); otherwise throws
// std::invalid_argument naming every violation.
MagicLabelling build_from_basis(const IntSet& a, std::int64_t k, std::int64_t m);

// The shifted five-progression basis plus one extra vertex: 7t+4 vertices,
// 14t^2+3t-5 edges.
MagicLabelling mrose_magic(std::int64_t t);

// Adds an isolated vertex labelled n+m+1. Throws std::invalid_argument unless
// the input is a valid bijective labelling.
MagicLabelling pad_isolated(const MagicLabelling& l);

struct InjectionResult {
  MagicLabelling labelling;
  std::int64_t sidon_size = 0;     // m
  IntSet sidon;                    // before removals
  std::int64_t window_lo = 0;      // 2 a_m
  std::int64_t window_hi = 0;      // floor((2+delta) m^2)
  std::uint64_t multiplicity = 0;  // triple representations of s
  std::size_t removed = 0;
};

// Edge-magic injection of K_n from a Sidon set of size ceil((12/11+delta) n).
// Throws std::invalid_argument for n < 4 or delta <= 0 and InfeasibleError
// when removals leave fewer than n labels.
InjectionResult injection_kn(std::int64_t n, double delta);

constexpr std::int64_t kSearchMaxN = 8;

// Exact M(n) for 1 <= n <= kSearchMaxN. m_hint caps the first m tried
// (0 means n(n-1)/2). The witness is the least (A, s) in lexicographic order
// for the largest feasible m, independent of `threads`.
SearchResult<MagicLabelling> search_max_magic(std::int64_t n, std::int64_t m_hint = 0,
                                              unsigned threads = 1);

}  // namespace thinbase::magic
