#pragma once

// Exact s(k, n) = max |A + A| and d(k, n) = max |A - A| over k-subsets of
// [n], plus the interval/residue distribution statistic for Sidon sets.

#include <cstdint>
#include <vector>

#include "thinbase/intset.hpp"
#include "thinbase/search.hpp"

namespace thinbase::extremal {

// Sum masks use one bit per value of 2n - 1; 28 keeps them inside 64 bits
// and C(27, 13) leaves inside a desk-scale budget.
constexpr std::int64_t kMaxN = 28;

// Branch and bound over k-subsets containing 1 (both quantities are
// translation invariant), in lexicographic order. The witness is the
// lexicographically least optimal set. Throws std::invalid_argument unless
// 1 <= k <= n <= kMaxN.
SearchResult<IntSet> s_exact(std::int64_t k, std::int64_t n, unsigned threads = 1);
SearchResult<IntSet> d_exact(std::int64_t k, std::int64_t n, unsigned threads = 1);

struct Cell {
  std::int64_t k = 0;
  std::int64_t n = 0;
  SearchResult<IntSet> result;
};

enum class Quantity { Sum, Difference };

// All cells 1 <= k <= n <= max_n, ordered by n then k.
std::vector<Cell> exact_table(Quantity which, std::int64_t max_n, unsigned threads = 1);

struct Discrepancy {
  std::int64_t n = 0;
  std::int64_t modulus = 0;
  std::int64_t interval_lo = 0;  // worst interval, inclusive
  std::int64_t interval_hi = 0;
  std::int64_t residue = 0;
  std::int64_t observed = 0;
  double expected = 0;
  double normalized_error = 0;  // |observed - expected| / sqrt(n)
};

// Worst deviation of |A ∩ I ∩ (j + mZ)| from |A| |I| / (m n) over intervals
// I = [e_i + 1, e_j] with e_i = floor(i n / grid), 0 <= i < j <= grid, and
// residues 0 <= j < m. Ties keep the first (i, j, residue) in order.
// Throws std::invalid_argument unless A ⊆ [n], m >= 1 and grid >= 1.
Discrepancy distribution_discrepancy(const IntSet& a, std::int64_t n, std::int64_t m,
                                     std::int64_t grid);

}  // namespace thinbase::extremal
