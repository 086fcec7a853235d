// Exact M(n) via the subset reformulation: vertex-label set A of size n inside
// [N], N = n + m, and magic sum s admit a bijective labelling iff every
// c in [N] \ A has s - c in A (+) A. Distinct labels then force distinct
// edges, so no graph enumeration is needed.

#include <bit>
#include <stdexcept>

#include "thinbase/magic.hpp"

namespace thinbase::magic {

namespace {

using u128 = unsigned __int128;

int popcount128(u128 x) {
  return std::popcount(static_cast<std::uint64_t>(x)) +
         std::popcount(static_cast<std::uint64_t>(x >> 64));
}

int lowest_bit128(u128 x) {
  const auto lo = static_cast<std::uint64_t>(x);
  if (lo) return std::countr_zero(lo);
  return 64 + std::countr_zero(static_cast<std::uint64_t>(x >> 64));
}

u128 bit_range(int lo, int hi) {
  u128 out = 0;
  for (int b = lo; b <= hi; ++b) out |= u128(1) << b;
  return out;
}

struct Found {
  std::uint64_t set_mask = 0;  // bit v for label v in A
  int magic_sum = 0;
};

struct Part {
  bool terminal = false;
  std::optional<Found> found;
  std::uint64_t nodes = 0;
};

// Lexicographic DFS over n-subsets of [N] with a fixed first element.
class SubsetSearch {
 public:
  SubsetSearch(int n, int big_n, int m, const PartitionToken& token)
      : n_(n), big_n_(big_n), m_(m), token_(token),
        s_range_(bit_range(6, std::max(6, 3 * big_n - 3))),
        all_(big_n == 64 ? ~0ULL : ((1ULL << (big_n + 1)) - 2)) {}

  Part run(int first) {
    Part part;
    dfs(1ULL << first, 0, first, 1, part);
    part.terminal = part.found.has_value();
    return part;
  }

 private:
  bool dfs(std::uint64_t a, u128 sums, int last, int count, Part& part) {
    ++part.nodes;
    if ((part.nodes & 0xFFFF) == 0 && token_.cancelled()) return true;
    if (count == n_) return leaf(a, sums, part);
    const int left = n_ - count;
    // Each later element adds at most `count + i` new restricted sums.
    const int optimistic = popcount128(sums) + left * count + left * (left - 1) / 2;
    if (optimistic < m_) return false;
    for (int v = last + 1; v <= big_n_ - left + 1; ++v) {
      const u128 next = sums | (u128(a) << v);
      if (dfs(a | (1ULL << v), next, v, count + 1, part)) return true;
    }
    return false;
  }

  bool leaf(std::uint64_t a, u128 sums, Part& part) {
    if (popcount128(sums) < m_) return false;
    u128 feasible = s_range_;
    std::uint64_t rest = all_ & ~a;
    while (rest && feasible) {
      const int c = std::countr_zero(rest);
      rest &= rest - 1;
      feasible &= sums << c;
    }
    if (!feasible) return false;
    part.found = Found{a, lowest_bit128(feasible)};
    return true;
  }

  int n_, big_n_, m_;
  const PartitionToken& token_;
  u128 s_range_;
  std::uint64_t all_;
};

MagicLabelling realize(int n, int big_n, const Found& f) {
  std::vector<std::int64_t> a;
  for (int v = 1; v <= big_n; ++v) {
    if (f.set_mask >> v & 1) a.push_back(v);
  }
  MagicLabelling out;
  out.mode = Mode::Bijective;
  out.n = n;
  out.magic_sum = f.magic_sum;
  out.vertex_labels = a;
  for (int c = 1; c <= big_n; ++c) {
    if (f.set_mask >> c & 1) continue;
    const std::int64_t target = f.magic_sum - c;
    bool placed = false;
    for (std::size_t i = 0; i < a.size() && !placed; ++i) {
      for (std::size_t j = i + 1; j < a.size(); ++j) {
        if (a[i] + a[j] == target) {
          out.edges.emplace_back(static_cast<std::int64_t>(i), static_cast<std::int64_t>(j));
          out.edge_labels.push_back(c);
          placed = true;
          break;
        }
      }
    }
    if (!placed) throw std::logic_error("search_max_magic: witness does not realize");
  }
  return out;
}

}  // namespace

SearchResult<MagicLabelling> search_max_magic(std::int64_t n, std::int64_t m_hint,
                                              unsigned threads) {
  if (n < 1 || n > kSearchMaxN) {
    throw std::invalid_argument("search_max_magic: n must lie in [1, " +
                                std::to_string(kSearchMaxN) + "]");
  }
  if (m_hint < 0) throw std::invalid_argument("search_max_magic: m_hint must be non-negative");
  const std::int64_t cap = n * (n - 1) / 2;
  const std::int64_t start = m_hint == 0 ? cap : std::min(m_hint, cap);

  SearchResult<MagicLabelling> res;
  res.exhaustive = true;
  for (std::int64_t m = start; m >= 0; --m) {
    const int ni = static_cast<int>(n);
    const int big_n = static_cast<int>(n + m);
    const std::size_t firsts = static_cast<std::size_t>(big_n - ni + 1);
    auto parts = run_ordered_partitions<Part>(firsts, threads, [&](const PartitionToken& tok) {
      SubsetSearch search(ni, big_n, static_cast<int>(m), tok);
      return search.run(static_cast<int>(tok.index()) + 1);
    });
    for (const auto& p : parts) res.nodes_explored += p.nodes;
    if (!parts.empty() && parts.back().found) {
      res.value = m;
      res.witness = realize(ni, big_n, *parts.back().found);
      return res;
    }
  }
  throw std::logic_error("search_max_magic: m = 0 must be feasible");
}

}  // namespace thinbase::magic
