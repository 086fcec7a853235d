#include "thinbase/extremal.hpp"

#include <bit>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

namespace thinbase::extremal {

namespace {

void check_cell(std::int64_t k, std::int64_t n, const char* who) {
  if (k < 1 || n < k || n > kMaxN) {
    throw std::invalid_argument(std::string(who) + ": need 1 <= k <= n <= " +
                                std::to_string(kMaxN));
  }
}

// Value v occupies bit v - 1 of `set`.
IntSet from_mask(std::uint64_t set) {
  std::vector<std::int64_t> out;
  while (set) {
    out.push_back(std::countr_zero(set) + 1);
    set &= set - 1;
  }
  return IntSet::from_sorted(std::move(out));
}

struct Part {
  bool terminal = false;
  std::int64_t value = -1;
  std::uint64_t witness = 0;
  std::uint64_t nodes = 0;
};

// Sum search state: S has bit x + y - 2 for x, y in A.
struct SumState {
  std::uint64_t sums = 0;

  SumState add(std::uint64_t set, int v) const {
    return {sums | (set << (v - 1)) | (1ULL << (2 * v - 2))};
  }
  std::int64_t value() const { return std::popcount(sums); }
  // Element number j + 1 contributes at most j + 1 new sums.
  static std::int64_t room(std::int64_t k, std::int64_t j) { return (k - j) * (k + j + 1) / 2; }
};

// Difference search state: D has bit d for each positive difference d,
// R has bit 64 - u for each u in A so that R >> (64 - v) lists v - u.
struct DiffState {
  std::uint64_t diffs = 0;
  std::uint64_t reversed = 0;

  DiffState add(std::uint64_t, int v) const {
    return {diffs | (reversed >> (64 - v)), reversed | (1ULL << (64 - v))};
  }
  std::int64_t value() const { return 2 * std::popcount(diffs) + 1; }
  // Element number j + 1 contributes at most j new positive differences.
  static std::int64_t room(std::int64_t k, std::int64_t j) { return (k - j) * (k + j - 1); }
};

template <class State>
class Search {
 public:
  Search(int k, int n, std::int64_t cap, std::int64_t floor, const PartitionToken& token,
         Part& part)
      : k_(k), n_(n), cap_(cap), best_(floor), token_(token), part_(part) {}

  void run(int second) {
    State st = State{}.add(0, 1);
    const std::uint64_t set = 1ULL;
    st = st.add(set, second);
    dfs(set | (1ULL << (second - 1)), st, second, 2);
  }

 private:
  bool dfs(std::uint64_t set, const State& st, int last, int count) {
    ++part_.nodes;
    if ((part_.nodes & 0xFFFF) == 0 && token_.cancelled()) return true;
    const std::int64_t now = st.value();
    if (count == k_) {
      if (now > best_) {
        best_ = now;
        part_.value = now;
        part_.witness = set;
        if (now >= cap_) {
          part_.terminal = true;
          return true;
        }
      }
      return false;
    }
    if (std::min(cap_, now + State::room(k_, count)) <= best_) return false;
    const int left = k_ - count;
    for (int v = last + 1; v <= n_ - left + 1; ++v) {
      if (dfs(set | (1ULL << (v - 1)), st.add(set, v), v, count + 1)) return true;
    }
    return false;
  }

  int k_, n_;
  std::int64_t cap_;
  std::int64_t best_;
  const PartitionToken& token_;
  Part& part_;
};

template <class State>
SearchResult<IntSet> exact(std::int64_t k, std::int64_t n, std::int64_t cap, unsigned threads) {
  SearchResult<IntSet> res;
  res.exhaustive = true;
  if (k == 1) {
    res.value = 1;
    res.witness = IntSet{1};
    res.nodes_explored = 1;
    return res;
  }
  // {1, ..., k} seeds the incumbent; it is the first leaf of partition 0, so
  // later partitions only need to beat it strictly.
  State seed{};
  std::uint64_t seed_set = 0;
  for (int v = 1; v <= k; ++v) {
    seed = seed.add(seed_set, v);
    seed_set |= 1ULL << (v - 1);
  }
  const std::int64_t seed_value = seed.value();

  const auto parts_count = static_cast<std::size_t>(n - k + 1);
  auto parts = run_ordered_partitions<Part>(parts_count, threads, [&](const PartitionToken& tok) {
    Part part;
    const std::int64_t floor = tok.index() == 0 ? seed_value - 1 : seed_value;
    Search<State> search(static_cast<int>(k), static_cast<int>(n), cap, floor, tok, part);
    search.run(static_cast<int>(tok.index()) + 2);
    return part;
  });

  res.value = -1;
  for (const auto& p : parts) {
    res.nodes_explored += p.nodes;
    if (p.value > res.value) {
      res.value = p.value;
      res.witness = from_mask(p.witness);
    }
  }
  return res;
}

}  // namespace

SearchResult<IntSet> s_exact(std::int64_t k, std::int64_t n, unsigned threads) {
  check_cell(k, n, "s_exact");
  const std::int64_t cap = std::min(k * (k + 1) / 2, 2 * n - 1);
  return exact<SumState>(k, n, cap, threads);
}

SearchResult<IntSet> d_exact(std::int64_t k, std::int64_t n, unsigned threads) {
  check_cell(k, n, "d_exact");
  const std::int64_t cap = std::min(k * (k - 1) + 1, 2 * n - 1);
  return exact<DiffState>(k, n, cap, threads);
}

std::vector<Cell> exact_table(Quantity which, std::int64_t max_n, unsigned threads) {
  if (max_n < 1 || max_n > kMaxN) {
    throw std::invalid_argument("exact_table: max_n must lie in [1, " + std::to_string(kMaxN) +
                                "]");
  }
  std::vector<Cell> out;
  for (std::int64_t n = 1; n <= max_n; ++n) {
    for (std::int64_t k = 1; k <= n; ++k) {
      out.push_back({k, n,
                     which == Quantity::Sum ? s_exact(k, n, threads) : d_exact(k, n, threads)});
    }
  }
  return out;
}

Discrepancy distribution_discrepancy(const IntSet& a, std::int64_t n, std::int64_t m,
                                     std::int64_t grid) {
  if (n < 1) throw std::invalid_argument("distribution_discrepancy: n must be positive");
  if (m < 1) throw std::invalid_argument("distribution_discrepancy: m must be positive");
  if (grid < 1) throw std::invalid_argument("distribution_discrepancy: grid must be positive");
  if (!a.empty() && (a.min() < 1 || a.max() > n)) {
    throw std::invalid_argument("distribution_discrepancy: A must lie in [1, n]");
  }

  std::vector<std::int64_t> edge(static_cast<std::size_t>(grid) + 1);
  for (std::int64_t i = 0; i <= grid; ++i) edge[static_cast<std::size_t>(i)] = i * n / grid;

  // prefix[i][r]: elements of A in [1, edge_i] congruent to r.
  const auto mm = static_cast<std::size_t>(m);
  std::vector<std::int64_t> prefix((edge.size()) * mm, 0);
  {
    std::size_t pos = 0;
    std::vector<std::int64_t> run(mm, 0);
    for (std::size_t i = 0; i < edge.size(); ++i) {
      while (pos < a.size() && a[pos] <= edge[i]) {
        ++run[static_cast<std::size_t>(a[pos] % m)];
        ++pos;
      }
      std::copy(run.begin(), run.end(), prefix.begin() + static_cast<std::ptrdiff_t>(i * mm));
    }
  }

  Discrepancy worst;
  worst.n = n;
  worst.modulus = m;
  worst.normalized_error = -1;
  const double root = std::sqrt(static_cast<double>(n));
  const double size = static_cast<double>(a.size());
  for (std::size_t i = 0; i < edge.size(); ++i) {
    for (std::size_t j = i + 1; j < edge.size(); ++j) {
      const std::int64_t len = edge[j] - edge[i];
      if (len <= 0) continue;
      const double expected =
          size * static_cast<double>(len) / (static_cast<double>(m) * static_cast<double>(n));
      for (std::size_t r = 0; r < mm; ++r) {
        const std::int64_t observed = prefix[j * mm + r] - prefix[i * mm + r];
        const double err = std::abs(static_cast<double>(observed) - expected) / root;
        if (err > worst.normalized_error) {
          worst.interval_lo = edge[i] + 1;
          worst.interval_hi = edge[j];
          worst.residue = static_cast<std::int64_t>(r);
          worst.observed = observed;
          worst.expected = expected;
          worst.normalized_error = err;
        }
      }
    }
  }
  if (worst.normalized_error < 0) worst.normalized_error = 0;
  return worst;
}

}  // namespace thinbase::extremal
