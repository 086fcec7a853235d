#pragma once

// Independent reference implementations. Nothing here calls into the library
// beyond plain data types, so a bug in a kernel cannot hide in its oracle.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Vec = std::vector<std::int64_t>;

inline Vec sorted_unique(std::set<std::int64_t> s) { return Vec(s.begin(), s.end()); }

inline Vec sumset(const Vec& a) {
  std::set<std::int64_t> out;
  for (auto x : a)
    for (auto y : a) out.insert(x + y);
  return sorted_unique(out);
}

inline Vec restricted_sumset(const Vec& a) {
  std::set<std::int64_t> out;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) out.insert(a[i] + a[j]);
  return sorted_unique(out);
}

inline Vec diffset(const Vec& a) {
  std::set<std::int64_t> out;
  for (auto x : a)
    for (auto y : a) out.insert(x - y);
  return sorted_unique(out);
}

// Sidon iff the multiset {a + b : a <= b} has no repeated value.
inline bool is_sidon(const Vec& a) {
  std::map<std::int64_t, int> count;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i; j < a.size(); ++j)
      if (++count[a[i] + a[j]] > 1) return false;
  return true;
}

// Counts over a <= b (<= c) keyed by the sum.
inline std::map<std::int64_t, std::uint64_t> pair_counts(const Vec& a) {
  std::map<std::int64_t, std::uint64_t> out;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i; j < a.size(); ++j) ++out[a[i] + a[j]];
  return out;
}

inline std::map<std::int64_t, std::uint64_t> triple_counts(const Vec& a) {
  std::map<std::int64_t, std::uint64_t> out;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i; j < a.size(); ++j)
      for (std::size_t k = j; k < a.size(); ++k) ++out[a[i] + a[j] + a[k]];
  return out;
}

struct Best {
  std::int64_t value = -1;
  Vec witness;
};

// Every k-subset of [n] by bitmask; lexicographically least optimum.
template <class Measure>
Best brute_max(int k, int n, Measure measure) {
  Best best;
  std::vector<int> pick(static_cast<std::size_t>(k));
  std::iota(pick.begin(), pick.end(), 1);
  for (;;) {
    Vec a(pick.begin(), pick.end());
    const auto v = static_cast<std::int64_t>(measure(a).size());
    if (v > best.value) best = {v, a};
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return best;
}

inline Best brute_s(int k, int n) { return brute_max(k, n, sumset); }
inline Best brute_d(int k, int n) { return brute_max(k, n, diffset); }

// Sidon k-subset of [n] by plain backtracking on the difference set.
inline bool sidon_exists(int k, int n) {
  std::vector<int> chosen;
  std::vector<bool> used_diff(static_cast<std::size_t>(n) + 1, false);
  auto rec = [&](auto&& self, int next) -> bool {
    if (static_cast<int>(chosen.size()) == k) return true;
    for (int v = next; v <= n; ++v) {
      bool ok = true;
      std::vector<int> added;
      for (int u : chosen) {
        const int d = v - u;
        if (used_diff[static_cast<std::size_t>(d)]) {
          ok = false;
          break;
        }
        used_diff[static_cast<std::size_t>(d)] = true;
        added.push_back(d);
      }
      if (ok) {
        chosen.push_back(v);
        if (self(self, v + 1)) return true;
        chosen.pop_back();
      }
      for (int d : added) used_diff[static_cast<std::size_t>(d)] = false;
    }
    return false;
  };
  return rec(rec, 1);
}

// M(n) by enumerating every graph with m edges and every assignment of
// [n + m] to its vertices and edges. Only viable for n <= 4.
inline int naive_max_magic(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  const int all = static_cast<int>(pairs.size());
  for (int m = all; m >= 0; --m) {
    for (std::uint32_t g = 0; g < (1u << all); ++g) {
      if (__builtin_popcount(g) != m) continue;
      std::vector<std::pair<int, int>> edges;
      for (int e = 0; e < all; ++e)
        if (g >> e & 1) edges.push_back(pairs[static_cast<std::size_t>(e)]);
      std::vector<int> labels(static_cast<std::size_t>(n + m));
      std::iota(labels.begin(), labels.end(), 1);
      do {
        bool ok = true;
        int s = -1;
        for (int e = 0; e < m && ok; ++e) {
          const auto [u, v] = edges[static_cast<std::size_t>(e)];
          const int t = labels[static_cast<std::size_t>(u)] + labels[static_cast<std::size_t>(v)] +
                        labels[static_cast<std::size_t>(n + e)];
          if (s < 0) s = t;
          ok = t == s;
        }
        if (ok) return m;
      } while (std::next_permutation(labels.begin(), labels.end()));
    }
  }
  return 0;
}

// Random k-subset of [lo, hi].
inline Vec random_set(std::mt19937_64& rng, std::size_t k, std::int64_t lo, std::int64_t hi) {
  std::set<std::int64_t> out;
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  k = std::min<std::size_t>(k, span);
  while (out.size() < k) out.insert(lo + static_cast<std::int64_t>(rng() % span));
  return Vec(out.begin(), out.end());
}

}  // namespace oracle
