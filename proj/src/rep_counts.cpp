// Representation counts for pair sums, triple sums and differences.

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "thinbase/intset.hpp"
#include "thinbase/kernels.hpp"

namespace thinbase {

namespace {

constexpr std::int64_t kMaxDenseCells = std::int64_t{1} << 26;

RepCounts empty_window(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("rep_counts: lo must not exceed hi");
  RepCounts out;
  out.window_lo = lo;
  out.window_hi = hi;
  out.counts.assign(static_cast<std::size_t>(hi - lo + 1), 0);
  return out;
}

// Copies full[x - base] for x in the window.
template <class Count>
void fill_window(RepCounts& out, const std::vector<Count>& full, std::int64_t base) {
  const std::int64_t full_hi = base + static_cast<std::int64_t>(full.size()) - 1;
  const std::int64_t from = std::max(out.window_lo, base);
  const std::int64_t to = std::min(out.window_hi, full_hi);
  for (std::int64_t x = from; x <= to; ++x) {
    out.counts[static_cast<std::size_t>(x - out.window_lo)] =
        full[static_cast<std::size_t>(x - base)];
  }
}

void bump(RepCounts& out, std::int64_t x) {
  if (x >= out.window_lo && x <= out.window_hi) {
    ++out.counts[static_cast<std::size_t>(x - out.window_lo)];
  }
}

// Pair counts over positions [0, 2 * span], built one element at a time:
// adding element at position p contributes ind[0..p] shifted by p.
// If triples is non-null, the triple table is advanced after each element
// using the pair table restricted to elements <= the current one.
void dense_convolve(const IntSet& a, std::vector<std::uint32_t>& pairs,
                    std::vector<std::uint32_t>* triples) {
  const auto& k = kernels::active();
  const std::int64_t lo = a.min();
  const auto span = static_cast<std::size_t>(a.max() - lo);
  std::vector<std::uint32_t> ind(span + 1, 0);
  for (auto v : a) ind[static_cast<std::size_t>(v - lo)] = 1;
  pairs.assign(2 * span + 1, 0);
  if (triples) triples->assign(3 * span + 1, 0);
  for (auto v : a) {
    const auto p = static_cast<std::size_t>(v - lo);
    k.add_u32(pairs.data() + p, ind.data(), p + 1);
    if (triples) k.add_u32(triples->data() + p, pairs.data(), 2 * p + 1);
  }
}

}  // namespace

std::uint64_t RepCounts::at(std::int64_t x) const noexcept {
  if (x < window_lo || x > window_hi) return 0;
  return counts[static_cast<std::size_t>(x - window_lo)];
}

std::uint64_t RepCounts::total() const noexcept {
  std::uint64_t sum = 0;
  for (auto c : counts) sum += c;
  return sum;
}

std::uint64_t RepCounts::max_count() const noexcept {
  return counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
}

RepCounts rep_counts(const IntSet& a, std::int64_t lo, std::int64_t hi,
                     int arity) {
  if (arity != 2 && arity != 3) {
    throw std::invalid_argument("rep_counts: arity must be 2 or 3");
  }
  RepCounts out = empty_window(lo, hi);
  if (a.empty()) return out;

  const std::int64_t span = a.max() - a.min();
  const auto n = static_cast<std::int64_t>(a.size());
  const bool dense = arity * span < kMaxDenseCells &&
                     span <= std::max<std::int64_t>(4096, 16 * n * n);
  if (dense) {
    std::vector<std::uint32_t> pairs;
    std::vector<std::uint32_t> triples;
    dense_convolve(a, pairs, arity == 3 ? &triples : nullptr);
    if (arity == 2) {
      fill_window(out, pairs, 2 * a.min());
    } else {
      fill_window(out, triples, 3 * a.min());
    }
    return out;
  }

  const auto elems = a.elements();
  const std::size_t size = elems.size();
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = i; j < size; ++j) {
      if (arity == 2) {
        bump(out, elems[i] + elems[j]);
      } else {
        for (std::size_t l = j; l < size; ++l) bump(out, elems[i] + elems[j] + elems[l]);
      }
    }
  }
  return out;
}

RepCounts diff_counts(const IntSet& a, std::int64_t lo, std::int64_t hi) {
  RepCounts out = empty_window(lo, hi);
  for (auto x : a) {
    // Only b with x - b inside the window contribute.
    for (auto it = std::lower_bound(a.begin(), a.end(), x - hi);
         it != a.end() && *it <= x - lo; ++it) {
      bump(out, x - *it);
    }
  }
  return out;
}

}  // namespace thinbase
