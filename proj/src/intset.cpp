#include "thinbase/intset.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "dense_bits.hpp"
#include "thinbase/kernels.hpp"

namespace thinbase {

using value_type = IntSet::value_type;
using detail::DenseBits;

IntSet::IntSet(std::initializer_list<value_type> values)
    : IntSet(std::vector<value_type>(values)) {}

IntSet::IntSet(std::vector<value_type> values) : elems_(std::move(values)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

IntSet IntSet::from_sorted(std::vector<value_type> values) {
  assert(std::adjacent_find(values.begin(), values.end(),
                            [](auto x, auto y) { return x >= y; }) ==
         values.end());
  IntSet out;
  out.elems_ = std::move(values);
  return out;
}

IntSet IntSet::interval(value_type lo, value_type hi) {
  std::vector<value_type> out;
  if (lo <= hi) {
    out.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (value_type x = lo; x <= hi; ++x) out.push_back(x);
  }
  return from_sorted(std::move(out));
}

bool IntSet::contains(value_type x) const noexcept {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

IntSet IntSet::slice(value_type lo, value_type hi) const {
  if (lo > hi) return {};
  auto first = std::lower_bound(elems_.begin(), elems_.end(), lo);
  auto last = std::upper_bound(first, elems_.end(), hi);
  return from_sorted(std::vector<value_type>(first, last));
}

std::size_t IntSet::count_in(value_type lo, value_type hi) const noexcept {
  if (lo > hi) return 0;
  auto first = std::lower_bound(elems_.begin(), elems_.end(), lo);
  auto last = std::upper_bound(first, elems_.end(), hi);
  return static_cast<std::size_t>(last - first);
}

IntSet IntSet::shifted(value_type delta) const {
  std::vector<value_type> out(elems_);
  for (auto& v : out) v += delta;
  return from_sorted(std::move(out));
}

IntSet IntSet::negated() const { return reflected(0); }

IntSet IntSet::reflected(value_type c) const {
  std::vector<value_type> out;
  out.reserve(elems_.size());
  for (auto it = elems_.rbegin(); it != elems_.rend(); ++it) out.push_back(c - *it);
  return from_sorted(std::move(out));
}

IntSet IntSet::smallest(std::size_t count) const {
  count = std::min(count, elems_.size());
  return from_sorted(std::vector<value_type>(elems_.begin(),
                                             elems_.begin() + static_cast<std::ptrdiff_t>(count)));
}

IntSet set_union(const IntSet& a, const IntSet& b) {
  std::vector<value_type> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return IntSet::from_sorted(std::move(out));
}

bool is_subset(const IntSet& a, const IntSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

IntSet set_difference(const IntSet& a, const IntSet& b) {
  std::vector<value_type> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return IntSet::from_sorted(std::move(out));
}

IntSet from_ap(value_type a, value_type d, value_type b) {
  if (d == 0) throw std::invalid_argument("from_ap: difference must be nonzero");
  if ((d > 0 && b < a) || (d < 0 && b > a)) {
    throw std::invalid_argument("from_ap: end point lies before the start");
  }
  const value_type steps = (b - a) / d;  // both non-negative quotient
  std::vector<value_type> out;
  out.reserve(static_cast<std::size_t>(steps + 1));
  for (value_type i = 0; i <= steps; ++i) out.push_back(a + i * d);
  if (d < 0) std::reverse(out.begin(), out.end());
  return IntSet::from_sorted(std::move(out));
}

namespace {

constexpr value_type kMaxDenseSpan = value_type{1} << 28;

bool prefer_dense(value_type span, std::size_t count) {
  if (span > kMaxDenseSpan) return false;
  const auto words = static_cast<std::size_t>(span / 64 + 1);
  return words <= 4 * count + 64;
}

bool use_dense(Strategy strategy, value_type span, std::size_t count) {
  switch (strategy) {
    case Strategy::Dense:
      return span <= kMaxDenseSpan;
    case Strategy::Sparse:
      return false;
    case Strategy::Auto:
      break;
  }
  return prefer_dense(span, count);
}

// Bits of A + A (restricted: distinct summands only), positions relative to
// 2 * min(A). Built incrementally: each element is OR-ed against the prefix
// of smaller elements.
DenseBits dense_self_sum(const IntSet& a, bool restricted) {
  const value_type lo = a.min();
  const auto span = static_cast<std::size_t>(a.max() - lo);
  DenseBits prefix(lo, span + 1);
  DenseBits out(2 * lo, 2 * span + 1, 2);
  const auto& k = kernels::active();
  for (auto v : a) {
    const auto pos = static_cast<std::size_t>(v - lo);
    if (!restricted) prefix.set(pos);
    k.or_shifted(out.words.data(), prefix.words.data(), pos / 64 + 1, pos);
    if (restricted) prefix.set(pos);
  }
  return out;
}

DenseBits dense_pair_sum(const IntSet& a, const IntSet& b) {
  const DenseBits bits_b = DenseBits::from_set(b);
  const auto span_a = static_cast<std::size_t>(a.max() - a.min());
  DenseBits out(a.min() + b.min(), span_a + bits_b.nbits,
                bits_b.words.size() + 2);
  const auto& k = kernels::active();
  for (auto v : a) {
    k.or_shifted(out.words.data(), bits_b.words.data(), bits_b.words.size(),
                 static_cast<std::size_t>(v - a.min()));
  }
  return out;
}

std::vector<value_type> sparse_self_sum(const IntSet& a, bool restricted) {
  std::vector<value_type> out;
  const auto n = a.size();
  out.reserve(n * (n + 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = restricted ? i + 1 : i; j < n; ++j) out.push_back(a[i] + a[j]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<value_type> sparse_pair_sum(const IntSet& a, const IntSet& b) {
  std::vector<value_type> out;
  out.reserve(a.size() * b.size());
  for (auto x : a) {
    for (auto y : b) out.push_back(x + y);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

IntSet self_sum(const IntSet& a, bool restricted, Strategy strategy) {
  if (a.empty() || (restricted && a.size() < 2)) return {};
  if (use_dense(strategy, a.max() - a.min(), a.size())) {
    return dense_self_sum(a, restricted).to_set();
  }
  return IntSet::from_sorted(sparse_self_sum(a, restricted));
}

}  // namespace

IntSet sumset(const IntSet& a, Strategy strategy) {
  return self_sum(a, false, strategy);
}

IntSet restricted_sumset(const IntSet& a, Strategy strategy) {
  return self_sum(a, true, strategy);
}

IntSet minkowski_sum(const IntSet& a, const IntSet& b, Strategy strategy) {
  if (a.empty() || b.empty()) return {};
  const value_type span = (a.max() - a.min()) + (b.max() - b.min());
  if (use_dense(strategy, span, std::max(a.size(), b.size()))) {
    return dense_pair_sum(a, b).to_set();
  }
  return IntSet::from_sorted(sparse_pair_sum(a, b));
}

IntSet diffset(const IntSet& a, Strategy strategy) {
  return minkowski_sum(a, a.negated(), strategy);
}

std::size_t sumset_size(const IntSet& a) {
  if (a.empty()) return 0;
  if (prefer_dense(a.max() - a.min(), a.size())) {
    const DenseBits bits = dense_self_sum(a, false);
    return kernels::active().popcount(bits.words.data(), bits.words.size());
  }
  return sparse_self_sum(a, false).size();
}

std::size_t diffset_size(const IntSet& a) {
  if (a.empty()) return 0;
  if (prefer_dense(2 * (a.max() - a.min()), a.size())) {
    const DenseBits bits = dense_pair_sum(a, a.negated());
    return kernels::active().popcount(bits.words.data(), bits.words.size());
  }
  return sparse_pair_sum(a, a.negated()).size();
}

bool is_sidon(const IntSet& a) {
  const auto k = a.size();
  if (k <= 1) return true;
  return sumset_size(a) == k * (k + 1) / 2;
}

IntSet missing_in_interval(const IntSet& s, value_type lo, value_type hi) {
  std::vector<value_type> out;
  if (lo > hi) return {};
  auto it = std::lower_bound(s.begin(), s.end(), lo);
  for (value_type x = lo; x <= hi; ++x) {
    if (it != s.end() && *it == x) {
      ++it;
    } else {
      out.push_back(x);
    }
  }
  return IntSet::from_sorted(std::move(out));
}

bool covers_interval(const IntSet& s, value_type lo, value_type hi) {
  if (lo > hi) return true;
  return s.count_in(lo, hi) == static_cast<std::size_t>(hi - lo + 1);
}

bool sumset_covers(const IntSet& a, value_type lo, value_type hi,
                   bool restricted) {
  if (lo > hi) return true;
  if (a.empty() || (restricted && a.size() < 2)) return false;
  if (lo < 2 * a.min() || hi > 2 * a.max()) return false;
  if (!prefer_dense(a.max() - a.min(), a.size())) {
    return covers_interval(self_sum(a, restricted, Strategy::Sparse), lo, hi);
  }
  const DenseBits sums = dense_self_sum(a, restricted);
  DenseBits need(sums.offset, sums.nbits, sums.words.size() - DenseBits::words_for(sums.nbits));
  for (value_type x = lo; x <= hi; ++x) need.set(static_cast<std::size_t>(x - sums.offset));
  return kernels::active().covers(sums.words.data(), need.words.data(), sums.words.size());
}

}  // namespace thinbase
