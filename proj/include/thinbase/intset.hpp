#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace thinbase {

// A finite set of integers stored as a strictly increasing sequence.
//
// Values are immutable once built; every operation below is a pure function
// returning a new set. Sum-set style operations pick between a dense
// bit-vector path (shift-OR over a window anchored at min) and a sorted
// pair-enumeration path depending on how packed the set is.
class IntSet {
 public:
  using value_type = std::int64_t;
  using const_iterator = std::vector<value_type>::const_iterator;

  IntSet() = default;
  IntSet(std::initializer_list<value_type> values);
  // Sorts and removes duplicates.
  explicit IntSet(std::vector<value_type> values);

  // Caller guarantees values is strictly increasing (checked in debug).
  static IntSet from_sorted(std::vector<value_type> values);
  // [lo, hi]; empty when lo > hi.
  static IntSet interval(value_type lo, value_type hi);

  std::size_t size() const noexcept { return elems_.size(); }
  bool empty() const noexcept { return elems_.empty(); }
  value_type min() const { return elems_.front(); }
  value_type max() const { return elems_.back(); }
  value_type operator[](std::size_t i) const { return elems_[i]; }
  std::span<const value_type> elements() const noexcept { return elems_; }
  const_iterator begin() const noexcept { return elems_.begin(); }
  const_iterator end() const noexcept { return elems_.end(); }

  bool contains(value_type x) const noexcept;
  // Elements in [lo, hi].
  IntSet slice(value_type lo, value_type hi) const;
  std::size_t count_in(value_type lo, value_type hi) const noexcept;

  IntSet shifted(value_type delta) const;
  // {-a : a in A}
  IntSet negated() const;
  // {c - a : a in A}
  IntSet reflected(value_type c) const;
  // The first count elements.
  IntSet smallest(std::size_t count) const;

  friend bool operator==(const IntSet&, const IntSet&) = default;

 private:
  std::vector<value_type> elems_;
};

IntSet set_union(const IntSet& a, const IntSet& b);
bool is_subset(const IntSet& a, const IntSet& b);
// a \ b
IntSet set_difference(const IntSet& a, const IntSet& b);

enum class Strategy { Auto, Dense, Sparse };

// {a + i*d : i = 0, 1, ..., floor((b - a) / d)}. Throws on d == 0 or when
// b lies on the wrong side of a for the sign of d.
IntSet from_ap(IntSet::value_type a, IntSet::value_type d,
               IntSet::value_type b);

// A + A (a = b allowed).
IntSet sumset(const IntSet& a, Strategy strategy = Strategy::Auto);
// Sums of two distinct elements.
IntSet restricted_sumset(const IntSet& a, Strategy strategy = Strategy::Auto);
// A - A.
IntSet diffset(const IntSet& a, Strategy strategy = Strategy::Auto);
// A + B for two different sets.
IntSet minkowski_sum(const IntSet& a, const IntSet& b,
                     Strategy strategy = Strategy::Auto);

// Cardinalities without materializing the result set.
std::size_t sumset_size(const IntSet& a);
std::size_t diffset_size(const IntSet& a);

bool is_sidon(const IntSet& a);

// [lo, hi] \ s
IntSet missing_in_interval(const IntSet& s, IntSet::value_type lo,
                           IntSet::value_type hi);
// True iff [lo, hi] is contained in s.
bool covers_interval(const IntSet& s, IntSet::value_type lo,
                     IntSet::value_type hi);
// True iff [lo, hi] is contained in A + A (or A (+) A when restricted),
// without materializing the sum-set.
bool sumset_covers(const IntSet& a, IntSet::value_type lo,
                   IntSet::value_type hi, bool restricted = false);

// Representation counts restricted to the window [lo, hi].
struct RepCounts {
  std::int64_t window_lo = 0;
  std::int64_t window_hi = -1;
  std::vector<std::uint64_t> counts;  // counts[x - window_lo]

  std::uint64_t at(std::int64_t x) const noexcept;
  std::uint64_t total() const noexcept;
  std::uint64_t max_count() const noexcept;
};

// arity 2: a + b with a <= b; arity 3: a + b + c with a <= b <= c.
RepCounts rep_counts(const IntSet& a, std::int64_t lo, std::int64_t hi,
                     int arity);
// Ordered pairs (a, b) with a - b = x.
RepCounts diff_counts(const IntSet& a, std::int64_t lo, std::int64_t hi);

}  // namespace thinbase
