#pragma once

// Bit-vector view of an IntSet over the window [offset, offset + nbits).
// Internal to the library; the public surface only exchanges IntSet values.

#include <bit>
#include <cstdint>
#include <vector>

#include "thinbase/intset.hpp"

namespace thinbase::detail {

struct DenseBits {
  std::int64_t offset = 0;
  std::size_t nbits = 0;
  std::vector<std::uint64_t> words;

  static std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

  DenseBits() = default;
  DenseBits(std::int64_t off, std::size_t bits, std::size_t extra_words = 0)
      : offset(off), nbits(bits), words(words_for(bits) + extra_words, 0) {}

  static DenseBits from_set(const IntSet& s, std::size_t extra_words = 0) {
    if (s.empty()) return {};
    DenseBits out(s.min(), static_cast<std::size_t>(s.max() - s.min()) + 1,
                  extra_words);
    for (auto v : s) out.set(static_cast<std::size_t>(v - s.min()));
    return out;
  }

  void set(std::size_t pos) { words[pos / 64] |= std::uint64_t{1} << (pos % 64); }
  bool test(std::size_t pos) const {
    return (words[pos / 64] >> (pos % 64)) & 1u;
  }

  IntSet to_set() const {
    std::vector<IntSet::value_type> out;
    for (std::size_t w = 0; w < words.size(); ++w) {
      std::uint64_t bits = words[w];
      while (bits != 0) {
        const auto pos = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        if (pos < nbits) out.push_back(offset + static_cast<std::int64_t>(pos));
        bits &= bits - 1;
      }
    }
    return IntSet::from_sorted(std::move(out));
  }
};

}  // namespace thinbase::detail
