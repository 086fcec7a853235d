#include <bit>

#include "thinbase/kernels.hpp"

namespace thinbase::kernels::scalar {

void or_shifted(std::uint64_t* dst, const std::uint64_t* src,
                std::size_t src_words, std::size_t shift) {
  if (src_words == 0) return;
  const std::size_t word = shift / 64;
  const unsigned bit = static_cast<unsigned>(shift % 64);
  std::uint64_t* out = dst + word;
  if (bit == 0) {
    for (std::size_t i = 0; i < src_words; ++i) out[i] |= src[i];
    return;
  }
  const unsigned back = 64 - bit;
  out[0] |= src[0] << bit;
  for (std::size_t i = 1; i < src_words; ++i) {
    out[i] |= (src[i] << bit) | (src[i - 1] >> back);
  }
  out[src_words] |= src[src_words - 1] >> back;
}

std::size_t popcount(const std::uint64_t* words, std::size_t n) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < n; ++i) total += std::popcount(words[i]);
  return total;
}

void add_u32(std::uint32_t* dst, const std::uint32_t* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] += src[i];
}

bool covers(const std::uint64_t* have, const std::uint64_t* need,
            std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if ((need[i] & ~have[i]) != 0) return false;
  }
  return true;
}

}  // namespace thinbase::kernels::scalar
