// Compiled with -mavx2; only reached through dispatch.cpp after a CPU check.

#include <immintrin.h>

#include <bit>

#include "thinbase/kernels.hpp"

namespace thinbase::kernels::avx2 {

namespace {

inline __m256i load(const void* p) {
  return _mm256_loadu_si256(static_cast<const __m256i*>(p));
}

inline void store(void* p, __m256i v) {
  _mm256_storeu_si256(static_cast<__m256i*>(p), v);
}

// Per-64-bit-lane popcount via the nibble lookup table.
inline __m256i popcount_lanes(__m256i v) {
  const __m256i lookup =
      _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi32(v, 4), low_mask);
  const __m256i counts = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo),
                                         _mm256_shuffle_epi8(lookup, hi));
  return _mm256_sad_epu8(counts, _mm256_setzero_si256());
}

}  // namespace

void or_shifted(std::uint64_t* dst, const std::uint64_t* src,
                std::size_t src_words, std::size_t shift) {
  if (src_words == 0) return;
  const std::size_t word = shift / 64;
  const unsigned bit = static_cast<unsigned>(shift % 64);
  std::uint64_t* out = dst + word;

  if (bit == 0) {
    std::size_t i = 0;
    for (; i + 4 <= src_words; i += 4) {
      store(out + i, _mm256_or_si256(load(out + i), load(src + i)));
    }
    for (; i < src_words; ++i) out[i] |= src[i];
    return;
  }

  const unsigned back = 64 - bit;
  const __m128i left = _mm_cvtsi32_si128(static_cast<int>(bit));
  const __m128i right = _mm_cvtsi32_si128(static_cast<int>(back));

  out[0] |= src[0] << bit;
  std::size_t i = 1;
  for (; i + 4 <= src_words; i += 4) {
    const __m256i cur = _mm256_sll_epi64(load(src + i), left);
    const __m256i prev = _mm256_srl_epi64(load(src + i - 1), right);
    store(out + i, _mm256_or_si256(load(out + i), _mm256_or_si256(cur, prev)));
  }
  for (; i < src_words; ++i) {
    out[i] |= (src[i] << bit) | (src[i - 1] >> back);
  }
  out[src_words] |= src[src_words - 1] >> back;
}

std::size_t popcount(const std::uint64_t* words, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_add_epi64(acc, popcount_lanes(load(words + i)));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::size_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i) total += std::popcount(words[i]);
  return total;
}

void add_u32(std::uint32_t* dst, const std::uint32_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    store(dst + i, _mm256_add_epi32(load(dst + i), load(src + i)));
  }
  for (; i < n; ++i) dst[i] += src[i];
}

bool covers(const std::uint64_t* have, const std::uint64_t* need,
            std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    // testc: (~have & need) == 0
    if (!_mm256_testc_si256(load(have + i), load(need + i))) return false;
  }
  for (; i < n; ++i) {
    if ((need[i] & ~have[i]) != 0) return false;
  }
  return true;
}

}  // namespace thinbase::kernels::avx2
