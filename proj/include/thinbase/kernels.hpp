#pragma once

// Word-level kernels behind the dense IntSet paths.
//
// Every kernel has a scalar reference implementation. Wider variants are
// selected once at startup from the CPU feature bits; THINBASE_ISA=scalar in
// the environment forces the reference path. All variants must produce
// bit-identical results (tests/test_kernels.cpp checks this).

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace thinbase::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa) noexcept;

struct KernelTable {
  Isa isa;

  // dst[i] |= (src << shift)[i], treating src as a little-endian bit string
  // of src_words words. dst must hold shift/64 + src_words + 1 words.
  void (*or_shifted)(std::uint64_t* dst, const std::uint64_t* src,
                     std::size_t src_words, std::size_t shift);

  std::size_t (*popcount)(const std::uint64_t* words, std::size_t n);

  // dst[i] += src[i] for i < n (wrapping uint32 arithmetic).
  void (*add_u32)(std::uint32_t* dst, const std::uint32_t* src, std::size_t n);

  // True iff every bit set in need is also set in have.
  bool (*covers)(const std::uint64_t* have, const std::uint64_t* need,
                 std::size_t n);
};

bool isa_available(Isa isa) noexcept;

// Table for a specific ISA. Requesting an unavailable ISA returns the
// scalar table.
const KernelTable& table(Isa isa) noexcept;

// Table used by the library.
const KernelTable& active() noexcept;

// Overrides the active table (tests and benchmarking). Returns the previous
// ISA. Not thread-safe against concurrent kernel use.
Isa select(Isa isa) noexcept;

namespace scalar {
void or_shifted(std::uint64_t* dst, const std::uint64_t* src,
                std::size_t src_words, std::size_t shift);
std::size_t popcount(const std::uint64_t* words, std::size_t n);
void add_u32(std::uint32_t* dst, const std::uint32_t* src, std::size_t n);
bool covers(const std::uint64_t* have, const std::uint64_t* need,
            std::size_t n);
}  // namespace scalar

namespace avx2 {
void or_shifted(std::uint64_t* dst, const std::uint64_t* src,
                std::size_t src_words, std::size_t shift);
std::size_t popcount(const std::uint64_t* words, std::size_t n);
void add_u32(std::uint32_t* dst, const std::uint32_t* src, std::size_t n);
bool covers(const std::uint64_t* have, const std::uint64_t* need,
            std::size_t n);
}  // namespace avx2

}  // namespace thinbase::kernels
