#include <atomic>
#include <cstdlib>
#include <string_view>

#include "thinbase/kernels.hpp"

namespace thinbase::kernels {

namespace {

constexpr KernelTable kScalar{Isa::Scalar, &scalar::or_shifted,
                              &scalar::popcount, &scalar::add_u32,
                              &scalar::covers};

#if defined(THINBASE_HAVE_AVX2_TU)
constexpr KernelTable kAvx2{Isa::Avx2, &avx2::or_shifted, &avx2::popcount,
                            &avx2::add_u32, &avx2::covers};
#endif

bool cpu_has_avx2() noexcept {
#if defined(THINBASE_HAVE_AVX2_TU) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
  return false;
#endif
}

Isa initial_isa() noexcept {
  if (const char* forced = std::getenv("THINBASE_ISA")) {
    if (std::string_view(forced) == "scalar") return Isa::Scalar;
  }
  return cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar;
}

std::atomic<const KernelTable*>& current() noexcept {
  static std::atomic<const KernelTable*> ptr{&table(initial_isa())};
  return ptr;
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
  }
  return "unknown";
}

bool isa_available(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
      return cpu_has_avx2();
  }
  return false;
}

const KernelTable& table(Isa isa) noexcept {
#if defined(THINBASE_HAVE_AVX2_TU)
  if (isa == Isa::Avx2 && cpu_has_avx2()) return kAvx2;
#endif
  (void)isa;
  return kScalar;
}

const KernelTable& active() noexcept {
  return *current().load(std::memory_order_acquire);
}

Isa select(Isa isa) noexcept {
  const KernelTable* prev =
      current().exchange(&table(isa), std::memory_order_acq_rel);
  return prev->isa;
}

}  // namespace thinbase::kernels
