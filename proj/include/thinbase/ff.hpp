#pragma once

// Arithmetic in GF(p^2) = GF(p)[theta] / (theta^2 - d) for an odd prime p and
// a quadratic non-residue d. Enough machinery to realize the Bose-Chowla
// Sidon sets; prime powers and characteristic 2 are not supported.

#include <cstdint>
#include <vector>

namespace thinbase::ff {

bool is_prime(std::uint64_t n) noexcept;
// Smallest prime >= n.
std::uint64_t next_prime(std::uint64_t n) noexcept;
// Distinct prime factors in increasing order (trial division).
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

// c0 + c1 * theta
struct Fp2Element {
  std::uint64_t c0 = 0;
  std::uint64_t c1 = 0;

  bool is_zero() const noexcept { return c0 == 0 && c1 == 0; }
  friend bool operator==(const Fp2Element&, const Fp2Element&) = default;
};

class Fp2Context {
 public:
  static constexpr std::uint64_t kMaxPrime = 1'000'000;

  // Smallest non-residue d >= 2 and the first generator in (c1, c0) order.
  // Throws std::invalid_argument unless p is an odd prime <= kMaxPrime.
  static Fp2Context make(std::uint64_t p);

  std::uint64_t p() const noexcept { return p_; }
  std::uint64_t non_residue() const noexcept { return d_; }
  const Fp2Element& generator() const noexcept { return generator_; }
  // p^2 - 1
  std::uint64_t group_order() const noexcept { return p_ * p_ - 1; }
  const std::vector<std::uint64_t>& group_order_factors() const noexcept {
    return factors_;
  }

  Fp2Element one() const noexcept { return {1, 0}; }
  Fp2Element theta() const noexcept { return {0, 1}; }
  Fp2Element element(std::uint64_t c0, std::uint64_t c1) const noexcept {
    return {c0 % p_, c1 % p_};
  }

  Fp2Element add(const Fp2Element& a, const Fp2Element& b) const noexcept;
  Fp2Element sub(const Fp2Element& a, const Fp2Element& b) const noexcept;
  Fp2Element mul(const Fp2Element& a, const Fp2Element& b) const noexcept;
  Fp2Element pow(Fp2Element a, std::uint64_t e) const noexcept;
  // Throws std::invalid_argument for zero.
  Fp2Element inverse(const Fp2Element& a) const;

  // True iff a generates the multiplicative group. Throws for a == 0.
  bool order_check(const Fp2Element& a) const;

  // Index used by the discrete-log table: c1 * p + c0.
  std::uint64_t index_of(const Fp2Element& a) const noexcept {
    return a.c1 * p_ + a.c0;
  }

  // log[index_of(x)] = e with g^e = x, for nonzero x; log[0] is unused.
  // Built by walking the powers of the generator.
  std::vector<std::uint32_t> discrete_log_table() const;

 private:
  Fp2Context(std::uint64_t p, std::uint64_t d);

  std::uint64_t p_;
  std::uint64_t d_;
  Fp2Element generator_;
  std::vector<std::uint64_t> factors_;
};

}  // namespace thinbase::ff
