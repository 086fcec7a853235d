#include "thinbase/ff.hpp"

#include <stdexcept>
#include <string>

namespace thinbase::ff {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t q = 3; q * q <= n; q += 2) {
    if (n % q == 0) return false;
  }
  return true;
}

std::uint64_t next_prime(std::uint64_t n) noexcept {
  if (n <= 2) return 2;
  while (!is_prime(n)) ++n;
  return n;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

}  // namespace

Fp2Context::Fp2Context(std::uint64_t p, std::uint64_t d)
    : p_(p), d_(d), factors_(prime_factors(p * p - 1)) {}

Fp2Context Fp2Context::make(std::uint64_t p) {
  if (p == 2 || !is_prime(p)) {
    throw std::invalid_argument("GF(p^2): p = " + std::to_string(p) +
                                " is not an odd prime");
  }
  if (p > kMaxPrime) {
    throw std::invalid_argument("GF(p^2): p = " + std::to_string(p) +
                                " exceeds the supported range");
  }
  std::uint64_t d = 2;
  while (pow_mod(d, (p - 1) / 2, p) != p - 1) ++d;

  Fp2Context ctx(p, d);
  // Elements with c1 = 0 lie in GF(p)^* and never generate; start at c1 = 1.
  for (std::uint64_t c1 = 1; c1 < p; ++c1) {
    for (std::uint64_t c0 = 0; c0 < p; ++c0) {
      const Fp2Element candidate{c0, c1};
      if (ctx.order_check(candidate)) {
        ctx.generator_ = candidate;
        return ctx;
      }
    }
  }
  throw std::logic_error("GF(p^2): no generator found");
}

Fp2Element Fp2Context::add(const Fp2Element& a, const Fp2Element& b) const noexcept {
  return {(a.c0 + b.c0) % p_, (a.c1 + b.c1) % p_};
}

Fp2Element Fp2Context::sub(const Fp2Element& a, const Fp2Element& b) const noexcept {
  return {(a.c0 + p_ - b.c0) % p_, (a.c1 + p_ - b.c1) % p_};
}

Fp2Element Fp2Context::mul(const Fp2Element& a, const Fp2Element& b) const noexcept {
  // (a0 + a1 t)(b0 + b1 t) = a0 b0 + d a1 b1 + (a0 b1 + a1 b0) t
  const std::uint64_t hi = a.c1 * b.c1 % p_;
  const std::uint64_t c0 = (a.c0 * b.c0 + d_ * hi) % p_;
  const std::uint64_t c1 = (a.c0 * b.c1 % p_ + a.c1 * b.c0 % p_) % p_;
  return {c0, c1};
}

Fp2Element Fp2Context::pow(Fp2Element a, std::uint64_t e) const noexcept {
  Fp2Element result = one();
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

Fp2Element Fp2Context::inverse(const Fp2Element& a) const {
  if (a.is_zero()) throw std::invalid_argument("GF(p^2): zero has no inverse");
  return pow(a, group_order() - 1);
}

bool Fp2Context::order_check(const Fp2Element& a) const {
  if (a.is_zero()) throw std::invalid_argument("GF(p^2): order of zero");
  const std::uint64_t order = group_order();
  if (pow(a, order) != one()) return false;
  for (auto q : factors_) {
    if (pow(a, order / q) == one()) return false;
  }
  return true;
}

std::vector<std::uint32_t> Fp2Context::discrete_log_table() const {
  std::vector<std::uint32_t> log(p_ * p_, 0);
  Fp2Element x = one();
  for (std::uint64_t e = 0; e < group_order(); ++e) {
    log[index_of(x)] = static_cast<std::uint32_t>(e);
    x = mul(x, generator_);
  }
  return log;
}

}  // namespace thinbase::ff
