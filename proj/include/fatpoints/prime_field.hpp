#pragma once

/**
 * Arithmetic in F_p for p < 2^15 (default p = 31991).
 *
 * The size bound keeps every product of reduced elements below 2^30, so the
 * fused multiply-subtract used by the elimination kernel stays inside 32 bits
 * and a single Barrett reduction per update suffices.
 */

#include <cstdint>
#include <stdexcept>

namespace fatpoints {

inline constexpr uint32_t kDefaultPrime = 31991;

inline constexpr bool is_prime_u32(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

class PrimeField {
 public:
  explicit PrimeField(uint32_t p = kDefaultPrime) : p_(p) {
    if (p < 2 || p >= (1u << 15)) throw std::invalid_argument("prime must satisfy 2 <= p < 2^15");
    if (!is_prime_u32(p)) throw std::invalid_argument("modulus is not prime");
    barrett_ = static_cast<uint64_t>((static_cast<__uint128_t>(1) << 64) / p);
    p2_ = p * p;
  }

  uint32_t p() const { return p_; }

  // Reduces any x < 2^32; exact because p < 2^15 keeps the Barrett error below one step.
  uint32_t reduce(uint64_t x) const {
    uint64_t q = static_cast<uint64_t>((static_cast<__uint128_t>(x) * barrett_) >> 64);
    uint64_t r = x - q * p_;
    return static_cast<uint32_t>(r >= p_ ? r - p_ : r);
  }

  uint32_t add(uint32_t a, uint32_t b) const {
    uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }

  uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p_ - b; }

  uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }

  uint32_t mul(uint32_t a, uint32_t b) const { return reduce(static_cast<uint64_t>(a) * b); }

  // a - b*c in one reduction; all operands reduced.
  uint32_t mul_sub(uint32_t a, uint32_t b, uint32_t c) const {
    return reduce(static_cast<uint64_t>(a) + p2_ - static_cast<uint64_t>(b) * c);
  }

  uint32_t pow(uint32_t base, uint64_t e) const {
    uint32_t acc = 1;
    uint32_t b = base % p_;
    while (e) {
      if (e & 1) acc = mul(acc, b);
      b = mul(b, b);
      e >>= 1;
    }
    return acc;
  }

  uint32_t inv(uint32_t a) const {
    if (a % p_ == 0) throw std::domain_error("inverse of zero");
    return pow(a, p_ - 2);
  }

  // Reduces a signed integer into [0, p).
  uint32_t from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<uint32_t>(r);
  }

 private:
  uint32_t p_;
  uint32_t p2_;
  uint64_t barrett_;
};

}  // namespace fatpoints
