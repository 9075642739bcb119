#pragma once

/**
 * Deterministic pseudorandomness for point sampling.
 *
 * One generator (splitmix64) plus one seed-derivation rule; both are part of
 * the certificate replay contract and must never change silently. Streams are
 * split per case and per attempt so results are independent of scheduling.
 */

#include <cstdint>
#include <string_view>

namespace fatpoints {

inline constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ull;

// splitmix64 (Steele/Lea/Flood). Full 64-bit period, passes BigCrush.
struct SplitMix64 {
  uint64_t state = 0;

  constexpr explicit SplitMix64(uint64_t seed) : state(seed) {}

  constexpr uint64_t next() {
    uint64_t z = (state += kGolden);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
};

// Derives a child seed from a parent seed and a tag. Used for the
// case -> attempt -> point stream hierarchy; frozen by golden tests.
constexpr uint64_t derive_seed(uint64_t parent, uint64_t tag) {
  SplitMix64 s(parent + (tag + 1) * kGolden);
  return s.next();
}

// FNV-1a, the case-key hash for per-case stream derivation.
constexpr uint64_t fnv1a64(std::string_view text) {
  uint64_t h = 0xCBF29CE484222325ull;
  for (char c : text) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ull;
  }
  return h;
}

// Uniform value in [0, bound) by rejection; no modulo bias.
inline uint64_t uniform_below(SplitMix64& gen, uint64_t bound) {
  const uint64_t residue = (~bound + 1) % bound;  // 2^64 mod bound
  const uint64_t limit = 0ull - residue;          // largest multiple of bound
  for (;;) {
    uint64_t v = gen.next();
    if (residue == 0 || v < limit) return v % bound;
  }
}

}  // namespace fatpoints
