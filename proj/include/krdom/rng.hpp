#pragma once

#include <cstdint>

// Counter-based randomness built on the SplitMix64 finalizer
// (Steele, Lea & Flood 2014). Every random decision in this library is a
// pure function of a 64-bit seed and one or two indices, so sampling is
// order-independent and safe to parallelize: the same (seed, index) always
// yields the same bits regardless of evaluation schedule.

namespace krdom::rng {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

// Full-avalanche mix of a 64-bit word.
constexpr std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Value `i` of the stream rooted at `seed`.
constexpr std::uint64_t at(std::uint64_t seed, std::uint64_t i) {
  return mix(seed + (i + 1) * kGolden);
}

// Two-index form, used for per-pair decisions keyed on (seed, u, v).
constexpr std::uint64_t at2(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  return mix(at(seed, a) + (b + 1) * kGolden);
}

// Uniform double in [0, 1) from the top 53 bits.
constexpr double unit(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Per-trial seed derived from a master seed; stable under partial re-runs.
constexpr std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t trial_index) {
  return at(master_seed, trial_index);
}

}  // namespace krdom::rng
