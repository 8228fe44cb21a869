#pragma once

#include <bit>
#include <cstdint>

namespace repcheck {

// Everything random in this library flows through splitmix64 (Vigna's
// fixed-increment 64-bit generator). It was chosen because the entire
// generator is a dozen lines, produces identical output on every platform,
// and seeding is a plain assignment. The stream-derivation and rejection
// rules below are part of the pinned output contract; changing any constant
// changes every sampled number, so the version string must change with them.
inline constexpr const char* kGeneratorVersion = "splitmix64-stream-v1";

// Finalizer used both as the generator's output stage and as a seed hash.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
  }

 private:
  std::uint64_t state_;
};

// Independent stream for one sample: hash (seed, index) into the starting
// state. Each sample owns its stream, so sharding samples across workers can
// never change any sample's draws, and neighbouring indices do not walk
// overlapping segments of a common orbit.
inline SplitMix64 derive_stream(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64(mix64(seed ^ (0xD1342543DE82EF95ULL * (index + 1))));
}

// Per-n seed used by parameter sweeps: base seed XOR a fixed odd multiple
// of n.
inline std::uint64_t sweep_seed(std::uint64_t base_seed, std::int64_t n) {
  return base_seed ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(n));
}

// Uniform draw from [0, range) by masking to the smallest covering power of
// two and rejecting overshoots. No modulo bias. range == 1 consumes no draw.
inline std::uint64_t uniform_below(SplitMix64& rng, std::uint64_t range) {
  if (range <= 1) return 0;
  const int bits = 64 - std::countl_zero(range - 1);
  const std::uint64_t mask = (bits >= 64) ? ~0ULL : ((1ULL << bits) - 1ULL);
  for (;;) {
    const std::uint64_t r = rng.next() & mask;
    if (r < range) return r;
  }
}

// Uniform sequence element from [1, n].
inline std::int32_t uniform_1_to_n(SplitMix64& rng, std::int64_t n) {
  return static_cast<std::int32_t>(
      uniform_below(rng, static_cast<std::uint64_t>(n)) + 1);
}

// Uniform draw from the inclusive interval [lo, hi].
inline std::int64_t uniform_in(SplitMix64& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1ULL;
  return lo + static_cast<std::int64_t>(uniform_below(rng, range));
}

}  // namespace repcheck
