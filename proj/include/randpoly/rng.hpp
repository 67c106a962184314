#pragma once

#include <cstdint>

namespace randpoly {

// 64-bit finalizer (splitmix64 / murmur3-style avalanche)
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Counter-based stream: output k is a keyed hash of k alone, so draws depend
// only on (seed, stream, counter) and never on thread schedule. Streams for
// different trial indices are derived by hashing, not by jumping one orbit,
// so they cannot overlap.
class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::uint64_t stream)
      : key_(mix64(mix64(seed + 0x9E3779B97F4A7C15ull) ^
                   mix64(stream + 0xD1B54A32D192ED03ull))) {}

  std::uint64_t next_u64() {
    std::uint64_t z = key_ + (ctr_++) * 0x9E3779B97F4A7C15ull;
    return mix64(mix64(z) ^ key_);
  }

  // [0, 1)
  double uniform01() { return double(next_u64() >> 11) * 0x1p-53; }
  // (0, 1]
  double uniform_open01() { return double((next_u64() >> 11) + 1) * 0x1p-53; }

  std::uint64_t counter() const { return ctr_; }

 private:
  std::uint64_t key_;
  std::uint64_t ctr_ = 0;
};

// domain separation for independent sub-experiments sharing one user seed
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t domain) {
  return mix64(mix64(seed ^ 0xA0761D6478BD642Full) + domain);
}

}  // namespace randpoly
