#pragma once

#include <cstdint>
#include <random>

#include "hyhlab/bigint.hpp"

namespace hyhlab {

/// Seeded, platform-independent random source. Every randomized operation in
/// the lab takes one of these (or a seed) so runs are reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  Bytes bytes(std::size_t count);

  /// Uniform in [0, bound). bound must be positive.
  BigUint below(const BigUint& bound);

  /// Uniform in [lo, hi], inclusive.
  BigUint between(const BigUint& lo, const BigUint& hi);

  /// Derives an independent child seed.
  std::uint64_t fork() { return engine_() ^ 0x9e3779b97f4a7c15ULL; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace hyhlab
