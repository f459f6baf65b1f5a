#pragma once

#include <cstdint>
#include <vector>

#include "latmod/linalg.hpp"

namespace latmod {

// Deterministic, platform-independent PRNG (splitmix64). The standard
// distributions are implementation-defined, so sampling here is hand-rolled;
// every seeded run reproduces bit-for-bit on any host.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound); bound > 0. Lemire reduction, bias-free.
  std::uint64_t below(std::uint64_t bound);

  // Uniform integer in [lo, hi] inclusive.
  long long int_in(long long lo, long long hi);

  bool coin() { return next() & 1; }

  // Derives an independent stream; used to shard work deterministically
  // (per-trial, per-instance) so parallel order cannot matter.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream);

 private:
  std::uint64_t state_;
};

// Vector with integer entries in [-box, box], guaranteed nonzero.
Vector random_int_vector(Rng& rng, std::size_t n, long long box);

}  // namespace latmod
