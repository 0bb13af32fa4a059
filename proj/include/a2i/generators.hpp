#pragma once

#include <cstdint>
#include <span>

#include "a2i/graph.hpp"

namespace a2i {

/// xorshift64* (Vigna 2014: shifts 12, 25, 27; multiplier 0x2545F4914F6CDD1D), state seeded
/// with one splitmix64 step of the user seed so seed 0 is usable.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next();
  /// Uniform in [0, 1) from the top 53 bits.
  double uniform();
  /// Uniform in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

/// Complement of the Gamma_d blow-up with the given class sizes (contiguous blocks). The seed
/// is accepted for a uniform interface and not used.
Graph gen_blowup_complement(int d, std::span<const int> sizes, std::uint64_t seed);

/// Complement of a random triangle-free graph: candidate pairs are shuffled (Fisher-Yates,
/// from the last index down) and each is then drawn once, kept when the draw is below p and
/// it closes no triangle.
Graph gen_random_alpha2(int n, double p, std::uint64_t seed);

}  // namespace a2i
