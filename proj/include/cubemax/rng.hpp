#pragma once

#include <cstdint>
#include <optional>
#include <random>

namespace cubemax {

// The one generator used everywhere in the project. std::mt19937_64 is fully
// specified by the standard, so a seed reproduces the same stream on every
// platform. Distributions are implemented here rather than taken from
// <random>, whose distribution algorithms are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1) with 53 random bits; consumes one word.
  double uniform01();

  /// Standard normal via the Marsaglia polar method. Each accepted pair
  /// yields two variates; the second is returned by the following call.
  double gaussian();

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

/// SplitMix64 finalizer; used to derive independent stream seeds.
std::uint64_t mix64(std::uint64_t x);

/// Seed for sub-stream `stream` of a run seeded with `base`.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

}  // namespace cubemax
