#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "cubemax/matrix.hpp"

namespace cubemax {

enum class BetaMethod { ExactNaive, ExactGray, MonteCarlo };

std::string_view to_string(BetaMethod method);

/// Value of beta(A) = 2^-n * sum over the cube of ||Ax||_inf, with provenance.
/// For exact methods n_samples == 2^n and std_error == 0.
struct BetaEstimate {
  double value = 0.0;
  BetaMethod method = BetaMethod::ExactGray;
  std::uint64_t n_samples = 0;
  double std_error = 0.0;
};

enum class Strategy { Naive, GrayCode };

inline constexpr unsigned kDefaultExhaustiveLimit = 24;
/// log2 of the enumeration block size; partial sums are formed per block and
/// the Gray walk restarts from a freshly computed image at every block.
inline constexpr unsigned kBlockBits = 16;

struct ExactOptions {
  Strategy strategy = Strategy::GrayCode;
  bool antipodal_halving = false;
  unsigned threads = 1;
  unsigned exhaustive_limit = kDefaultExhaustiveLimit;
};

/// Exact mean over all 2^n vertices.
///
/// The cube is walked as two mirrored halves. The first half fixes
/// x_{n-1} = +1 and visits the remaining n-1 coordinates in binary-reflected
/// Gray order (vertex index t has x_j = -1 iff bit j of t ^ (t >> 1) is set,
/// so step t flips coordinate ctz(t)). The second half visits the antipodes
/// of the first half in the same order; every image there is the exact
/// negation of its partner, so it contributes the same partial sums bit for
/// bit. With antipodal_halving only the first half is walked.
///
/// Each half is cut into blocks of min(2^16, 2^(n-1)) vertices. Block values
/// and then block sums are combined by a fixed pairwise tree, so the result
/// does not depend on the thread count, and halving on/off agree exactly.
///
/// Throws DimensionTooLarge if n exceeds options.exhaustive_limit (or 62).
BetaEstimate beta_exact(const TestMatrix& m, const ExactOptions& options = {});

/// A fixed batch of uniformly random cube vertices, bit-packed.
///
/// Drawn from Rng(seed): vertex s consumes ceil(n/64) consecutive words and
/// coordinate j is -1 iff bit (j % 64) of word j / 64 is set.
class SignSample {
 public:
  SignSample(std::size_t n, std::size_t count, std::uint64_t seed);

  std::size_t dim() const noexcept { return n_; }
  std::size_t count() const noexcept { return count_; }
  bool negative(std::size_t sample, std::size_t j) const noexcept {
    return (words_[sample * words_per_vertex_ + j / 64] >> (j % 64)) & 1u;
  }
  SignVector vertex(std::size_t sample) const;

 private:
  std::size_t n_;
  std::size_t count_;
  std::size_t words_per_vertex_;
  std::vector<std::uint64_t> words_;
};

/// Sample mean of ||Ax||_inf over a fixed vertex sample, with
/// std_error = sample standard deviation / sqrt(count). Requires count >= 2.
BetaEstimate beta_on_sample(const TestMatrix& m, const SignSample& sample, unsigned threads = 1);

/// beta_on_sample on a fresh SignSample(n, n_samples, seed).
BetaEstimate beta_monte_carlo(const TestMatrix& m, std::size_t n_samples, std::uint64_t seed,
                              unsigned threads = 1);

/// Pairwise (tree) sum: adjacent pairs are combined level by level, an odd
/// trailing element is carried to the next level.
double pairwise_sum(std::span<const double> values);

}  // namespace cubemax
