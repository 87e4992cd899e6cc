#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cubemax/matrix.hpp"

namespace cubemax {

/// Square matrix with small integer entries (the unscaled Haar pattern).
struct IntegerMatrix {
  std::size_t n = 0;
  std::vector<int> entries;  // row-major

  int operator()(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
};

inline constexpr unsigned kMaxHaarLevel = 14;

/// Transposed Haar wavelet pattern of size 2^k.
///
/// Built by the recursion A_0 = (1) and, for each row a_i of A_k, the two rows
/// [a_i, e_i] and [a_i, -e_i] of A_{k+1}. This is the block construction
/// [[A_k, I], [A_k, -I]] with its rows interleaved, and reproduces the
/// published 2x2, 4x4 and 8x8 instances entry for entry. Every row has k+1
/// nonzero entries and ||A_k x||_inf = k + 1 on the whole cube.
/// Throws SizeGuard for k > 14.
IntegerMatrix haar_unnormalized(unsigned k);

/// haar_unnormalized(k) / sqrt(k+1): unit rows, ||Ax||_inf = sqrt(k+1) for
/// every vertex x.
TestMatrix haar_matrix(unsigned k);

/// Each column scaled to unit l2 norm (zero columns are left as is).
TestMatrix column_normalized(const IntegerMatrix& m);

TestMatrix identity_matrix(std::size_t n);

/// All entries 1/sqrt(n).
TestMatrix mean_matrix(std::size_t n);

/// Entries independently +-1/sqrt(n). Drawn from Rng(seed) in row-major order,
/// one bit per entry, least significant bit first, a fresh word every 64
/// entries; a set bit means -1/sqrt(n).
TestMatrix random_sign_matrix(std::size_t n, std::uint64_t seed);

/// Haar-distributed orthogonal matrix: an iid Gaussian matrix (row-major
/// draws from Rng(seed)) orthonormalized column by column with two passes of
/// modified Gram-Schmidt, so the triangular factor has a positive diagonal.
/// A pivot below 1e-12 discards the draw and a new Gaussian matrix is taken
/// from the same stream; after 8 attempts DegenerateSample is thrown.
TestMatrix random_orthogonal(std::size_t n, std::uint64_t seed);

}  // namespace cubemax
