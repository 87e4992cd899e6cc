#include "cubemax/constructions.hpp"

#include <cmath>
#include <string>

#include "cubemax/error.hpp"
#include "cubemax/rng.hpp"

namespace cubemax {

IntegerMatrix haar_unnormalized(unsigned k) {
  if (k > kMaxHaarLevel) {
    throw Error(ErrorKind::SizeGuard, "Haar level " + std::to_string(k) + " exceeds " +
                                          std::to_string(kMaxHaarLevel));
  }
  IntegerMatrix a{1, {1}};
  for (unsigned level = 0; level < k; ++level) {
    const std::size_t n = a.n;
    IntegerMatrix next{2 * n, std::vector<int>(4 * n * n, 0)};
    for (std::size_t i = 0; i < n; ++i) {
      for (int sign : {1, -1}) {
        const std::size_t r = 2 * i + (sign == 1 ? 0 : 1);
        for (std::size_t j = 0; j < n; ++j) next.entries[r * 2 * n + j] = a(i, j);
        next.entries[r * 2 * n + n + i] = sign;
      }
    }
    a = std::move(next);
  }
  return a;
}

TestMatrix haar_matrix(unsigned k) {
  const IntegerMatrix a = haar_unnormalized(k);
  const double scale = 1.0 / std::sqrt(static_cast<double>(k + 1));
  std::vector<double> entries(a.entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) entries[i] = a.entries[i] * scale;
  return TestMatrix(a.n, std::move(entries));
}

TestMatrix column_normalized(const IntegerMatrix& m) {
  const std::size_t n = m.n;
  std::vector<double> entries(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    double sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) sq += static_cast<double>(m(i, j)) * m(i, j);
    const double norm = std::sqrt(sq);
    for (std::size_t i = 0; i < n; ++i) {
      entries[i * n + j] = norm > 0.0 ? m(i, j) / norm : 0.0;
    }
  }
  return TestMatrix(n, std::move(entries));
}

TestMatrix identity_matrix(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "dimension must be positive");
  std::vector<double> entries(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) entries[i * n + i] = 1.0;
  return TestMatrix(n, std::move(entries));
}

TestMatrix mean_matrix(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "dimension must be positive");
  return TestMatrix(n, std::vector<double>(n * n, 1.0 / std::sqrt(static_cast<double>(n))));
}

TestMatrix random_sign_matrix(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "dimension must be positive");
  const double v = 1.0 / std::sqrt(static_cast<double>(n));
  Rng rng(seed);
  std::vector<double> entries(n * n);
  std::uint64_t word = 0;
  for (std::size_t idx = 0; idx < entries.size(); ++idx) {
    if (idx % 64 == 0) word = rng.next_u64();
    entries[idx] = ((word >> (idx % 64)) & 1u) ? -v : v;
  }
  return TestMatrix(n, std::move(entries));
}

TestMatrix random_orthogonal(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "dimension must be positive");
  constexpr int kAttempts = 8;
  constexpr double kMinPivot = 1e-12;
  Rng rng(seed);
  std::vector<double> q(n * n);  // row-major; columns are orthonormalized
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    for (auto& v : q) v = rng.gaussian();
    bool degenerate = false;
    for (std::size_t j = 0; j < n && !degenerate; ++j) {
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t p = 0; p < j; ++p) {
          double dot = 0.0;
          for (std::size_t i = 0; i < n; ++i) dot += q[i * n + p] * q[i * n + j];
          for (std::size_t i = 0; i < n; ++i) q[i * n + j] -= dot * q[i * n + p];
        }
      }
      double sq = 0.0;
      for (std::size_t i = 0; i < n; ++i) sq += q[i * n + j] * q[i * n + j];
      const double pivot = std::sqrt(sq);
      if (pivot < kMinPivot) {
        degenerate = true;
        break;
      }
      for (std::size_t i = 0; i < n; ++i) q[i * n + j] /= pivot;
    }
    if (!degenerate) return TestMatrix(n, std::move(q));
  }
  throw Error(ErrorKind::DegenerateSample,
              "orthonormalization hit a near-zero pivot in " + std::to_string(kAttempts) + " draws");
}

}  // namespace cubemax
