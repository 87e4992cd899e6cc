#include "cubemax/matrix.hpp"

#include <cmath>
#include <string>

#include "cubemax/error.hpp"

namespace cubemax {

double l2_norm(std::span<const double> v) {
  double sum = 0.0;
  for (double x : v) sum += x * x;
  return std::sqrt(sum);
}

TestMatrix::TestMatrix(std::size_t n, std::vector<double> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n_ == 0) throw Error(ErrorKind::InvalidArgument, "matrix dimension must be positive");
  if (entries_.size() != n_ * n_) {
    throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(n_ * n_) +
                                                  " entries, got " + std::to_string(entries_.size()));
  }
  for (double v : entries_) {
    if (!std::isfinite(v)) throw Error(ErrorKind::NonFinite, "matrix entries must be finite");
  }
  row_norms_.resize(n_);
  for (std::size_t i = 0; i < n_; ++i) row_norms_[i] = l2_norm(row(i));
}

TestMatrix TestMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.size();
  std::vector<double> entries;
  entries.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) {
      throw Error(ErrorKind::DimensionMismatch, "row of length " + std::to_string(r.size()) +
                                                    " in a matrix with " + std::to_string(n) + " rows");
    }
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return TestMatrix(n, std::move(entries));
}

bool TestMatrix::is_admissible(double tol) const noexcept {
  for (double r : row_norms_) {
    if (r > 1.0 + tol) return false;
  }
  return true;
}

bool TestMatrix::has_unit_rows(double tol) const noexcept {
  for (double r : row_norms_) {
    if (std::abs(r - 1.0) > tol) return false;
  }
  return true;
}

SignedPermutation::SignedPermutation(std::vector<std::size_t> perm, std::vector<std::int8_t> signs)
    : perm_(std::move(perm)), signs_(std::move(signs)) {
  if (perm_.size() != signs_.size()) {
    throw Error(ErrorKind::DimensionMismatch, "permutation and sign vector differ in length");
  }
  std::vector<bool> seen(perm_.size(), false);
  for (std::size_t p : perm_) {
    if (p >= perm_.size() || seen[p]) {
      throw Error(ErrorKind::InvalidArgument, "perm is not a bijection");
    }
    seen[p] = true;
  }
  for (auto s : signs_) {
    if (s != 1 && s != -1) throw Error(ErrorKind::InvalidArgument, "signs must be +1 or -1");
  }
}

SignedPermutation SignedPermutation::identity(std::size_t n) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  return SignedPermutation(std::move(perm), std::vector<std::int8_t>(n, 1));
}

TestMatrix normalize_rows(const TestMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<double> out(m.entries().begin(), m.entries().end());
  for (std::size_t i = 0; i < n; ++i) {
    const double norm = l2_norm(m.row(i));
    if (!(norm >= 1e-300)) {
      throw Error(ErrorKind::ZeroRow, "row " + std::to_string(i) + " has (near) zero norm");
    }
    for (std::size_t j = 0; j < n; ++j) out[i * n + j] /= norm;
  }
  return TestMatrix(n, std::move(out));
}

double linf_image(const TestMatrix& m, std::span<const std::int8_t> x) {
  const std::size_t n = m.dim();
  if (x.size() != n) {
    throw Error(ErrorKind::DimensionMismatch, "sign vector of length " + std::to_string(x.size()) +
                                                  " for a matrix of dimension " + std::to_string(n));
  }
  for (auto s : x) {
    if (s != 1 && s != -1) throw Error(ErrorKind::InvalidArgument, "sign vector entries must be +1 or -1");
  }
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = m.row(i);
    double y = 0.0;
    for (std::size_t j = 0; j < n; ++j) y += r[j] * static_cast<double>(x[j]);
    best = std::max(best, std::abs(y));
  }
  return best;
}

TestMatrix apply_symmetry(const TestMatrix& m, const SignedPermutation& left,
                          const SignedPermutation& right) {
  const std::size_t n = m.dim();
  if (left.size() != n || right.size() != n) {
    throw Error(ErrorKind::DimensionMismatch, "signed permutation size does not match matrix");
  }
  std::vector<double> out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t src_row = left.perm()[i];
    const double row_sign = left.signs()[i];
    for (std::size_t j = 0; j < n; ++j) {
      out[i * n + j] = row_sign * right.signs()[j] * m(src_row, right.perm()[j]);
    }
  }
  return TestMatrix(n, std::move(out));
}

}  // namespace cubemax
