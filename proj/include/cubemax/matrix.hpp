#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace cubemax {

/// Square real matrix with cached row norms. Entries are row-major binary64
/// and always finite; the object is immutable once constructed.
class TestMatrix {
 public:
  /// Throws DimensionMismatch if entries.size() != n * n, NonFinite on
  /// NaN/Inf and InvalidArgument if n == 0.
  TestMatrix(std::size_t n, std::vector<double> entries);

  static TestMatrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t dim() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return entries_[i * n_ + j]; }
  std::span<const double> row(std::size_t i) const noexcept {
    return {entries_.data() + i * n_, n_};
  }
  std::span<const double> entries() const noexcept { return entries_; }
  std::span<const double> row_norms() const noexcept { return row_norms_; }

  /// Rows satisfy ||a_i|| <= 1 + tol (the class the maximization ranges over).
  bool is_admissible(double tol = 1e-9) const noexcept;
  /// Rows have unit norm to within tol.
  bool has_unit_rows(double tol = 1e-12) const noexcept;

  friend bool operator==(const TestMatrix& a, const TestMatrix& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t n_;
  std::vector<double> entries_;
  std::vector<double> row_norms_;
};

/// A point of the discrete cube {-1, +1}^n.
using SignVector = std::vector<std::int8_t>;

/// Signed permutation: (P x)_i = signs[i] * x[perm[i]].
class SignedPermutation {
 public:
  SignedPermutation(std::vector<std::size_t> perm, std::vector<std::int8_t> signs);

  static SignedPermutation identity(std::size_t n);

  std::size_t size() const noexcept { return perm_.size(); }
  std::span<const std::size_t> perm() const noexcept { return perm_; }
  std::span<const std::int8_t> signs() const noexcept { return signs_; }

 private:
  std::vector<std::size_t> perm_;
  std::vector<std::int8_t> signs_;
};

double l2_norm(std::span<const double> v);

/// Rescale each row to unit l2 norm. Throws ZeroRow if some row norm is
/// below 1e-300.
TestMatrix normalize_rows(const TestMatrix& m);

/// max_i |<row_i, x>|, accumulated left to right so that
/// linf_image(m, -x) == linf_image(m, x) holds bit for bit.
double linf_image(const TestMatrix& m, std::span<const std::int8_t> x);

/// D_L P_L * m * P_R D_R. Row i of the result is left.signs[i] times row
/// left.perm[i] of m; column j is then right.signs[j] times column
/// right.perm[j]. Only reorders and negates, so no rounding occurs.
TestMatrix apply_symmetry(const TestMatrix& m, const SignedPermutation& left,
                          const SignedPermutation& right);

}  // namespace cubemax
