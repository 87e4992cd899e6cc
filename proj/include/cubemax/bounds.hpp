#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace cubemax {

enum class TailKind { HoeffdingUpper, BinomialExact, GaussianLower };

std::string_view to_string(TailKind kind);

struct TailPoint {
  double t;
  double probability;
  TailKind kind;
};

/// exp(-t^2/2), or min(1, 2 exp(-t^2/2)) when two-sided. DomainError for t < 0.
double hoeffding_tail(double t, bool two_sided);

/// sqrt(2 ln n), n >= 2.
double asymptotic_beta(double n);
/// sqrt(log2 n + 1) for n a power of two.
double haar_beta_formula(std::size_t n);
/// sqrt(2 ln(2n)), n >= 1: subgaussian ceiling on beta for unit rows.
double subgaussian_max_bound(std::size_t n);

inline constexpr std::size_t kMaxBinomialN = 10000;

/// Exact P(X >= t) for X = (x_1 + ... + x_n)/sqrt(n) with fair signs, i.e.
/// the sum of C(n,k)/2^n over k with (2k - n)/sqrt(n) >= t. Terms come from
/// lgamma and are added smallest first. SizeGuard for n > 10^4.
double binomial_linf_tail(std::size_t n, double t);

/// x/(x^2+1) * exp(-x^2/2)/sqrt(2 pi), a lower bound on P(Y >= x) for a
/// standard normal Y. DomainError for x <= 0.
double gaussian_tail_lower(double x);

struct AnticoncentrationReport {
  std::size_t n;
  double epsilon;
  double threshold;        // sqrt((2 - epsilon) ln n)
  double probability;      // exact binomial tail at the threshold
  double n_times_p;
  double gaussian_lower;   // gaussian_tail_lower(threshold)
  bool positive;           // probability > 0
  bool dominates_gaussian; // probability >= gaussian_lower / 2 (checked for n >= 64)
  bool passed;
};

/// Exact anticoncentration figures at the threshold sqrt((2 - eps) ln n).
/// DomainError unless 0 < eps < 2 and n >= 2; SizeGuard for n > 10^4.
AnticoncentrationReport anticoncentration_check(std::size_t n, double epsilon);

struct BoundsRow {
  std::size_t n;
  double parameter;  // t, or epsilon in anticoncentration mode
  double binomial_exact;
  double hoeffding;
  double gaussian_lower;
};

/// Tail grid: n in {4, 8, ..., 1024}, t in {0.5, 1.0, ..., 4.0}; tails at t.
std::vector<BoundsRow> default_tail_grid();

/// Grid over the given n and epsilon values; tails at sqrt((2 - eps) ln n).
std::vector<BoundsRow> anticoncentration_grid(const std::vector<std::size_t>& ns,
                                              const std::vector<double>& epsilons);

/// CSV with header "n,<parameter_name>,binomial_exact,hoeffding,gaussian_lower".
std::string bounds_csv(const std::vector<BoundsRow>& rows, std::string_view parameter_name);

}  // namespace cubemax
