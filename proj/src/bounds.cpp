#include "cubemax/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "cubemax/error.hpp"

namespace cubemax {

std::string_view to_string(TailKind kind) {
  switch (kind) {
    case TailKind::HoeffdingUpper: return "HoeffdingUpper";
    case TailKind::BinomialExact: return "BinomialExact";
    case TailKind::GaussianLower: return "GaussianLower";
  }
  return "Unknown";
}

double hoeffding_tail(double t, bool two_sided) {
  if (!(t >= 0.0)) throw Error(ErrorKind::DomainError, "t must be nonnegative");
  const double one = std::exp(-t * t / 2.0);
  return two_sided ? std::min(1.0, 2.0 * one) : one;
}

double asymptotic_beta(double n) {
  if (!(n >= 2.0)) throw Error(ErrorKind::DomainError, "asymptotic_beta needs n >= 2");
  return std::sqrt(2.0 * std::log(n));
}

double haar_beta_formula(std::size_t n) {
  if (n == 0 || (n & (n - 1)) != 0) {
    throw Error(ErrorKind::DomainError, "haar_beta_formula needs a power of two");
  }
  return std::sqrt(std::log2(static_cast<double>(n)) + 1.0);
}

double subgaussian_max_bound(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::DomainError, "subgaussian_max_bound needs n >= 1");
  return std::sqrt(2.0 * std::log(2.0 * static_cast<double>(n)));
}

double binomial_linf_tail(std::size_t n, double t) {
  if (n == 0) throw Error(ErrorKind::DomainError, "binomial_linf_tail needs n >= 1");
  if (n > kMaxBinomialN) throw Error(ErrorKind::SizeGuard, "binomial_linf_tail limited to n <= 10^4");
  if (std::isnan(t)) throw Error(ErrorKind::DomainError, "t must not be NaN");
  const double nd = static_cast<double>(n);
  const double root = std::sqrt(nd);
  const double log_norm = std::lgamma(nd + 1.0) - nd * std::numbers::ln2;
  std::vector<double> terms;
  for (std::size_t k = 0; k <= n; ++k) {
    const double kd = static_cast<double>(k);
    if ((2.0 * kd - nd) / root >= t) {
      terms.push_back(std::exp(log_norm - std::lgamma(kd + 1.0) - std::lgamma(nd - kd + 1.0)));
    }
  }
  std::sort(terms.begin(), terms.end());
  double sum = 0.0;
  for (double v : terms) sum += v;
  return std::clamp(sum, 0.0, 1.0);
}

double gaussian_tail_lower(double x) {
  if (!(x > 0.0)) throw Error(ErrorKind::DomainError, "gaussian_tail_lower needs x > 0");
  return x / (x * x + 1.0) * std::exp(-x * x / 2.0) / std::sqrt(2.0 * std::numbers::pi);
}

AnticoncentrationReport anticoncentration_check(std::size_t n, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 2.0)) throw Error(ErrorKind::DomainError, "epsilon must lie in (0, 2)");
  if (n < 2) throw Error(ErrorKind::DomainError, "anticoncentration_check needs n >= 2");
  if (n > kMaxBinomialN) throw Error(ErrorKind::SizeGuard, "anticoncentration_check limited to n <= 10^4");
  AnticoncentrationReport r{};
  r.n = n;
  r.epsilon = epsilon;
  r.threshold = std::sqrt((2.0 - epsilon) * std::log(static_cast<double>(n)));
  r.probability = binomial_linf_tail(n, r.threshold);
  r.n_times_p = static_cast<double>(n) * r.probability;
  r.gaussian_lower = gaussian_tail_lower(r.threshold);
  r.positive = r.probability > 0.0;
  r.dominates_gaussian = n < 64 || r.probability >= 0.5 * r.gaussian_lower;
  r.passed = r.positive && r.dominates_gaussian;
  return r;
}

std::vector<BoundsRow> default_tail_grid() {
  std::vector<BoundsRow> rows;
  for (std::size_t n = 4; n <= 1024; n *= 2) {
    for (int step = 1; step <= 8; ++step) {
      const double t = 0.5 * step;
      rows.push_back({n, t, binomial_linf_tail(n, t), hoeffding_tail(t, false), gaussian_tail_lower(t)});
    }
  }
  return rows;
}

std::vector<BoundsRow> anticoncentration_grid(const std::vector<std::size_t>& ns,
                                              const std::vector<double>& epsilons) {
  std::vector<BoundsRow> rows;
  for (std::size_t n : ns) {
    for (double eps : epsilons) {
      const auto r = anticoncentration_check(n, eps);
      rows.push_back({n, eps, r.probability, hoeffding_tail(r.threshold, false), r.gaussian_lower});
    }
  }
  return rows;
}

std::string bounds_csv(const std::vector<BoundsRow>& rows, std::string_view parameter_name) {
  std::string out = "n," + std::string(parameter_name) + ",binomial_exact,hoeffding,gaussian_lower\n";
  char buf[160];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g,%.17g,%.17g\n", r.n, r.parameter, r.binomial_exact,
                  r.hoeffding, r.gaussian_lower);
    out += buf;
  }
  return out;
}

}  // namespace cubemax
