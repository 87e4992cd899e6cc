#include "cubemax/surd.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <tuple>

#include "cubemax/error.hpp"

namespace cubemax {

namespace {

std::string term(long coef, long radicand, bool leading) {
  std::string out;
  if (coef < 0) {
    out += "-";
  } else if (!leading) {
    out += "+";
  }
  const long mag = std::labs(coef);
  if (radicand == 1) return out + std::to_string(mag);
  if (mag != 1) out += std::to_string(mag) + "*";
  return out + "sqrt(" + std::to_string(radicand) + ")";
}

auto rank(const SurdForm& s) {
  return std::make_tuple(s.c, std::labs(s.a) + std::labs(s.b), s.p, s.q, s.a, s.b);
}

}  // namespace

double SurdForm::value() const {
  return (static_cast<double>(a) * std::sqrt(static_cast<double>(p)) +
          static_cast<double>(b) * std::sqrt(static_cast<double>(q))) /
         static_cast<double>(c);
}

std::string SurdForm::to_string() const {
  std::string num;
  if (a == 0 && b == 0) return "0";
  if (a != 0) num = term(a, p, true);
  if (b != 0) num += term(b, q, a == 0);
  if (c == 1) return num;
  const bool compound = a != 0 && b != 0;
  return (compound ? "(" + num + ")" : num) + "/" + std::to_string(c);
}

SurdForm canonical_surd(long a, long p, long b, long q, long c) {
  if (c <= 0 || p <= 0 || q <= 0) {
    throw Error(ErrorKind::InvalidArgument, "surd needs positive radicands and denominator");
  }
  if (p > q) {
    std::swap(a, b);
    std::swap(p, q);
  }
  if (p == q) {
    b += a;
    a = 0;
    p = 1;
  }
  if (a == 0) p = 1;
  if (b == 0) {
    std::swap(a, b);
    std::swap(p, q);
    a = 0;
    p = 1;
  }
  if (b == 0) q = 1;
  const long g = std::gcd(std::gcd(std::labs(a), std::labs(b)), c);
  if (g > 1) {
    a /= g;
    b /= g;
    c /= g;
  }
  if (a == 0 && b == 0) c = 1;
  return SurdForm{a, b, p, q, c};
}

std::optional<SurdForm> recognize_surd(double value, const SurdOptions& options) {
  if (!std::isfinite(value)) throw Error(ErrorKind::DomainError, "value must be finite");
  const long m = options.max_int;
  std::vector<long> rads = options.radicands;
  std::sort(rads.begin(), rads.end());
  rads.erase(std::unique(rads.begin(), rads.end()), rads.end());

  const double exact_tol = std::min(options.tol, 1e-12 * std::max(1.0, std::abs(value)));
  std::optional<SurdForm> best_exact;
  std::optional<SurdForm> best_loose;
  auto consider = [&](const SurdForm& s) {
    const double err = std::abs(s.value() - value);
    if (!(err <= options.tol)) return;
    auto& slot = err <= exact_tol ? best_exact : best_loose;
    if (!slot || rank(s) < rank(*slot)) slot = s;
  };

  for (long c = 1; c <= m; ++c) {
    for (std::size_t ip = 0; ip < rads.size(); ++ip) {
      for (std::size_t iq = ip; iq < rads.size(); ++iq) {
        const long p = rads[ip];
        const long q = rads[iq];
        const double sp = std::sqrt(static_cast<double>(p));
        const double sq = std::sqrt(static_cast<double>(q));
        for (long a = -m; a <= m; ++a) {
          // Adjacent b differ by sqrt(q)/c >= 1/12, so only the nearest b can match.
          const double b_real = (value * static_cast<double>(c) - static_cast<double>(a) * sp) / sq;
          const double b_round = std::round(b_real);
          if (std::abs(b_round) > static_cast<double>(m)) continue;
          consider(canonical_surd(a, p, static_cast<long>(b_round), q, c));
        }
      }
    }
  }
  for (long d = 1; d <= m; ++d) {
    for (long p : rads) {
      const double a_real = value * static_cast<double>(d) * std::sqrt(static_cast<double>(p));
      const double a_round = std::round(a_real);
      if (std::abs(a_round) > static_cast<double>(m)) continue;
      consider(canonical_surd(0, 1, static_cast<long>(a_round), p, d * p));
    }
  }
  return best_exact ? best_exact : best_loose;
}

}  // namespace cubemax
