#pragma once

#include <optional>
#include <string>
#include <vector>

namespace cubemax {

/// (a*sqrt(p) + b*sqrt(q)) / c with square-free p <= q and c > 0.
///
/// Canonical form: gcd(|a|, |b|, c) == 1; a zero coefficient has radicand 1;
/// a single-term value is stored in (b, q) with a = 0, p = 1; two terms on
/// the same radicand are merged.
struct SurdForm {
  long a = 0;
  long b = 0;
  long p = 1;
  long q = 1;
  long c = 1;

  double value() const;
  /// Human-readable form such as "(sqrt(2)+sqrt(3))/2", "sqrt(29)/29", "1/2".
  std::string to_string() const;

  friend bool operator==(const SurdForm&, const SurdForm&) = default;
};

/// Brings arbitrary coefficients into the canonical form above.
SurdForm canonical_surd(long a, long p, long b, long q, long c);

struct SurdOptions {
  long max_int = 12;
  std::vector<long> radicands{1, 2, 3, 5, 6, 7, 29};
  double tol = 1e-6;
};

/// Closed-form recognition of a floating value.
///
/// Candidates are (a*sqrt(p) + b*sqrt(q))/c with |a|, |b| <= max_int,
/// 1 <= c <= max_int and p <= q from the radicand set, together with the
/// reciprocal forms a/(d*sqrt(p)) = a*sqrt(p)/(d*p) with |a|, d <= max_int,
/// which are stored rationalized. Among the canonical candidates within tol
/// the one minimizing (c, |a|+|b|) wins. A candidate that reproduces the value
/// to 1e-12 (relative, floor 1e-12 absolute) takes precedence over looser
/// matches, so exactly representable forms are returned as themselves.
std::optional<SurdForm> recognize_surd(double value, const SurdOptions& options = {});

}  // namespace cubemax
