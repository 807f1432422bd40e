#pragma once

#include <optional>
#include <vector>

#include "slope/polynomial.hpp"

namespace slope {

enum class SignKind { StrictlyPositive, StrictlyNegative, IdenticallyZero, Mixed };

/// Isolating interval for one real root: exactly one root of the queried polynomial
/// lies in [lo, hi]. When the root is known exactly (rational), `exact` is set and
/// lo == hi == *exact.
struct RootInterval {
  Rational lo, hi;
  std::optional<Rational> exact;
};

struct SignSummary {
  SignKind kind = SignKind::IdenticallyZero;
  /// For Mixed: disjoint isolating intervals of all distinct roots in the open interval.
  std::vector<RootInterval> witnesses;
  /// Set when include_hi was requested and p(hi) == 0 (the endpoint zero is reported
  /// here instead of polluting the interior classification).
  bool boundary_zero_hi = false;
};

/// Number of distinct real roots of p in the open interval (lo, hi). p nonzero.
int count_roots_open(const Polynomial& p, const Rational& lo, const Rational& hi);

/// Disjoint isolating intervals for all distinct roots of p in (lo, hi), sorted.
std::vector<RootInterval> isolate_roots(const Polynomial& p, const Rational& lo,
                                        const Rational& hi);

/// Shrinks an isolating interval of p until hi - lo <= width (or the root is hit
/// exactly). Returns the refined interval.
RootInterval refine_root(const Polynomial& p, RootInterval iv, const Rational& width);

/// Tries to certify the unique root of p in the isolating interval as a rational
/// number. Exact for degree <= 2 factors; otherwise falls back to bounded bisection
/// probing and returns nullopt if the root is not certified rational.
std::optional<Rational> exact_root_in(const Polynomial& p, const RootInterval& iv);

/// Exact sign classification of p on the open interval (lo, hi); lo < hi required.
/// With include_hi, a zero at hi is reported via boundary_zero_hi while the interior
/// classification is unchanged.
SignSummary poly_sign_on_interval(const Polynomial& p, const Rational& lo, const Rational& hi,
                                  bool include_hi = false);

/// Full sign layout of p on (lo, hi): distinct interior roots (sorted) plus the sign
/// of p on each maximal root-free open gap (gap_signs.size() == zeros.size() + 1,
/// entries in {-1, +1}). For the zero polynomial, identically_zero is set.
struct SignPattern {
  bool identically_zero = false;
  std::vector<RootInterval> zeros;
  std::vector<int> gap_signs;
};

SignPattern sign_pattern(const Polynomial& p, const Rational& lo, const Rational& hi);

}  // namespace slope
