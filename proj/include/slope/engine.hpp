#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slope/profile.hpp"
#include "slope/roots.hpp"

namespace slope {

/// Normalized leading weight pair (b0, b1) of the induced one-parameter degeneration
/// at parameter c. b0 < 0 whenever c > 0 and the profile is non-degenerate.
struct WeightPair {
  Rational b0, b1;
};

/// mu(X) = a1(0) / a0(0).
Rational slope_of_variety(const SlopeProfile& p);

/// mu_c of the ideal-side data: int_0^c (a1 + a0'/2) / int_0^c a0. Requires
/// 0 < c <= span and a positive denominator.
Rational mu_ideal(const SlopeProfile& p, const Rational& c);

/// Limit of mu_c as c -> 0+: (a1(0) + a0'(0+)/2) / a0(0).
Rational mu_ideal_limit0(const SlopeProfile& p);

/// mu_c of the quotient-side data: (int_0^c (a1 + a0'/2) - c a1(0)) divided by
/// (int_0^c a0 - c a0(0)), i.e. b1 / b0. Requires 0 < c <= span and b0 < 0.
Rational mu_quotient(const SlopeProfile& p, const Rational& c);

/// The layer densities alpha1 = -a0', alpha2 = -a1' - a0''/2. Valid as honest
/// piecewise-polynomial densities only when a0 is C^1 and a1 is continuous (otherwise
/// distributional terms would be lost); throws invalid_input when that fails.
std::pair<PiecewisePolynomial, PiecewisePolynomial> alphas_from_profile(const SlopeProfile& p);

/// Leading weights at parameter c in [0, certified range]:
///   b0 = int_0^c a0          - c a0(0)    = -int_0^c (c-x) alpha1
///   b1 = int_0^c (a1+a0'/2)  - c a1(0)    = -int_0^c ((c-x) alpha2 + alpha1(0)/2)
/// Both routes are computed and cross-checked whenever the alpha decomposition is
/// valid; b0 < 0 is enforced for c > 0. c = 0 yields (0, 0).
WeightPair normal_cone_weights(const SlopeProfile& p, const Rational& c);

/// As normal_cone_weights but without the certified-range gate (still within the
/// span of definition); used by sweeps and table emitters that flag validity
/// separately.
WeightPair normal_cone_weights_unchecked(const SlopeProfile& p, const Rational& c);

/// F1(c) = (b0 a1(0) - b1 a0(0)) / a0(0)^2; negative F1 destabilizes.
Rational futaki(const SlopeProfile& p, const Rational& c);
Rational futaki_unchecked(const SlopeProfile& p, const Rational& c);

/// Margin N(c) = a0(0) int_0^c (a1 + a0'/2) - a1(0) int_0^c a0, as an exact piecewise
/// polynomial in c on the full span. sign N(c) = sign(mu_c(ideal) - mu(X)) and
/// N(c) = -a0(0)^2 F1(c); N > 0 exhibits a destabilizing parameter.
PiecewisePolynomial margin_polynomial(const SlopeProfile& p);

/// Finite-level weight sums. w(k) = -sum_{i=0}^{ck-1} (ck - i) *
/// (alpha1(i/k) k^{n-1} + alpha2(i/k) k^{n-2}), an exact polynomial in k of degree
/// <= n+1 when deg alpha1 <= n-1 and deg alpha2 <= n-2 per piece and every k clears
/// the denominators of c and of the breakpoints below c. The first n+2 admissible
/// k's are fitted; any further k's must be reproduced exactly or internal_error is
/// thrown. b0 and b1 are the k^{n+1} and k^n coefficients.
struct OracleResult {
  Polynomial weight_poly;  // in k
  Rational b0, b1;
};

OracleResult weight_sum_oracle(const PiecewisePolynomial& alpha1,
                               const PiecewisePolynomial& alpha2, const Rational& c,
                               const std::vector<long>& ks, int n);
OracleResult weight_sum_oracle(const Polynomial& alpha1, const Polynomial& alpha2,
                               const Rational& c, const std::vector<long>& ks, int n);

/// Exact finite-level weight sum at a single k (the quantity fitted above).
Rational weight_sum_at(const PiecewisePolynomial& alpha1, const PiecewisePolynomial& alpha2,
                       const Rational& c, long k, int n);

/// Smallest admissible multiplier L (every k = j L clears the denominators of c and
/// of breakpoints below c) and the first `count` multiples as oracle sample points.
std::vector<long> oracle_sample_ks(const PiecewisePolynomial& alpha1,
                                   const PiecewisePolynomial& alpha2, const Rational& c,
                                   int n, int count);

enum class VerdictKind { StableAgainst, SemistableOnly, StrictlyUnstable, Inconclusive };

/// Outcome of the margin-sign analysis over the certified parameter range.
struct Verdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  /// StrictlyUnstable: a rational c with N(c) > 0.
  std::optional<Rational> witness;
  /// StrictlyUnstable: open interval around the witness on which N > 0 throughout
  /// (clipped to the certified range).
  std::optional<std::pair<Rational, Rational>> witness_interval;
  /// SemistableOnly: a rational c at which equality mu_c = mu(X) holds.
  std::optional<Rational> equality_at;
  /// Upper end of the parameter range the analysis certified.
  Rational certified_hi;
  /// Human-readable explanation (deterministic).
  std::string reason;

  std::string kind_str() const;
};

/// Decision procedure on the certified range (0, e]:
///   - N > 0 somewhere (interior or at e)      -> StrictlyUnstable
///   - N <= 0, equality at interior rational c -> SemistableOnly(c)
///   - N <= 0, equality only at e              -> depends on endpoint saturation:
///       saturating: SemistableOnly(e); non-saturating: StableAgainst; unknown:
///       Inconclusive
///   - N < 0 throughout                         -> StableAgainst (exact bound) or
///       Inconclusive (lower bound only: range above e unexamined)
///   - unknown bound                            -> Inconclusive, except that a
///       violation on the span is still reported when it occurs arbitrarily close
///       to 0 (any positive bound then contains violating parameters).
Verdict stability_verdict(const SlopeProfile& p);

}  // namespace slope
