#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slope/engine.hpp"
#include "slope/profile.hpp"

// Closed-form slope data for the standard geometric families: curves in
// surfaces, divisors in n-folds, curves in n-folds, polarized smooth curves,
// and the blow-up / re-polarization constructions that connect them.

namespace slope {

// Intersection data for a reduced irreducible curve Z in a smooth polarized
// surface (X, L).  All numbers are exact rationals; `genus` is optional and
// only used for consistency warnings against the adjunction relation.
struct SurfaceCurveData {
  Rational KL;  // K_X . L
  Rational L2;  // L^2  (> 0)
  Rational LZ;  // L . Z  (> 0)
  Rational KZ;  // K_X . Z
  Rational Z2;  // Z^2
  std::optional<long> genus;
  SeshadriBound epsilon = SeshadriBound::unknown();
};

// Throws invalid_input on structurally bad data (L2 <= 0, LZ <= 0, negative
// genus).  Soft inconsistencies are reported by surface_curve_warnings.
void validate(const SurfaceCurveData& d);

// Non-fatal consistency notes, e.g. genus that contradicts 2g - 2 = Z.(K+Z).
std::vector<std::string> surface_curve_warnings(const SurfaceCurveData& d);

struct SurfaceCurveSlopes {
  Rational muX;  // -K.L / L^2
  Rational muQ;  // slope of the structure-sheaf quotient at parameter c
};

// muQ = 3(2LZ - c(KZ + Z2)) / (2c(3LZ - c Z2)); requires the denominator to
// be positive and 0 < c (<= epsilon when the bound is exact).
SurfaceCurveSlopes surface_curve(const SurfaceCurveData& d, const Rational& c);

Rational surface_curve_muX(const SurfaceCurveData& d);

// Hilbert data of the blown-up polarization: a0(x) = (L - xZ)^2 / 2,
// a1(x) = -(K.L - x K.Z) / 2 on [0, x_max].  x_max is epsilon when known,
// otherwise the nef bound L2/LZ.
SlopeProfile surface_curve_profile(const SurfaceCurveData& d);

// Specialization for Z a rational curve (g = 0, so KZ = -Z2 - 2):
// muQ = 3(LZ + c) / (c(3LZ - c Z2)).
Rational rational_curve_quotient_slope(const SurfaceCurveData& d, const Rational& c);

// Intersection data for a reduced irreducible divisor Z in a smooth polarized
// n-fold (X, L), n >= 2.  LnjZj[j] = L^{n-j} . Z^j for j = 0..n and
// LZK[j] = L^{n-1-j} . Z^j . (K_X + Z) for j = 0..n-1.
struct DivisorData {
  int n = 0;
  std::vector<Rational> LnjZj;  // size n + 1, LnjZj[0] = L^n > 0
  std::vector<Rational> LZK;    // size n
  SeshadriBound epsilon = SeshadriBound::unknown();
};

void validate(const DivisorData& d);

// Integral of the leading Hilbert coefficient of the ideal-sheaf filtration:
//   I0(c) = (1/n!) * integral_0^c (L - xZ)^n dx, expanded binomially.
Rational divisor_a0_integral(const DivisorData& d, const Rational& c);

// Integral of the subleading density:
//   I1(c) = int_0^c (a1 + a0'/2) dx
//         = -(c / (2(n-1)!)) * sum_{j=0}^{n-1} C(n-1,j) ((-c)^j/(j+1)) LZK[j].
Rational divisor_ideal_integral(const DivisorData& d, const Rational& c);

// Quotient-side weight pair: b0 = I0(c) - c a0(0) (< 0 for sensible data) and
// b1 = I1(c) - c a1(0); matches normal_cone_weights on divisor_profile.
WeightPair divisor_weights(const DivisorData& d, const Rational& c);

// Slope of the structure-sheaf quotient, b1/b0; requires b0 < 0.
Rational divisor_quotient_slope(const DivisorData& d, const Rational& c);

Rational divisor_muX(const DivisorData& d);

// Full Hilbert profile a0(x) = (L - xZ)^n / n!, a1(x) = -K.(L - xZ)^{n-1} / (2(n-1)!).
SlopeProfile divisor_profile(const DivisorData& d);

// Strict displayed inequality for a nef class F (fed in as the L slot of d):
//   F^n * A(c)  <  -(n/2) * (K.F^{n-1}) * B(c),
// with A = c a1(0) - I1(c), B = c a0(0) - I0(c) and K.F^{n-1} = LZK[0] - LnjZj[1].
// Equivalent to margin N(c) > 0: Z then strictly destabilizes nearby polarizations.
// The caller certifies nef-ness; this is pure arithmetic.
bool nef_limit_test(const DivisorData& d, const Rational& c);

// Intersection data for a smooth curve Z in a polarized n-fold, n >= 2.
// c1nu = deg(c1(normal bundle)) restricted to Z.
struct CurveInNfoldData {
  int n = 0;
  long genus = 0;
  Rational LZ;    // deg L|_Z > 0
  Rational c1nu;  // deg c1(N_{Z/X})
  SeshadriBound epsilon = SeshadriBound::unknown();
  // Optional ambient totals enabling a full profile (and hence verdicts):
  std::optional<Rational> Ln;     // L^n
  std::optional<Rational> KLn1;   // K_X . L^{n-1}
};

void validate(const CurveInNfoldData& d);

// Quotient slope
//   mu_c(O_Z) = [ n^2(n^2-1) LZ - c n(n+1)((n-2) c1nu + 2(g-1)) ]
//             / [ 2nc ((n+1) LZ - c c1nu) ];
// requires 0 < c, positive denominator, and c <= epsilon when exact.
Rational curve_in_nfold_quotient_slope(const CurveInNfoldData& d, const Rational& c);

// Weight densities of the normal-cone filtration:
//   alpha1(x) = x^{n-2}/(n-2)! * (LZ - x c1nu/(n-1))
//   alpha2(x) = x^{n-3}/(n-2)! * [ (n-2)(n-1)/2 * (LZ - x c1nu/(n-1)) + x(1-g) ]
// (the first alpha2 term vanishes identically when n = 2).
std::pair<Polynomial, Polynomial> curve_in_nfold_alphas(const CurveInNfoldData& d);

// Same quotient slope computed from the alpha densities; used as a cross-check.
Rational curve_in_nfold_quotient_slope_via_alphas(const CurveInNfoldData& d, const Rational& c);

// Full profile; requires the optional ambient totals Ln and KLn1.
SlopeProfile curve_in_nfold_profile(const CurveInNfoldData& d);

// Polarized smooth curve (X, L) with a degree-d divisor Z:
// a0 = deg L - x d, a1 = 1 - g, Seshadri bound exactly deg L / d, and the
// boundary configuration at the endpoint is a genuine (saturating) one.
SlopeProfile smooth_curve_profile(long genus, const Rational& degL, const Rational& d);

// Verdict for the pair above.  Destabilizes iff g = 0 and d = 1 would make
// the margin vanish at the endpoint; margin N(c) = (cd/2)((1-g)c - degL).
Verdict smooth_curve_verdict(long genus, const Rational& degL, const Rational& d);

// Re-polarize after moving the filtration origin by d: replaces a_i(x) with
// a_i(x + d) on [0, x_max - d] and the exact/lower Seshadri bound by eps - d.
// Requires a known bound and 0 < d < eps.
SlopeProfile blowup_repolarize(const SlopeProfile& p, const Rational& d);

}  // namespace slope
