#include "doctest.h"
#include "slope/engine.hpp"
#include "slope/errors.hpp"
#include "slope/formulas.hpp"

using namespace slope;

namespace {
Rational rq(long n, long d = 1) { return Rational(n, d); }

// Blown-up plane with L = H - qE at q = 1/2, Z the exceptional curve.
SurfaceCurveData blowup_half() {
  return {rq(-5, 2), rq(3, 4), rq(1, 2), rq(-1), rq(-1), 0, SeshadriBound::exact(rq(1, 2))};
}

DivisorData blowup_half_divisor() {
  return {2, {rq(3, 4), rq(1, 2), rq(-1)}, {rq(-2), rq(-2)}, SeshadriBound::exact(rq(1, 2))};
}

DivisorData p3_plane() {
  return {3, {rq(1), rq(1), rq(1), rq(1)}, {rq(-3), rq(-3), rq(-3)}, SeshadriBound::exact(rq(1))};
}
}  // namespace

TEST_CASE("surface-curve slopes at the blown-up plane") {
  SurfaceCurveData d = blowup_half();
  CHECK(surface_curve_muX(d) == rq(10, 3));
  SurfaceCurveSlopes s = surface_curve(d, rq(1, 2));
  CHECK(s.muX == rq(10, 3));
  CHECK(s.muQ == rq(3));
  CHECK(rational_curve_quotient_slope(d, rq(1, 2)) == rq(3));
  // The exceptional curve is rational with Z.(K+Z) = -2; data that fails that
  // cannot use the rational-curve shortcut.
  SurfaceCurveData notrat = d;
  notrat.KZ = rq(1);
  CHECK_THROWS_AS(rational_curve_quotient_slope(notrat, rq(1, 2)), invalid_input);
  // Exact bounds gate the parameter.
  CHECK_THROWS_AS(surface_curve(d, rq(3, 4)), invalid_input);
  CHECK_THROWS_AS(surface_curve(d, rq(0)), invalid_input);
}

TEST_CASE("structural validation and soft warnings") {
  SurfaceCurveData bad = blowup_half();
  bad.L2 = rq(0);
  CHECK_THROWS_AS(validate(bad), invalid_input);
  bad = blowup_half();
  bad.LZ = rq(-1);
  CHECK_THROWS_AS(validate(bad), invalid_input);
  bad = blowup_half();
  bad.genus = -1;
  CHECK_THROWS_AS(validate(bad), invalid_input);

  CHECK(surface_curve_warnings(blowup_half()).empty());
  SurfaceCurveData off = blowup_half();
  off.genus = 1;  // contradicts 2g - 2 = Z.(K+Z) = -2
  CHECK_FALSE(surface_curve_warnings(off).empty());

  DivisorData short_data{2, {rq(1), rq(1)}, {rq(1), rq(1)}, SeshadriBound::unknown()};
  CHECK_THROWS_AS(validate(short_data), invalid_input);
  CurveInNfoldData flat{1, 0, rq(1), rq(0), SeshadriBound::unknown(), std::nullopt,
                        std::nullopt};
  CHECK_THROWS_AS(validate(flat), invalid_input);  // ambient dimension must be >= 2
}

TEST_CASE("divisor data reproduces the surface closed forms") {
  // Same geometry, general-divisor encoding: LZK = [(K+Z).L, (K+Z).Z].
  CHECK(divisor_quotient_slope(blowup_half_divisor(), rq(1, 2)) == rq(3));
  CHECK(divisor_muX(blowup_half_divisor()) == rq(10, 3));

  // Piece polynomials agree with the surface profile (span policies differ).
  SlopeProfile sp = surface_curve_profile(blowup_half());
  SlopeProfile dp = divisor_profile(blowup_half_divisor());
  CHECK(sp.a0().piece(0) == dp.a0().piece(0));
  CHECK(sp.a1().piece(0) == dp.a1().piece(0));

  // Weight pair matches the filtration engine on the divisor profile.
  for (const Rational& c : {rq(1, 3), rq(1, 2)}) {
    WeightPair direct = divisor_weights(blowup_half_divisor(), c);
    WeightPair eng = normal_cone_weights(dp, c);
    CHECK(direct.b0 == eng.b0);
    CHECK(direct.b1 == eng.b1);
  }
}

TEST_CASE("negative curve: exact slopes at r = 9/10") {
  SurfaceCurveData d{rq(-21, 10), rq(59, 100), rq(1, 10), rq(0), rq(-2), 0,
                     SeshadriBound::lower_bound(rq(2, 5))};
  CHECK(surface_curve_muX(d) == rq(210, 59));
  CHECK(surface_curve(d, rq(2, 5)).muQ == rq(75, 22));
  CHECK(divisor_quotient_slope({2, {rq(59, 100), rq(1, 10), rq(-2)}, {rq(-2), rq(-2)},
                                SeshadriBound::unknown()},
                               rq(2, 5)) == rq(75, 22));
}

TEST_CASE("hyperplane in 3-space: profile, slopes, margin") {
  SlopeProfile p = divisor_profile(p3_plane());
  CHECK(p.dim() == 3);
  CHECK(p.a0().piece(0) == Polynomial({rq(1, 6), rq(-1, 2), rq(1, 2), rq(-1, 6)}));
  CHECK(p.a1().piece(0) == Polynomial({rq(1), rq(-2), rq(1)}));
  CHECK(slope_of_variety(p) == rq(6));
  CHECK(divisor_muX(p3_plane()) == rq(6));
  // N(c) = -c(1-c)^3 / 24: semistable direction everywhere, equality at 1.
  CHECK(margin_polynomial(p) ==
        PiecewisePolynomial({rq(0), rq(1)},
                            {Polynomial({rq(0), rq(-1, 24), rq(1, 8), rq(-1, 8), rq(1, 24)})}));
  CHECK(divisor_quotient_slope(p3_plane(), rq(1, 2)) == mu_quotient(p, rq(1, 2)));
}

TEST_CASE("nef-limit inequality tracks the sign of the margin") {
  // Strict inequality iff the configuration destabilizes, false at equality.
  DivisorData g4{2, {rq(2), rq(1), rq(-1)}, {rq(4), rq(6)}, SeshadriBound::unknown()};
  // Margin of the matching surface data is -(1/4) c (c-1)(c-2).
  CHECK_FALSE(nef_limit_test(g4, rq(1, 2)));  // margin negative
  CHECK(nef_limit_test(g4, rq(3, 2)));        // margin positive
  CHECK_FALSE(nef_limit_test(g4, rq(1)));     // equality: not a strict violation
  CHECK_FALSE(nef_limit_test(p3_plane(), rq(1, 2)));
  CHECK(nef_limit_test(blowup_half_divisor(), rq(1, 2)));
  CHECK_THROWS_AS(nef_limit_test(p3_plane(), rq(0)), invalid_input);
}

TEST_CASE("degenerate divisor quotients are rejected") {
  // Z with L.Z <= 0 never defines a positive-volume filtration.
  DivisorData bad{2, {rq(1), rq(0), rq(-1)}, {rq(0), rq(0)}, SeshadriBound::unknown()};
  CHECK_THROWS_AS(divisor_profile(bad), invalid_input);
  // b0 >= 0 at this parameter: quotient slope undefined.
  DivisorData pos{2, {rq(1), rq(1, 2), rq(2)}, {rq(0), rq(0)}, SeshadriBound::unknown()};
  CHECK_THROWS_AS(divisor_quotient_slope(pos, rq(2)), invalid_input);
}

TEST_CASE("curve in an n-fold: closed form, densities, profile") {
  CurveInNfoldData line{3, 0, rq(1), rq(2), SeshadriBound::exact(rq(1)), rq(1), rq(-4)};
  CHECK(curve_in_nfold_quotient_slope(line, rq(1, 2)) ==
        curve_in_nfold_quotient_slope_via_alphas(line, rq(1, 2)));
  SlopeProfile p = curve_in_nfold_profile(line);
  CHECK(p.dim() == 3);
  CHECK(p.a0_at0() == rq(1, 6));
  CHECK(p.a1_at0() == rq(1));
  CHECK(slope_of_variety(p) == rq(6));
  // N(c) = -c^2 (1-c)^2 / 12.
  CHECK(margin_polynomial(p) ==
        PiecewisePolynomial({rq(0), rq(1)},
                            {Polynomial({rq(0), rq(0), rq(-1, 12), rq(1, 6), rq(-1, 12)})}));
  CHECK(mu_quotient(p, rq(1, 2)) == curve_in_nfold_quotient_slope(line, rq(1, 2)));

  CurveInNfoldData no_totals{3, 0, rq(1), rq(2), SeshadriBound::exact(rq(1)), std::nullopt,
                             std::nullopt};
  CHECK_NOTHROW(curve_in_nfold_quotient_slope(no_totals, rq(1, 2)));
  CHECK_THROWS_AS(curve_in_nfold_profile(no_totals), invalid_input);

  // n = 2 must agree with the surface encoding (c1(N) = Z^2, adjunction genus).
  CurveInNfoldData two{2, 0, rq(1, 2), rq(-1), SeshadriBound::unknown(), std::nullopt,
                       std::nullopt};
  SurfaceCurveData surf{rq(-5, 2), rq(3, 4), rq(1, 2), rq(-1), rq(-1), 0,
                        SeshadriBound::unknown()};
  CHECK(curve_in_nfold_quotient_slope(two, rq(1, 3)) == surface_curve(surf, rq(1, 3)).muQ);
}

TEST_CASE("smooth curves: profile and verdict boundary") {
  SlopeProfile p = smooth_curve_profile(2, rq(2), rq(1));
  CHECK(p.dim() == 1);
  CHECK(p.a0().piece(0) == Polynomial({rq(2), rq(-1)}));
  CHECK(p.a1().piece(0) == Polynomial::constant(rq(-1)));
  CHECK(p.eps().kind == SeshadriBound::Kind::Exact);
  CHECK(p.eps().value == rq(2));
  CHECK(p.saturates() == Saturation::Yes);
  // N(c) = (c d / 2)((1-g) c - deg L).
  CHECK(margin_polynomial(p) ==
        PiecewisePolynomial({rq(0), rq(2)}, {Polynomial({rq(0), rq(-1), rq(-1, 2)})}));
  CHECK(smooth_curve_verdict(2, rq(2), rq(1)).kind == VerdictKind::StableAgainst);
  Verdict g0 = smooth_curve_verdict(0, rq(3), rq(1));
  CHECK(g0.kind == VerdictKind::SemistableOnly);
  CHECK(g0.equality_at == rq(3));
  CHECK(smooth_curve_verdict(0, rq(3), rq(2)).kind == VerdictKind::StableAgainst);
  CHECK_THROWS_AS(smooth_curve_profile(0, rq(0), rq(1)), invalid_input);
  CHECK_THROWS_AS(smooth_curve_profile(-1, rq(1), rq(1)), invalid_input);
}

TEST_CASE("re-polarizing after a partial blow-down shifts the profile") {
  SlopeProfile point = SlopeProfile::polynomial(2, Polynomial({rq(1, 2), rq(0), rq(-1, 2)}),
                                                Polynomial({rq(3, 2), rq(-1, 2)}), rq(1),
                                                SeshadriBound::exact(rq(1)), Saturation::Yes);
  SlopeProfile moved = blowup_repolarize(point, rq(1, 2));
  // Exactly the blown-up plane at q = 1/2.
  CHECK(moved.a0().piece(0) == Polynomial({rq(3, 8), rq(-1, 2), rq(-1, 2)}));
  CHECK(moved.a1().piece(0) == Polynomial({rq(5, 4), rq(-1, 2)}));
  CHECK(moved.x_max() == rq(1, 2));
  CHECK(moved.eps().kind == SeshadriBound::Kind::Exact);
  CHECK(moved.eps().value == rq(1, 2));
  CHECK_THROWS_AS(blowup_repolarize(point, rq(1)), invalid_input);
  CHECK_THROWS_AS(blowup_repolarize(point.with_eps(SeshadriBound::unknown()), rq(1, 2)),
                  invalid_input);
}
