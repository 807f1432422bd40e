#include "doctest.h"
#include "slope/errors.hpp"
#include "slope/profile.hpp"

using namespace slope;

namespace {
Rational rq(long n, long d = 1) { return Rational(n, d); }

// The plane-point filtration profile: a0 = (1 - x^2)/2, a1 = (3 - x)/2 on [0, 1].
SlopeProfile point_profile() {
  return SlopeProfile::polynomial(2, Polynomial({rq(1, 2), rq(0), rq(-1, 2)}),
                                  Polynomial({rq(3, 2), rq(-1, 2)}), rq(1),
                                  SeshadriBound::exact(rq(1)), Saturation::Yes);
}
}  // namespace

TEST_CASE("Seshadri bound kinds render and report knownness") {
  CHECK(SeshadriBound::exact(rq(1, 2)).known());
  CHECK(SeshadriBound::lower_bound(rq(1, 3)).known());
  CHECK_FALSE(SeshadriBound::unknown().known());
  CHECK(SeshadriBound::exact(rq(1, 2)).str() == "1/2 (exact)");
  CHECK(SeshadriBound::lower_bound(rq(1, 3)).str() == "1/3 (lower bound)");
  CHECK(SeshadriBound::unknown().str() == "unknown");
}

TEST_CASE("profile accessors") {
  SlopeProfile p = point_profile();
  CHECK(p.dim() == 2);
  CHECK(p.x_max() == rq(1));
  CHECK(p.a0_at0() == rq(1, 2));
  CHECK(p.a1_at0() == rq(3, 2));
  CHECK(p.is_polynomial());
  CHECK(p.certified_hi() == rq(1));
  CHECK(p.with_eps(SeshadriBound::lower_bound(rq(1, 2))).certified_hi() == rq(1, 2));
  CHECK(p.with_eps(SeshadriBound::unknown()).certified_hi() == rq(1));
  CHECK(p.with_saturation(Saturation::No).saturates() == Saturation::No);
}

TEST_CASE("validation accepts the plane-point profile") {
  CHECK_NOTHROW(validate_profile(point_profile()));
  // a0 hitting zero exactly at the bound is legitimate.
  SlopeProfile closing = SlopeProfile::polynomial(
      1, Polynomial::linear(rq(-1), rq(1)), Polynomial::constant(rq(1)), rq(1),
      SeshadriBound::exact(rq(1)), Saturation::Yes);
  CHECK_NOTHROW(validate_profile(closing));
}

TEST_CASE("validation rejects structurally bad profiles") {
  // a0(0) <= 0.
  CHECK_THROWS_AS(
      validate_profile(SlopeProfile::polynomial(2, Polynomial::linear(rq(1), rq(0)),
                                                Polynomial::constant(rq(1)), rq(1),
                                                SeshadriBound::unknown(), Saturation::Unknown)),
      invalid_input);
  // Increasing a0 inside a known certified range.
  CHECK_THROWS_AS(
      validate_profile(SlopeProfile::polynomial(2, Polynomial::linear(rq(1), rq(1)),
                                                Polynomial::constant(rq(1)), rq(1),
                                                SeshadriBound::exact(rq(1)), Saturation::Yes)),
      invalid_input);
  // Known bound beyond the span of definition.
  CHECK_THROWS_AS(
      validate_profile(SlopeProfile::polynomial(2, Polynomial::linear(rq(-1), rq(1)),
                                                Polynomial::constant(rq(1)), rq(1),
                                                SeshadriBound::exact(rq(2)), Saturation::Yes)),
      invalid_input);
  // a0 vanishing strictly inside the certified range.
  CHECK_THROWS_AS(
      validate_profile(SlopeProfile::polynomial(1, Polynomial::linear(rq(-2), rq(1)),
                                                Polynomial::constant(rq(1)), rq(1),
                                                SeshadriBound::exact(rq(1)), Saturation::Yes)),
      invalid_input);
  // Degree above the ambient dimension.
  CHECK_THROWS_AS(
      validate_profile(SlopeProfile::polynomial(1, Polynomial({rq(1), rq(0), rq(-1)}),
                                                Polynomial::constant(rq(1)), rq(1),
                                                SeshadriBound::unknown(), Saturation::Unknown)),
      invalid_input);
  // Spans of a0 and a1 must agree.
  CHECK_THROWS_AS(
      SlopeProfile(2, PiecewisePolynomial::single(Polynomial::constant(rq(1)), rq(0), rq(1)),
                   PiecewisePolynomial::single(Polynomial::constant(rq(1)), rq(0), rq(2)),
                   SeshadriBound::unknown(), Saturation::Unknown),
      invalid_input);
}

TEST_CASE("thickening reparametrizes the filtration") {
  SlopeProfile t = thicken(point_profile(), 2);
  CHECK(t.x_max() == rq(1, 2));
  CHECK(t.a0().eval(rq(1, 4)) == point_profile().a0().eval(rq(1, 2)));
  CHECK(t.eps().value == rq(1, 2));
  CHECK(t.eps().kind == SeshadriBound::Kind::Exact);
  CHECK_THROWS_AS(thicken(point_profile(), 0), invalid_input);
}

TEST_CASE("twisting scales the polarization") {
  SlopeProfile w = twist(point_profile(), 2);
  CHECK(w.x_max() == rq(2));
  // a0 -> r^n a0(x/r) with n = 2.
  CHECK(w.a0().eval(rq(1)) == rq(4) * point_profile().a0().eval(rq(1, 2)));
  // a1 -> r^{n-1} a1(x/r).
  CHECK(w.a1().eval(rq(1)) == rq(2) * point_profile().a1().eval(rq(1, 2)));
  CHECK(w.eps().value == rq(2));
  CHECK_THROWS_AS(twist(point_profile(), 0), invalid_input);
}
