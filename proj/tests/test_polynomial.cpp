#include "doctest.h"
#include "slope/errors.hpp"
#include "slope/polynomial.hpp"

using slope::Polynomial;
using slope::Rational;

namespace {
Rational rq(long n, long d = 1) { return Rational(n, d); }
}  // namespace

TEST_CASE("construction trims trailing zero coefficients") {
  Polynomial p({rq(1), rq(2), rq(0), rq(0)});
  CHECK(p.degree() == 1);
  CHECK(p.coeff(0) == rq(1));
  CHECK(p.coeff(1) == rq(2));
  CHECK(p.coeff(5) == rq(0));  // out of range reads as zero
  CHECK(Polynomial().is_zero());
  CHECK(Polynomial({rq(0)}).is_zero());
  CHECK(Polynomial::x().degree() == 1);
  CHECK(Polynomial::monomial(rq(3), 4).degree() == 4);
  CHECK(Polynomial::monomial(rq(0), 4).is_zero());
  CHECK(Polynomial::linear(rq(2), rq(5)).eval(rq(1)) == rq(7));
}

TEST_CASE("evaluation and ring operations") {
  Polynomial p({rq(1), rq(-2), rq(1)});  // (x-1)^2
  CHECK(p.eval(rq(1)).is_zero());
  CHECK(p.eval(rq(3)) == rq(4));
  CHECK(p.eval(rq(1, 2)) == rq(1, 4));
  Polynomial q = Polynomial::linear(rq(1), rq(-1));  // x - 1
  CHECK(q * q == p);
  CHECK(p + q == Polynomial({rq(0), rq(-1), rq(1)}));
  CHECK(p - p == Polynomial());
  CHECK((-q).eval(rq(0)) == rq(1));
  CHECK(p * rq(2) == Polynomial({rq(2), rq(-4), rq(2)}));
  CHECK(p / rq(2) == Polynomial({rq(1, 2), rq(-1), rq(1, 2)}));
  CHECK_THROWS_AS(p / rq(0), slope::invalid_input);
  CHECK(p.leading() == rq(1));
}

TEST_CASE("calculus round trips") {
  Polynomial p({rq(3), rq(0), rq(6)});
  CHECK(p.derivative() == Polynomial({rq(0), rq(12)}));
  CHECK(p.antiderivative().derivative() == p);
  CHECK(p.antiderivative().coeff(0).is_zero());
  CHECK(slope::poly_definite_integral(p, rq(0), rq(1)) == rq(5));
  CHECK(slope::poly_definite_integral(p, rq(-1, 2), rq(1, 2)) == rq(7, 2));
  CHECK_THROWS_AS(slope::poly_definite_integral(p, rq(1), rq(0)), slope::invalid_input);
}

TEST_CASE("affine composition") {
  Polynomial p({rq(0), rq(0), rq(1)});  // x^2
  // p(2x + 3) = 4x^2 + 12x + 9
  CHECK(p.compose_affine(rq(2), rq(3)) == Polynomial({rq(9), rq(12), rq(4)}));
  CHECK(p.compose_affine(rq(1), rq(0)) == p);
}

TEST_CASE("division with remainder and gcd") {
  Polynomial a({rq(-1), rq(0), rq(0), rq(1)});  // x^3 - 1
  Polynomial b({rq(-1), rq(1)});                // x - 1
  auto [quot, rem] = a.divmod(b);
  CHECK(rem.is_zero());
  CHECK(quot == Polynomial({rq(1), rq(1), rq(1)}));
  CHECK(quot * b + rem == a);
  auto [q2, r2] = b.divmod(a);  // degree too small: quotient 0
  CHECK(q2.is_zero());
  CHECK(r2 == b);
  CHECK_THROWS_AS(a.divmod(Polynomial()), slope::invalid_input);
  CHECK(Polynomial::gcd(a, b) == b);  // monic
  Polynomial c({rq(1), rq(1)});
  CHECK(Polynomial::gcd(b * b * c, b * c) == b * c);
}

TEST_CASE("squarefree part keeps each root once") {
  Polynomial b({rq(-1), rq(1)});
  Polynomial c({rq(2), rq(1)});
  Polynomial p = b * b * b * c;
  CHECK(p.squarefree_part() == b * c);
  CHECK(b.squarefree_part() == b);
}

TEST_CASE("interpolation is exact on rational nodes") {
  Polynomial p({rq(1, 3), rq(-2), rq(0), rq(5, 7)});
  std::vector<std::pair<Rational, Rational>> pts;
  for (long k = 1; k <= 4; ++k) pts.push_back({rq(k, 2), p.eval(rq(k, 2))});
  CHECK(slope::interpolate(pts) == p);
  CHECK(slope::interpolate({{rq(0), rq(4)}}) == Polynomial::constant(rq(4)));
  CHECK_THROWS_AS(slope::interpolate({{rq(1), rq(0)}, {rq(1), rq(1)}}), slope::invalid_input);
}

TEST_CASE("printing is canonical") {
  CHECK(Polynomial({rq(3, 2), rq(-1), rq(1, 4)}).str("c") == "1/4*c^2 - c + 3/2");
  CHECK(Polynomial().str() == "0");
  CHECK(Polynomial::x().str() == "x");
  CHECK(Polynomial({rq(0), rq(-1)}).str() == "-x");
}
