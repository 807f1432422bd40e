#include "doctest.h"
#include "slope/errors.hpp"
#include "slope/roots.hpp"

using namespace slope;

namespace {
Rational rq(long n, long d = 1) { return Rational(n, d); }
// (x - r1)(x - r2)
Polynomial from_roots(const Rational& r1, const Rational& r2) {
  return Polynomial::linear(rq(1), -r1) * Polynomial::linear(rq(1), -r2);
}
}  // namespace

TEST_CASE("root counting on open intervals") {
  Polynomial p = from_roots(rq(1, 3), rq(2));  // roots 1/3, 2
  CHECK(count_roots_open(p, rq(0), rq(1)) == 1);
  CHECK(count_roots_open(p, rq(0), rq(3)) == 2);
  CHECK(count_roots_open(p, rq(1, 3), rq(2)) == 0);  // endpoints excluded
  CHECK(count_roots_open(p, rq(5), rq(9)) == 0);
  // Multiple roots are counted once.
  Polynomial sq = from_roots(rq(1), rq(1));
  CHECK(count_roots_open(sq, rq(0), rq(2)) == 1);
  // x^2 - 2: irrational roots located fine.
  CHECK(count_roots_open(Polynomial({rq(-2), rq(0), rq(1)}), rq(0), rq(2)) == 1);
}

TEST_CASE("root isolation and refinement") {
  Polynomial p = from_roots(rq(1, 3), rq(2));
  auto ivs = isolate_roots(p, rq(0), rq(3));
  REQUIRE(ivs.size() == 2);
  CHECK(ivs[0].hi < ivs[1].lo);  // disjoint and sorted
  RootInterval fine = refine_root(p, ivs[0], rq(1, 1000));
  if (!fine.exact) {
    CHECK(fine.hi - fine.lo <= rq(1, 1000));
    CHECK(fine.lo <= rq(1, 3));
    CHECK(rq(1, 3) <= fine.hi);
  } else {
    CHECK(*fine.exact == rq(1, 3));
  }
  CHECK(exact_root_in(p, ivs[0]) == rq(1, 3));
  CHECK(exact_root_in(p, ivs[1]) == rq(2));

  // sqrt(2) is not rational: the quadratic closed form must not claim it.
  Polynomial irr({rq(-2), rq(0), rq(1)});
  auto iv2 = isolate_roots(irr, rq(0), rq(2));
  REQUIRE(iv2.size() == 1);
  CHECK_FALSE(exact_root_in(irr, iv2[0]).has_value());
}

TEST_CASE("sign classification on intervals") {
  Polynomial p = from_roots(rq(1, 3), rq(2));
  CHECK(poly_sign_on_interval(p, rq(0), rq(1, 3)).kind == SignKind::StrictlyPositive);
  CHECK(poly_sign_on_interval(p, rq(1, 3), rq(2)).kind == SignKind::StrictlyNegative);
  SignSummary mixed = poly_sign_on_interval(p, rq(0), rq(1));
  CHECK(mixed.kind == SignKind::Mixed);
  REQUIRE(mixed.witnesses.size() == 1);
  CHECK(mixed.witnesses[0].lo <= rq(1, 3));
  CHECK(poly_sign_on_interval(Polynomial(), rq(0), rq(1)).kind == SignKind::IdenticallyZero);
  CHECK_THROWS_AS(poly_sign_on_interval(p, rq(1), rq(1)), invalid_input);
}

TEST_CASE("boundary zero at the right endpoint is reported separately") {
  Polynomial p = from_roots(rq(1, 3), rq(2));
  SignSummary s = poly_sign_on_interval(p, rq(1, 3), rq(2), true);
  CHECK(s.kind == SignKind::StrictlyNegative);
  CHECK(s.boundary_zero_hi);
  SignSummary t = poly_sign_on_interval(p, rq(1, 3), rq(3, 2), true);
  CHECK_FALSE(t.boundary_zero_hi);
}

TEST_CASE("sign pattern lists zeros and gap signs") {
  Polynomial p = from_roots(rq(1, 2), rq(3, 2));
  SignPattern sp = sign_pattern(p, rq(0), rq(2));
  CHECK_FALSE(sp.identically_zero);
  REQUIRE(sp.zeros.size() == 2);
  REQUIRE(sp.gap_signs.size() == 3);
  CHECK(sp.gap_signs[0] == 1);
  CHECK(sp.gap_signs[1] == -1);
  CHECK(sp.gap_signs[2] == 1);

  SignPattern none = sign_pattern(p, rq(3), rq(4));
  CHECK(none.zeros.empty());
  CHECK(none.gap_signs == std::vector<int>{1});

  CHECK(sign_pattern(Polynomial(), rq(0), rq(1)).identically_zero);
}
