#include "doctest.h"
#include "slope/bundles.hpp"
#include "slope/engine.hpp"
#include "slope/errors.hpp"

using namespace slope;

namespace {
Rational rq(long n, long d = 1) { return Rational(n, d); }

BaseData elliptic() { return curve_base(1, rq(1)); }

// O + O(p) over an elliptic curve, tested against O(p), with twist m = 2.
BundleScenario o_plus_op() {
  BundleScenario scn;
  scn.base = elliptic();
  scn.E = SheafData{2, rq(1)};
  scn.subsheaves.push_back(SubsheafEntry{SheafData{1, rq(1)}, false, "O(p)"});
  scn.m = rq(2);
  return scn;
}

// O + O over the projective line, tested against one summand, m = 1.
BundleScenario oo_split() {
  BundleScenario scn;
  scn.base = curve_base(0, rq(1));
  scn.E = SheafData{2, rq(0)};
  scn.subsheaves.push_back(SubsheafEntry{SheafData{1, rq(0)}, false, "O"});
  scn.m = rq(1);
  return scn;
}
}  // namespace

TEST_CASE("curve bases and sheaf slopes") {
  CHECK(elliptic().muB == rq(0));
  CHECK(curve_base(0, rq(1)).muB == rq(1));
  CHECK(curve_base(2, rq(3)).muB == rq(-1, 3));
  CHECK(curve_base(2, rq(3)).a0B == rq(3));
  CHECK(mu_sheaf(elliptic(), SheafData{2, rq(1)}) == rq(1, 2));
  CHECK(mu_sheaf(elliptic(), SheafData{1, rq(1)}) == rq(1));
  CHECK(mu_sheaf(curve_base(0, rq(1)), SheafData{2, rq(0)}) == rq(1));
  CHECK_THROWS_AS(curve_base(-1, rq(1)), invalid_input);
  CHECK_THROWS_AS(curve_base(0, rq(0)), invalid_input);
  CHECK_THROWS_AS(curve_base(0, rq(-2)), invalid_input);
  CHECK_THROWS_AS(validate(BaseData{2, rq(1), rq(0)}), invalid_input);
  CHECK_THROWS_AS(mu_sheaf(elliptic(), SheafData{0, rq(1)}), invalid_input);
}

TEST_CASE("functorial rank/degree arithmetic and the slope identities") {
  SheafData e{2, rq(1)}, f{3, rq(2)};
  SheafData sk = sym_power_dual(e, 3);
  CHECK(sk.rank == 4);
  CHECK(sk.deg == rq(-6));
  SheafData tens = tensor_sheaf(e, f);
  CHECK(tens.rank == 6);
  CHECK(tens.deg == rq(7));
  SheafData sum = direct_sum(e, f);
  CHECK(sum.rank == 5);
  CHECK(sum.deg == rq(3));
  CHECK(slope_identities(elliptic(), e, f, 3));
  CHECK(slope_identities(curve_base(2, rq(3)), e, f, 5));
}

TEST_CASE("projective bundle Hilbert data") {
  BundleScenario scn = o_plus_op();
  CHECK(tilde_m(scn) == rq(3, 2));
  auto [a0, a1] = projbundle_a0a1(scn);
  CHECK(a0 == rq(3, 2));
  CHECK(a1 == rq(3, 2));
  CHECK(bundle_muX(scn) == rq(1));
  CHECK(bundle_degL(scn) == rq(3));
  CHECK(bundle_degL(scn) == factorial(2) * a0);

  // Rank three: E of degree 1 over the elliptic base, m = 1.
  BundleScenario r3;
  r3.base = elliptic();
  r3.E = SheafData{3, rq(1)};
  r3.m = rq(1);
  CHECK(tilde_m(r3) == rq(2, 3));
  auto [b0, b1] = projbundle_a0a1(r3);
  CHECK(b0 == rq(1, 3));
  CHECK(b1 == rq(1));
  CHECK(bundle_muX(r3) == rq(3));
  CHECK(bundle_degL(r3) == rq(2));
  CHECK(bundle_degL(r3) == factorial(3) * b0);

  // Below the ample range the polarization is rejected.
  BundleScenario flat = o_plus_op();
  flat.m = rq(1, 2);  // effective twist 0
  CHECK(tilde_m(flat) == rq(0));
  CHECK_THROWS_AS(bundle_muX(flat), invalid_input);
  CHECK_THROWS_AS(subbundle_slope_gap(flat, flat.subsheaves[0]), invalid_input);
  CHECK(!bundle_warnings(flat).empty());
  CHECK(bundle_warnings(o_plus_op()).empty());
}

TEST_CASE("destabilizing line subbundle of O + O(p)") {
  BundleScenario scn = o_plus_op();
  GapResult g = subbundle_slope_gap(scn, scn.subsheaves[0]);
  CHECK(g.gap == rq(-1, 4));
  CHECK(g.futaki == rq(-1, 9));
  CHECK(g.margin == rq(1, 4));
  CHECK(g.weight_b0 == rq(-2, 3));
  CHECK(g.weight_b1 == rq(-1, 2));

  SlopeProfile p = profile_from_bundle(scn, scn.subsheaves[0]);
  CHECK(p.dim() == 2);
  CHECK(p.is_polynomial());
  CHECK(p.a0().piece(0) == Polynomial({rq(3, 2), rq(-1), rq(-1, 2)}));
  CHECK(p.a1().piece(0) == Polynomial({rq(3, 2), rq(1, 2)}));
  CHECK(p.x_max() == rq(1));
  CHECK(p.eps().kind == SeshadriBound::Kind::Exact);
  CHECK(p.eps().value == rq(1));
  CHECK(p.saturates() == Saturation::Yes);

  // The same weights through the normal-cone engine at c = 1.
  WeightPair w = normal_cone_weights(p, rq(1));
  CHECK(w.b0 == g.weight_b0);
  CHECK(w.b1 == g.weight_b1);
  CHECK(futaki(p, rq(1)) == g.futaki);
  CHECK(margin_polynomial(p).eval(rq(1)) == g.margin);

  // The layer densities recovered from the profile match the direct ones,
  // and the finite-level sums fit the same leading weights.
  auto direct = bundle_alphas(scn, scn.subsheaves[0]);
  CHECK(direct.first == Polynomial({rq(1), rq(1)}));
  CHECK(direct.second == Polynomial());
  auto layered = alphas_from_profile(p);
  CHECK(layered.first.piece(0) == direct.first);
  CHECK(layered.second.piece(0) == direct.second);
  OracleResult o = weight_sum_oracle(direct.first, direct.second, rq(1),
                                     {1, 2, 3, 4, 5, 6}, 2);
  CHECK(o.b0 == g.weight_b0);
  CHECK(o.b1 == g.weight_b1);

  Verdict v = stability_verdict(p);
  CHECK(v.kind == VerdictKind::StrictlyUnstable);

  BundleVerdict bv = bundle_verdict(scn);
  CHECK(bv.muE == rq(1, 2));
  CHECK(bv.muX == rq(1));
  CHECK(bv.subs.size() == 1);
  CHECK(bv.subs[0].muF == rq(1));
  CHECK(bv.subs[0].gap.gap == rq(-1, 4));
  CHECK(bv.overall.kind == VerdictKind::StrictlyUnstable);
  CHECK(bv.overall.reason.find("O(p)") != std::string::npos);
}

TEST_CASE("split direct summand gives equality, not instability") {
  BundleScenario scn = oo_split();
  GapResult g = subbundle_slope_gap(scn, scn.subsheaves[0]);
  CHECK(g.gap == rq(0));
  CHECK(g.futaki == rq(0));
  CHECK(g.margin == rq(0));

  SlopeProfile p = profile_from_bundle(scn, scn.subsheaves[0]);
  CHECK(p.a0().piece(0) == Polynomial({rq(1), rq(-1)}));
  CHECK(p.a1().piece(0) == Polynomial({rq(2), rq(-1)}));
  Verdict v = stability_verdict(p);
  CHECK(v.kind == VerdictKind::SemistableOnly);
  CHECK(v.equality_at == rq(1));

  // Asserting the subsheaf does not split off downgrades polystability.
  BundleScenario tight = o_plus_op();
  tight.subsheaves.clear();
  tight.subsheaves.push_back(SubsheafEntry{SheafData{1, rq(1, 2)}, true, "halfdeg"});
  GapResult ge = subbundle_slope_gap(tight, tight.subsheaves[0]);
  CHECK(ge.gap == rq(0));
  CHECK(ge.futaki == rq(0));
  CHECK(ge.margin == rq(0));
  BundleVerdict bv = bundle_verdict(tight);
  CHECK(bv.subs[0].verdict.kind == VerdictKind::SemistableOnly);
  CHECK(!bv.subs[0].note.empty());
  auto warn = bundle_warnings(tight);
  REQUIRE(warn.size() == 1);
  CHECK(warn[0].find("slope boundary") != std::string::npos);

  // Both subsheaves together: the strict destabilizer dominates the verdict.
  BundleScenario both = o_plus_op();
  both.subsheaves.push_back(tight.subsheaves[0]);
  BundleVerdict bb = bundle_verdict(both);
  CHECK(bb.subs.size() == 2);
  CHECK(bb.overall.kind == VerdictKind::StrictlyUnstable);
}

TEST_CASE("corank two subbundle of a rank three bundle") {
  BundleScenario scn;
  scn.base = elliptic();
  scn.E = SheafData{3, rq(1)};
  scn.subsheaves.push_back(SubsheafEntry{SheafData{2, rq(1)}, false, ""});
  scn.m = rq(1);

  GapResult g = subbundle_slope_gap(scn, scn.subsheaves[0]);
  CHECK(g.gap == rq(-1, 5));
  CHECK(g.futaki == rq(-1, 8));
  CHECK(g.margin == rq(1, 72));
  CHECK(g.weight_b0 == rq(-5, 24));
  CHECK(g.weight_b1 == rq(-7, 12));

  SlopeProfile p = profile_from_bundle(scn, scn.subsheaves[0]);
  CHECK(p.dim() == 3);
  CHECK(p.a0().piece(0) == Polynomial({rq(1, 3), rq(-1, 2), rq(0), rq(1, 6)}));
  CHECK(p.a1().piece(0) == Polynomial({rq(1), rq(-1, 2), rq(-1, 2)}));
  WeightPair w = normal_cone_weights(p, rq(1));
  CHECK(w.b0 == g.weight_b0);
  CHECK(w.b1 == g.weight_b1);
  CHECK(stability_verdict(p).kind == VerdictKind::StrictlyUnstable);
  CHECK(bundle_verdict(scn).overall.kind == VerdictKind::StrictlyUnstable);
  // The unnamed subsheaf reports under the default label.
  CHECK(bundle_verdict(scn).subs[0].label == "F");
}

TEST_CASE("degenerate and malformed bundle inputs are rejected") {
  BundleScenario scn = o_plus_op();
  scn.subsheaves[0].F.rank = 2;  // rk F = rk E
  CHECK_THROWS_AS(bundle_verdict(scn), invalid_input);
  scn.subsheaves[0].F.rank = 0;
  CHECK_THROWS_AS(bundle_verdict(scn), invalid_input);

  BundleScenario empty = o_plus_op();
  empty.subsheaves.clear();
  CHECK_THROWS_AS(bundle_verdict(empty), invalid_input);

  // A subsheaf of very positive degree degenerates the filtration weights.
  BundleScenario heavy;
  heavy.base = elliptic();
  heavy.E = SheafData{2, rq(0)};
  heavy.subsheaves.push_back(SubsheafEntry{SheafData{1, rq(3)}, false, ""});
  heavy.m = rq(1);
  CHECK_THROWS_AS(subbundle_slope_gap(heavy, heavy.subsheaves[0]), invalid_input);
}
