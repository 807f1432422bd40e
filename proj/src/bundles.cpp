#include "slope/bundles.hpp"

#include <utility>

#include "slope/errors.hpp"

namespace slope {

namespace {

Polynomial poly_pow(const Polynomial& p, unsigned k) {
  Polynomial out = Polynomial::constant(Rational(1));
  for (unsigned i = 0; i < k; ++i) out = out * p;
  return out;
}

Polynomial one_minus_x() { return Polynomial::linear(Rational(-1), Rational(1)); }

int severity(VerdictKind k) {
  switch (k) {
    case VerdictKind::StrictlyUnstable: return 3;
    case VerdictKind::SemistableOnly: return 2;
    case VerdictKind::Inconclusive: return 1;
    case VerdictKind::StableAgainst: return 0;
  }
  return 1;
}

}  // namespace

BaseData curve_base(long genus, const Rational& deg) {
  if (genus < 0) throw invalid_input("genus must be non-negative");
  if (deg.sign() <= 0) throw invalid_input("base polarization degree must be positive");
  return BaseData{1, deg, Rational(1 - genus) / deg};
}

void validate(const BaseData& d) {
  if (d.b != 1)
    throw invalid_input(
        "only curve bases are supported exactly; higher-dimensional bases need full Chern data");
  if (d.a0B.sign() <= 0) throw invalid_input("base leading coefficient a0B must be positive");
}

void validate(const BaseData& base, const SheafData& s) {
  validate(base);
  if (s.rank < 1) throw invalid_input("sheaf rank must be >= 1");
}

void validate(const BundleScenario& scn) {
  validate(scn.base, scn.E);
  for (const auto& sub : scn.subsheaves) {
    if (sub.F.rank < 1 || sub.F.rank >= scn.E.rank)
      throw invalid_input("subsheaf rank must satisfy 0 < rk F < rk E");
  }
}

Rational mu_sheaf(const BaseData& base, const SheafData& s) {
  validate(base, s);
  return s.deg / (base.a0B * factorial(static_cast<unsigned>(base.b - 1)) * Rational(s.rank)) +
         base.muB;
}

SheafData sym_power_dual(const SheafData& e, unsigned k) {
  // rk S^k E^* = C(k + r - 1, r - 1); c1 scales by k rk / r and dualizing flips it.
  Rational rk = binomial(k + static_cast<unsigned>(e.rank) - 1,
                         static_cast<unsigned>(e.rank) - 1);
  Rational deg = -Rational(static_cast<long>(k)) * rk * e.deg / Rational(e.rank);
  return SheafData{rk.to_long(), deg};
}

SheafData tensor_sheaf(const SheafData& e, const SheafData& f) {
  return SheafData{e.rank * f.rank, Rational(e.rank) * f.deg + Rational(f.rank) * e.deg};
}

SheafData direct_sum(const SheafData& e, const SheafData& f) {
  return SheafData{e.rank + f.rank, e.deg + f.deg};
}

bool slope_identities(const BaseData& base, const SheafData& e, const SheafData& f, unsigned k) {
  Rational muE = mu_sheaf(base, e), muF = mu_sheaf(base, f);
  Rational lhs1 = mu_sheaf(base, sym_power_dual(e, k));
  Rational rhs1 = Rational(1 + static_cast<long>(k)) * base.muB -
                  Rational(static_cast<long>(k)) * muE;
  Rational lhs2 = mu_sheaf(base, tensor_sheaf(e, f));
  Rational rhs2 = muE + muF - base.muB;
  SheafData sum = direct_sum(e, f);
  Rational lhs3 = Rational(sum.rank) * mu_sheaf(base, sum);
  Rational rhs3 = Rational(e.rank) * muE + Rational(f.rank) * muF;
  return lhs1 == rhs1 && lhs2 == rhs2 && lhs3 == rhs3;
}

Rational tilde_m(const BundleScenario& scn) {
  validate(scn);
  return scn.m + (scn.base.muB - mu_sheaf(scn.base, scn.E)) / Rational(scn.base.b);
}

std::pair<Rational, Rational> projbundle_a0a1(const BundleScenario& scn) {
  validate(scn);
  long r = scn.E.rank - 1;
  Rational mt = tilde_m(scn);
  Rational lead = scn.base.a0B / factorial(static_cast<unsigned>(r));
  Rational a0 = lead * mt;
  Rational a1 = lead * (Rational(r) * Rational(r + 1) / Rational(2) * mt + scn.base.muB);
  return {a0, a1};
}

Rational bundle_degL(const BundleScenario& scn) {
  return scn.base.a0B * Rational(scn.E.rank) * tilde_m(scn);
}

Rational bundle_muX(const BundleScenario& scn) {
  auto [a0, a1] = projbundle_a0a1(scn);
  if (a0.sign() <= 0) throw invalid_input("twist is not in the ample range (m~ <= 0)");
  return a1 / a0;
}

std::vector<std::string> bundle_warnings(const BundleScenario& scn) {
  std::vector<std::string> out;
  Rational mt = tilde_m(scn);
  if (mt.sign() <= 0)
    out.push_back("twist m leaves L_m outside the ample range (effective twist " + mt.str() +
                  " <= 0)");
  Rational muE = mu_sheaf(scn.base, scn.E);
  for (const auto& sub : scn.subsheaves) {
    if (mu_sheaf(scn.base, sub.F) == muE)
      out.push_back("subsheaf " + (sub.label.empty() ? std::string("F") : sub.label) +
                    " sits at the slope boundary (mu_F = mu_E)");
  }
  return out;
}

std::pair<Polynomial, Polynomial> bundle_alphas(const BundleScenario& scn,
                                                const SubsheafEntry& sub) {
  validate(scn);
  if (sub.F.rank < 1 || sub.F.rank >= scn.E.rank)
    throw invalid_input("subsheaf rank must satisfy 0 < rk F < rk E");
  long r = scn.E.rank - 1;
  long s = sub.F.rank - 1;
  long t = scn.E.rank - sub.F.rank - 1;
  Rational mt = tilde_m(scn);
  Rational muE = mu_sheaf(scn.base, scn.E);
  Rational muF = mu_sheaf(scn.base, sub.F);
  Rational lead = scn.base.a0B /
                  (factorial(static_cast<unsigned>(s)) * factorial(static_cast<unsigned>(t)));

  Polynomial omx = one_minus_x();
  Polynomial base_poly = poly_pow(omx, static_cast<unsigned>(s)) *
                         poly_pow(Polynomial::x(), static_cast<unsigned>(t));
  // gamma(x) = (muE - muF)(1 - x (r+1)/(t+1))
  Polynomial gamma = Polynomial::linear(-(muE - muF) * Rational(r + 1) / Rational(t + 1),
                                        muE - muF);
  Polynomial weight = Polynomial::constant(mt) + gamma;

  // 2 delta(x) = s(s+1)(1-x)^{s-1} x^t + t(t+1)(1-x)^s x^{t-1} (terms with a
  // zero coefficient are omitted, which also avoids the negative powers).
  Polynomial two_delta;
  if (s > 0)
    two_delta = two_delta + poly_pow(omx, static_cast<unsigned>(s - 1)) *
                                poly_pow(Polynomial::x(), static_cast<unsigned>(t)) *
                                (Rational(s) * Rational(s + 1));
  if (t > 0)
    two_delta = two_delta + poly_pow(omx, static_cast<unsigned>(s)) *
                                poly_pow(Polynomial::x(), static_cast<unsigned>(t - 1)) *
                                (Rational(t) * Rational(t + 1));

  Polynomial alpha1 = base_poly * weight * lead;
  Polynomial alpha2 = (two_delta * weight * Rational(1, 2) + base_poly * scn.base.muB) * lead;
  return {std::move(alpha1), std::move(alpha2)};
}

GapResult subbundle_slope_gap(const BundleScenario& scn, const SubsheafEntry& sub) {
  auto [a0, a1] = projbundle_a0a1(scn);
  if (a0.sign() <= 0) throw invalid_input("twist is not in the ample range (m~ <= 0)");
  auto [alpha1, alpha2] = bundle_alphas(scn, sub);
  long r = scn.E.rank - 1;
  long s = sub.F.rank - 1;
  Rational mt = tilde_m(scn);
  Rational muE = mu_sheaf(scn.base, scn.E);
  Rational muF = mu_sheaf(scn.base, sub.F);
  Rational a0B = scn.base.a0B;

  Polynomial omx = one_minus_x();
  Rational I = poly_definite_integral(omx * alpha1, Rational(0), Rational(1));
  Rational J = poly_definite_integral(omx * alpha2, Rational(0), Rational(1)) +
               alpha1.eval(Rational(0)) / 2;

  // Closed forms for the same two integrals.
  Rational Icf = a0B * Rational(s + 1) / factorial(static_cast<unsigned>(r + 1)) *
                 (mt + (muE - muF) / Rational(r + 2));
  Rational Jcf = a0B * Rational(s + 1) / (Rational(2) * factorial(static_cast<unsigned>(r + 1))) *
                 (Rational(r) * Rational(r + 1) * mt + Rational(2) * scn.base.muB +
                  Rational(r + 1) * (muE - muF));
  if (I != Icf || J != Jcf)
    throw internal_error("subbundle weight integrals disagree with their closed forms");

  Rational num = a0 * J - a1 * I;
  Rational num_cf = a0B * a0B * Rational(s + 1) /
                    (factorial(static_cast<unsigned>(r + 2)) * factorial(static_cast<unsigned>(r))) *
                    (muE - muF) * (Rational(r + 1) * mt - scn.base.muB);
  if (num != num_cf)
    throw internal_error("subbundle slope gap disagrees with its closed form");

  if (I.sign() <= 0)
    throw invalid_input("subbundle filtration is degenerate at this twist (b0 >= 0)");

  GapResult out;
  out.gap = num / (a0 * I);
  out.futaki = num / (a0 * a0);
  out.margin = -num;
  out.weight_b0 = -I;
  out.weight_b1 = -J;
  return out;
}

SlopeProfile profile_from_bundle(const BundleScenario& scn, const SubsheafEntry& sub) {
  auto [a00, a10] = projbundle_a0a1(scn);
  auto [alpha1, alpha2] = bundle_alphas(scn, sub);
  Polynomial a0 = Polynomial::constant(a00) - alpha1.antiderivative();
  Polynomial a1 = Polynomial::constant(a10) - alpha2.antiderivative() +
                  (alpha1 - Polynomial::constant(alpha1.eval(Rational(0)))) * Rational(1, 2);
  // The filtration runs to c = 1 (the subbundle's slice bound is exactly 1)
  // and the boundary configuration there is a genuine degeneration.
  return SlopeProfile::polynomial(static_cast<int>(scn.E.rank), std::move(a0), std::move(a1),
                                  Rational(1), SeshadriBound::exact(Rational(1)),
                                  Saturation::Yes);
}

BundleVerdict bundle_verdict(const BundleScenario& scn) {
  validate(scn);
  if (scn.subsheaves.empty())
    throw invalid_input("bundle verdict needs at least one subsheaf to test");
  BundleVerdict out;
  out.muE = mu_sheaf(scn.base, scn.E);
  out.muX = bundle_muX(scn);

  std::size_t worst = 0;
  for (const auto& sub : scn.subsheaves) {
    SubsheafVerdict sv;
    sv.label = sub.label.empty() ? std::string("F") : sub.label;
    sv.muF = mu_sheaf(scn.base, sub.F);
    sv.gap = subbundle_slope_gap(scn, sub);
    sv.verdict = stability_verdict(profile_from_bundle(scn, sub));
    if (sv.verdict.kind == VerdictKind::SemistableOnly && sub.not_direct_summand)
      sv.note = "equality holds but the subsheaf is asserted not to split off, "
                "so the pair is semistable and not polystable";
    out.subs.push_back(std::move(sv));
    if (severity(out.subs.back().verdict.kind) > severity(out.subs[worst].verdict.kind))
      worst = out.subs.size() - 1;
  }
  out.overall = out.subs[worst].verdict;
  out.overall.reason = "subsheaf " + out.subs[worst].label + ": " + out.subs[worst].verdict.reason;
  return out;
}

}  // namespace slope
