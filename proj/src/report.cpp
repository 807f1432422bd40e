#include "slope/report.hpp"

#include <algorithm>
#include <sstream>

#include "slope/bundles.hpp"
#include "slope/errors.hpp"
#include "slope/formulas.hpp"
#include "slope/toric.hpp"

namespace slope {

int verdict_exit_code(VerdictKind k) {
  switch (k) {
    case VerdictKind::StableAgainst:
    case VerdictKind::SemistableOnly: return 0;
    case VerdictKind::StrictlyUnstable: return 2;
    case VerdictKind::Inconclusive: return 3;
  }
  return 3;
}

std::string approx12(const Rational& r) { return r.decimal(12); }

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

namespace {

std::string rat_pair(const Rational& r) { return r.str() + " (" + approx12(r) + ")"; }

std::string sat_str(Saturation s) {
  return s == Saturation::Yes ? "yes" : s == Saturation::No ? "no" : "unknown";
}

void profile_block(std::ostream& out, const SlopeProfile& p) {
  out << "-- profile --\n";
  out << "dim: " << p.dim() << "\n";
  out << "a0: " << p.a0().str() << "\n";
  out << "a1: " << p.a1().str() << "\n";
  out << "mu(X) = " << rat_pair(slope_of_variety(p)) << "\n";
  out << "Seshadri bound: " << p.eps().str() << "\n";
  out << "endpoint saturates: " << sat_str(p.saturates()) << "\n";
  out << "certified range: (0, " << p.certified_hi().str() << "]\n";
}

void analysis_block(std::ostream& out, const SlopeProfile& p, const Verdict& v) {
  out << "-- analysis --\n";
  out << "margin N(c): " << margin_polynomial(p).str("c") << "\n";
  out << "verdict: " << v.kind_str() << "\n";
  if (v.witness) {
    PiecewisePolynomial N = margin_polynomial(p);
    out << "witness: c = " << v.witness->str() << " with N(c) = "
        << rat_pair(N.eval(*v.witness)) << " > 0\n";
  }
  if (v.witness_interval)
    out << "margin positive throughout (" << v.witness_interval->first.str() << ", "
        << v.witness_interval->second.str() << ")\n";
  if (v.equality_at) out << "equality mu_c = mu(X) at c = " << v.equality_at->str() << "\n";
  out << "reason: " << v.reason << "\n";
}

void at_c_block(std::ostream& out, const SlopeProfile& p, const Rational& c) {
  out << "-- at c = " << c.str() << " --\n";
  if (c.sign() <= 0 || c > p.x_max()) {
    out << "parameter outside the span (0, " << p.x_max().str() << "]; nothing to evaluate\n";
    return;
  }
  WeightPair w = normal_cone_weights_unchecked(p, c);
  Rational a00 = p.a0_at0(), a10 = p.a1_at0();
  Rational N = w.b1 * a00 - w.b0 * a10;
  out << "weights: b0 = " << w.b0.str() << ", b1 = " << w.b1.str() << "\n";
  Rational I0 = piecewise_integral(p.a0(), Rational(0), c);
  if (I0.sign() > 0) out << "mu_c(ideal) = " << rat_pair(mu_ideal(p, c)) << "\n";
  if (w.b0.sign() < 0) out << "mu_c(quotient) = " << rat_pair(w.b1 / w.b0) << "\n";
  out << "margin N(c) = " << rat_pair(N) << "\n";
  out << "Futaki F1(c) = " << rat_pair(-N / (a00 * a00)) << "\n";
  out << "within certified range: " << (c <= p.certified_hi() ? "yes" : "no") << "\n";
}

std::string support_str(const ScanHit& h) {
  std::string out;
  for (std::size_t i = 0; i < h.facet_idx.size(); ++i) {
    if (i) out += " + ";
    if (h.mults[i] != 1) out += std::to_string(h.mults[i]) + "*";
    out += "D" + std::to_string(h.facet_idx[i] + 1);
  }
  return out;
}

}  // namespace

RunResult run_scenario(const Scenario& s) {
  std::ostringstream out;
  out << "-- input --\n" << scenario_echo(s);

  // Kinds without a usable profile are handled first.
  if (s.kind == ScenarioKind::Bundle) {
    validate(s.bundle);
    BundleVerdict bv = bundle_verdict(s.bundle);
    out << "\n-- projective bundle --\n";
    out << "mu(E) = " << rat_pair(bv.muE) << "\n";
    out << "effective twist m~ = " << tilde_m(s.bundle).str() << "\n";
    out << "mu(X) = " << rat_pair(bv.muX) << "\n";
    out << "\n-- subsheaves --\n";
    for (const auto& sub : bv.subs) {
      out << sub.label << ": mu(F) = " << rat_pair(sub.muF) << ", gap = "
          << rat_pair(sub.gap.gap) << ", F1(1) = " << rat_pair(sub.gap.futaki)
          << ", verdict = " << sub.verdict.kind_str() << "\n";
      if (!sub.note.empty()) out << "  note: " << sub.note << "\n";
    }
    out << "\n-- verdict --\n";
    out << "verdict: " << bv.overall.kind_str() << "\n";
    out << "reason: " << bv.overall.reason << "\n";
    return {out.str(), verdict_exit_code(bv.overall.kind)};
  }

  if (s.kind == ScenarioKind::CurveInNfold && !(s.curve.Ln && s.curve.KLn1)) {
    validate(s.curve);
    out << "\n-- slopes only --\n";
    if (s.c) {
      Rational muQ = curve_in_nfold_quotient_slope(s.curve, *s.c);
      Rational muQ2 = curve_in_nfold_quotient_slope_via_alphas(s.curve, *s.c);
      if (muQ != muQ2) throw internal_error("curve-in-nfold slope cross-check failed");
      out << "mu_c(quotient) = " << rat_pair(muQ) << " (closed form, cross-checked)\n";
    }
    out << "\n-- verdict --\n";
    out << "verdict: Inconclusive\n";
    out << "reason: ambient intersection totals absent; slopes computed but no "
           "profile to analyze\n";
    return {out.str(), verdict_exit_code(VerdictKind::Inconclusive)};
  }

  if (s.kind == ScenarioKind::SurfaceCurve) {
    validate(s.surface);
    for (const auto& wmsg : surface_curve_warnings(s.surface))
      out << "warning: " << wmsg << "\n";
  }

  std::optional<SlopeProfile> prof = scenario_profile(s);
  if (!prof) throw invalid_input("scenario yields no profile to analyze");
  validate_profile(*prof);

  out << "\n";
  profile_block(out, *prof);
  out << "\n";
  Verdict v = stability_verdict(*prof);
  analysis_block(out, *prof, v);

  // Kind-specific cross-checks and extras.
  if (s.kind == ScenarioKind::SurfaceCurve && s.c) {
    try {
      SurfaceCurveSlopes sl = surface_curve(s.surface, *s.c);
      Rational engine = mu_quotient(*prof, *s.c);
      if (sl.muQ != engine) throw internal_error("surface-curve slope cross-check failed");
      out << "mu_c(O_Z) closed form = " << rat_pair(sl.muQ) << " (matches engine)\n";
    } catch (const invalid_input& e) {
      out << "mu_c(O_Z) closed form: n/a (" << e.what() << ")\n";
    }
  }
  if (s.kind == ScenarioKind::Divisor && s.c) {
    try {
      Rational muQ = divisor_quotient_slope(s.divisor, *s.c);
      out << "mu_c(O_Z) closed form = " << rat_pair(muQ) << "\n";
      out << "nef-limit inequality at c: " << (nef_limit_test(s.divisor, *s.c) ? "holds" : "fails")
          << "\n";
    } catch (const invalid_input& e) {
      out << "mu_c(O_Z) closed form: n/a (" << e.what() << ")\n";
    }
  }
  if (s.kind == ScenarioKind::CurveInNfold && s.c) {
    try {
      Rational muQ = curve_in_nfold_quotient_slope(s.curve, *s.c);
      Rational muQ2 = curve_in_nfold_quotient_slope_via_alphas(s.curve, *s.c);
      if (muQ != muQ2) throw internal_error("curve-in-nfold slope cross-check failed");
      out << "mu_c(O_Z) closed form = " << rat_pair(muQ) << " (cross-checked)\n";
    } catch (const invalid_input& e) {
      out << "mu_c(O_Z) closed form: n/a (" << e.what() << ")\n";
    }
  }
  if (s.kind == ScenarioKind::SmoothCurve) {
    Verdict cf = smooth_curve_verdict(s.smooth.genus, s.smooth.degL, s.smooth.d);
    if (cf.kind != v.kind) throw internal_error("smooth-curve verdict cross-check failed");
    out << "closed-form verdict agrees: " << cf.kind_str() << "\n";
  }
  if (s.kind == ScenarioKind::Toric) {
    Polytope P = make_polytope(s.toric.facets);
    out << "\n-- toric data --\n";
    out << "vertices:";
    for (const auto& vtx : P.vertices) out << " (" << vtx.x.str() << ", " << vtx.y.str() << ")";
    out << "\n";
    out << "area = " << polygon_area(P).str() << ", lattice boundary = "
        << polygon_boundary_measure(P).str() << "\n";
    out << "g range: [" << subscheme_g_min(P, s.toric.Z).str() << ", "
        << subscheme_g_max(P, s.toric.Z).str() << "]\n";
    Rational cstar = s.c && s.c->sign() > 0 && *s.c <= prof->certified_hi()
                         ? *s.c
                         : prof->certified_hi();
    WeightPair dw = donaldson_weights(P, s.toric.Z, cstar);
    WeightPair conv = donaldson_to_engine(dw, *prof, cstar);
    WeightPair eng = normal_cone_weights(*prof, cstar);
    if (conv.b0 != eng.b0 || conv.b1 != eng.b1)
      throw internal_error("boundary-integral weight cross-check failed");
    out << "boundary-integral weights at c = " << cstar.str() << ": b0 = " << eng.b0.str()
        << ", b1 = " << eng.b1.str() << " (matches engine)\n";
    try {
      out << "facet-supported Seshadri bound = " << toric_surface_seshadri(P, s.toric.Z).str()
          << "\n";
    } catch (const invalid_input&) {
      out << "facet-supported Seshadri bound: n/a (subscheme is not a sum of facets)\n";
    }
  }

  if (s.c) {
    out << "\n";
    at_c_block(out, *prof, *s.c);
  }

  return {out.str(), verdict_exit_code(v.kind)};
}

std::string scenario_csv(const Scenario& s, const std::vector<Rational>& grid) {
  std::optional<SlopeProfile> prof = scenario_profile(s);
  if (!prof)
    throw invalid_input(
        "scenario provides no profile; a parameter sweep needs one (add ambient totals or a "
        "subsheaf)");
  validate_profile(*prof);
  const SlopeProfile& p = *prof;
  Rational a00 = p.a0_at0(), a10 = p.a1_at0();
  Rational muX = slope_of_variety(p);

  std::ostringstream out;
  out << "c,mu_ideal,mu_quotient,mu_x,margin,futaki,mu_ideal_approx,mu_quotient_approx,"
         "mu_x_approx,margin_approx,futaki_approx,valid\n";
  for (const auto& c : grid) {
    std::string mu_i, mu_q, margin, fut;
    std::vector<std::string> problems;
    if (c.sign() <= 0) {
      problems.push_back("nonpositive parameter");
    } else if (c > p.x_max()) {
      problems.push_back("beyond span");
    } else {
      WeightPair w = normal_cone_weights_unchecked(p, c);
      Rational N = w.b1 * a00 - w.b0 * a10;
      margin = N.str();
      fut = (-N / (a00 * a00)).str();
      Rational I0 = piecewise_integral(p.a0(), Rational(0), c);
      if (I0.sign() > 0) mu_i = mu_ideal(p, c).str();
      else problems.push_back("degenerate ideal denominator");
      if (w.b0.sign() < 0) mu_q = (w.b1 / w.b0).str();
      else problems.push_back("degenerate quotient denominator");
      if (c > p.certified_hi()) problems.push_back("outside certified range");
    }
    std::string valid = "ok";
    if (!problems.empty()) {
      valid = problems[0];
      for (std::size_t i = 1; i < problems.size(); ++i) valid += "; " + problems[i];
    }
    auto approx_of = [](const std::string& exact) {
      return exact.empty() ? std::string() : approx12(Rational::parse(exact));
    };
    out << csv_quote(c.str()) << "," << csv_quote(mu_i) << "," << csv_quote(mu_q) << ","
        << csv_quote(muX.str()) << "," << csv_quote(margin) << "," << csv_quote(fut) << ","
        << approx_of(mu_i) << "," << approx_of(mu_q) << "," << approx12(muX) << ","
        << approx_of(margin) << "," << approx_of(fut) << "," << csv_quote(valid) << "\n";
  }
  return out.str();
}

RunResult scan_scenario(const Scenario& s, long budget) {
  if (s.kind != ScenarioKind::Toric)
    throw invalid_input("scan requires a toric scenario");
  if (budget < 0) throw invalid_input("budget must be >= 0");

  std::ostringstream out;
  Polytope P = make_polytope(s.toric.facets);
  out << "-- scan --\n";
  if (!s.tag.empty()) out << "tag: " << s.tag << "\n";
  out << "facets:\n";
  for (std::size_t i = 0; i < P.facets.size(); ++i)
    out << "  D" << (i + 1) << ": n = (" << P.facets[i].nx << ", " << P.facets[i].ny
        << "), offset = " << P.facets[i].offset.str() << "\n";
  out << "budget: " << budget << "\n";

  if (budget == 0) {
    out << "candidates examined: 0\n";
    out << "no strictly destabilizing invariant subscheme found\n";
    return {out.str(), 0};
  }

  std::vector<ScanHit> hits = destabilizer_scan(P, static_cast<int>(budget));
  out << "candidates examined: " << hits.size() << "\n";
  const std::size_t cap = 20;
  for (std::size_t i = 0; i < hits.size() && i < cap; ++i) {
    const ScanHit& h = hits[i];
    out << "  " << (i + 1) << ". Z = " << support_str(h) << ", c = " << h.c.str()
        << ": F1 = " << h.futaki.str() << " (" << approx12(h.futaki) << "), N = "
        << h.margin.str() << "\n";
  }
  if (hits.size() > cap) out << "  ... (" << (hits.size() - cap) << " more)\n";

  bool strict = !hits.empty() && hits.front().futaki.sign() < 0;
  out << (strict ? "top candidate is strictly destabilizing\n"
                 : "no strictly destabilizing invariant subscheme found\n");
  return {out.str(), strict ? 2 : 0};
}

}  // namespace slope
