#include "slope/engine.hpp"

#include <algorithm>

#include "slope/errors.hpp"

namespace slope {

namespace {

// a1 + a0'/2 on the shared breakpoint grid.
PiecewisePolynomial ideal_numerator_density(const SlopeProfile& p) {
  return p.a1() + p.a0().derivative() * Rational(1, 2);
}

void require_param_in_span(const SlopeProfile& p, const Rational& c) {
  if (c.sign() < 0) throw invalid_input("parameter c must be >= 0");
  if (c > p.x_max()) throw invalid_input("parameter c exceeds the profile span");
}

// int_0^c (c - x) f(x) dx, exact, f piecewise.
Rational integral_against_cminus(const PiecewisePolynomial& f, const Rational& c) {
  Rational acc(0);
  const auto& br = f.breaks();
  for (std::size_t i = 0; i < f.piece_count(); ++i) {
    Rational lo = max(br[i], Rational(0));
    Rational hi = min(br[i + 1], c);
    if (lo >= hi) continue;
    Polynomial weighted = Polynomial::linear(Rational(-1), c) * f.piece(i);
    acc += poly_definite_integral(weighted, lo, hi);
  }
  return acc;
}

bool alpha_decomposition_valid(const SlopeProfile& p) {
  return p.a0().derivative().is_continuous() && p.a1().is_continuous();
}

}  // namespace

Rational slope_of_variety(const SlopeProfile& p) { return p.a1_at0() / p.a0_at0(); }

Rational mu_ideal(const SlopeProfile& p, const Rational& c) {
  require_param_in_span(p, c);
  if (c.sign() <= 0) throw invalid_input("mu_c of the ideal side needs c > 0");
  Rational den = p.a0().integral(Rational(0), c);
  if (den.sign() <= 0)
    throw invalid_input("mu_c of the ideal side needs int_0^c a0 > 0");
  Rational num = ideal_numerator_density(p).integral(Rational(0), c);
  return num / den;
}

Rational mu_ideal_limit0(const SlopeProfile& p) {
  Rational d0 = p.a0().piece(0).derivative().eval(Rational(0));
  return (p.a1_at0() + d0 / Rational(2)) / p.a0_at0();
}

Rational mu_quotient(const SlopeProfile& p, const Rational& c) {
  require_param_in_span(p, c);
  if (c.sign() <= 0) throw invalid_input("mu_c of the quotient side needs c > 0");
  WeightPair w = normal_cone_weights_unchecked(p, c);
  return w.b1 / w.b0;  // b0 < 0 enforced by the weight computation
}

std::pair<PiecewisePolynomial, PiecewisePolynomial> alphas_from_profile(const SlopeProfile& p) {
  if (!alpha_decomposition_valid(p))
    throw invalid_input(
        "layer densities need a0 continuously differentiable and a1 continuous");
  PiecewisePolynomial d0 = p.a0().derivative();
  PiecewisePolynomial alpha1 = d0 * Rational(-1);
  PiecewisePolynomial alpha2 =
      (p.a1().derivative() + d0.derivative() * Rational(1, 2)) * Rational(-1);
  return {std::move(alpha1), std::move(alpha2)};
}

WeightPair normal_cone_weights_unchecked(const SlopeProfile& p, const Rational& c) {
  require_param_in_span(p, c);
  if (c.is_zero()) return {Rational(0), Rational(0)};
  Rational b0 = p.a0().integral(Rational(0), c) - c * p.a0_at0();
  Rational b1 = ideal_numerator_density(p).integral(Rational(0), c) - c * p.a1_at0();
  if (alpha_decomposition_valid(p)) {
    auto [alpha1, alpha2] = alphas_from_profile(p);
    Rational b0_dual = -integral_against_cminus(alpha1, c);
    Rational a1_at0 = alpha1.eval(Rational(0));
    Rational b1_dual = -(integral_against_cminus(alpha2, c) + c * a1_at0 / Rational(2));
    if (b0 != b0_dual || b1 != b1_dual)
      throw internal_error("weight routes disagree: profile and layer densities");
  }
  if (b0.sign() >= 0)
    throw invalid_input("degenerate weights: a0 must strictly decrease somewhere below c");
  return {b0, b1};
}

WeightPair normal_cone_weights(const SlopeProfile& p, const Rational& c) {
  if (c > p.certified_hi())
    throw invalid_input("parameter c exceeds the certified range; no weight semantics");
  return normal_cone_weights_unchecked(p, c);
}

Rational futaki(const SlopeProfile& p, const Rational& c) {
  WeightPair w = normal_cone_weights(p, c);
  Rational a0 = p.a0_at0(), a1 = p.a1_at0();
  return (w.b0 * a1 - w.b1 * a0) / (a0 * a0);
}

Rational futaki_unchecked(const SlopeProfile& p, const Rational& c) {
  WeightPair w = normal_cone_weights_unchecked(p, c);
  Rational a0 = p.a0_at0(), a1 = p.a1_at0();
  return (w.b0 * a1 - w.b1 * a0) / (a0 * a0);
}

PiecewisePolynomial margin_polynomial(const SlopeProfile& p) {
  PiecewisePolynomial lhs = ideal_numerator_density(p).antiderivative() * p.a0_at0();
  PiecewisePolynomial rhs = p.a0().antiderivative() * p.a1_at0();
  return lhs - rhs;
}

Rational weight_sum_at(const PiecewisePolynomial& alpha1, const PiecewisePolynomial& alpha2,
                       const Rational& c, long k, int n) {
  if (k <= 0) throw invalid_input("weight sums need k >= 1");
  Rational ck = c * Rational(k);
  if (!ck.is_integer()) throw invalid_input("weight sums need c k integral");
  long m = ck.to_long();
  bool has_alpha2 = false;
  for (const auto& q : alpha2.pieces())
    if (!q.is_zero()) has_alpha2 = true;
  if (has_alpha2 && n < 2)
    throw invalid_input("second layer density must vanish in dimension < 2");
  Rational k1 = Rational(k).pow(static_cast<unsigned>(n - 1));
  Rational k2 = (n >= 2) ? Rational(k).pow(static_cast<unsigned>(n - 2)) : Rational(0);
  Rational acc(0);
  for (long i = 0; i < m; ++i) {
    Rational x(i, k);
    Rational layer = alpha1.eval(x) * k1;
    if (has_alpha2) layer += alpha2.eval(x) * k2;
    acc += Rational(m - i) * layer;
  }
  return -acc;
}

OracleResult weight_sum_oracle(const PiecewisePolynomial& alpha1,
                               const PiecewisePolynomial& alpha2, const Rational& c,
                               const std::vector<long>& ks, int n) {
  if (n < 1) throw invalid_input("weight sums need dimension >= 1");
  if (c.sign() <= 0) throw invalid_input("weight sums need c > 0");
  if (c > alpha1.span_hi() || c > alpha2.span_hi())
    throw invalid_input("c exceeds the span of the layer densities");
  for (const auto& q : alpha1.pieces())
    if (q.degree() > n - 1) throw invalid_input("first layer density degree exceeds n-1");
  for (const auto& q : alpha2.pieces())
    if (q.degree() > n - 2) throw invalid_input("second layer density degree exceeds n-2");
  std::size_t fit_count = static_cast<std::size_t>(n) + 2;
  if (ks.size() < fit_count)
    throw invalid_input("weight sum fit needs at least n+2 sample levels");
  std::vector<long> sorted = ks;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw invalid_input("sample levels must be distinct");
  auto clears = [&](long k, const PiecewisePolynomial& f) {
    for (const auto& t : f.breaks()) {
      if (t.sign() <= 0 || t >= c) continue;
      if (!(t * Rational(k)).is_integer()) return false;
    }
    return true;
  };
  for (long k : ks) {
    if (k <= 0) throw invalid_input("sample levels must be positive");
    if (!(c * Rational(k)).is_integer())
      throw invalid_input("every sample level must clear the denominator of c");
    if (!clears(k, alpha1) || !clears(k, alpha2))
      throw invalid_input("every sample level must clear the breakpoint denominators");
  }

  std::vector<std::pair<Rational, Rational>> pts;
  pts.reserve(fit_count);
  for (std::size_t i = 0; i < fit_count; ++i)
    pts.emplace_back(Rational(ks[i]), weight_sum_at(alpha1, alpha2, c, ks[i], n));
  Polynomial w = interpolate(pts);
  for (std::size_t i = fit_count; i < ks.size(); ++i) {
    if (w.eval(Rational(ks[i])) != weight_sum_at(alpha1, alpha2, c, ks[i], n))
      throw internal_error("finite-level weight sums failed the polynomiality check");
  }
  return {w, w.coeff(static_cast<unsigned>(n + 1)), w.coeff(static_cast<unsigned>(n))};
}

OracleResult weight_sum_oracle(const Polynomial& alpha1, const Polynomial& alpha2,
                               const Rational& c, const std::vector<long>& ks, int n) {
  if (c.sign() <= 0) throw invalid_input("weight sums need c > 0");
  return weight_sum_oracle(PiecewisePolynomial::single(alpha1, Rational(0), c),
                           PiecewisePolynomial::single(alpha2, Rational(0), c), c, ks, n);
}

std::vector<long> oracle_sample_ks(const PiecewisePolynomial& alpha1,
                                   const PiecewisePolynomial& alpha2, const Rational& c,
                                   int n, int count) {
  if (count < n + 2) count = n + 2;
  mpz_class l = c.den();
  auto fold = [&](const PiecewisePolynomial& f) {
    for (const auto& t : f.breaks()) {
      if (t.sign() <= 0 || t >= c) continue;
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.den().get_mpz_t());
    }
  };
  fold(alpha1);
  fold(alpha2);
  if (!l.fits_slong_p()) throw invalid_input("sample level denominators overflow");
  long base = l.get_si();
  std::vector<long> ks;
  ks.reserve(static_cast<std::size_t>(count));
  for (int j = 1; j <= count; ++j) ks.push_back(base * j);
  return ks;
}

std::string Verdict::kind_str() const {
  switch (kind) {
    case VerdictKind::StableAgainst:
      return "StableAgainst";
    case VerdictKind::SemistableOnly:
      return "SemistableOnly";
    case VerdictKind::StrictlyUnstable:
      return "StrictlyUnstable";
    case VerdictKind::Inconclusive:
      return "Inconclusive";
  }
  return "Inconclusive";
}

namespace {

// One maximal root-free open gap of the margin with a certified sign, or a zero.
struct MarginZero {
  Rational lo, hi;              // certified enclosure, lo == hi when exact
  std::optional<Rational> exact;
};

struct MarginLayout {
  std::vector<MarginZero> zeros;               // interior zeros of N on (0, e)
  std::vector<std::pair<Rational, Rational>> positive;  // open intervals with N > 0
  std::vector<std::pair<Rational, Rational>> zero_regions;  // N identically 0
  bool endpoint_zero = false;                  // N(e) == 0
  bool endpoint_positive = false;              // N(e) > 0
};

// Sign layout of the continuous piecewise margin N on (0, e].
MarginLayout analyze_margin(const PiecewisePolynomial& N, const Rational& e) {
  MarginLayout out;
  const auto& br = N.breaks();
  for (std::size_t i = 0; i < N.piece_count(); ++i) {
    Rational lo = max(br[i], Rational(0));
    Rational hi = min(br[i + 1], e);
    if (lo >= hi) continue;
    const Polynomial& q = N.piece(i);
    SignPattern sp = sign_pattern(q, lo, hi);
    if (sp.identically_zero) {
      out.zero_regions.emplace_back(lo, hi);
      continue;
    }
    // Interior break values double as potential equality points; handled below.
    Rational prev_bound = lo;
    for (std::size_t z = 0; z <= sp.zeros.size(); ++z) {
      Rational next_bound = (z < sp.zeros.size())
                                ? (sp.zeros[z].exact ? *sp.zeros[z].exact : sp.zeros[z].lo)
                                : hi;
      if (sp.gap_signs[z] > 0 && prev_bound < next_bound)
        out.positive.emplace_back(prev_bound, next_bound);
      if (z < sp.zeros.size()) {
        out.zeros.push_back({sp.zeros[z].lo, sp.zeros[z].hi, sp.zeros[z].exact});
        prev_bound = sp.zeros[z].exact ? *sp.zeros[z].exact : sp.zeros[z].hi;
      }
    }
  }
  // Zeros sitting exactly on interior breakpoints (open per-piece patterns miss them).
  for (std::size_t i = 1; i + 1 < br.size(); ++i) {
    if (br[i] <= Rational(0) || br[i] >= e) continue;
    if (N.eval(br[i]).is_zero()) out.zeros.push_back({br[i], br[i], br[i]});
  }
  std::sort(out.zeros.begin(), out.zeros.end(),
            [](const MarginZero& a, const MarginZero& b) { return a.lo < b.lo; });
  std::sort(out.positive.begin(), out.positive.end());
  Rational at_e = N.eval(e);
  out.endpoint_zero = at_e.is_zero();
  out.endpoint_positive = at_e.sign() > 0;
  return out;
}

// First positive x strictly below which a0 is certified positive.
Rational positivity_radius(const PiecewisePolynomial& a0) {
  const auto& br = a0.breaks();
  for (std::size_t i = 0; i < a0.piece_count(); ++i) {
    Rational lo = max(br[i], Rational(0));
    Rational hi = br[i + 1];
    if (lo >= hi) continue;
    if (!a0.eval(lo).is_zero() || lo.is_zero()) {
      auto roots = isolate_roots(a0.piece(i), lo, hi);
      if (!roots.empty()) return roots.front().exact ? *roots.front().exact : roots.front().lo;
      if (a0.eval(hi).sign() <= 0) return hi;
    } else {
      return lo;
    }
  }
  return a0.span_hi();
}

Verdict unstable_at(const Rational& lo, const Rational& hi, const Rational& certified,
                    const PiecewisePolynomial& N) {
  Verdict v;
  v.kind = VerdictKind::StrictlyUnstable;
  v.certified_hi = certified;
  v.witness_interval = std::make_pair(lo, hi);
  Rational w = (lo + hi) / Rational(2);
  if (N.eval(w).sign() <= 0) throw internal_error("margin witness failed its sign check");
  v.witness = w;
  v.reason = "margin positive on (" + lo.str() + ", " + hi.str() + "); witness c = " + w.str();
  return v;
}

}  // namespace

Verdict stability_verdict(const SlopeProfile& p) {
  PiecewisePolynomial N = margin_polynomial(p);
  const SeshadriBound& eps = p.eps();

  if (!eps.known()) {
    // No certified range. Still decidable when the margin is positive on a whole
    // interval (0, d): the true bound is positive, so admissible violating
    // parameters exist below any positive bound.
    Rational probe = min(positivity_radius(p.a0()), p.x_max());
    Verdict v;
    v.certified_hi = Rational(0);
    if (probe.sign() > 0) {
      MarginLayout lay = analyze_margin(N, probe);
      if (!lay.positive.empty() && lay.positive.front().first.is_zero()) {
        v.kind = VerdictKind::StrictlyUnstable;
        v.witness_interval = lay.positive.front();
        v.witness = lay.positive.front().second / Rational(2);
        v.reason = "margin positive on (0, " + lay.positive.front().second.str() +
                   "): violating parameters exist below every positive bound";
        return v;
      }
    }
    v.kind = VerdictKind::Inconclusive;
    v.reason = "no certified parameter range: Seshadri-type bound unknown";
    return v;
  }

  const Rational e = min(eps.value, p.x_max());
  const bool exact_bound = eps.kind == SeshadriBound::Kind::Exact;
  MarginLayout lay = analyze_margin(N, e);

  if (!lay.positive.empty())
    return unstable_at(lay.positive.front().first, lay.positive.front().second, e, N);
  if (lay.endpoint_positive) {
    Verdict v;
    v.kind = VerdictKind::StrictlyUnstable;
    v.certified_hi = e;
    v.witness = e;
    v.reason = "margin positive at the endpoint c = " + e.str();
    return v;
  }

  // No violation on (0, e]. Collect equality evidence.
  bool has_zero_region = !lay.zero_regions.empty();
  std::optional<Rational> first_rational_zero;
  bool has_uncertified_zero = false;
  for (const auto& z : lay.zeros) {
    if (z.exact) {
      if (!first_rational_zero) first_rational_zero = *z.exact;
    } else {
      has_uncertified_zero = true;
    }
  }
  if (has_zero_region) {
    const auto& r = lay.zero_regions.front();
    Rational at = (max(r.first, Rational(0)) + r.second) / Rational(2);
    if (!first_rational_zero || at < *first_rational_zero) first_rational_zero = at;
  }

  Verdict v;
  v.certified_hi = e;
  if (!exact_bound) {
    v.kind = VerdictKind::Inconclusive;
    if (first_rational_zero)
      v.reason = "margin vanishes at c = " + first_rational_zero->str() +
                 " (strict stability fails) but the bound is only a lower bound; range "
                 "above " + e.str() + " unexamined";
    else if (has_uncertified_zero)
      v.reason = "margin touches zero inside (0, " + e.str() +
                 ") and the bound is only a lower bound; range above unexamined";
    else
      v.reason = "margin negative on (0, " + e.str() +
                 "] but the bound is only a lower bound; range above unexamined";
    return v;
  }

  if (first_rational_zero) {
    v.kind = VerdictKind::SemistableOnly;
    v.equality_at = first_rational_zero;
    v.reason = "margin non-positive on (0, " + e.str() + "] with equality at c = " +
               first_rational_zero->str();
    return v;
  }
  if (has_uncertified_zero) {
    const auto& z = lay.zeros.front();
    v.kind = VerdictKind::Inconclusive;
    v.reason = "margin touches zero at an uncertified (irrational) parameter inside [" +
               z.lo.str() + ", " + z.hi.str() + "]";
    return v;
  }
  if (lay.endpoint_zero) {
    switch (p.saturates()) {
      case Saturation::Yes:
        v.kind = VerdictKind::SemistableOnly;
        v.equality_at = e;
        v.reason = "margin negative on (0, " + e.str() + ") with equality at the " +
                   "saturating endpoint c = " + e.str();
        return v;
      case Saturation::No:
        v.kind = VerdictKind::StableAgainst;
        v.reason = "margin negative on (0, " + e.str() + "); endpoint equality comes " +
                   "from a trivial (non-saturating) boundary configuration";
        return v;
      case Saturation::Unknown:
        v.kind = VerdictKind::Inconclusive;
        v.reason = "margin negative on (0, " + e.str() + ") with equality at c = " +
                   e.str() + "; endpoint saturation unknown";
        return v;
    }
  }
  v.kind = VerdictKind::StableAgainst;
  v.reason = "margin negative on (0, " + e.str() + "]";
  return v;
}

}  // namespace slope
