#include "slope/profile.hpp"

#include "slope/errors.hpp"
#include "slope/roots.hpp"

namespace slope {

std::string SeshadriBound::str() const {
  switch (kind) {
    case Kind::Exact:
      return value.str() + " (exact)";
    case Kind::LowerBound:
      return value.str() + " (lower bound)";
    case Kind::Unknown:
      return "unknown";
  }
  return "unknown";
}

SlopeProfile::SlopeProfile(int dim, PiecewisePolynomial a0, PiecewisePolynomial a1,
                           SeshadriBound eps, Saturation saturates)
    : dim_(dim), a0_(std::move(a0)), a1_(std::move(a1)), eps_(eps), sat_(saturates) {
  validate_profile(*this);
}

SlopeProfile SlopeProfile::polynomial(int dim, Polynomial a0, Polynomial a1, const Rational& hi,
                                      SeshadriBound eps, Saturation saturates) {
  return SlopeProfile(dim, PiecewisePolynomial::single(std::move(a0), Rational(0), hi),
                      PiecewisePolynomial::single(std::move(a1), Rational(0), hi), eps, saturates);
}

Rational SlopeProfile::certified_hi() const {
  if (eps_.known()) return min(eps_.value, x_max());
  return x_max();
}

SlopeProfile SlopeProfile::with_eps(SeshadriBound e) const {
  return SlopeProfile(dim_, a0_, a1_, e, sat_);
}

SlopeProfile SlopeProfile::with_saturation(Saturation s) const {
  return SlopeProfile(dim_, a0_, a1_, eps_, s);
}

void validate_profile(const SlopeProfile& p) {
  if (p.dim() < 1) throw invalid_input("profile dimension must be >= 1");
  const auto& a0 = p.a0();
  const auto& a1 = p.a1();
  if (!a0.span_lo().is_zero() || !a1.span_lo().is_zero())
    throw invalid_input("profile span must start at 0");
  if (a0.span_hi() != a1.span_hi()) throw invalid_input("a0 and a1 spans disagree");
  if (a0.breaks() != a1.breaks())
    throw invalid_input("a0 and a1 must share one breakpoint grid");
  if (a0.span_hi().sign() <= 0) throw invalid_input("profile span must have positive length");
  for (const auto& piece : a0.pieces())
    if (piece.degree() > p.dim())
      throw invalid_input("a0 piece degree exceeds ambient dimension");
  for (const auto& piece : a1.pieces())
    if (piece.degree() > p.dim() - 1)
      throw invalid_input("a1 piece degree exceeds ambient dimension - 1");
  if (a0.eval(Rational(0)).sign() <= 0) throw invalid_input("a0(0) must be positive");
  if (!a0.is_continuous()) throw invalid_input("a0 must be continuous");

  if (p.eps().known()) {
    const Rational& e = p.eps().value;
    if (e.sign() <= 0) throw invalid_input("Seshadri bound must be positive");
    if (e > a0.span_hi())
      throw invalid_input("Seshadri bound exceeds the profile's span of definition");
    // On (0, eps): a0 > 0 (the slice still has volume) and a0' <= 0 with a0' not
    // identically 0 being the generic case; strict monotonicity can fail only where a
    // piece is constant, which the degree bound permits, so we check a0 > 0 and a0
    // non-increasing piece by piece.
    PiecewisePolynomial d = a0.derivative();
    auto check = [&](const PiecewisePolynomial& f, int want, const char* what) {
      for (std::size_t i = 0; i < f.pieces().size(); ++i) {
        Rational lo = max(f.breaks()[i], Rational(0));
        Rational hi = min(f.breaks()[i + 1], e);
        if (lo >= hi) continue;
        SignPattern s = sign_pattern(f.pieces()[i], lo, hi);
        if (want > 0) {
          // Strict positivity: no interior zero at all (a volume that touches 0
          // inside the certified range cannot be accepted).
          if (s.identically_zero || !s.zeros.empty()) throw invalid_input(what);
          for (int g : s.gap_signs)
            if (g != 1) throw invalid_input(what);
        } else {
          // Non-increasing: a0' <= 0, where isolated zeros (inflections) are fine.
          if (s.identically_zero) continue;
          for (int g : s.gap_signs)
            if (g != -1) throw invalid_input(what);
        }
      }
    };
    check(a0, +1, "a0 must stay positive on the certified interval");
    check(d, -1, "a0 must be non-increasing on the certified interval");
  }
}

SlopeProfile thicken(const SlopeProfile& p, long m) {
  if (m < 1) throw invalid_input("thickening order must be >= 1");
  if (m == 1) return p;
  Rational rm(m);
  // a_i(m x) lives on [0, x_max / m]; breakpoints divide by m.
  auto scale_down = [&](const PiecewisePolynomial& f) {
    std::vector<Rational> breaks = f.breaks();
    for (auto& b : breaks) b = b / rm;
    std::vector<Polynomial> pieces;
    pieces.reserve(f.pieces().size());
    for (const auto& q : f.pieces()) pieces.push_back(q.compose_affine(rm, Rational(0)));
    return PiecewisePolynomial(std::move(breaks), std::move(pieces));
  };
  SeshadriBound e = p.eps();
  if (e.known()) e.value = e.value / rm;
  return SlopeProfile(p.dim(), scale_down(p.a0()), scale_down(p.a1()), e, p.saturates());
}

SlopeProfile twist(const SlopeProfile& p, long r) {
  if (r < 1) throw invalid_input("twisting factor must be >= 1");
  if (r == 1) return p;
  Rational rr(r);
  Rational rn = rr.pow(static_cast<unsigned>(p.dim()));
  Rational rn1 = rr.pow(static_cast<unsigned>(p.dim() - 1));
  PiecewisePolynomial a0 = p.a0().scale_arg(rr) * rn;
  PiecewisePolynomial a1 = p.a1().scale_arg(rr) * rn1;
  SeshadriBound e = p.eps();
  if (e.known()) e.value = e.value * rr;
  return SlopeProfile(p.dim(), std::move(a0), std::move(a1), e, p.saturates());
}

}  // namespace slope
