#include "slope/formulas.hpp"

#include <utility>

#include "slope/errors.hpp"

namespace slope {

namespace {

void require_positive_param(const Rational& c) {
  if (c.sign() <= 0) throw invalid_input("filtration parameter c must be positive");
}

// c <= eps is only a hard requirement when the bound is exact; a lower bound
// leaves larger c arithmetically meaningful but uncertified (the report layer
// flags that), and an unknown bound cannot gate anything.
void require_within_exact_bound(const SeshadriBound& eps, const Rational& c) {
  if (eps.kind == SeshadriBound::Kind::Exact && c > eps.value)
    throw invalid_input("parameter c exceeds the exact Seshadri bound");
}

}  // namespace

void validate(const SurfaceCurveData& d) {
  if (d.L2.sign() <= 0) throw invalid_input("surface data requires L^2 > 0");
  if (d.LZ.sign() <= 0) throw invalid_input("surface data requires L.Z > 0");
  if (d.genus && *d.genus < 0) throw invalid_input("genus must be non-negative");
  if (d.epsilon.known() && d.epsilon.value.sign() <= 0)
    throw invalid_input("Seshadri bound must be positive");
}

std::vector<std::string> surface_curve_warnings(const SurfaceCurveData& d) {
  std::vector<std::string> out;
  if (d.genus) {
    Rational adj = d.KZ + d.Z2;  // = 2g - 2 for a reduced irreducible curve
    if (adj != Rational(2 * *d.genus - 2))
      out.push_back("genus " + std::to_string(*d.genus) +
                    " does not match Z.(K+Z) = " + adj.str() +
                    " (adjunction expects 2g-2)");
  }
  return out;
}

Rational surface_curve_muX(const SurfaceCurveData& d) {
  validate(d);
  return -d.KL / d.L2;
}

SurfaceCurveSlopes surface_curve(const SurfaceCurveData& d, const Rational& c) {
  validate(d);
  require_positive_param(c);
  require_within_exact_bound(d.epsilon, c);
  Rational den = Rational(2) * c * (Rational(3) * d.LZ - c * d.Z2);
  if (den.sign() <= 0)
    throw invalid_input("quotient-slope denominator 2c(3LZ - cZ^2) must be positive");
  Rational num = Rational(3) * (Rational(2) * d.LZ - c * (d.KZ + d.Z2));
  return {-d.KL / d.L2, num / den};
}

Rational rational_curve_quotient_slope(const SurfaceCurveData& d, const Rational& c) {
  validate(d);
  require_positive_param(c);
  if (d.KZ + d.Z2 != Rational(-2))
    throw invalid_input("rational-curve form needs Z.(K+Z) = -2 (genus 0)");
  Rational den = c * (Rational(3) * d.LZ - c * d.Z2);
  if (den.sign() <= 0)
    throw invalid_input("quotient-slope denominator c(3LZ - cZ^2) must be positive");
  return Rational(3) * (d.LZ + c) / den;
}

SlopeProfile surface_curve_profile(const SurfaceCurveData& d) {
  validate(d);
  Rational half(1, 2);
  // a0(x) = (L - xZ)^2 / 2, a1(x) = -(K.(L - xZ)) / 2.
  Polynomial a0({d.L2 * half, -d.LZ, d.Z2 * half});
  Polynomial a1({-d.KL * half, d.KZ * half});
  Rational nef_bound = d.L2 / d.LZ;
  Rational hi = d.epsilon.known() ? max(d.epsilon.value, nef_bound) : nef_bound;
  return SlopeProfile::polynomial(2, std::move(a0), std::move(a1), hi, d.epsilon,
                                  Saturation::Unknown);
}

void validate(const DivisorData& d) {
  if (d.n < 2) throw invalid_input("divisor data requires ambient dimension n >= 2");
  if (d.LnjZj.size() != static_cast<std::size_t>(d.n) + 1)
    throw invalid_input("LnjZj must list L^{n-j}.Z^j for j = 0..n");
  if (d.LZK.size() != static_cast<std::size_t>(d.n))
    throw invalid_input("LZK must list L^{n-1-j}.Z^j.(K+Z) for j = 0..n-1");
  if (d.LnjZj[0].sign() <= 0) throw invalid_input("divisor data requires L^n > 0");
  if (d.epsilon.known() && d.epsilon.value.sign() <= 0)
    throw invalid_input("Seshadri bound must be positive");
}

Rational divisor_a0_integral(const DivisorData& d, const Rational& c) {
  validate(d);
  require_positive_param(c);
  // integral_0^c (L - xZ)^n / n! dx = -(c/n!) * sum_{j=1}^n C(n,j) ((-c)^j/(j+1)) LnjZj[j]
  // plus the j = 0 term c L^n / n!; keep the whole binomial sum for clarity.
  Rational sum(0);
  Rational minus_c = -c;
  for (int j = 0; j <= d.n; ++j) {
    Rational term = binomial(static_cast<unsigned>(d.n), static_cast<unsigned>(j)) *
                    minus_c.pow(static_cast<unsigned>(j)) / Rational(j + 1) * d.LnjZj[j];
    sum += term;
  }
  return c * sum / factorial(static_cast<unsigned>(d.n));
}

Rational divisor_ideal_integral(const DivisorData& d, const Rational& c) {
  validate(d);
  require_positive_param(c);
  // a1 + a0'/2 = -(K+Z).(L-xZ)^{n-1} / (2(n-1)!), so the integral picks up the
  // LZK numbers with an overall minus sign.
  Rational sum(0);
  Rational minus_c = -c;
  for (int j = 0; j <= d.n - 1; ++j) {
    Rational term = binomial(static_cast<unsigned>(d.n - 1), static_cast<unsigned>(j)) *
                    minus_c.pow(static_cast<unsigned>(j)) / Rational(j + 1) * d.LZK[j];
    sum += term;
  }
  return -c * sum / (Rational(2) * factorial(static_cast<unsigned>(d.n - 1)));
}

WeightPair divisor_weights(const DivisorData& d, const Rational& c) {
  validate(d);
  require_positive_param(c);
  Rational a00 = d.LnjZj[0] / factorial(static_cast<unsigned>(d.n));
  Rational KL = d.LZK[0] - d.LnjZj[1];  // K.L^{n-1}
  Rational a10 = -KL / (Rational(2) * factorial(static_cast<unsigned>(d.n - 1)));
  return {divisor_a0_integral(d, c) - c * a00, divisor_ideal_integral(d, c) - c * a10};
}

Rational divisor_quotient_slope(const DivisorData& d, const Rational& c) {
  require_within_exact_bound(d.epsilon, c);
  WeightPair w = divisor_weights(d, c);
  if (w.b0.sign() >= 0)
    throw invalid_input("degenerate divisor data: quotient weight b0 must be negative");
  return w.b1 / w.b0;
}

Rational divisor_muX(const DivisorData& d) {
  validate(d);
  // mu(X) = -K.L^{n-1} / L^n (up to the common n!/(2(n-1)!) normalization that
  // cancels in a1(0)/a0(0)): a1(0) = -(LZK[0] - LnjZj[1]) / (2(n-1)!).
  Rational KL = d.LZK[0] - d.LnjZj[1];
  return -Rational(d.n) * KL / (Rational(2) * d.LnjZj[0]);
}

SlopeProfile divisor_profile(const DivisorData& d) {
  validate(d);
  if (d.LnjZj[1].sign() <= 0)
    throw invalid_input("divisor profile needs L^{n-1}.Z > 0 to bound its span");
  std::vector<Rational> c0(static_cast<std::size_t>(d.n) + 1);
  for (int j = 0; j <= d.n; ++j)
    c0[static_cast<std::size_t>(j)] =
        binomial(static_cast<unsigned>(d.n), static_cast<unsigned>(j)) *
        (j % 2 ? Rational(-1) : Rational(1)) * d.LnjZj[static_cast<std::size_t>(j)] /
        factorial(static_cast<unsigned>(d.n));
  std::vector<Rational> c1(static_cast<std::size_t>(d.n));
  for (int j = 0; j <= d.n - 1; ++j) {
    Rational KLZ = d.LZK[static_cast<std::size_t>(j)] - d.LnjZj[static_cast<std::size_t>(j) + 1];
    c1[static_cast<std::size_t>(j)] =
        -binomial(static_cast<unsigned>(d.n - 1), static_cast<unsigned>(j)) *
        (j % 2 ? Rational(-1) : Rational(1)) * KLZ /
        (Rational(2) * factorial(static_cast<unsigned>(d.n - 1)));
  }
  Rational bound = d.LnjZj[0] / (Rational(d.n) * d.LnjZj[1]);
  Rational hi = d.epsilon.known() ? max(d.epsilon.value, bound) : bound;
  return SlopeProfile::polynomial(d.n, Polynomial(std::move(c0)), Polynomial(std::move(c1)), hi,
                                  d.epsilon, Saturation::Unknown);
}

bool nef_limit_test(const DivisorData& d, const Rational& c) {
  // With A = c a1(0) - int (a1 + a0'/2) and B = c a0(0) - int a0 (both sides of
  // the displayed inequality are built from the tilde-normalized integrals),
  // F^n A < -(n/2) (K.F^{n-1}) B amounts to margin N(c) > 0, i.e. mu_c(O_Z) < mu(X).
  WeightPair w = divisor_weights(d, c);
  Rational A = -w.b1, B = -w.b0;
  Rational KF = d.LZK[0] - d.LnjZj[1];
  return d.LnjZj[0] * A < -Rational(d.n) / Rational(2) * KF * B;
}

void validate(const CurveInNfoldData& d) {
  if (d.n < 2) throw invalid_input("curve data requires ambient dimension n >= 2");
  if (d.genus < 0) throw invalid_input("genus must be non-negative");
  if (d.LZ.sign() <= 0) throw invalid_input("curve data requires deg L|_Z > 0");
  if (d.epsilon.known() && d.epsilon.value.sign() <= 0)
    throw invalid_input("Seshadri bound must be positive");
}

Rational curve_in_nfold_quotient_slope(const CurveInNfoldData& d, const Rational& c) {
  validate(d);
  require_positive_param(c);
  require_within_exact_bound(d.epsilon, c);
  Rational n(d.n);
  Rational den = Rational(2) * n * c * ((n + 1) * d.LZ - c * d.c1nu);
  if (den.sign() <= 0)
    throw invalid_input("quotient-slope denominator 2nc((n+1)LZ - c c1(N)) must be positive");
  Rational num = n * n * (n * n - 1) * d.LZ -
                 c * n * (n + 1) * ((n - 2) * d.c1nu + Rational(2) * (Rational(d.genus) - 1));
  return num / den;
}

std::pair<Polynomial, Polynomial> curve_in_nfold_alphas(const CurveInNfoldData& d) {
  validate(d);
  unsigned n = static_cast<unsigned>(d.n);
  Rational f = Rational(1) / factorial(n - 2);
  // alpha1 = x^{n-2} (LZ - x c1nu/(n-1)) / (n-2)!
  Polynomial lin({d.LZ * f, -d.c1nu * f / Rational(d.n - 1)});
  Polynomial alpha1 = Polynomial::monomial(Rational(1), n - 2) * lin;
  // alpha2 = x^{n-3} [ (n-2)(n-1)/2 (LZ - x c1nu/(n-1)) + x(1-g) ] / (n-2)!
  //        = (n-2)(n-1)/2 x^{n-3} lin(x) + (1-g)/(n-2)! x^{n-2}
  Polynomial alpha2 = Polynomial::monomial(Rational(1 - d.genus) * f, n - 2);
  if (d.n >= 3) {
    Rational half_nn = Rational(d.n - 2) * Rational(d.n - 1) / Rational(2);
    alpha2 = alpha2 + Polynomial::monomial(half_nn, n - 3) * lin;
  }
  return {std::move(alpha1), std::move(alpha2)};
}

Rational curve_in_nfold_quotient_slope_via_alphas(const CurveInNfoldData& d, const Rational& c) {
  require_positive_param(c);
  auto [a1, a2] = curve_in_nfold_alphas(d);
  // mu_c(O_Z) = [int_0^c ((c-x) alpha2 + alpha1(0)/2) dx] / [int_0^c (c-x) alpha1 dx]
  Polynomial cmx = Polynomial::linear(Rational(-1), c);
  Rational den = poly_definite_integral(cmx * a1, Rational(0), c);
  if (den.sign() <= 0)
    throw invalid_input("normal-cone weight b0 must be negative for a curve filtration");
  Rational num = poly_definite_integral(cmx * a2, Rational(0), c) + c * a1.eval(Rational(0)) / 2;
  return num / den;
}

SlopeProfile curve_in_nfold_profile(const CurveInNfoldData& d) {
  validate(d);
  if (!d.Ln || !d.KLn1)
    throw invalid_input(
        "a full profile for a curve filtration needs the ambient totals L^n and K.L^{n-1}");
  if (d.Ln->sign() <= 0) throw invalid_input("ambient total L^n must be positive");
  auto [alpha1, alpha2] = curve_in_nfold_alphas(d);
  unsigned n = static_cast<unsigned>(d.n);
  Rational a00 = *d.Ln / factorial(n);
  Rational a10 = -*d.KLn1 / (Rational(2) * factorial(n - 1));
  // a0(x) = a0(0) - int_0^x alpha1; a1(x) = a1(0) - int_0^x alpha2 + (alpha1(x)-alpha1(0))/2.
  Polynomial a0 = Polynomial::constant(a00) - alpha1.antiderivative();
  Polynomial a1 = Polynomial::constant(a10) - alpha2.antiderivative() +
                  (alpha1 - Polynomial::constant(alpha1.eval(Rational(0)))) * Rational(1, 2);
  // Span: stay within the region where a0 is provably positive by a crude
  // bound x <= a0(0)/max(alpha1 coeff magnitudes sum at 1) unless eps says more.
  Rational slope_at_1(0);
  for (const Rational& cf : alpha1.coeffs()) slope_at_1 += cf.abs();
  Rational bound = slope_at_1.sign() > 0 ? min(Rational(1), a00 / slope_at_1) : Rational(1);
  Rational hi = d.epsilon.known() ? max(d.epsilon.value, bound) : bound;
  return SlopeProfile::polynomial(d.n, std::move(a0), std::move(a1), hi, d.epsilon,
                                  Saturation::Unknown);
}

SlopeProfile smooth_curve_profile(long genus, const Rational& degL, const Rational& d) {
  if (genus < 0) throw invalid_input("genus must be non-negative");
  if (degL.sign() <= 0) throw invalid_input("deg L must be positive");
  if (d.sign() <= 0) throw invalid_input("the divisor degree d must be positive");
  // On a curve the slice bound is exact at deg L / d, and the boundary
  // configuration there collapses the whole polarization, so it is genuine.
  Rational eps = degL / d;
  return SlopeProfile::polynomial(1, Polynomial::linear(-d, degL),
                                  Polynomial::constant(Rational(1 - genus)), eps,
                                  SeshadriBound::exact(eps), Saturation::Yes);
}

Verdict smooth_curve_verdict(long genus, const Rational& degL, const Rational& d) {
  return stability_verdict(smooth_curve_profile(genus, degL, d));
}

SlopeProfile blowup_repolarize(const SlopeProfile& p, const Rational& d) {
  if (!p.eps().known())
    throw invalid_input("re-polarizing needs a known Seshadri-type bound to stay certified");
  if (d.sign() <= 0 || d >= p.eps().value)
    throw invalid_input("re-polarization shift must satisfy 0 < d < eps");
  Rational hi = p.x_max() - d;
  PiecewisePolynomial a0 = p.a0().shift_arg(d).restrict(Rational(0), hi);
  PiecewisePolynomial a1 = p.a1().shift_arg(d).restrict(Rational(0), hi);
  SeshadriBound e = p.eps();
  e.value = e.value - d;
  return SlopeProfile(p.dim(), std::move(a0), std::move(a1), e, p.saturates());
}

}  // namespace slope
