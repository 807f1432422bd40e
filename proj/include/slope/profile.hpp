#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slope/piecewise.hpp"

namespace slope {

/// Seshadri-type bound attached to a profile: exactly known, certified from below,
/// or unknown.
struct SeshadriBound {
  enum class Kind { Exact, LowerBound, Unknown };
  Kind kind = Kind::Unknown;
  Rational value;  // meaningful for Exact and LowerBound

  static SeshadriBound exact(const Rational& v) { return {Kind::Exact, v}; }
  static SeshadriBound lower_bound(const Rational& v) { return {Kind::LowerBound, v}; }
  static SeshadriBound unknown() { return {Kind::Unknown, Rational(0)}; }

  bool known() const { return kind != Kind::Unknown; }
  std::string str() const;
};

enum class Saturation { Yes, No, Unknown };

/// Leading Hilbert data of a polarized pair: a0(x), a1(x) on [0, x_max], carrying the
/// Seshadri bound and the endpoint saturation flag. dim is the ambient dimension n;
/// per piece deg a0 <= n and deg a1 <= n-1.
class SlopeProfile {
 public:
  SlopeProfile(int dim, PiecewisePolynomial a0, PiecewisePolynomial a1, SeshadriBound eps,
               Saturation saturates);

  /// Convenience for single-piece (polynomial) profiles on [0, hi].
  static SlopeProfile polynomial(int dim, Polynomial a0, Polynomial a1, const Rational& hi,
                                 SeshadriBound eps, Saturation saturates);

  int dim() const { return dim_; }
  const PiecewisePolynomial& a0() const { return a0_; }
  const PiecewisePolynomial& a1() const { return a1_; }
  const SeshadriBound& eps() const { return eps_; }
  Saturation saturates() const { return sat_; }
  bool is_polynomial() const { return a0_.is_single_piece() && a1_.is_single_piece(); }
  const Rational& x_max() const { return a0_.span_hi(); }

  Rational a0_at0() const { return a0_.eval(Rational(0)); }
  Rational a1_at0() const { return a1_.eval(Rational(0)); }

  /// Largest c with certified validity: eps value when known, x_max otherwise.
  Rational certified_hi() const;

  SlopeProfile with_eps(SeshadriBound e) const;
  SlopeProfile with_saturation(Saturation s) const;

 private:
  int dim_;
  PiecewisePolynomial a0_, a1_;
  SeshadriBound eps_;
  Saturation sat_;
};

/// Structural and sign checks: spans start at 0 and agree, degree bounds, a0(0) > 0,
/// a0 continuous, and when the Seshadri bound is known a0 > 0 and a0' < 0 on the open
/// certified interval. Throws invalid_input on violation.
void validate_profile(const SlopeProfile& p);

/// Z |-> its m-th thickening: a_i(x) -> a_i(m x), eps -> eps / m.
SlopeProfile thicken(const SlopeProfile& p, long m);

/// L |-> L^r: a0 -> r^n a0(x/r), a1 -> r^{n-1} a1(x/r), eps -> r eps.
SlopeProfile twist(const SlopeProfile& p, long r);

}  // namespace slope
