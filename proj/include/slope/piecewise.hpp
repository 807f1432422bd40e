#pragma once

#include <string>
#include <vector>

#include "slope/polynomial.hpp"

namespace slope {

/// Piecewise polynomial on [breaks[0], breaks.back()] with strictly increasing
/// rational breakpoints; piece i lives on [breaks[i], breaks[i+1]]. Adjacent pieces
/// need not agree at interior breakpoints; continuity_flags() reports where they do.
/// eval() at an interior breakpoint uses the right piece (last break: left piece).
class PiecewisePolynomial {
 public:
  PiecewisePolynomial(std::vector<Rational> breaks, std::vector<Polynomial> pieces);
  static PiecewisePolynomial single(Polynomial p, const Rational& lo, const Rational& hi);

  size_t piece_count() const { return pieces_.size(); }
  const std::vector<Rational>& breaks() const { return breaks_; }
  const std::vector<Polynomial>& pieces() const { return pieces_; }
  const Polynomial& piece(size_t i) const { return pieces_[i]; }
  const Rational& span_lo() const { return breaks_.front(); }
  const Rational& span_hi() const { return breaks_.back(); }
  bool is_single_piece() const { return pieces_.size() == 1; }

  /// Index of the piece whose closed interval contains x (right-continuous choice).
  size_t piece_index(const Rational& x) const;

  Rational eval(const Rational& x) const;

  /// True at interior breakpoint i (between piece i and i+1) when values agree.
  std::vector<bool> continuity_flags() const;
  bool is_continuous() const;

  /// Piecewise derivative (pieces differentiated; jumps at breakpoints allowed).
  PiecewisePolynomial derivative() const;

  /// Continuous antiderivative A with A(span_lo) = 0.
  PiecewisePolynomial antiderivative() const;

  /// Exact integral over [lo, hi] within the span; rejects lo > hi or out-of-span.
  Rational integral(const Rational& lo, const Rational& hi) const;

  PiecewisePolynomial operator*(const Rational& s) const;
  PiecewisePolynomial operator+(const PiecewisePolynomial& o) const;  // same breaks
  PiecewisePolynomial operator-(const PiecewisePolynomial& o) const;  // same breaks

  /// Restriction to [lo, hi] (sub-span; pieces clipped).
  PiecewisePolynomial restrict(const Rational& lo, const Rational& hi) const;

  /// New function g(x) = f(x + d) on [span_lo - d, span_hi - d]; re-polarization
  /// composes this with restrict() to land back on [0, span_hi - d].
  PiecewisePolynomial shift_arg(const Rational& d) const;

  /// g(x) = f(x / r) on the r-scaled span (r > 0); used by twisting.
  PiecewisePolynomial scale_arg(const Rational& r) const;

  friend bool operator==(const PiecewisePolynomial& a, const PiecewisePolynomial& b) {
    return a.breaks_ == b.breaks_ && a.pieces_ == b.pieces_;
  }

  std::string str(const std::string& var = "x") const;

 private:
  std::vector<Rational> breaks_;
  std::vector<Polynomial> pieces_;
};

/// Integral of f over [lo, hi]; thin named wrapper mirroring poly_definite_integral.
Rational piecewise_integral(const PiecewisePolynomial& f, const Rational& lo,
                            const Rational& hi);

}  // namespace slope
