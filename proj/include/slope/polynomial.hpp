#pragma once

#include <string>
#include <utility>
#include <vector>

#include "slope/rational.hpp"

namespace slope {

/// Dense univariate polynomial over Rational, coefficients low degree first.
/// The zero polynomial is the empty coefficient vector; degree() is then -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
  static Polynomial constant(const Rational& a) { return Polynomial({a}); }
  static Polynomial x() { return Polynomial({Rational(0), Rational(1)}); }
  /// a*x + b
  static Polynomial linear(const Rational& a, const Rational& b) { return Polynomial({b, a}); }
  /// c * x^k
  static Polynomial monomial(const Rational& c, unsigned k);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const Rational& coeff(unsigned k) const;  // 0 beyond degree
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational leading() const { return is_zero() ? Rational(0) : c_.back(); }

  Rational eval(const Rational& x) const;

  Polynomial derivative() const;
  /// Antiderivative with zero constant term.
  Polynomial antiderivative() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator*(const Rational& s) const;
  Polynomial operator/(const Rational& s) const;
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// p(a*x + b), exact.
  Polynomial compose_affine(const Rational& a, const Rational& b) const;

  /// Euclidean division: returns (quotient, remainder), divisor nonzero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;

  /// Monic gcd (1 for coprime, 0 only if both zero).
  static Polynomial gcd(Polynomial a, Polynomial b);
  /// p / gcd(p, p'): same roots, all simple.
  Polynomial squarefree_part() const;

  /// Deterministic rendering, highest degree first, e.g. "-1/4*c^3 + 1/2*c^2".
  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Definite integral of p over [lo, hi]; rejects lo > hi.
Rational poly_definite_integral(const Polynomial& p, const Rational& lo, const Rational& hi);

/// Unique polynomial of degree < points.size() through the given (x, y) pairs
/// (distinct x required).
Polynomial interpolate(const std::vector<std::pair<Rational, Rational>>& points);

}  // namespace slope
