#include "slope/polynomial.hpp"

#include <algorithm>

#include "slope/errors.hpp"

namespace slope {

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::monomial(const Rational& c, unsigned k) {
  if (c.is_zero()) return {};
  std::vector<Rational> v(k + 1, Rational(0));
  v[k] = c;
  return Polynomial(std::move(v));
}

const Rational& Polynomial::coeff(unsigned k) const {
  static const Rational zero(0);
  return k < c_.size() ? c_[k] : zero;
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Rational(static_cast<long>(k));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::antiderivative() const {
  if (is_zero()) return {};
  std::vector<Rational> a(c_.size() + 1, Rational(0));
  for (size_t k = 0; k < c_.size(); ++k)
    a[k + 1] = c_[k] / Rational(static_cast<long>(k + 1));
  return Polynomial(std::move(a));
}

Polynomial Polynomial::operator-() const {
  auto v = c_;
  for (auto& x : v) x = -x;
  return Polynomial(std::move(v));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator*(const Rational& s) const {
  if (s.is_zero()) return {};
  auto v = c_;
  for (auto& x : v) x *= s;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator/(const Rational& s) const {
  if (s.is_zero()) throw invalid_input("polynomial division by zero scalar");
  auto v = c_;
  for (auto& x : v) x /= s;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::compose_affine(const Rational& a, const Rational& b) const {
  Polynomial acc;  // Horner in (a*x + b)
  Polynomial lin = Polynomial::linear(a, b);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + Polynomial::constant(*it);
  return acc;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
  if (d.is_zero()) throw invalid_input("polynomial division by zero polynomial");
  Polynomial r = *this;
  std::vector<Rational> q(std::max<int>(degree() - d.degree() + 1, 0), Rational(0));
  while (!r.is_zero() && r.degree() >= d.degree()) {
    int k = r.degree() - d.degree();
    Rational f = r.leading() / d.leading();
    q[k] = f;
    r -= Polynomial::monomial(f, k) * d;
  }
  return {Polynomial(std::move(q)), r};
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    auto [q, r] = a.divmod(b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a / a.leading();  // monic
}

Polynomial Polynomial::squarefree_part() const {
  if (is_zero() || degree() == 0) return *this;
  Polynomial g = gcd(*this, derivative());
  return divmod(g).first;
}

std::string Polynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& a = c_[k];
    if (a.is_zero()) continue;
    Rational mag = a.abs();
    if (out.empty()) {
      if (a.sign() < 0) out += "-";
    } else {
      out += a.sign() < 0 ? " - " : " + ";
    }
    bool unit = (mag == Rational(1)) && k > 0;
    if (!unit) out += mag.str();
    if (k > 0) {
      if (!unit) out += "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

Rational poly_definite_integral(const Polynomial& p, const Rational& lo, const Rational& hi) {
  if (lo > hi)
    throw invalid_input("definite integral over reversed interval [" + lo.str() + ", " +
                        hi.str() + "]");
  Polynomial A = p.antiderivative();
  return A.eval(hi) - A.eval(lo);
}

Polynomial interpolate(const std::vector<std::pair<Rational, Rational>>& pts) {
  if (pts.empty()) return {};
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      if (pts[i].first == pts[j].first)
        throw invalid_input("interpolation through duplicate x = " + pts[i].first.str());
  // Newton form, exact.
  std::vector<Rational> coef(pts.size());
  std::vector<Rational> divided(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) divided[i] = pts[i].second;
  coef[0] = divided[0];
  for (size_t level = 1; level < pts.size(); ++level) {
    for (size_t i = 0; i + level < pts.size(); ++i)
      divided[i] = (divided[i + 1] - divided[i]) / (pts[i + level].first - pts[i].first);
    coef[level] = divided[0];
  }
  Polynomial acc;
  for (size_t i = coef.size(); i-- > 0;) {
    acc = acc * Polynomial::linear(Rational(1), -pts[i].first) + Polynomial::constant(coef[i]);
  }
  return acc;
}

}  // namespace slope
