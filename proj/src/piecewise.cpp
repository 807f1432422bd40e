#include "slope/piecewise.hpp"

#include "slope/errors.hpp"

namespace slope {

PiecewisePolynomial::PiecewisePolynomial(std::vector<Rational> breaks,
                                         std::vector<Polynomial> pieces)
    : breaks_(std::move(breaks)), pieces_(std::move(pieces)) {
  if (pieces_.empty() || breaks_.size() != pieces_.size() + 1)
    throw invalid_input("piecewise polynomial needs n pieces and n+1 breakpoints");
  for (size_t i = 0; i + 1 < breaks_.size(); ++i)
    if (!(breaks_[i] < breaks_[i + 1]))
      throw invalid_input("piecewise breakpoints must be strictly increasing");
}

PiecewisePolynomial PiecewisePolynomial::single(Polynomial p, const Rational& lo,
                                                const Rational& hi) {
  return PiecewisePolynomial({lo, hi}, {std::move(p)});
}

size_t PiecewisePolynomial::piece_index(const Rational& x) const {
  if (x < span_lo() || x > span_hi())
    throw invalid_input("piecewise evaluation at " + x.str() + " outside span [" +
                        span_lo().str() + ", " + span_hi().str() + "]");
  for (size_t i = 0; i + 1 < pieces_.size(); ++i)
    if (x < breaks_[i + 1]) return i;
  return pieces_.size() - 1;
}

Rational PiecewisePolynomial::eval(const Rational& x) const {
  return pieces_[piece_index(x)].eval(x);
}

std::vector<bool> PiecewisePolynomial::continuity_flags() const {
  std::vector<bool> f;
  for (size_t i = 0; i + 1 < pieces_.size(); ++i)
    f.push_back(pieces_[i].eval(breaks_[i + 1]) == pieces_[i + 1].eval(breaks_[i + 1]));
  return f;
}

bool PiecewisePolynomial::is_continuous() const {
  for (bool b : continuity_flags())
    if (!b) return false;
  return true;
}

PiecewisePolynomial PiecewisePolynomial::derivative() const {
  std::vector<Polynomial> d;
  d.reserve(pieces_.size());
  for (const auto& p : pieces_) d.push_back(p.derivative());
  return PiecewisePolynomial(breaks_, std::move(d));
}

PiecewisePolynomial PiecewisePolynomial::antiderivative() const {
  std::vector<Polynomial> as;
  Rational acc(0);
  for (size_t i = 0; i < pieces_.size(); ++i) {
    Polynomial A = pieces_[i].antiderivative();
    // Shift so the running antiderivative is continuous and zero at span_lo.
    as.push_back(A + Polynomial::constant(acc - A.eval(breaks_[i])));
    acc = as.back().eval(breaks_[i + 1]);
  }
  return PiecewisePolynomial(breaks_, std::move(as));
}

Rational PiecewisePolynomial::integral(const Rational& lo, const Rational& hi) const {
  if (lo > hi)
    throw invalid_input("piecewise integral over reversed interval [" + lo.str() + ", " +
                        hi.str() + "]");
  if (lo < span_lo() || hi > span_hi())
    throw invalid_input("piecewise integral outside span [" + span_lo().str() + ", " +
                        span_hi().str() + "]");
  Rational acc(0);
  for (size_t i = 0; i < pieces_.size(); ++i) {
    Rational a = max(lo, breaks_[i]), b = min(hi, breaks_[i + 1]);
    if (a < b) acc += poly_definite_integral(pieces_[i], a, b);
  }
  return acc;
}

PiecewisePolynomial PiecewisePolynomial::operator*(const Rational& s) const {
  std::vector<Polynomial> p;
  p.reserve(pieces_.size());
  for (const auto& q : pieces_) p.push_back(q * s);
  return PiecewisePolynomial(breaks_, std::move(p));
}

PiecewisePolynomial PiecewisePolynomial::operator+(const PiecewisePolynomial& o) const {
  if (breaks_ != o.breaks_)
    throw invalid_input("piecewise addition requires identical breakpoints");
  std::vector<Polynomial> p;
  for (size_t i = 0; i < pieces_.size(); ++i) p.push_back(pieces_[i] + o.pieces_[i]);
  return PiecewisePolynomial(breaks_, std::move(p));
}

PiecewisePolynomial PiecewisePolynomial::operator-(const PiecewisePolynomial& o) const {
  return *this + o * Rational(-1);
}

PiecewisePolynomial PiecewisePolynomial::restrict(const Rational& lo, const Rational& hi) const {
  if (!(lo < hi) || lo < span_lo() || hi > span_hi())
    throw invalid_input("piecewise restriction to invalid sub-span");
  std::vector<Rational> nb;
  std::vector<Polynomial> np;
  for (size_t i = 0; i < pieces_.size(); ++i) {
    Rational a = max(lo, breaks_[i]), b = min(hi, breaks_[i + 1]);
    if (a < b) {
      if (nb.empty()) nb.push_back(a);
      nb.push_back(b);
      np.push_back(pieces_[i]);
    }
  }
  return PiecewisePolynomial(std::move(nb), std::move(np));
}

PiecewisePolynomial PiecewisePolynomial::shift_arg(const Rational& d) const {
  std::vector<Rational> nb;
  std::vector<Polynomial> np;
  for (size_t i = 0; i < pieces_.size(); ++i) {
    nb.push_back(breaks_[i] - d);
    np.push_back(pieces_[i].compose_affine(Rational(1), d));
  }
  nb.push_back(breaks_.back() - d);
  return PiecewisePolynomial(std::move(nb), std::move(np));
}

PiecewisePolynomial PiecewisePolynomial::scale_arg(const Rational& r) const {
  if (r.sign() <= 0) throw invalid_input("argument scaling requires a positive factor");
  std::vector<Rational> nb;
  std::vector<Polynomial> np;
  Rational inv = Rational(1) / r;
  for (size_t i = 0; i < pieces_.size(); ++i) {
    nb.push_back(breaks_[i] * r);
    np.push_back(pieces_[i].compose_affine(inv, Rational(0)));
  }
  nb.push_back(breaks_.back() * r);
  return PiecewisePolynomial(std::move(nb), std::move(np));
}

std::string PiecewisePolynomial::str(const std::string& var) const {
  std::string out;
  for (size_t i = 0; i < pieces_.size(); ++i) {
    if (i) out += "; ";
    out += "[" + breaks_[i].str() + ", " + breaks_[i + 1].str() + "]: " + pieces_[i].str(var);
  }
  return out;
}

Rational piecewise_integral(const PiecewisePolynomial& f, const Rational& lo,
                            const Rational& hi) {
  return f.integral(lo, hi);
}

}  // namespace slope
