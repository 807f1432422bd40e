#include "slope/roots.hpp"

#include <algorithm>

#include "slope/errors.hpp"

namespace slope {

namespace {

// Sturm chain: s0 = q, s1 = q', s_{i+1} = -rem(s_{i-1}, s_i), stopping at 0.
std::vector<Polynomial> sturm_chain(const Polynomial& q) {
  std::vector<Polynomial> s;
  s.push_back(q);
  Polynomial d = q.derivative();
  if (!d.is_zero()) s.push_back(d);
  while (s.size() >= 2 && !s.back().is_zero()) {
    Polynomial r = s[s.size() - 2].divmod(s.back()).second;
    if (r.is_zero()) break;
    s.push_back(-r);
  }
  return s;
}

int variations(const std::vector<Polynomial>& chain, const Rational& x) {
  int count = 0, prev = 0;
  for (const auto& p : chain) {
    int s = p.eval(x).sign();
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

// Divides out (x - r)^multiplicity; caller guarantees q(r) == 0.
Polynomial deflate(Polynomial q, const Rational& r) {
  while (!q.is_zero() && q.eval(r).is_zero()) {
    q = q.divmod(Polynomial::linear(Rational(1), -r)).first;
  }
  return q;
}

// Roots of squarefree q strictly inside (lo, hi); requires q(lo), q(hi) nonzero.
void isolate_rec(const Polynomial& q, const std::vector<Polynomial>& chain, const Rational& lo,
                 const Rational& hi, std::vector<RootInterval>& out) {
  int n = variations(chain, lo) - variations(chain, hi);
  if (n <= 0) return;
  if (n == 1) {
    out.push_back({lo, hi, std::nullopt});
    return;
  }
  Rational mid = (lo + hi) / Rational(2);
  if (q.eval(mid).is_zero()) {
    out.push_back({mid, mid, mid});
    Polynomial q2 = deflate(q, mid);
    auto chain2 = sturm_chain(q2);
    isolate_rec(q2, chain2, lo, mid, out);
    isolate_rec(q2, chain2, mid, hi, out);
    return;
  }
  isolate_rec(q, chain, lo, mid, out);
  isolate_rec(q, chain, mid, hi, out);
}

// One bisection step on an isolating interval of squarefree q (no-op on exact roots).
RootInterval bisect_step(const Polynomial& q, RootInterval iv) {
  if (iv.exact) return iv;
  Rational mid = (iv.lo + iv.hi) / Rational(2);
  Rational vm = q.eval(mid);
  if (vm.is_zero()) return {mid, mid, mid};
  // Root lies in the half across which the sign changes relative to iv.lo.
  Rational vl = q.eval(iv.lo);
  int sl = vl.sign();
  if (sl == 0) {
    // lo sits on the original interval boundary where q may vanish; use hi side.
    int sh = q.eval(iv.hi).sign();
    if (sh != 0 && vm.sign() != sh) return {mid, iv.hi, std::nullopt};
    return {iv.lo, mid, std::nullopt};
  }
  if (vm.sign() != sl) return {iv.lo, mid, std::nullopt};
  return {mid, iv.hi, std::nullopt};
}

}  // namespace

int count_roots_open(const Polynomial& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw invalid_input("root count of the zero polynomial");
  if (lo >= hi) throw invalid_input("root count over empty interval");
  Polynomial q = p.squarefree_part();
  if (q.eval(lo).is_zero()) q = deflate(q, lo);
  if (!q.is_zero() && q.eval(hi).is_zero()) q = deflate(q, hi);
  if (q.is_zero() || q.degree() == 0) return 0;
  auto chain = sturm_chain(q);
  return variations(chain, lo) - variations(chain, hi);
}

std::vector<RootInterval> isolate_roots(const Polynomial& p, const Rational& lo,
                                        const Rational& hi) {
  if (p.is_zero()) throw invalid_input("root isolation of the zero polynomial");
  if (lo >= hi) throw invalid_input("root isolation over empty interval");
  Polynomial q = p.squarefree_part();
  if (q.eval(lo).is_zero()) q = deflate(q, lo);
  if (!q.is_zero() && q.eval(hi).is_zero()) q = deflate(q, hi);
  std::vector<RootInterval> out;
  if (q.is_zero() || q.degree() == 0) return out;
  auto chain = sturm_chain(q);
  isolate_rec(q, chain, lo, hi, out);
  std::sort(out.begin(), out.end(),
            [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
  // Shrink so intervals neither touch each other nor the outer endpoints: gap
  // sampling in sign_pattern depends on strictly positive gaps.
  for (size_t i = 0; i < out.size(); ++i) {
    auto needs_work = [&] {
      if (out[i].exact) return false;
      if (out[i].lo <= lo || out[i].hi >= hi) return true;
      if (i > 0 && out[i - 1].hi >= out[i].lo) return true;
      if (i + 1 < out.size() && out[i].hi >= out[i + 1].lo) return true;
      return false;
    };
    int guard = 0;
    while (needs_work()) {
      out[i] = bisect_step(q, out[i]);
      if (++guard > 4096) throw internal_error("isolating interval refinement stalled");
    }
  }
  return out;
}

RootInterval refine_root(const Polynomial& p, RootInterval iv, const Rational& width) {
  Polynomial q = p.squarefree_part();
  while (!iv.exact && iv.hi - iv.lo > width) iv = bisect_step(q, iv);
  return iv;
}

std::optional<Rational> exact_root_in(const Polynomial& p, const RootInterval& iv) {
  if (iv.exact) return iv.exact;
  Polynomial q = p.squarefree_part();
  auto inside = [&](const Rational& r) { return iv.lo <= r && r <= iv.hi; };
  if (q.degree() == 1) {
    Rational r = -q.coeff(0) / q.coeff(1);
    if (inside(r)) return r;
    return std::nullopt;
  }
  if (q.degree() == 2) {
    const Rational a = q.coeff(2), b = q.coeff(1), c = q.coeff(0);
    Rational disc = b * b - Rational(4) * a * c;
    if (disc.sign() < 0) return std::nullopt;
    if (!mpz_perfect_square_p(disc.num().get_mpz_t()) ||
        !mpz_perfect_square_p(disc.den().get_mpz_t()))
      return std::nullopt;  // irrational square root: roots are irrational
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), disc.num().get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), disc.den().get_mpz_t());
    Rational s(sn, sd);
    for (const Rational& r : {(-b + s) / (Rational(2) * a), (-b - s) / (Rational(2) * a)})
      if (inside(r) && p.eval(r).is_zero()) return r;
    return std::nullopt;
  }
  // Bounded probing: catches roots with small dyadic-reachable denominators.
  RootInterval w = iv;
  for (int i = 0; i < 64 && !w.exact; ++i) w = bisect_step(q, w);
  return w.exact;
}

SignSummary poly_sign_on_interval(const Polynomial& p, const Rational& lo, const Rational& hi,
                                  bool include_hi) {
  if (lo >= hi) throw invalid_input("sign classification over empty interval");
  SignSummary out;
  if (p.is_zero()) {
    out.kind = SignKind::IdenticallyZero;
    out.boundary_zero_hi = include_hi;
    return out;
  }
  out.boundary_zero_hi = include_hi && p.eval(hi).is_zero();
  out.witnesses = isolate_roots(p, lo, hi);
  if (!out.witnesses.empty()) {
    out.kind = SignKind::Mixed;
    return out;
  }
  int s = p.eval((lo + hi) / Rational(2)).sign();
  if (s == 0) throw internal_error("midpoint zero despite empty root isolation");
  out.kind = s > 0 ? SignKind::StrictlyPositive : SignKind::StrictlyNegative;
  return out;
}

SignPattern sign_pattern(const Polynomial& p, const Rational& lo, const Rational& hi) {
  if (lo >= hi) throw invalid_input("sign pattern over empty interval");
  SignPattern out;
  if (p.is_zero()) {
    out.identically_zero = true;
    return out;
  }
  out.zeros = isolate_roots(p, lo, hi);
  Rational prev = lo;
  for (size_t i = 0; i <= out.zeros.size(); ++i) {
    Rational next = i < out.zeros.size() ? out.zeros[i].lo : hi;
    Rational sample = (prev + next) / Rational(2);
    int s = p.eval(sample).sign();
    if (s == 0) throw internal_error("gap sample hit a root in sign_pattern");
    out.gap_signs.push_back(s);
    prev = i < out.zeros.size() ? out.zeros[i].hi : next;
  }
  return out;
}

}  // namespace slope
