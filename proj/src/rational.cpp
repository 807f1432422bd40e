#include "slope/rational.hpp"

#include <cctype>
#include <ostream>

#include "slope/errors.hpp"

namespace slope {

Rational::Rational(long num, long den) {
  if (den == 0) throw invalid_input("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw invalid_input("rational with zero denominator");
  v_ = mpq_class(num) / mpq_class(den);  // operator/ canonicalizes
}

Rational Rational::parse(std::string_view s) {
  auto bad = [&] { throw invalid_input("malformed rational '" + std::string(s) + "'"); };
  if (s.empty()) bad();
  std::string t(s);
  auto slash = t.find('/');
  std::string num = t.substr(0, slash == std::string::npos ? t.size() : slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  auto check_int = [&](const std::string& p, bool sign_ok) {
    if (p.empty()) bad();
    size_t i = (sign_ok && (p[0] == '-' || p[0] == '+')) ? 1 : 0;
    if (i == p.size()) bad();
    for (; i < p.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(p[i]))) bad();
  };
  check_int(num, true);
  check_int(den, false);
  if (num[0] == '+') num.erase(0, 1);  // mpz_set_str takes only '-'
  mpz_class n(num), d(den);
  if (d == 0) throw invalid_input("rational with zero denominator: '" + std::string(s) + "'");
  return Rational(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw invalid_input("division by zero rational");
  v_ /= o.v_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

Rational Rational::abs() const { return Rational(mpq_class(::abs(v_))); }

Rational Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  return Rational(mpq_class(q));
}

Rational Rational::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  return Rational(mpq_class(q));
}

long long Rational::to_long() const {
  if (!is_integer()) throw internal_error("to_long on non-integer " + str());
  if (!num().fits_slong_p()) throw internal_error("to_long overflow on " + str());
  return num().get_si();
}

Rational Rational::pow(unsigned e) const {
  mpq_class r;
  mpz_pow_ui(r.get_num_mpz_t(), v_.get_num().get_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), v_.get_den().get_mpz_t(), e);
  return Rational(r);  // powers of canonical form stay canonical
}

std::string Rational::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

std::string Rational::decimal(int sig) const {
  if (sig < 1) throw invalid_input("decimal() needs at least one significant digit");
  if (is_zero()) return "0";
  mpz_class a = ::abs(num()), b = den();
  // Find E with 10^E <= a/b < 10^{E+1}.
  long E = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(b.get_mpz_t(), 10)) + 1;
  mpz_class p10;
  auto cmp_pow = [&](long e) {
    // compare a/b with 10^e
    mpz_class lhs = a, rhs = b;
    if (e >= 0) mpz_pow_ui(p10.get_mpz_t(), mpz_class(10).get_mpz_t(), e), rhs *= p10;
    else mpz_pow_ui(p10.get_mpz_t(), mpz_class(10).get_mpz_t(), -e), lhs *= p10;
    return cmp(lhs, rhs);
  };
  while (cmp_pow(E) < 0) --E;
  while (cmp_pow(E + 1) >= 0) ++E;
  // Round a/b * 10^{sig-1-E} half away from zero to integer m (sig digits).
  long k = sig - 1 - E;
  mpz_class n2 = a, d2 = b;
  if (k >= 0) mpz_pow_ui(p10.get_mpz_t(), mpz_class(10).get_mpz_t(), k), n2 *= p10;
  else mpz_pow_ui(p10.get_mpz_t(), mpz_class(10).get_mpz_t(), -k), d2 *= p10;
  mpz_class m = (2 * n2 + d2) / (2 * d2);
  std::string digits = m.get_str();
  if (static_cast<int>(digits.size()) > sig) {  // rounding carried: 999.. -> 1000..
    ++E;
    digits.resize(sig);
  }
  std::string out = sign() < 0 ? "-" : "";
  if (E >= sig || E < -4) {  // exponent form: d.dddde<E>
    out += digits.substr(0, 1);
    std::string frac = digits.substr(1);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) out += "." + frac;
    out += "e" + std::to_string(E);
  } else if (E >= 0) {
    out += digits.substr(0, E + 1);
    std::string frac = digits.substr(E + 1);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) out += "." + frac;
  } else {
    std::string frac(std::string(-E - 1, '0') + digits);
    while (frac.size() > 1 && frac.back() == '0') frac.pop_back();
    out += "0." + frac;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational min(const Rational& a, const Rational& b) { return a <= b ? a : b; }
Rational max(const Rational& a, const Rational& b) { return a >= b ? a : b; }

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f, 1);
}

Rational binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b, 1);
}

}  // namespace slope
