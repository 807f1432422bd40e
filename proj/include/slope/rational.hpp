#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace slope {

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit on purpose, integers embed
  Rational(int n) : v_(n) {}   // NOLINT
  Rational(long num, long den);
  Rational(const mpz_class& num, const mpz_class& den);

  /// Parses "p", "-p", "p/q" (optional sign on p). Throws invalid_input on malformed
  /// input or zero denominator.
  static Rational parse(std::string_view s);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational abs() const;
  Rational floor() const;  // integral Rational
  Rational ceil() const;

  /// Exact conversion to long long; throws internal_error if not integral or out of range.
  long long to_long() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  Rational pow(unsigned e) const;

  /// Canonical rendering: "p" when integral, "p/q" otherwise.
  std::string str() const;

  /// Decimal rendering with the given number of significant digits (round half away
  /// from zero). Deterministic; meant for convenience columns, never for decisions.
  std::string decimal(int significant_digits = 12) const;

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

/// n! as a Rational (n small).
Rational factorial(unsigned n);
/// Binomial coefficient C(n, k).
Rational binomial(unsigned n, unsigned k);

}  // namespace slope
