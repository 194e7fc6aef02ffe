#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "latwidth/errors.hpp"

namespace latwidth {

// Arbitrary-precision rational, always in canonical form: gcd(|num|, den) = 1
// and den >= 1. Zero is 0/1. Arithmetic is exact; there is no floating-point
// fallback anywhere in the comparison paths.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // NOLINT: implicit by design, mirrors integer literals
  Rational(long n, long d);
  Rational(const mpz_class& n, const mpz_class& d);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  static Rational from_integer(const mpz_class& n) { return Rational(n, 1); }

  // Text grammar: "p" or "p/q" with q > 0. Canonical output is reduced; input
  // is reduced on the way in, so parse(str(x)) == x and str(parse(s)) == s for
  // canonical s.
  static std::optional<Rational> parse(std::string_view text);
  std::string str() const;

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_)); }
  Rational operator/(const Rational& o) const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  bool operator==(const Rational& o) const { return q_ == o.q_; }
  std::strong_ordering operator<=>(const Rational& o) const {
    int c = cmp(q_, o.q_);
    return c < 0   ? std::strong_ordering::less
           : c > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
  }

  Rational abs() const { return sign() < 0 ? -*this : *this; }
  Rational reciprocal() const;

  // floor/ceil as exact integers.
  mpz_class floor() const;
  mpz_class ceil() const;

  double to_double() const { return q_.get_d(); }

  const mpq_class& raw() const { return q_; }

 private:
  mpq_class q_;
};

using RatVec = std::vector<Rational>;

}  // namespace latwidth
