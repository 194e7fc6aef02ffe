#include "latwidth/scalar.hpp"

#include <cmath>

namespace latwidth {

void require_valid_radicand(long d) {
  if (d < 2) fail(errc::invalid_argument, "radicand must be an integer >= 2");
  for (long p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0)
      fail(errc::invalid_argument, "radicand must be square-free: " + std::to_string(d));
  }
}

ExactScalar ExactScalar::quadratic(Rational rat, Rational irr, long radicand) {
  if (irr.is_zero()) return ExactScalar(std::move(rat));
  require_valid_radicand(radicand);
  ExactScalar s;
  s.rat_ = std::move(rat);
  s.irr_ = std::move(irr);
  s.radicand_ = radicand;
  return s;
}

const Rational& ExactScalar::as_rational() const {
  if (!is_rational()) fail(errc::invalid_argument, "value is not rational: " + str());
  return rat_;
}

long ExactScalar::join(long a, long b) {
  if (a == 0) return b;
  if (b == 0 || a == b) return a;
  fail(errc::radicand_mismatch, "mixed radicands " + std::to_string(a) + " and " +
                                    std::to_string(b) + " in one expression");
}

int ExactScalar::sign() const {
  if (irr_.is_zero()) return rat_.sign();
  if (rat_.is_zero()) return irr_.sign();
  int sa = rat_.sign(), sb = irr_.sign();
  if (sa == sb) return sa;
  // Opposite signs: |rat| vs |irr|*sqrt(D), squared. Equality would force
  // sqrt(D) rational, impossible for square-free D >= 2.
  Rational lhs = rat_ * rat_;
  Rational rhs = irr_ * irr_ * Rational(radicand_);
  auto c = lhs <=> rhs;
  if (c == std::strong_ordering::equal)
    fail(errc::invalid_argument, "non-square-free radicand slipped through");
  return c == std::strong_ordering::greater ? sa : sb;
}

ExactScalar ExactScalar::operator-() const {
  ExactScalar r;
  r.rat_ = -rat_;
  r.irr_ = -irr_;
  r.radicand_ = radicand_;
  return r;
}

ExactScalar ExactScalar::operator+(const ExactScalar& o) const {
  long d = join(radicand_, o.radicand_);
  ExactScalar r;
  r.rat_ = rat_ + o.rat_;
  r.irr_ = irr_ + o.irr_;
  r.radicand_ = r.irr_.is_zero() ? 0 : d;
  return r;
}

ExactScalar ExactScalar::operator-(const ExactScalar& o) const { return *this + (-o); }

ExactScalar ExactScalar::operator*(const ExactScalar& o) const {
  long d = join(radicand_, o.radicand_);
  ExactScalar r;
  r.rat_ = rat_ * o.rat_ + irr_ * o.irr_ * Rational(d == 0 ? 0 : d);
  r.irr_ = rat_ * o.irr_ + irr_ * o.rat_;
  r.radicand_ = r.irr_.is_zero() ? 0 : d;
  return r;
}

ExactScalar ExactScalar::operator/(const ExactScalar& o) const {
  if (o.is_zero()) fail(errc::division_by_zero, "division by zero scalar");
  long d = join(radicand_, o.radicand_);
  if (o.irr_.is_zero()) {
    ExactScalar r;
    r.rat_ = rat_ / o.rat_;
    r.irr_ = irr_ / o.rat_;
    r.radicand_ = r.irr_.is_zero() ? 0 : d;
    return r;
  }
  // Multiply by the conjugate; the norm a^2 - D b^2 is a nonzero rational.
  Rational norm = o.rat_ * o.rat_ - o.irr_ * o.irr_ * Rational(d);
  ExactScalar conj;
  conj.rat_ = o.rat_;
  conj.irr_ = -o.irr_;
  conj.radicand_ = d;
  ExactScalar num = *this * conj;
  num.rat_ = num.rat_ / norm;
  num.irr_ = num.irr_ / norm;
  num.radicand_ = num.irr_.is_zero() ? 0 : d;
  return num;
}

mpz_class ExactScalar::floor() const {
  if (is_rational()) return rat_.floor();
  // Double guess, then an exact bracket-and-bisect. The predicate m <= x is
  // monotone, so this is immune to a bad guess.
  auto leq = [this](const mpz_class& m) {
    return (*this - ExactScalar(Rational::from_integer(m))).sign() >= 0;
  };
  double guess = to_double();
  mpz_class n(std::isfinite(guess) ? std::floor(guess) : 0.0);
  mpz_class step = 1;
  if (leq(n)) {
    while (leq(n + step)) {
      n += step;
      step *= 2;
    }
  } else {
    while (!leq(n - step)) {
      n -= step;
      step *= 2;
    }
    n -= step;
  }
  // Invariant: leq(n) and !leq(n + step).
  while (step > 1) {
    step /= 2;
    if (leq(n + step)) n += step;
  }
  return n;
}

mpz_class ExactScalar::ceil() const { return -((-*this).floor()); }

double ExactScalar::to_double() const {
  double v = rat_.to_double();
  if (radicand_ != 0) v += irr_.to_double() * std::sqrt(static_cast<double>(radicand_));
  return v;
}

std::string ExactScalar::str() const {
  if (is_rational()) return rat_.str();
  std::string s = rat_.str();
  if (irr_.sign() >= 0) s += "+";
  return s + irr_.str() + "*sqrt(" + std::to_string(radicand_) + ")";
}

}  // namespace latwidth
