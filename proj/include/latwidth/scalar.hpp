#pragma once

#include <compare>
#include <string>
#include <vector>

#include "latwidth/rational.hpp"

namespace latwidth {

// A number of the form rat + irr*sqrt(D) with rat, irr in Q and D a square-free
// integer >= 2. Pure rationals are the canonical case irr = 0, radicand = 0.
// All values inside one computation share a single D; combining distinct
// radicands throws radicand_mismatch. Total order and sign are decided by
// exact rational case analysis, never by floating point.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(long n) : rat_(n) {}  // NOLINT: implicit integer literals
  ExactScalar(Rational r) : rat_(std::move(r)) {}  // NOLINT

  static ExactScalar quadratic(Rational rat, Rational irr, long radicand);
  // sqrt(D) itself.
  static ExactScalar sqrt_of(long radicand) { return quadratic(0, 1, radicand); }

  const Rational& rational_part() const { return rat_; }
  const Rational& irrational_part() const { return irr_; }
  long radicand() const { return radicand_; }  // 0 means pure rational
  bool is_rational() const { return radicand_ == 0; }
  // Throws if the value is not rational.
  const Rational& as_rational() const;

  int sign() const;
  bool is_zero() const { return rat_.is_zero() && irr_.is_zero(); }

  ExactScalar operator-() const;
  ExactScalar operator+(const ExactScalar& o) const;
  ExactScalar operator-(const ExactScalar& o) const;
  ExactScalar operator*(const ExactScalar& o) const;
  ExactScalar operator/(const ExactScalar& o) const;
  ExactScalar& operator+=(const ExactScalar& o) { return *this = *this + o; }
  ExactScalar& operator-=(const ExactScalar& o) { return *this = *this - o; }
  ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }
  ExactScalar& operator/=(const ExactScalar& o) { return *this = *this / o; }

  bool operator==(const ExactScalar& o) const { return (*this - o).is_zero(); }
  std::strong_ordering operator<=>(const ExactScalar& o) const {
    int s = (*this - o).sign();
    return s < 0   ? std::strong_ordering::less
           : s > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
  }

  ExactScalar abs() const { return sign() < 0 ? -*this : *this; }

  mpz_class floor() const;
  mpz_class ceil() const;

  double to_double() const;
  std::string str() const;  // human-readable; file formats use json_io

 private:
  // Common radicand of two operands, or throw on a genuine mismatch.
  static long join(long a, long b);

  Rational rat_;
  Rational irr_;
  long radicand_ = 0;
};

// Checks D is a square-free integer >= 2; throws invalid_argument otherwise.
void require_valid_radicand(long d);

using Scalar = ExactScalar;
using Point = std::vector<ExactScalar>;

}  // namespace latwidth
