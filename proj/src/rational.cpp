#include "latwidth/rational.hpp"

#include <cctype>

namespace latwidth {

const char* errc_name(errc c) {
  switch (c) {
    case errc::parse_error: return "ParseError";
    case errc::radicand_mismatch: return "RadicandMismatch";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::singular_matrix: return "SingularMatrix";
    case errc::not_rational_direction: return "NotRationalDirection";
    case errc::dimension_too_large: return "DimensionTooLarge";
    case errc::degenerate_polytope: return "DegeneratePolytope";
    case errc::not_a_simplex: return "NotASimplex";
    case errc::vertices_not_in_lattice: return "VerticesNotInLattice";
    case errc::origin_not_contained: return "OriginNotContained";
    case errc::origin_not_vertex: return "OriginNotVertex";
    case errc::not_empty_simplex: return "NotEmptySimplex";
    case errc::not_on_circle: return "NotOnCircle";
    case errc::inside_triangle: return "InsideTriangle";
    case errc::on_or_inside_singular_circle: return "OnOrInsideSingularCircle";
    case errc::cover_too_large: return "CoverTooLarge";
    case errc::invalid_argument: return "InvalidArgument";
  }
  return "UnknownError";
}

Rational::Rational(long n, long d) {
  if (d == 0) fail(errc::division_by_zero, "rational with zero denominator");
  q_ = mpq_class(n, d);
  q_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
  if (d == 0) fail(errc::division_by_zero, "rational with zero denominator");
  q_ = mpq_class(n) / mpq_class(d);
  q_.canonicalize();
}

Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) fail(errc::division_by_zero, "rational division by zero");
  return Rational(mpq_class(q_ / o.q_));
}

Rational Rational::reciprocal() const {
  if (is_zero()) fail(errc::division_by_zero, "reciprocal of zero");
  return Rational(mpq_class(1 / q_));
}

mpz_class Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
  return q;
}

mpz_class Rational::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
  return q;
}

namespace {

bool valid_integer_token(std::string_view s) {
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

std::optional<Rational> Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!valid_integer_token(num)) return std::nullopt;
  mpz_class n(std::string(num), 10);
  if (slash == std::string_view::npos) return from_integer(n);
  std::string_view den = text.substr(slash + 1);
  if (!valid_integer_token(den) || den[0] == '+' || den[0] == '-') return std::nullopt;
  mpz_class d(std::string(den), 10);
  if (d == 0) return std::nullopt;
  return Rational(n, d);
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

}  // namespace latwidth
