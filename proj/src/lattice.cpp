#include "latwidth/lattice.hpp"

namespace latwidth {

Lattice::Lattice(Mat<Rational> basis, RatVec offset)
    : basis_(std::move(basis)), offset_(std::move(offset)) {
  if (basis_.rows() != basis_.cols() || basis_.rows() == 0)
    fail(errc::invalid_argument, "lattice basis must be square and nonempty");
  if (offset_.size() != basis_.rows())
    fail(errc::invalid_argument, "lattice offset dimension mismatch");
  inverse_ = inverse(basis_);  // throws singular_matrix if not full rank
}

Lattice Lattice::integer(std::size_t dim) {
  return Lattice(Mat<Rational>::identity(dim), RatVec(dim, Rational(0)));
}

Lattice Lattice::linear(Mat<Rational> basis) {
  std::size_t d = basis.rows();
  return Lattice(std::move(basis), RatVec(d, Rational(0)));
}

bool Lattice::is_linear() const {
  for (const auto& x : offset_)
    if (!x.is_zero()) return false;
  return true;
}

Lattice Lattice::dual() const {
  return Lattice::linear(inverse_.transposed());
}

bool Lattice::contains(const RatVec& p) const {
  if (p.size() != dim()) fail(errc::invalid_argument, "point dimension mismatch");
  for (const Rational& z : to_lattice_coords(p))
    if (!z.is_integer()) return false;
  return true;
}

bool Lattice::linear_part_contains(const RatVec& v) const {
  for (const Rational& z : mat_vec(inverse_, v))
    if (!z.is_integer()) return false;
  return true;
}

RatVec Lattice::to_lattice_coords(const RatVec& p) const {
  return mat_vec(inverse_, vec_sub(p, offset_));
}

Point Lattice::to_lattice_coords(const Point& p) const {
  return mat_vec(to_scalar_mat(inverse_), vec_sub(p, to_scalar_vec(offset_)));
}

RatVec Lattice::from_lattice_coords(const RatVec& z) const {
  return vec_add(mat_vec(basis_, z), offset_);
}

ExactScalar DualFunctional::eval(const Point& p) const {
  return dot(to_scalar_vec(coeffs), p);
}

bool DualFunctional::in_dual_of(const Lattice& l) const {
  for (std::size_t j = 0; j < l.dim(); ++j)
    if (!dot(coeffs, l.basis().col(j)).is_integer()) return false;
  return true;
}

RatVec primitive_integer_direction(const RatVec& v) {
  if (vec_is_zero(v)) fail(errc::invalid_argument, "zero direction");
  mpz_class lcm_den(1), gcd_num(0);
  for (const Rational& x : v) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), lcm_den.get_mpz_t(), x.denominator().get_mpz_t());
    lcm_den = l;
  }
  RatVec scaled(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    scaled[i] = v[i] * Rational::from_integer(lcm_den);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), gcd_num.get_mpz_t(), scaled[i].numerator().get_mpz_t());
    gcd_num = g;
  }
  Rational inv_g = Rational(mpz_class(1), gcd_num);
  for (auto& x : scaled) x = x * inv_g;
  return scaled;
}

PrimitiveScale primitive_scale(const Lattice& l, const Point& v) {
  if (v.size() != l.dim()) fail(errc::invalid_argument, "direction dimension mismatch");
  if (vec_is_zero(v)) fail(errc::invalid_argument, "primitive_scale of zero vector");

  // Work in lattice coordinates; a lattice direction must become a rational
  // direction there, i.e. all mutual ratios rational.
  Point y = mat_vec(to_scalar_mat(l.basis_inverse()), v);
  std::size_t k = 0;
  while (k < y.size() && y[k].is_zero()) ++k;
  RatVec ratios(y.size(), Rational(0));
  for (std::size_t i = 0; i < y.size(); ++i) {
    ExactScalar q = y[i] / y[k];
    if (!q.is_rational())
      fail(errc::not_rational_direction, "vector is not parallel to a lattice vector");
    ratios[i] = q.as_rational();
  }
  RatVec z = primitive_integer_direction(ratios);
  ExactScalar length = y[k] / ExactScalar(z[k]);
  if (length.sign() < 0) {
    for (auto& c : z) c = -c;
    length = -length;
  }
  return PrimitiveScale{length, mat_vec(l.basis(), z)};
}

ExactScalar path_lattice_length(const Lattice& l, const std::vector<Point>& points) {
  if (points.size() < 2) fail(errc::invalid_argument, "path needs at least two points");
  ExactScalar total(0);
  for (std::size_t i = 0; i + 1 < points.size(); ++i)
    total += primitive_scale(l, vec_sub(points[i + 1], points[i])).length;
  return total;
}

}  // namespace latwidth
