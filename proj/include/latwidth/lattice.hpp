#pragma once

#include <vector>

#include "latwidth/linalg.hpp"
#include "latwidth/rational.hpp"
#include "latwidth/scalar.hpp"

namespace latwidth {

// Full-rank affine lattice {offset + basis*z : z integer}, basis columns are
// the generators. Linear lattices have offset zero. The basis is rational;
// irrational embeddings (the equilateral-triangle lattice) are handled by a
// change to lattice-basis coordinates before they reach this type.
class Lattice {
 public:
  Lattice(Mat<Rational> basis, RatVec offset);
  static Lattice integer(std::size_t dim);
  static Lattice linear(Mat<Rational> basis);

  std::size_t dim() const { return basis_.rows(); }
  const Mat<Rational>& basis() const { return basis_; }
  const RatVec& offset() const { return offset_; }
  const Mat<Rational>& basis_inverse() const { return inverse_; }
  bool is_linear() const;

  // Dual of the linear part: inverse-transpose basis, zero offset.
  Lattice dual() const;

  // p = offset + basis*z for integer z?
  bool contains(const RatVec& p) const;
  // Membership in the linear part (offset ignored).
  bool linear_part_contains(const RatVec& v) const;

  // Coordinates of p in this lattice's frame: basis^-1 (p - offset).
  RatVec to_lattice_coords(const RatVec& p) const;
  Point to_lattice_coords(const Point& p) const;
  RatVec from_lattice_coords(const RatVec& z) const;

  bool operator==(const Lattice& o) const {
    return basis_ == o.basis_ && offset_ == o.offset_;
  }

 private:
  Mat<Rational> basis_;
  RatVec offset_;
  Mat<Rational> inverse_;
};

// A dual-lattice element acting on points by the standard dot product.
struct DualFunctional {
  RatVec coeffs;

  ExactScalar eval(const Point& p) const;
  Rational eval(const RatVec& p) const { return dot(coeffs, p); }
  bool is_zero() const { return vec_is_zero(coeffs); }
  // Integer on every basis column of L?
  bool in_dual_of(const Lattice& l) const;

  bool operator==(const DualFunctional& o) const { return coeffs == o.coeffs; }
};

struct PrimitiveScale {
  ExactScalar length;   // > 0
  RatVec primitive;     // lattice vector, shortest in its direction
};

// Writes v = length * w with w a primitive vector of L's linear part.
// Throws not_rational_direction if v is not parallel to any lattice vector.
PrimitiveScale primitive_scale(const Lattice& l, const Point& v);

// Sum of segment lattice lengths of the polygonal path through the given
// points. Throws not_rational_direction on a bad segment.
ExactScalar path_lattice_length(const Lattice& l, const std::vector<Point>& points);

// Canonical primitive integer representative of a nonzero rational direction
// (clears denominators, divides by gcd; orientation preserved).
RatVec primitive_integer_direction(const RatVec& v);

}  // namespace latwidth
