#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "latwidth/lattice.hpp"
#include "latwidth/linalg.hpp"
#include "latwidth/scalar.hpp"

namespace latwidth {

// Vertex-representation polytope over ExactScalar coordinates. The vertex
// list is kept irredundant: from_points() removes interior/duplicate points
// exactly (dim <= 6); the raw constructor is for callers that already know
// the list is a vertex set (direct sums, gallery constructions) and only
// deduplicates.
class VPolytope {
 public:
  VPolytope(std::size_t ambient_dim, std::vector<Point> vertices);

  // Exact convex-hull vertex extraction from a possibly redundant point set.
  static VPolytope from_points(std::size_t ambient_dim, std::vector<Point> points);

  std::size_t ambient_dim() const { return ambient_dim_; }
  long radicand() const { return radicand_; }
  const std::vector<Point>& vertices() const { return vertices_; }

  std::size_t affine_dim() const;
  bool is_full_dimensional() const { return affine_dim() == ambient_dim_; }
  bool is_simplex() const;
  // Exact match against the vertex list.
  bool has_vertex(const Point& p) const;

  bool operator==(const VPolytope& o) const {
    return ambient_dim_ == o.ambient_dim_ && vertices_ == o.vertices_;
  }

 private:
  std::size_t ambient_dim_;
  long radicand_ = 0;
  std::vector<Point> vertices_;
};

struct Halfspace {
  Point normal;      // normal . x <= rhs
  ExactScalar rhs;
};

struct HRep {
  std::size_t ambient_dim = 0;
  std::vector<Halfspace> halfspaces;
};

// Complete irredundant facet list by exhaustive search over vertex subsets
// spanning hyperplanes. Requires full-dimensional P and ambient_dim <= 6.
// Normals are canonical: primitive integer when rational, otherwise scaled so
// the first nonzero coordinate is +-1 (orientation is outward, so only
// positive scaling is applied). Output sorted deterministically.
HRep facets(const VPolytope& p);

bool contains_point(const HRep& h, const Point& x, bool strict);
bool contains_point(const VPolytope& p, const Point& x, bool strict);

// max_v f(v) - min_v f(v); f must be nonzero.
ExactScalar width_along(const VPolytope& p, const DualFunctional& f);

// Vertex-wise k*v + t, k > 0.
VPolytope scale_translate(const VPolytope& p, const ExactScalar& k, const Point& t);

// Exact membership of x in conv(points) via Caratheodory subsets.
bool in_convex_hull(const std::vector<Point>& points, const Point& x);

// Normal of the hyperplane spanned by d affinely independent points in R^d
// (signed maximal minors of the difference matrix); zero vector when the
// points do not span a hyperplane.
Point hyperplane_through(const std::vector<Point>& pts, std::size_t ambient_dim);

struct DirectSumComponent {
  VPolytope polytope;
  Lattice lattice;
  ExactScalar dilation;        // k_i > 0
  ExactScalar supplied_width;  // pre-verified width of the component
};

struct DirectSumSpec {
  std::vector<DirectSumComponent> components;
};

struct DirectSum {
  VPolytope polytope;          // vertex list per the face description of sums
  Lattice lattice;             // block-diagonal product lattice
  std::size_t dimension = 0;   // sum of component dimensions
  ExactScalar claimed_width;   // min_i k_i * supplied_width_i
  ExactScalar inv_dilation_sum;
  bool sum_condition_holds = false;  // sum 1/k_i >= 1
  bool origin_is_vertex = false;
  bool simplex = false;              // every component a simplex with vertex 0
  bool lattice_polytope = false;     // every k_i C_i has vertices in L_i
};

// Builds the dilated direct sum of the components. Every component must
// contain the origin (checked; OriginNotContained otherwise), have a linear
// lattice, and a positive dilation.
DirectSum direct_sum(const DirectSumSpec& spec);

}  // namespace latwidth
