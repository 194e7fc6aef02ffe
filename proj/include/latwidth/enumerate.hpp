#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latwidth/lattice.hpp"
#include "latwidth/polytope.hpp"

namespace latwidth {

enum class PointMode { interior, closed };

struct HollownessReport {
  bool hollow = false;
  std::optional<RatVec> witness;  // an interior lattice point when not hollow
};

struct WidthReport {
  ExactScalar value;
  // All primitive minimizers up to global sign, canonical (first nonzero
  // coefficient positive), sorted.
  std::vector<DualFunctional> minimizers;
  std::string search_bound_used;
};

// Exactly the points of L in int(P) (or closed P), by recursive coordinate
// fibering in lattice coordinates with Fourier-Motzkin bound cascades and
// exact floor/ceil. Sorted lexicographically. ambient_dim <= 6.
std::vector<RatVec> lattice_points_in(const VPolytope& p, const Lattice& l, PointMode mode);

HollownessReport is_hollow(const VPolytope& p, const Lattice& l);

// True iff the closed enumeration returns exactly the vertex set. P must be a
// full-dimensional simplex with vertices in L. Accepts ambient_dim <= 7 (the
// simplex fibering tree stays tiny one dimension past the general cap).
bool is_empty_simplex(const VPolytope& p, const Lattice& l);

// Exact lattice width with the complete primitive minimizer list up to sign.
// Upper bound W comes from the LLL-reduced dual basis plus coordinate
// functionals; candidates are all dual vectors f with
//   Q(f) = sum_v (f(v - centroid))^2 <= n_vertices * W^2,
// enumerated exactly, then evaluated exactly. ambient_dim <= 5.
WidthReport lattice_width(const VPolytope& p, const Lattice& l);

}  // namespace latwidth
