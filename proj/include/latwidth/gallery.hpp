#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latwidth/certify.hpp"
#include "latwidth/lattice.hpp"
#include "latwidth/polytope.hpp"

namespace latwidth {

// A named construction bundled with its lattice, certificates, and the
// claims the construction is responsible for. Attached certificates verify;
// claims in enumerable dimension additionally match the oracle (tested).
struct GalleryItem {
  std::string name;
  VPolytope polytope;
  Lattice lattice;
  std::vector<WidthCertificate> width_certificates;
  std::vector<HollowSumCertificate> sum_certificates;
  std::optional<ExactScalar> claimed_width;
  std::optional<ExactScalar> claimed_width_lower_bound;  // construction metadata
  std::optional<bool> claimed_hollow;
  std::optional<bool> claimed_empty;
  std::vector<DualFunctional> noted_functionals;
  std::string provenance_notes;
};

// Equilateral triangle circumscribed around conv{(0,0),(1,0),(1/2,sqrt(3)/2)}
// with apex (x, y) between the first and third vertex; input in the plane
// coordinates, output in lattice-basis coordinates where the triangle lattice
// becomes Z^2. (x, y) must lie on the apex circle and outside the base
// triangle.
GalleryItem circumscribed_triangle(const ExactScalar& x, const ExactScalar& y);

GalleryItem delta0();
GalleryItem delta_family(const ExactScalar& x, const ExactScalar& y);
GalleryItem delta_star();
GalleryItem hurkens_triangle();
GalleryItem triangle_t();
GalleryItem s0();
GalleryItem s_dilated();

enum class RepeatedSum { T7, S101 };
GalleryItem repeated_sum(RepeatedSum which);

// Stretched cyclic embedding of an empty simplex with a vertex at the origin:
// vertex (m-2) * v_i in block j plus v_{i+1} in block j+1 (indices cyclic).
// Guarantees an empty dm-simplex of width at least (m-3) * width(P).
GalleryItem sebo_sum(const VPolytope& p, const Lattice& l, long m);

GalleryItem unit_square();
// The boundary-path certificate for the unit square, which correctly fails
// verification (the axis functionals have width 1 < 2). Not attached to the
// item; used as the canonical negative control.
WidthCertificate square_boundary_certificate();

// Lattice of the section-5 constructions: {a,b,c in 2Z, a+b+c in 4Z}.
Lattice fcc_lattice();
// Its translate by -(1,1,1).
Lattice fcc_lattice_offset();

// CLI-visible names: delta0, delta-star, delta-family(x,y), hurkens, T, T7,
// S0, S, S101, sebo(d,m), square-counterexample.
std::optional<GalleryItem> gallery_by_name(const std::string& name);
std::vector<std::string> gallery_names();

}  // namespace latwidth
