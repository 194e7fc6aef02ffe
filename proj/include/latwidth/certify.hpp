#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "latwidth/enumerate.hpp"
#include "latwidth/lattice.hpp"
#include "latwidth/polytope.hpp"

namespace latwidth {

// Polygonal path whose segment directions are parallel to lattice vectors.
struct RationalPath {
  std::vector<Point> points;  // p_0 ... p_t, t >= 1
};

// Functionals strictly increasing along a path: f(d_k) > 0 for all segment
// directions d_k (stored primitive).
struct OpenCone {
  std::vector<RatVec> strict_normals;
};

OpenCone polar_cone(const Lattice& l, const RationalPath& path);

// Convex-combination witness over the polytope's vertex list.
struct EndpointWitness {
  std::vector<ExactScalar> coeffs;
};

struct CertPath {
  RationalPath path;
  EndpointWitness start, end;
};

struct ExceptionalRay {
  RatVec coeffs;
  ExactScalar stated_width;
};

// Rational-path width lower bound with a polar-cone cover, exceptional rays
// for the uncovered lines, and optionally a functional realizing the bound.
struct WidthCertificate {
  ExactScalar claimed_bound;
  std::vector<CertPath> paths;
  std::vector<ExceptionalRay> exceptional_rays;
  std::vector<Mat<Rational>> symmetries;  // lattice-preserving vertex symmetries of P
  std::optional<RatVec> upper_bound_functional;
};

// True iff every nonzero functional lies in some open cone or on the line of
// an exceptional ray. Exact: the uncovered set is the union of the closed
// cones obtained by picking one strict normal per cone; each is converted to
// generators and must be {0} or span a subset of one exceptional line.
// dim <= 3; the choice-function product is capped at 10^6.
bool verify_cover(const std::vector<OpenCone>& cones,
                  const std::vector<RatVec>& exceptional_rays, std::size_t dim);

struct Verdict {
  enum class Kind { proved_exact, proved_at_least, rejected };
  Kind kind = Kind::rejected;
  ExactScalar bound;
  std::string reason;  // first failing clause when rejected

  bool proved() const { return kind != Kind::rejected; }
  bool exact() const { return kind == Kind::proved_exact; }
};

Verdict verify_width_certificate(const VPolytope& p, const Lattice& l,
                                 const WidthCertificate& cert);

struct HollowSumCertificate;

// How a component's hollowness and width are established: by re-running the
// enumeration oracle, by a Proved-exact width certificate (hollowness still
// enumerated), or by a nested hollow-sum certificate.
struct ComponentEvidence {
  enum class Kind { enumeration, width_certificate, hollow_sum };
  Kind kind = Kind::enumeration;
  ExactScalar width;  // claimed component width, all kinds
  std::shared_ptr<WidthCertificate> certificate;
  std::shared_ptr<HollowSumCertificate> nested;

  bool operator==(const ComponentEvidence& o) const;
};

struct HollowSumComponent {
  VPolytope polytope;
  Lattice lattice;
  ExactScalar dilation;
  ComponentEvidence evidence;
};

struct HollowSumCertificate {
  std::vector<HollowSumComponent> components;
};

struct SumVerdict {
  Verdict verdict;
  ExactScalar derived_width;      // min_i k_i * width_i, on success
  ExactScalar inv_dilation_sum;   // sum 1/k_i
  std::size_t dimension = 0;
  std::size_t vertex_count = 0;
  bool lattice_polytope = false;
  bool simplex = false;
};

SumVerdict verify_hollow_sum(const HollowSumCertificate& cert, int depth = 0);

// The direct sum the certificate describes (for checking a certificate
// against a concrete polytope + lattice).
DirectSum rebuild_direct_sum(const HollowSumCertificate& cert);

}  // namespace latwidth
