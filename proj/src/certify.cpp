#include "latwidth/certify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace latwidth {

OpenCone polar_cone(const Lattice& l, const RationalPath& path) {
  if (path.points.size() < 2)
    fail(errc::invalid_argument, "path needs at least two points");
  std::set<RatVec> dirs;
  for (std::size_t i = 0; i + 1 < path.points.size(); ++i) {
    PrimitiveScale ps = primitive_scale(l, vec_sub(path.points[i + 1], path.points[i]));
    dirs.insert(ps.primitive);
  }
  OpenCone c;
  c.strict_normals.assign(dirs.begin(), dirs.end());
  return c;
}

// ---------------------------------------------------------------------------
// Cover check: double description of closed cones {f : a_i . f <= 0}.

namespace {

// A polyhedral cone as lineality space + rays. Generators are canonical
// primitive integer vectors; redundant rays are harmless for the use here
// (all predicates quantify over generators being inside the cone).
struct ConeDD {
  std::vector<RatVec> lineality;
  std::vector<RatVec> rays;

  bool is_origin() const { return lineality.empty() && rays.empty(); }
};

ConeDD full_space(std::size_t dim) {
  ConeDD c;
  for (std::size_t i = 0; i < dim; ++i) {
    RatVec e(dim, Rational(0));
    e[i] = Rational(1);
    c.lineality.push_back(std::move(e));
  }
  return c;
}

void push_ray(std::vector<RatVec>& rays, const RatVec& v) {
  if (vec_is_zero(v)) return;
  RatVec p = primitive_integer_direction(v);
  if (std::find(rays.begin(), rays.end(), p) == rays.end()) rays.push_back(std::move(p));
}

// Intersect with the closed halfspace {f : a . f <= 0}.
ConeDD add_halfspace(const ConeDD& c, const RatVec& a) {
  ConeDD out;
  // A lineality generator not orthogonal to a leaves the lineality space and
  // contributes the ray pointing into the halfspace; everything else is
  // projected onto {a . f = 0} along it.
  for (std::size_t i = 0; i < c.lineality.size(); ++i) {
    Rational al = dot(a, c.lineality[i]);
    if (al.is_zero()) continue;
    const RatVec& l0 = c.lineality[i];
    for (std::size_t j = 0; j < c.lineality.size(); ++j) {
      if (j == i) continue;
      Rational f = dot(a, c.lineality[j]) / al;
      out.lineality.push_back(vec_sub(c.lineality[j], vec_scale(f, l0)));
    }
    push_ray(out.rays, al.sign() < 0 ? l0 : vec_scale(Rational(-1), l0));
    for (const RatVec& v : c.rays) {
      Rational f = dot(a, v) / al;
      push_ray(out.rays, vec_sub(v, vec_scale(f, l0)));
    }
    return out;
  }
  // Lineality orthogonal to a: classic ray combination step.
  out.lineality = c.lineality;
  std::vector<const RatVec*> minus, plus;
  for (const RatVec& v : c.rays) {
    int s = dot(a, v).sign();
    if (s <= 0) out.rays.push_back(v);
    if (s < 0) minus.push_back(&v);
    if (s > 0) plus.push_back(&v);
  }
  for (const RatVec* u : minus)
    for (const RatVec* w : plus) {
      Rational cu = dot(a, *w);        // > 0
      Rational cw = -dot(a, *u);       // > 0
      push_ray(out.rays, vec_add(vec_scale(cu, *u), vec_scale(cw, *w)));
    }
  return out;
}

bool parallel(const RatVec& a, const RatVec& b) {
  // both canonical primitive; parallel lines means equal up to sign
  if (a == b) return true;
  RatVec neg = vec_scale(Rational(-1), b);
  return a == neg;
}

// 0 = origin only; 1 = contained in the line spanned by *line_dir;
// 2 = at least two independent directions.
int classify(const ConeDD& c, RatVec* line_dir) {
  std::vector<RatVec> gens;
  for (const RatVec& l : c.lineality)
    if (!vec_is_zero(l)) gens.push_back(primitive_integer_direction(l));
  for (const RatVec& r : c.rays) gens.push_back(r);
  if (gens.empty()) return 0;
  for (const RatVec& g : gens)
    if (!parallel(gens[0], g)) return 2;
  *line_dir = gens[0];
  return 1;
}

struct CoverSearch {
  const std::vector<std::vector<RatVec>>* cone_normals = nullptr;
  std::vector<RatVec> exceptional;  // canonical primitive
  long long visited = 0;

  // True when every leaf cone below is {0} or inside an exceptional line.
  bool covered(const ConeDD& state, std::size_t next) {
    if (++visited > 4000000)
      fail(errc::cover_too_large, "cover check exceeded the combination budget");
    RatVec dir;
    int cls = classify(state, &dir);
    if (cls == 0) return true;
    if (cls == 1) {
      for (const RatVec& e : exceptional)
        if (parallel(dir, e)) return true;
      // A line not matched by an exceptional ray can still shrink to {0}
      // under later cones, so keep descending unless this was a leaf.
    }
    if (next == cone_normals->size()) return false;
    for (const RatVec& a : (*cone_normals)[next])
      if (!covered(add_halfspace(state, a), next + 1)) return false;
    return true;
  }
};

}  // namespace

bool verify_cover(const std::vector<OpenCone>& cones,
                  const std::vector<RatVec>& exceptional_rays, std::size_t dim) {
  if (dim > 3) fail(errc::dimension_too_large, "cover check capped at dimension 3");
  if (cones.empty()) fail(errc::invalid_argument, "cover check needs at least one cone");

  std::set<std::vector<RatVec>> distinct;
  for (const OpenCone& c : cones) {
    std::set<RatVec> dedup;
    for (const RatVec& n : c.strict_normals) {
      if (n.size() != dim) fail(errc::invalid_argument, "cone normal dimension mismatch");
      dedup.insert(primitive_integer_direction(n));
    }
    if (dedup.empty()) fail(errc::invalid_argument, "cone without strict normals");
    distinct.insert(std::vector<RatVec>(dedup.begin(), dedup.end()));
  }
  std::vector<std::vector<RatVec>> normals(distinct.begin(), distinct.end());
  long long product = 1;
  for (const auto& ns : normals) {
    product *= static_cast<long long>(ns.size());
    if (product > 1000000)
      fail(errc::cover_too_large, "cover check exceeded 10^6 choice combinations");
  }

  CoverSearch search;
  search.cone_normals = &normals;
  for (const RatVec& e : exceptional_rays) {
    if (e.size() != dim) fail(errc::invalid_argument, "exceptional ray dimension mismatch");
    search.exceptional.push_back(primitive_integer_direction(e));
  }
  return search.covered(full_space(dim), 0);
}

// ---------------------------------------------------------------------------
// Width certificates.

namespace {

Verdict rejected(const std::string& reason) {
  Verdict v;
  v.kind = Verdict::Kind::rejected;
  v.reason = reason;
  return v;
}

// Closure of the declared symmetry generators (with identity); empty optional
// when the group exceeds the cap.
std::optional<std::vector<Mat<Rational>>> group_closure(
    const std::vector<Mat<Rational>>& gens, std::size_t dim) {
  std::vector<Mat<Rational>> group{Mat<Rational>::identity(dim)};
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < group.size(); ++i)
      for (const Mat<Rational>& g : gens) {
        Mat<Rational> prod = mat_mul(g, group[i]);
        if (std::find(group.begin(), group.end(), prod) == group.end()) {
          group.push_back(std::move(prod));
          grew = true;
          if (group.size() > 256) return std::nullopt;
        }
      }
  }
  return group;
}

bool maps_lattice_to_itself(const Mat<Rational>& m, const Lattice& l) {
  // B^-1 M B integral with |det| = 1, and M offset - offset in the linear part.
  Mat<Rational> t = mat_mul(mat_mul(l.basis_inverse(), m), l.basis());
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < t.cols(); ++j)
      if (!t(i, j).is_integer()) return false;
  Rational det = determinant(t);
  if (!(det == Rational(1) || det == Rational(-1))) return false;
  RatVec moved = mat_vec(m, l.offset());
  return l.linear_part_contains(vec_sub(moved, l.offset()));
}

// Permutation of P's vertices induced by m, or nullopt.
std::optional<std::vector<std::size_t>> vertex_permutation(const Mat<Rational>& m,
                                                           const VPolytope& p) {
  Mat<ExactScalar> ms = to_scalar_mat(m);
  std::vector<std::size_t> perm(p.vertices().size());
  std::vector<bool> used(p.vertices().size(), false);
  for (std::size_t i = 0; i < p.vertices().size(); ++i) {
    Point img = mat_vec(ms, p.vertices()[i]);
    bool found = false;
    for (std::size_t j = 0; j < p.vertices().size(); ++j) {
      if (!used[j] && p.vertices()[j] == img) {
        perm[i] = j;
        used[j] = true;
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  return perm;
}

bool witness_checks(const VPolytope& p, const EndpointWitness& w, const Point& endpoint,
                    std::string* why) {
  if (w.coeffs.size() != p.vertices().size()) {
    *why = "endpoint witness length does not match the vertex count";
    return false;
  }
  ExactScalar sum(0);
  Point combo(p.ambient_dim(), ExactScalar(0));
  for (std::size_t i = 0; i < w.coeffs.size(); ++i) {
    if (w.coeffs[i].sign() < 0) {
      *why = "endpoint witness has a negative coefficient";
      return false;
    }
    sum += w.coeffs[i];
    if (!w.coeffs[i].is_zero())
      combo = vec_add(combo, vec_scale(w.coeffs[i], p.vertices()[i]));
  }
  if (!(sum == ExactScalar(1))) {
    *why = "endpoint witness coefficients do not sum to 1";
    return false;
  }
  if (!(combo == endpoint)) {
    *why = "endpoint witness does not reproduce the path endpoint";
    return false;
  }
  return true;
}

}  // namespace

Verdict verify_width_certificate(const VPolytope& p, const Lattice& l,
                                 const WidthCertificate& cert) {
  std::size_t d = p.ambient_dim();
  if (l.dim() != d) return rejected("lattice/polytope dimension mismatch");
  if (cert.paths.empty()) return rejected("certificate has no paths");

  try {
    auto group = group_closure(cert.symmetries, d);
    if (!group) return rejected("declared symmetry group exceeds the closure cap");
    std::vector<std::pair<Mat<ExactScalar>, std::vector<std::size_t>>> actions;
    for (const Mat<Rational>& m : *group) {
      if (m.rows() != d || m.cols() != d)
        return rejected("symmetry matrix dimension mismatch");
      if (!maps_lattice_to_itself(m, l))
        return rejected("a declared symmetry does not preserve the lattice");
      auto perm = vertex_permutation(m, p);
      if (!perm) return rejected("a declared symmetry does not permute the vertex set");
      actions.emplace_back(to_scalar_mat(m), std::move(*perm));
    }

    // Base paths are checked against their shipped witnesses; group images
    // get the permuted witnesses computed here.
    std::vector<OpenCone> cones;
    for (const CertPath& cp : cert.paths) {
      if (cp.path.points.size() < 2) return rejected("path with fewer than two points");
      std::string why;
      if (!witness_checks(p, cp.start, cp.path.points.front(), &why)) return rejected(why);
      if (!witness_checks(p, cp.end, cp.path.points.back(), &why)) return rejected(why);
      for (const auto& [ms, perm] : actions) {
        RationalPath img;
        img.points.reserve(cp.path.points.size());
        for (const Point& pt : cp.path.points) img.points.push_back(mat_vec(ms, pt));
        ExactScalar len = path_lattice_length(l, img.points);
        if (len < cert.claimed_bound)
          return rejected("a path has lattice length below the claimed bound");
        cones.push_back(polar_cone(l, img));
      }
    }

    std::vector<RatVec> rays;
    for (const ExceptionalRay& r : cert.exceptional_rays) {
      if (vec_is_zero(r.coeffs)) return rejected("zero exceptional ray");
      ExactScalar stated = width_along(p, DualFunctional{r.coeffs});
      if (!(stated == r.stated_width))
        return rejected("an exceptional ray's stated width is wrong");
      // The binding constraint is on the primitive dual vector of that line.
      PrimitiveScale ps = primitive_scale(l.dual(), to_scalar_vec(r.coeffs));
      if (width_along(p, DualFunctional{ps.primitive}) < cert.claimed_bound)
        return rejected("an exceptional ray has width below the claimed bound");
      rays.push_back(r.coeffs);
    }

    if (!verify_cover(cones, rays, d))
      return rejected("polar cones plus exceptional rays do not cover the dual space");

    Verdict v;
    v.kind = Verdict::Kind::proved_at_least;
    v.bound = cert.claimed_bound;
    if (cert.upper_bound_functional) {
      DualFunctional f{*cert.upper_bound_functional};
      if (f.is_zero()) return rejected("zero upper-bound functional");
      if (!f.in_dual_of(l))
        return rejected("upper-bound functional is not in the dual lattice");
      ExactScalar w = width_along(p, f);
      if (w < cert.claimed_bound)
        return rejected("upper-bound functional has width below the claimed bound");
      if (w == cert.claimed_bound) v.kind = Verdict::Kind::proved_exact;
    }
    return v;
  } catch (const error& e) {
    return rejected(std::string(errc_name(e.code())) + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// Hollow direct sums.

bool ComponentEvidence::operator==(const ComponentEvidence& o) const {
  if (kind != o.kind || !(width == o.width)) return false;
  // Certificates compared shallowly by pointer; gallery constructions share
  // them across identical components, which is what the memoization needs.
  return certificate == o.certificate && nested == o.nested;
}

namespace {

struct ComponentResult {
  bool ok = false;
  std::string reason;
  ExactScalar width;
};

ComponentResult verify_component(const HollowSumComponent& c, int depth);

ComponentResult check_hollow_and_width(const HollowSumComponent& c, int depth) {
  ComponentResult res;
  const VPolytope& poly = c.polytope;
  switch (c.evidence.kind) {
    case ComponentEvidence::Kind::enumeration: {
      HollownessReport h = is_hollow(poly, c.lattice);
      if (!h.hollow) {
        res.reason = "component is not hollow";
        return res;
      }
      WidthReport w = lattice_width(poly, c.lattice);
      if (!(w.value == c.evidence.width)) {
        res.reason = "component width does not match the enumeration";
        return res;
      }
      break;
    }
    case ComponentEvidence::Kind::width_certificate: {
      if (!c.evidence.certificate) {
        res.reason = "missing width certificate";
        return res;
      }
      Verdict v = verify_width_certificate(poly, c.lattice, *c.evidence.certificate);
      if (!v.exact() || !(v.bound == c.evidence.width)) {
        res.reason = v.proved() ? "width certificate is not exact for the claimed width"
                                : "width certificate rejected: " + v.reason;
        return res;
      }
      HollownessReport h = is_hollow(poly, c.lattice);
      if (!h.hollow) {
        res.reason = "component is not hollow";
        return res;
      }
      break;
    }
    case ComponentEvidence::Kind::hollow_sum: {
      if (!c.evidence.nested) {
        res.reason = "missing nested certificate";
        return res;
      }
      SumVerdict sv = verify_hollow_sum(*c.evidence.nested, depth + 1);
      if (!sv.verdict.proved()) {
        res.reason = "nested certificate rejected: " + sv.verdict.reason;
        return res;
      }
      DirectSum rebuilt = rebuild_direct_sum(*c.evidence.nested);
      if (!(rebuilt.polytope == poly) || !(rebuilt.lattice == c.lattice)) {
        res.reason = "nested certificate does not describe the component";
        return res;
      }
      if (!(sv.derived_width == c.evidence.width)) {
        res.reason = "component width does not match the nested derivation";
        return res;
      }
      break;
    }
  }
  res.ok = true;
  res.width = c.evidence.width;
  return res;
}

ComponentResult verify_component(const HollowSumComponent& c, int depth) {
  try {
    return check_hollow_and_width(c, depth);
  } catch (const error& e) {
    ComponentResult res;
    res.reason = std::string(errc_name(e.code())) + ": " + e.what();
    return res;
  }
}

}  // namespace

SumVerdict verify_hollow_sum(const HollowSumCertificate& cert, int depth) {
  SumVerdict out;
  auto reject = [&](const std::string& why) {
    out.verdict = Verdict{};
    out.verdict.reason = why;
    return out;
  };
  if (depth > 4) return reject("nested evidence exceeds the depth cap");
  if (cert.components.empty()) return reject("certificate has no components");

  ExactScalar inv_sum(0);
  std::optional<ExactScalar> derived;
  bool lattice_polytope = true;
  bool simplex = true;
  std::size_t dim = 0, nonzero_vertices = 0;
  bool origin_vertex_everywhere = true;

  // Identical components (S^101, T^7) verify once.
  std::vector<std::pair<const HollowSumComponent*, ComponentResult>> memo;

  for (const HollowSumComponent& c : cert.components) {
    if (c.dilation.sign() <= 0) return reject("dilation factors must be positive");
    if (!c.lattice.is_linear()) return reject("component lattices must be linear");
    if (c.lattice.dim() != c.polytope.ambient_dim())
      return reject("component lattice/polytope dimension mismatch");
    inv_sum += ExactScalar(1) / c.dilation;

    const ComponentResult* cached = nullptr;
    for (const auto& [key, val] : memo) {
      if (key->polytope == c.polytope && key->lattice == c.lattice &&
          key->evidence == c.evidence) {
        cached = &val;
        break;
      }
    }
    ComponentResult res = cached ? *cached : verify_component(c, depth);
    if (!cached) memo.emplace_back(&c, res);
    if (!res.ok) return reject(res.reason);

    ExactScalar w = c.dilation * res.width;
    if (!derived || w < *derived) derived = w;

    std::size_t d = c.polytope.ambient_dim();
    dim += d;
    Point origin(d, ExactScalar(0));
    bool has_origin_vertex = c.polytope.has_vertex(origin);
    origin_vertex_everywhere = origin_vertex_everywhere && has_origin_vertex;
    simplex = simplex && has_origin_vertex && c.polytope.vertices().size() == d + 1;
    for (const Point& v : c.polytope.vertices()) {
      if (vec_is_zero(v)) continue;
      ++nonzero_vertices;
      Point scaled = vec_scale(c.dilation, v);
      bool rational = true;
      for (const auto& x : scaled) rational = rational && x.is_rational();
      lattice_polytope =
          lattice_polytope && rational && c.lattice.contains(to_rational_vec(scaled));
    }
  }

  out.inv_dilation_sum = inv_sum;
  if ((inv_sum - ExactScalar(1)).sign() < 0)
    return reject("sum of reciprocal dilations is below 1");

  out.verdict.kind = Verdict::Kind::proved_exact;
  out.verdict.bound = *derived;
  out.derived_width = *derived;
  out.dimension = dim;
  out.vertex_count = nonzero_vertices + (origin_vertex_everywhere ? 1 : 0);
  out.lattice_polytope = lattice_polytope;
  out.simplex = simplex;
  return out;
}

DirectSum rebuild_direct_sum(const HollowSumCertificate& cert) {
  DirectSumSpec spec;
  for (const HollowSumComponent& c : cert.components)
    spec.components.push_back({c.polytope, c.lattice, c.dilation, c.evidence.width});
  return direct_sum(spec);
}

}  // namespace latwidth
