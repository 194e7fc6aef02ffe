#include "latwidth/gallery.hpp"

#include <algorithm>

#include "latwidth/enumerate.hpp"

namespace latwidth {

namespace {

ExactScalar sqrt2() { return ExactScalar::sqrt_of(2); }
ExactScalar sqrt3() { return ExactScalar::sqrt_of(3); }

EndpointWitness unit_witness(const VPolytope& p, const Point& vertex) {
  EndpointWitness w;
  w.coeffs.assign(p.vertices().size(), ExactScalar(0));
  for (std::size_t i = 0; i < p.vertices().size(); ++i)
    if (p.vertices()[i] == vertex) {
      w.coeffs[i] = ExactScalar(1);
      return w;
    }
  fail(errc::invalid_argument, "witness endpoint is not a vertex");
}

CertPath vertex_path(const VPolytope& p, std::vector<Point> points) {
  CertPath cp;
  cp.start = unit_witness(p, points.front());
  cp.end = unit_witness(p, points.back());
  cp.path.points = std::move(points);
  return cp;
}

}  // namespace

Lattice fcc_lattice() {
  Mat<Rational> b(3, 3, {2, 2, 0,
                         2, 0, 2,
                         0, 2, 2});
  return Lattice::linear(std::move(b));
}

Lattice fcc_lattice_offset() {
  Mat<Rational> b(3, 3, {2, 2, 0,
                         2, 0, 2,
                         0, 2, 2});
  return Lattice(std::move(b), RatVec{-1, -1, -1});
}

GalleryItem delta0() {
  auto pt = [](long a, long b, long c) {
    return Point{ExactScalar(a), ExactScalar(b), ExactScalar(c)};
  };
  VPolytope poly(3, {pt(3, 1, 5), pt(-1, 3, -5), pt(-3, -1, 5), pt(1, -3, -5)});
  GalleryItem item{"delta0", std::move(poly), fcc_lattice_offset()};
  item.claimed_width = ExactScalar(3);
  item.claimed_hollow = true;
  item.claimed_empty = false;
  item.provenance_notes =
      "width-3 hollow lattice tetrahedron in the translated fcc lattice "
      "{a,b,c odd, a+b+c = 1 mod 4}";
  return item;
}

GalleryItem delta_family(const ExactScalar& x, const ExactScalar& y) {
  for (const ExactScalar* v : {&x, &y})
    if (v->radicand() != 0 && v->radicand() != 2)
      fail(errc::invalid_argument, "family parameters must be rational or in Q(sqrt(2))");
  ExactScalar denom = x * x + y * y - ExactScalar(2) * x - ExactScalar(2) * y;
  if (denom.sign() <= 0)
    fail(errc::on_or_inside_singular_circle,
         "parameters lie on or inside the circle with center (1,1) and radius sqrt(2)");
  ExactScalar z = (x * x + y * y) / denom;
  std::vector<Point> verts{{x, y, z}, {-y, x, -z}, {-x, -y, z}, {y, -x, -z}};
  GalleryItem item{"delta-family(" + x.str() + "," + y.str() + ")",
                   VPolytope(3, std::move(verts)), fcc_lattice_offset()};
  item.provenance_notes =
      "order-4 symmetric tetrahedron circumscribed around "
      "conv{(-1,1,1),(-1,-1,-1),(1,-1,1),(1,1,-1)}";
  return item;
}

GalleryItem delta_star() {
  ExactScalar s = sqrt2();
  GalleryItem item = delta_family(ExactScalar(2) + s, s);
  item.name = "delta-star";
  ExactScalar bound = ExactScalar(2) + s;
  item.claimed_width = bound;
  item.claimed_hollow = true;

  const VPolytope& p = item.polytope;
  Point a{ExactScalar(2) + s, s, ExactScalar(2) + s};
  Point b{-s, ExactScalar(2) + s, -ExactScalar(2) - s};
  Point c{-ExactScalar(2) - s, -s, ExactScalar(2) + s};
  Point d{s, -ExactScalar(2) - s, -ExactScalar(2) - s};

  WidthCertificate cert;
  cert.claimed_bound = bound;
  // Axis path C -> D and a diagonal path B -> D; reverses and the order-4
  // symmetry below expand these to all eight octants and the four components
  // of {a = +-b}^c.
  std::vector<Point> axis{c,
                          {s, -s, ExactScalar(2) + s},
                          {s, -ExactScalar(2) - s, ExactScalar(2) + s},
                          d};
  std::vector<Point> diag{b, {-ExactScalar(2) - s, s, -ExactScalar(2) - s}, d};
  cert.paths.push_back(vertex_path(p, axis));
  cert.paths.push_back(vertex_path(p, {axis.rbegin(), axis.rend()}));
  cert.paths.push_back(vertex_path(p, diag));
  cert.paths.push_back(vertex_path(p, {diag.rbegin(), diag.rend()}));
  cert.symmetries.push_back(Mat<Rational>(3, 3, {0, -1, 0,
                                                 1, 0, 0,
                                                 0, 0, -1}));
  Rational half(1, 2);
  cert.exceptional_rays.push_back({RatVec{0, 0, half}, bound});
  cert.exceptional_rays.push_back({RatVec{half, half, 0}, ExactScalar(2) + s + s});
  cert.exceptional_rays.push_back({RatVec{half, -half, 0}, ExactScalar(2) + s + s});
  cert.upper_bound_functional = RatVec{0, 0, half};
  item.width_certificates.push_back(std::move(cert));

  Rational quarter(1, 4);
  for (long sx : {1L, -1L}) {
    item.noted_functionals.push_back({RatVec{Rational(sx) * half, 0, 0}});
    item.noted_functionals.push_back({RatVec{0, Rational(sx) * half, 0}});
    item.noted_functionals.push_back({RatVec{0, 0, Rational(sx) * half}});
  }
  for (long sx : {1L, -1L})
    for (long sy : {1L, -1L})
      for (long sz : {1L, -1L})
        item.noted_functionals.push_back(
            {RatVec{Rational(sx) * quarter, Rational(sy) * quarter, Rational(sz) * quarter}});
  return item;
}

// ---------------------------------------------------------------------------
// Circumscribed triangles.

namespace {

// Hexagonal fan of the primitive triangle-lattice directions, cyclic order.
const std::vector<RatVec>& hex_fan() {
  static const std::vector<RatVec> fan = {
      {1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};
  return fan;
}

// delta = alpha*u + beta*v over an adjacent fan pair, alpha, beta >= 0.
struct FanDecomposition {
  RatVec u, v;
  ExactScalar alpha, beta;
};

FanDecomposition fan_decompose(const Point& delta) {
  if (vec_is_zero(delta)) fail(errc::invalid_argument, "zero edge in triangle decomposition");
  const auto& fan = hex_fan();
  for (std::size_t i = 0; i < fan.size(); ++i) {
    const RatVec& u = fan[i];
    const RatVec& v = fan[(i + 1) % fan.size()];
    // Solve the 2x2 system (u v) (alpha beta)^T = delta.
    ExactScalar det = ExactScalar(u[0] * v[1] - u[1] * v[0]);
    ExactScalar alpha = (delta[0] * ExactScalar(v[1]) - delta[1] * ExactScalar(v[0])) / det;
    ExactScalar beta = (ExactScalar(u[0]) * delta[1] - ExactScalar(u[1]) * delta[0]) / det;
    if (alpha.sign() >= 0 && beta.sign() >= 0) return {u, v, alpha, beta};
  }
  fail(errc::invalid_argument, "direction escapes the hexagonal fan");
}

// Path a -> b through the fan decomposition of b - a.
CertPath fan_path(const VPolytope& p, const Point& a, const Point& b) {
  FanDecomposition f = fan_decompose(vec_sub(b, a));
  std::vector<Point> pts{a};
  if (f.alpha.sign() > 0 && f.beta.sign() > 0)
    pts.push_back(vec_add(a, vec_scale(f.alpha, to_scalar_vec(f.u))));
  pts.push_back(b);
  return vertex_path(p, pts);
}

// Certificate for a circumscribed triangle in basis coordinates: one fan path
// per edge, the three base-edge functionals as exceptional rays, the best of
// them as the exact upper bound. Attached only when it verifies exactly.
std::optional<WidthCertificate> triangle_certificate(const VPolytope& poly,
                                                     const std::vector<Point>& cycle) {
  std::vector<DualFunctional> edge_fns{{RatVec{1, 0}}, {RatVec{0, 1}}, {RatVec{1, 1}}};
  WidthCertificate cert;
  std::optional<ExactScalar> bound;
  std::optional<RatVec> best;
  for (const DualFunctional& f : edge_fns) {
    ExactScalar w = width_along(poly, f);
    cert.exceptional_rays.push_back({f.coeffs, w});
    if (!bound || w < *bound) {
      bound = w;
      best = f.coeffs;
    }
  }
  cert.claimed_bound = *bound;
  cert.upper_bound_functional = best;
  for (std::size_t i = 0; i < 3; ++i)
    cert.paths.push_back(fan_path(poly, cycle[i], cycle[(i + 1) % 3]));

  Verdict v = verify_width_certificate(poly, Lattice::integer(2), cert);
  if (!v.exact()) return std::nullopt;
  return cert;
}

}  // namespace

GalleryItem circumscribed_triangle(const ExactScalar& x, const ExactScalar& y) {
  ExactScalar r3 = sqrt3();
  ExactScalar third(Rational(1, 3));
  Point va{ExactScalar(0), ExactScalar(0)};
  Point vb{ExactScalar(1), ExactScalar(0)};
  Point vc{ExactScalar(Rational(1, 2)), r3 / ExactScalar(2)};

  ExactScalar cy = r3 * third;  // circle center (0, sqrt(3)/3), radius^2 1/3
  ExactScalar circle = x * x + (y - cy) * (y - cy) - third;
  if (!circle.is_zero())
    fail(errc::not_on_circle, "apex must lie on the circumscribing-apex circle");
  Point apex{x, y};
  if (in_convex_hull({va, vb, vc}, apex))
    fail(errc::inside_triangle, "apex must lie outside the base triangle");

  // Sides through the base vertices: the two sides at the apex pass through
  // A and C (the apex sees the chord AC at 60 degrees), the third through B.
  Point a_dir = vec_sub(va, apex);
  Point c_dir = vec_sub(vc, apex);
  ExactScalar half(Rational(1, 2));
  auto rotated = [&](bool ccw) {
    ExactScalar sxy = r3 * half;
    ExactScalar m00 = half, m01 = ccw ? -sxy : sxy;
    ExactScalar m10 = ccw ? sxy : -sxy, m11 = half;
    return Point{m00 * a_dir[0] + m01 * a_dir[1], m10 * a_dir[0] + m11 * a_dir[1]};
  };
  auto cross = [](const Point& u, const Point& v) { return u[0] * v[1] - u[1] * v[0]; };

  std::optional<std::vector<Point>> triangle;
  for (bool ccw : {true, false}) {
    Point ra = rotated(ccw);
    if (!cross(ra, c_dir).is_zero() || dot(ra, c_dir).sign() <= 0) continue;
    ExactScalar num = cross(vec_sub(vb, apex), vec_sub(ra, a_dir));
    ExactScalar den = cross(a_dir, vec_sub(ra, a_dir));
    if (den.is_zero()) continue;
    ExactScalar t = num / den;
    Point v3 = vec_add(apex, vec_scale(t, a_dir));   // on the side through A
    Point v2 = vec_add(apex, vec_scale(t, ra));      // on the side through C
    std::vector<Point> tri{apex, v2, v3};
    if (in_convex_hull(tri, va) && in_convex_hull(tri, vb) && in_convex_hull(tri, vc)) {
      triangle = std::move(tri);
      break;
    }
  }
  if (!triangle) fail(errc::invalid_argument, "no circumscribed triangle through the apex");

  // Change to lattice-basis coordinates, where the triangle lattice is Z^2:
  // (px, py) -> (px - py/sqrt(3), 2 py/sqrt(3)).
  ExactScalar inv_r3 = third * r3;  // 1/sqrt(3)
  std::vector<Point> basis_cycle;
  for (const Point& v : *triangle)
    basis_cycle.push_back({v[0] - v[1] * inv_r3, ExactScalar(2) * v[1] * inv_r3});

  VPolytope poly(2, basis_cycle);
  GalleryItem item{"circumscribed-triangle", poly, Lattice::integer(2)};
  item.claimed_hollow = true;
  item.provenance_notes =
      "constructed in the equilateral embedding and mapped to lattice-basis "
      "coordinates by the unimodular map sending the base triangle to "
      "conv{(0,0),(1,0),(0,1)}";
  if (auto cert = triangle_certificate(poly, basis_cycle)) {
    item.claimed_width = cert->claimed_bound;
    item.width_certificates.push_back(std::move(*cert));
  }
  return item;
}

GalleryItem triangle_t() {
  ExactScalar x(Rational(-4, 7));
  ExactScalar y = ExactScalar(Rational(2, 7)) * sqrt3();
  GalleryItem item = circumscribed_triangle(x, y);
  item.name = "T";
  item.claimed_width = ExactScalar(Rational(15, 7));
  return item;
}

GalleryItem hurkens_triangle() {
  ExactScalar third(Rational(1, 3));
  ExactScalar x = -third * sqrt3();
  ExactScalar y = third * sqrt3();
  GalleryItem item = circumscribed_triangle(x, y);
  item.name = "hurkens";
  item.claimed_width = ExactScalar::quadratic(1, Rational(2, 3), 3);  // 1 + 2/sqrt(3)
  return item;
}

// ---------------------------------------------------------------------------
// The 4-dimensional simplices and the repeated direct sums.

GalleryItem s0() {
  auto pt = [](long a, long b, long c, long d) {
    return Point{ExactScalar(a), ExactScalar(b), ExactScalar(c), ExactScalar(d)};
  };
  VPolytope poly(4, {pt(0, 0, 0, 0), pt(1, 0, 0, 0), pt(0, 1, 0, 0), pt(0, 0, 1, 0),
                     pt(6, 14, 17, 101)});
  GalleryItem item{"S0", std::move(poly), Lattice::integer(4)};
  item.claimed_width = ExactScalar(4);
  item.claimed_hollow = true;
  item.claimed_empty = true;
  return item;
}

GalleryItem s_dilated() {
  GalleryItem base = s0();
  ExactScalar k(Rational(102, 101));
  GalleryItem item{"S", scale_translate(base.polytope, k, Point(4, ExactScalar(0))),
                   Lattice::integer(4)};
  item.claimed_width = ExactScalar(Rational(408, 101));  // 4 + 4/101
  item.claimed_hollow = true;
  item.claimed_empty = false;
  item.provenance_notes = "dilation of S0 by 102/101";
  return item;
}

GalleryItem repeated_sum(RepeatedSum which) {
  GalleryItem component = which == RepeatedSum::T7 ? triangle_t() : s_dilated();
  long copies = which == RepeatedSum::T7 ? 7 : 101;
  ExactScalar k{Rational(copies)};
  ExactScalar component_width = *component.claimed_width;

  HollowSumCertificate cert;
  ComponentEvidence evidence;
  if (which == RepeatedSum::T7) {
    evidence.kind = ComponentEvidence::Kind::width_certificate;
    evidence.certificate =
        std::make_shared<WidthCertificate>(component.width_certificates.at(0));
  } else {
    evidence.kind = ComponentEvidence::Kind::enumeration;
  }
  evidence.width = component_width;
  for (long i = 0; i < copies; ++i)
    cert.components.push_back({component.polytope, component.lattice, k, evidence});

  DirectSum sum = rebuild_direct_sum(cert);
  GalleryItem item{which == RepeatedSum::T7 ? "T7" : "S101", std::move(sum.polytope),
                   std::move(sum.lattice)};
  item.sum_certificates.push_back(std::move(cert));
  item.claimed_width = sum.claimed_width;
  item.claimed_hollow = true;
  item.provenance_notes = which == RepeatedSum::T7
                              ? "7-fold direct sum of 7T; facets (2^7 + 7 of them) are "
                                "documented, not enumerated"
                              : "101-fold direct sum of 101S = 102*S0";
  return item;
}

GalleryItem sebo_sum(const VPolytope& p, const Lattice& l, long m) {
  std::size_t d = p.ambient_dim();
  if (m < 2) fail(errc::invalid_argument, "sebo construction needs m >= 2");
  // The cyclic recurrence (m-2) a_i^(j) = -a_{i-1}^(j-1) has a nontrivial
  // kernel exactly when m = 3 and lcm(d, m) is even, i.e. d even: the vertex
  // set fails to span and the output is not a simplex.
  if (m == 3 && d % 2 == 0)
    fail(errc::invalid_argument,
         "m = 3 with an even-dimensional base simplex degenerates; pick another m");
  if (!l.is_linear()) fail(errc::invalid_argument, "sebo construction needs a linear lattice");
  Point origin(d, ExactScalar(0));
  if (!p.has_vertex(origin)) fail(errc::origin_not_vertex, "simplex must have a vertex at 0");
  if (!p.is_simplex()) fail(errc::not_a_simplex, "input is not a full-dimensional simplex");
  if (d <= 6 && !is_empty_simplex(p, l))
    fail(errc::not_empty_simplex, "input simplex is not empty");

  std::vector<Point> gens;
  for (const Point& v : p.vertices())
    if (!vec_is_zero(v)) gens.push_back(v);

  std::size_t dim = d * static_cast<std::size_t>(m);
  std::vector<Point> verts{Point(dim, ExactScalar(0))};
  auto embed = [&](const Point& v, long block, const ExactScalar& scale, Point& out) {
    for (std::size_t t = 0; t < d; ++t)
      out[static_cast<std::size_t>(block) * d + t] += scale * v[t];
  };
  for (long j = 0; j < m; ++j)
    for (std::size_t i = 0; i < d; ++i) {
      Point w(dim, ExactScalar(0));
      embed(gens[i], j, ExactScalar(m - 2), w);
      embed(gens[(i + 1) % d], (j + 1) % m, ExactScalar(1), w);
      verts.push_back(std::move(w));
    }

  VPolytope poly(dim, std::move(verts));
  if (poly.vertices().size() != dim + 1)
    fail(errc::invalid_argument, "sebo construction produced coinciding vertices");

  Mat<Rational> basis(dim, dim);
  for (long j = 0; j < m; ++j)
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c)
        basis(static_cast<std::size_t>(j) * d + r, static_cast<std::size_t>(j) * d + c) =
            l.basis()(r, c);

  GalleryItem item{"sebo(" + std::to_string(d) + "," + std::to_string(m) + ")",
                   std::move(poly), Lattice::linear(std::move(basis))};
  item.claimed_empty = true;
  if (d <= 5) {
    ExactScalar w = lattice_width(p, l).value;
    item.claimed_width_lower_bound = ExactScalar(m - 3) * w;
  }
  item.provenance_notes =
      "cyclic stretched embedding of an empty simplex; width at least (m-3) "
      "times the base width, emptiness by construction";
  return item;
}

GalleryItem unit_square() {
  auto pt = [](long a, long b) { return Point{ExactScalar(a), ExactScalar(b)}; };
  VPolytope poly(2, {pt(0, 0), pt(1, 0), pt(0, 1), pt(1, 1)});
  GalleryItem item{"square-counterexample", std::move(poly), Lattice::integer(2)};
  item.claimed_width = ExactScalar(1);
  item.claimed_hollow = true;
  item.provenance_notes =
      "unit square; its boundary-path certificate is the canonical rejected "
      "example (the axis functionals have width 1)";
  return item;
}

WidthCertificate square_boundary_certificate() {
  GalleryItem sq = unit_square();
  auto pt = [](long a, long b) { return Point{ExactScalar(a), ExactScalar(b)}; };
  WidthCertificate cert;
  cert.claimed_bound = ExactScalar(2);
  std::vector<std::vector<Point>> paths{
      {pt(0, 0), pt(1, 0), pt(1, 1)},
      {pt(1, 1), pt(1, 0), pt(0, 0)},
      {pt(0, 1), pt(0, 0), pt(1, 0)},
      {pt(1, 0), pt(0, 0), pt(0, 1)},
  };
  for (auto& p : paths) cert.paths.push_back(vertex_path(sq.polytope, std::move(p)));
  return cert;
}

// ---------------------------------------------------------------------------
// Name lookup.

namespace {

std::optional<std::vector<std::string>> parse_call(const std::string& name,
                                                   const std::string& head) {
  if (name.size() < head.size() + 2 || name.compare(0, head.size(), head) != 0) return {};
  if (name[head.size()] != '(' || name.back() != ')') return {};
  std::string args = name.substr(head.size() + 1, name.size() - head.size() - 2);
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = args.find(',', pos);
    out.push_back(args.substr(pos, comma - pos));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

VPolytope unit_simplex(std::size_t d) {
  std::vector<Point> verts{Point(d, ExactScalar(0))};
  for (std::size_t i = 0; i < d; ++i) {
    Point e(d, ExactScalar(0));
    e[i] = ExactScalar(1);
    verts.push_back(std::move(e));
  }
  return VPolytope(d, std::move(verts));
}

}  // namespace

std::vector<std::string> gallery_names() {
  return {"delta0", "delta-star", "delta-family(x,y)", "hurkens",  "T",
          "T7",     "S0",         "S",                 "S101",     "sebo(d,m)",
          "square-counterexample"};
}

std::optional<GalleryItem> gallery_by_name(const std::string& name) {
  if (name == "delta0") return delta0();
  if (name == "delta-star") return delta_star();
  if (name == "hurkens") return hurkens_triangle();
  if (name == "T") return triangle_t();
  if (name == "T7") return repeated_sum(RepeatedSum::T7);
  if (name == "S0") return s0();
  if (name == "S") return s_dilated();
  if (name == "S101") return repeated_sum(RepeatedSum::S101);
  if (name == "square-counterexample") return unit_square();
  if (auto args = parse_call(name, "delta-family")) {
    if (args->size() != 2) fail(errc::parse_error, "delta-family takes two rationals");
    auto x = Rational::parse((*args)[0]);
    auto y = Rational::parse((*args)[1]);
    if (!x || !y) fail(errc::parse_error, "delta-family takes two rationals");
    return delta_family(ExactScalar(*x), ExactScalar(*y));
  }
  if (auto args = parse_call(name, "sebo")) {
    if (args->size() != 2) fail(errc::parse_error, "sebo takes two integers");
    auto d = Rational::parse((*args)[0]);
    auto m = Rational::parse((*args)[1]);
    if (!d || !m || !d->is_integer() || !m->is_integer() || d->sign() <= 0)
      fail(errc::parse_error, "sebo takes two positive integers");
    std::size_t dd = static_cast<std::size_t>(d->numerator().get_si());
    long mm = m->numerator().get_si();
    return sebo_sum(unit_simplex(dd), Lattice::integer(dd), mm);
  }
  return std::nullopt;
}

}  // namespace latwidth
