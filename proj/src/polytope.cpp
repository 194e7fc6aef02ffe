#include "latwidth/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace latwidth {

namespace {

long joint_radicand(const std::vector<Point>& pts) {
  long d = 0;
  for (const Point& p : pts)
    for (const ExactScalar& x : p) {
      if (x.radicand() == 0) continue;
      if (d == 0) d = x.radicand();
      else if (d != x.radicand())
        fail(errc::radicand_mismatch, "polytope mixes radicands " + std::to_string(d) +
                                          " and " + std::to_string(x.radicand()));
    }
  return d;
}

// Iterate over all size-k index subsets of {0..n-1}.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Unique solution of the (possibly rectangular) system A x = b, or nullopt if
// the system is inconsistent or underdetermined.
std::optional<std::vector<ExactScalar>> solve_unique(Mat<ExactScalar> a,
                                                     std::vector<ExactScalar> b) {
  std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    std::swap(b[p], b[r]);
    ExactScalar piv = a(r, c);
    for (std::size_t j = 0; j < cols; ++j) a(r, j) /= piv;
    b[r] /= piv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      ExactScalar f = a(i, c);
      for (std::size_t j = 0; j < cols; ++j) a(i, j) -= f * a(r, j);
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (!b[i].is_zero()) return std::nullopt;  // inconsistent
  if (pivot_col.size() < cols) return std::nullopt;  // underdetermined
  std::vector<ExactScalar> x(cols);
  for (std::size_t i = 0; i < cols; ++i) x[pivot_col[i]] = b[i];
  return x;
}

}  // namespace

bool in_convex_hull(const std::vector<Point>& points, const Point& x) {
  if (points.empty()) return false;
  std::size_t d = x.size();
  // Caratheodory: x is in the hull iff it is a convex combination of some
  // affinely independent subset of at most d+1 points. Affinely dependent
  // subsets yield singular systems and are skipped; a smaller subset covers
  // those witnesses.
  for (std::size_t k = 1; k <= std::min(points.size(), d + 1); ++k) {
    bool found = false;
    for_each_subset(points.size(), k, [&](const std::vector<std::size_t>& idx) {
      if (found) return;
      Mat<ExactScalar> a(d + 1, k);
      std::vector<ExactScalar> b(d + 1);
      for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < d; ++i) a(i, j) = points[idx[j]][i];
        a(d, j) = ExactScalar(1);
      }
      for (std::size_t i = 0; i < d; ++i) b[i] = x[i];
      b[d] = ExactScalar(1);
      auto sol = solve_unique(std::move(a), std::move(b));
      if (!sol) return;
      for (const auto& l : *sol)
        if (l.sign() < 0) return;
      found = true;
    });
    if (found) return true;
  }
  return false;
}

VPolytope::VPolytope(std::size_t ambient_dim, std::vector<Point> vertices)
    : ambient_dim_(ambient_dim) {
  if (vertices.empty()) fail(errc::invalid_argument, "polytope needs at least one vertex");
  for (const Point& v : vertices)
    if (v.size() != ambient_dim)
      fail(errc::invalid_argument, "vertex dimension mismatch");
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  vertices_ = std::move(vertices);
  radicand_ = joint_radicand(vertices_);
}

VPolytope VPolytope::from_points(std::size_t ambient_dim, std::vector<Point> points) {
  if (ambient_dim > 6)
    fail(errc::dimension_too_large, "hull extraction capped at dimension 6");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::vector<Point> verts;
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::vector<Point> others;
    for (std::size_t j = 0; j < points.size(); ++j)
      if (j != i) others.push_back(points[j]);
    if (others.empty() || !in_convex_hull(others, points[i])) verts.push_back(points[i]);
  }
  return VPolytope(ambient_dim, std::move(verts));
}

std::size_t VPolytope::affine_dim() const {
  if (vertices_.size() <= 1) return 0;
  Mat<ExactScalar> diffs(vertices_.size() - 1, ambient_dim_);
  for (std::size_t i = 1; i < vertices_.size(); ++i)
    for (std::size_t j = 0; j < ambient_dim_; ++j)
      diffs(i - 1, j) = vertices_[i][j] - vertices_[0][j];
  return rank(std::move(diffs));
}

bool VPolytope::is_simplex() const {
  return vertices_.size() == ambient_dim_ + 1 && is_full_dimensional();
}

bool VPolytope::has_vertex(const Point& p) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), p);
}

namespace {

// Normal of the hyperplane through d points (rows are the d-1 difference
// vectors) via signed maximal minors; zero vector if they do not span.
Point hyperplane_normal(const Mat<ExactScalar>& rows) {
  std::size_t d = rows.cols();
  Point n(d, ExactScalar(0));
  for (std::size_t skip = 0; skip < d; ++skip) {
    Mat<ExactScalar> minor(d - 1, d - 1);
    for (std::size_t i = 0; i < d - 1; ++i) {
      std::size_t jj = 0;
      for (std::size_t j = 0; j < d; ++j) {
        if (j == skip) continue;
        minor(i, jj++) = rows(i, j);
      }
    }
    ExactScalar det = determinant(std::move(minor));
    n[skip] = (skip % 2 == 0) ? det : -det;
  }
  return n;
}

bool all_rational(const Point& v) {
  for (const auto& x : v)
    if (!x.is_rational()) return false;
  return true;
}

}  // namespace

Point hyperplane_through(const std::vector<Point>& pts, std::size_t ambient_dim) {
  if (ambient_dim == 1) return Point{ExactScalar(1)};
  if (pts.size() != ambient_dim)
    fail(errc::invalid_argument, "hyperplane needs exactly d points");
  Mat<ExactScalar> rows(ambient_dim - 1, ambient_dim);
  for (std::size_t i = 1; i < ambient_dim; ++i)
    for (std::size_t j = 0; j < ambient_dim; ++j)
      rows(i - 1, j) = pts[i][j] - pts[0][j];
  return hyperplane_normal(rows);
}

namespace {

// Positive rescaling to the canonical representative.
void canonicalize_halfspace(Point& normal, ExactScalar& rhs) {
  if (all_rational(normal)) {
    RatVec r(normal.size());
    for (std::size_t i = 0; i < normal.size(); ++i) r[i] = normal[i].as_rational();
    RatVec prim = primitive_integer_direction(r);
    // prim = r / s with s > 0; rescale rhs by the same factor.
    std::size_t k = 0;
    while (prim[k].is_zero()) ++k;
    Rational s = r[k] / prim[k];
    for (std::size_t i = 0; i < normal.size(); ++i) normal[i] = ExactScalar(prim[i]);
    rhs = rhs / ExactScalar(s);
  } else {
    std::size_t k = 0;
    while (normal[k].is_zero()) ++k;
    ExactScalar s = normal[k].abs();
    for (auto& x : normal) x = x / s;
    rhs = rhs / s;
  }
}

}  // namespace

HRep facets(const VPolytope& p) {
  std::size_t d = p.ambient_dim();
  if (d > 6) fail(errc::dimension_too_large, "facet enumeration capped at dimension 6");
  if (!p.is_full_dimensional())
    fail(errc::degenerate_polytope, "facet enumeration needs a full-dimensional polytope");

  const auto& verts = p.vertices();
  std::set<std::pair<Point, ExactScalar>> seen;
  std::vector<Halfspace> out;

  for_each_subset(verts.size(), d, [&](const std::vector<std::size_t>& idx) {
    std::vector<Point> subset;
    subset.reserve(d);
    for (std::size_t i : idx) subset.push_back(verts[i]);
    Point n = hyperplane_through(subset, d);
    if (vec_is_zero(n)) return;  // subset does not span a hyperplane
    ExactScalar rhs = dot(n, verts[idx[0]]);
    int lo = 0, hi = 0;
    for (const Point& v : verts) {
      int s = (dot(n, v) - rhs).sign();
      if (s < 0) ++lo;
      if (s > 0) ++hi;
    }
    if (lo > 0 && hi > 0) return;  // not supporting
    if (hi > 0) {                  // flip to outer orientation
      for (auto& x : n) x = -x;
      rhs = -rhs;
    }
    canonicalize_halfspace(n, rhs);
    if (seen.insert({n, rhs}).second) out.push_back({std::move(n), std::move(rhs)});
  });

  std::sort(out.begin(), out.end(), [](const Halfspace& a, const Halfspace& b) {
    return std::tie(a.normal, a.rhs) < std::tie(b.normal, b.rhs);
  });
  return HRep{d, std::move(out)};
}

bool contains_point(const HRep& h, const Point& x, bool strict) {
  for (const Halfspace& hs : h.halfspaces) {
    int s = (dot(hs.normal, x) - hs.rhs).sign();
    if (s > 0 || (strict && s == 0)) return false;
  }
  return true;
}

bool contains_point(const VPolytope& p, const Point& x, bool strict) {
  if (x.size() != p.ambient_dim()) fail(errc::invalid_argument, "point dimension mismatch");
  return contains_point(facets(p), x, strict);
}

ExactScalar width_along(const VPolytope& p, const DualFunctional& f) {
  if (f.is_zero()) fail(errc::invalid_argument, "width along the zero functional");
  if (f.coeffs.size() != p.ambient_dim())
    fail(errc::invalid_argument, "functional dimension mismatch");
  ExactScalar lo = f.eval(p.vertices()[0]), hi = lo;
  for (const Point& v : p.vertices()) {
    ExactScalar val = f.eval(v);
    if (val < lo) lo = val;
    if (val > hi) hi = val;
  }
  return hi - lo;
}

VPolytope scale_translate(const VPolytope& p, const ExactScalar& k, const Point& t) {
  if (k.sign() <= 0) fail(errc::invalid_argument, "dilation factor must be positive");
  if (t.size() != p.ambient_dim()) fail(errc::invalid_argument, "translation dimension mismatch");
  std::vector<Point> verts;
  verts.reserve(p.vertices().size());
  for (const Point& v : p.vertices()) verts.push_back(vec_add(vec_scale(k, v), t));
  return VPolytope(p.ambient_dim(), std::move(verts));
}

DirectSum direct_sum(const DirectSumSpec& spec) {
  if (spec.components.empty())
    fail(errc::invalid_argument, "direct sum needs at least one component");

  std::size_t total_dim = 0;
  for (const auto& c : spec.components) {
    if (c.dilation.sign() <= 0)
      fail(errc::invalid_argument, "direct sum dilation factors must be positive");
    if (!c.lattice.is_linear())
      fail(errc::invalid_argument, "direct sum components need linear lattices");
    if (c.lattice.dim() != c.polytope.ambient_dim())
      fail(errc::invalid_argument, "component lattice/polytope dimension mismatch");
    Point origin(c.polytope.ambient_dim(), ExactScalar(0));
    if (!contains_point(c.polytope, origin, /*strict=*/false))
      fail(errc::origin_not_contained, "direct sum component does not contain the origin");
    total_dim += c.polytope.ambient_dim();
  }

  bool origin_vertex = true;
  bool simplex = true;
  bool lattice_polytope = true;
  ExactScalar inv_sum(0);
  std::optional<ExactScalar> claimed;

  std::vector<Point> verts;
  Mat<Rational> basis(total_dim, total_dim);
  std::size_t block = 0;
  for (const auto& c : spec.components) {
    std::size_t d = c.polytope.ambient_dim();
    Point origin(d, ExactScalar(0));
    bool comp_origin_vertex = c.polytope.has_vertex(origin);
    origin_vertex = origin_vertex && comp_origin_vertex;
    simplex = simplex && comp_origin_vertex && c.polytope.vertices().size() == d + 1;

    for (const Point& v : c.polytope.vertices()) {
      if (vec_is_zero(v)) continue;
      Point scaled = vec_scale(c.dilation, v);
      if (lattice_polytope) {
        bool in = all_rational(scaled) && c.lattice.contains(to_rational_vec(scaled));
        lattice_polytope = lattice_polytope && in;
      }
      Point embedded(total_dim, ExactScalar(0));
      for (std::size_t j = 0; j < d; ++j) embedded[block + j] = scaled[j];
      verts.push_back(std::move(embedded));
    }
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        basis(block + i, block + j) = c.lattice.basis()(i, j);

    inv_sum += ExactScalar(1) / c.dilation;
    ExactScalar w = c.dilation * c.supplied_width;
    if (!claimed || w < *claimed) claimed = w;
    block += d;
  }
  if (origin_vertex) verts.push_back(Point(total_dim, ExactScalar(0)));

  DirectSum out{VPolytope(total_dim, std::move(verts)), Lattice::linear(std::move(basis))};
  out.dimension = total_dim;
  out.claimed_width = *claimed;
  out.inv_dilation_sum = inv_sum;
  out.sum_condition_holds = (inv_sum - ExactScalar(1)).sign() >= 0;
  out.origin_is_vertex = origin_vertex;
  out.simplex = simplex;
  out.lattice_polytope = lattice_polytope;
  return out;
}

}  // namespace latwidth
