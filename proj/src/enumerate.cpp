#include "latwidth/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace latwidth {

namespace {

// One inequality coeffs . y <= rhs (or < rhs when strict) over the permuted
// enumeration variables.
struct LinRow {
  Point coeffs;
  ExactScalar rhs;
  bool strict = false;
};

void normalize_row(LinRow& r) {
  std::size_t k = 0;
  while (k < r.coeffs.size() && r.coeffs[k].is_zero()) ++k;
  if (k == r.coeffs.size()) return;
  ExactScalar s = r.coeffs[k].abs();
  for (auto& c : r.coeffs) c = c / s;
  r.rhs = r.rhs / s;
}

// Drops trivially-true constant rows and duplicates. Returns false when a
// constant row is infeasible (the system is empty).
bool simplify_rows(std::vector<LinRow>& rows) {
  std::vector<LinRow> keep;
  std::set<std::tuple<Point, ExactScalar, bool>> seen;
  for (LinRow& r : rows) {
    if (vec_is_zero(r.coeffs)) {
      int s = r.rhs.sign();
      if (s < 0 || (r.strict && s == 0)) return false;
      continue;
    }
    normalize_row(r);
    if (seen.insert({r.coeffs, r.rhs, r.strict}).second) keep.push_back(std::move(r));
  }
  rows = std::move(keep);
  return true;
}

// Fourier-Motzkin elimination of variable `var`. Combinations of a lower and
// an upper row are strict if either side is.
std::vector<LinRow> fm_eliminate(const std::vector<LinRow>& rows, std::size_t var) {
  std::vector<const LinRow*> lower, upper;
  std::vector<LinRow> out;
  for (const LinRow& r : rows) {
    int s = r.coeffs[var].sign();
    if (s == 0) out.push_back(r);
    else if (s > 0) upper.push_back(&r);
    else lower.push_back(&r);
  }
  for (const LinRow* lo : lower)
    for (const LinRow* up : upper) {
      ExactScalar a = up->coeffs[var];   // > 0
      ExactScalar b = -lo->coeffs[var];  // > 0
      LinRow combo;
      combo.coeffs.resize(rows[0].coeffs.size());
      for (std::size_t j = 0; j < combo.coeffs.size(); ++j)
        combo.coeffs[j] = a * lo->coeffs[j] + b * up->coeffs[j];
      combo.rhs = a * lo->rhs + b * up->rhs;
      combo.strict = lo->strict || up->strict;
      out.push_back(std::move(combo));
    }
  return out;
}

struct Fibering {
  // systems[k] constrains variables 0..k-1 only; systems[d] is the full set.
  std::vector<std::vector<LinRow>> systems;
  bool feasible = true;
};

Fibering build_fibering(std::vector<LinRow> rows, std::size_t dim) {
  Fibering f;
  f.systems.assign(dim + 1, {});
  if (!simplify_rows(rows)) {
    f.feasible = false;
    return f;
  }
  f.systems[dim] = std::move(rows);
  for (std::size_t k = dim; k > 1; --k) {
    std::vector<LinRow> next = fm_eliminate(f.systems[k], k - 1);
    if (!simplify_rows(next)) {
      f.feasible = false;
      return f;
    }
    f.systems[k - 1] = std::move(next);
  }
  return f;
}

// Tightest integer interval for variable `k` given the fixed prefix.
bool integer_bounds(const std::vector<LinRow>& rows, std::size_t k,
                    const std::vector<mpz_class>& prefix, mpz_class& lo, mpz_class& hi) {
  bool has_lo = false, has_hi = false;
  for (const LinRow& r : rows) {
    int s = r.coeffs[k].sign();
    if (s == 0) continue;
    ExactScalar rest = r.rhs;
    for (std::size_t j = 0; j < k; ++j)
      if (!r.coeffs[j].is_zero())
        rest -= r.coeffs[j] * ExactScalar(Rational::from_integer(prefix[j]));
    ExactScalar bound = rest / r.coeffs[k];
    if (s > 0) {  // y_k <= bound (or <)
      mpz_class b = r.strict ? bound.ceil() - 1 : bound.floor();
      if (!has_hi || b < hi) hi = b;
      has_hi = true;
    } else {      // y_k >= bound (or >)
      mpz_class b = r.strict ? bound.floor() + 1 : bound.ceil();
      if (!has_lo || b > lo) lo = b;
      has_lo = true;
    }
  }
  if (!has_lo || !has_hi)
    fail(errc::invalid_argument, "unbounded fiber during enumeration");
  return lo <= hi;
}

void fiber_dfs(const Fibering& fib, std::size_t depth, std::vector<mpz_class>& prefix,
               std::vector<std::vector<mpz_class>>& out) {
  std::size_t d = fib.systems.size() - 1;
  if (depth == d) {
    out.push_back(prefix);
    return;
  }
  mpz_class lo, hi;
  if (!integer_bounds(fib.systems[depth + 1], depth, prefix, lo, hi)) return;
  for (mpz_class n = lo; n <= hi; ++n) {
    prefix.push_back(n);
    fiber_dfs(fib, depth + 1, prefix, out);
    prefix.pop_back();
  }
}

HRep simplex_hrep(const VPolytope& p) {
  std::size_t d = p.ambient_dim();
  const auto& verts = p.vertices();
  HRep h{d, {}};
  for (std::size_t skip = 0; skip < verts.size(); ++skip) {
    std::vector<Point> others;
    for (std::size_t i = 0; i < verts.size(); ++i)
      if (i != skip) others.push_back(verts[i]);
    Point n = hyperplane_through(others, d);
    if (vec_is_zero(n)) fail(errc::not_a_simplex, "degenerate simplex facet");
    ExactScalar rhs = dot(n, others[0]);
    if ((dot(n, verts[skip]) - rhs).sign() > 0) {
      for (auto& x : n) x = -x;
      rhs = -rhs;
    }
    h.halfspaces.push_back({std::move(n), std::move(rhs)});
  }
  return h;
}

std::vector<RatVec> enumerate_core(const VPolytope& p, const Lattice& l, PointMode mode,
                                   const HRep& hrep) {
  std::size_t d = p.ambient_dim();
  if (l.dim() != d) fail(errc::invalid_argument, "lattice/polytope dimension mismatch");

  // Fibering order: narrowest bounding-box extent first.
  std::vector<Point> lattice_verts;
  lattice_verts.reserve(p.vertices().size());
  for (const Point& v : p.vertices()) lattice_verts.push_back(l.to_lattice_coords(v));
  std::vector<std::size_t> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<ExactScalar> extent(d);
  for (std::size_t j = 0; j < d; ++j) {
    ExactScalar lo = lattice_verts[0][j], hi = lo;
    for (const Point& y : lattice_verts) {
      if (y[j] < lo) lo = y[j];
      if (y[j] > hi) hi = y[j];
    }
    extent[j] = hi - lo;
  }
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t a, std::size_t b) { return extent[a] < extent[b]; });

  // Facet inequalities in permuted lattice coordinates.
  Mat<ExactScalar> basis = to_scalar_mat(l.basis());
  Point offset = to_scalar_vec(l.offset());
  std::vector<LinRow> rows;
  rows.reserve(hrep.halfspaces.size());
  for (const Halfspace& hs : hrep.halfspaces) {
    LinRow r;
    r.coeffs.assign(d, ExactScalar(0));
    for (std::size_t pos = 0; pos < d; ++pos) {
      std::size_t j = perm[pos];
      ExactScalar c(0);
      for (std::size_t i = 0; i < d; ++i)
        if (!hs.normal[i].is_zero() && !basis(i, j).is_zero()) c += hs.normal[i] * basis(i, j);
      r.coeffs[pos] = c;
    }
    r.rhs = hs.rhs - dot(hs.normal, offset);
    r.strict = (mode == PointMode::interior);
    rows.push_back(std::move(r));
  }

  Fibering fib = build_fibering(std::move(rows), d);
  std::vector<std::vector<mpz_class>> raw;
  if (fib.feasible) {
    std::vector<mpz_class> prefix;
    fiber_dfs(fib, 0, prefix, raw);
  }

  std::vector<RatVec> out;
  out.reserve(raw.size());
  for (const auto& y : raw) {
    RatVec z(d);
    for (std::size_t pos = 0; pos < d; ++pos) z[perm[pos]] = Rational::from_integer(y[pos]);
    out.push_back(l.from_lattice_coords(z));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<RatVec> lattice_points_in(const VPolytope& p, const Lattice& l, PointMode mode) {
  if (p.ambient_dim() > 6)
    fail(errc::dimension_too_large, "point enumeration capped at dimension 6");
  if (!p.is_full_dimensional())
    fail(errc::degenerate_polytope, "point enumeration needs a full-dimensional polytope");
  return enumerate_core(p, l, mode, facets(p));
}

HollownessReport is_hollow(const VPolytope& p, const Lattice& l) {
  auto pts = lattice_points_in(p, l, PointMode::interior);
  HollownessReport r;
  r.hollow = pts.empty();
  if (!pts.empty()) r.witness = pts.front();
  return r;
}

bool is_empty_simplex(const VPolytope& p, const Lattice& l) {
  std::size_t d = p.ambient_dim();
  if (d > 7) fail(errc::dimension_too_large, "emptiness check capped at dimension 7");
  if (!p.is_simplex()) fail(errc::not_a_simplex, "emptiness is defined for full-dimensional simplices");
  std::vector<RatVec> verts;
  for (const Point& v : p.vertices()) {
    for (const ExactScalar& x : v)
      if (!x.is_rational())
        fail(errc::vertices_not_in_lattice, "simplex vertex is not a lattice point");
    RatVec rv = to_rational_vec(v);
    if (!l.contains(rv)) fail(errc::vertices_not_in_lattice, "simplex vertex is not a lattice point");
    verts.push_back(std::move(rv));
  }
  std::sort(verts.begin(), verts.end());
  auto pts = enumerate_core(p, l, PointMode::closed, simplex_hrep(p));
  return pts == verts;
}

// ---------------------------------------------------------------------------
// Lattice width.

namespace {

struct Gso {
  Mat<ExactScalar> mu;           // lower triangular, unit diagonal
  std::vector<ExactScalar> b;    // squared Gram-Schmidt norms, all > 0
};

Gso gso_from_gram(const Mat<ExactScalar>& g) {
  std::size_t d = g.rows();
  Gso s{Mat<ExactScalar>::identity(d), std::vector<ExactScalar>(d)};
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      ExactScalar v = g(i, j);
      for (std::size_t k = 0; k < j; ++k) v -= s.mu(i, k) * s.mu(j, k) * s.b[k];
      s.mu(i, j) = v / s.b[j];
    }
    ExactScalar bi = g(i, i);
    for (std::size_t k = 0; k < i; ++k) bi -= s.mu(i, k) * s.mu(i, k) * s.b[k];
    if (bi.sign() <= 0) fail(errc::degenerate_polytope, "width form is not positive definite");
    s.b[i] = bi;
  }
  return s;
}

// Gram-based exact LLL (delta = 3/4) on the quadratic form; returns the
// unimodular change of basis. The reduction only sharpens the initial upper
// bound, so the iteration guard does not affect completeness.
Mat<Rational> lll_reduce(const Mat<ExactScalar>& g0) {
  std::size_t d = g0.rows();
  Mat<Rational> u = Mat<Rational>::identity(d);
  auto current_gram = [&]() {
    Mat<ExactScalar> us = to_scalar_mat(u);
    return mat_mul(mat_mul(us.transposed(), g0), us);
  };
  const ExactScalar half(Rational(1, 2));
  const ExactScalar delta(Rational(3, 4));
  for (int guard = 0; guard < 10000; ++guard) {
    Mat<ExactScalar> g = current_gram();
    Gso s = gso_from_gram(g);
    bool changed = false;
    for (std::size_t k = 1; k < d && !changed; ++k)
      for (std::size_t j = k; j-- > 0 && !changed;) {
        if (!(s.mu(k, j).abs() > half)) continue;
        Rational q = Rational::from_integer((s.mu(k, j) + half).floor());
        for (std::size_t i = 0; i < d; ++i) u(i, k) -= q * u(i, j);
        changed = true;
      }
    if (changed) continue;
    bool swapped = false;
    for (std::size_t k = 1; k < d && !swapped; ++k) {
      ExactScalar lhs = s.b[k];
      ExactScalar rhs = (delta - s.mu(k, k - 1) * s.mu(k, k - 1)) * s.b[k - 1];
      if (lhs < rhs) {
        for (std::size_t i = 0; i < d; ++i) std::swap(u(i, k), u(i, k - 1));
        swapped = true;
      }
    }
    if (!swapped) break;
  }
  return u;
}

// Largest integer n with n <= center + sqrt(q), exact (q >= 0). The
// predicate is monotone, so a bracket-and-bisect around the double guess
// stays correct whatever the guess.
mpz_class ellipsoid_hi(const ExactScalar& center, const ExactScalar& q) {
  auto ok = [&](const mpz_class& n) {
    ExactScalar diff = ExactScalar(Rational::from_integer(n)) - center;
    if (diff.sign() <= 0) return true;
    return (diff * diff - q).sign() <= 0;
  };
  double guess = center.to_double() + std::sqrt(std::max(0.0, q.to_double()));
  mpz_class n(std::isfinite(guess) ? std::floor(guess) : 0.0);
  mpz_class step = 1;
  if (ok(n)) {
    while (ok(n + step)) {
      n += step;
      step *= 2;
    }
  } else {
    while (!ok(n - step)) {
      n -= step;
      step *= 2;
    }
    n -= step;
  }
  while (step > 1) {
    step /= 2;
    if (ok(n + step)) n += step;
  }
  return n;
}

mpz_class ellipsoid_lo(const ExactScalar& center, const ExactScalar& q) {
  return -ellipsoid_hi(-center, q);
}

void ellipsoid_dfs(const Mat<ExactScalar>& lmat, const std::vector<ExactScalar>& dvec,
                   const ExactScalar& budget, std::size_t level, const ExactScalar& acc,
                   std::vector<mpz_class>& z, std::vector<std::vector<mpz_class>>& out) {
  std::size_t i = level;
  ExactScalar ci(0);
  for (std::size_t j = i + 1; j < dvec.size(); ++j)
    if (!lmat(j, i).is_zero()) ci += lmat(j, i) * ExactScalar(Rational::from_integer(z[j]));
  ExactScalar rem = budget - acc;
  ExactScalar q = rem / dvec[i];
  mpz_class lo = ellipsoid_lo(-ci, q), hi = ellipsoid_hi(-ci, q);
  for (mpz_class n = lo; n <= hi; ++n) {
    z[i] = n;
    ExactScalar term = ExactScalar(Rational::from_integer(n)) + ci;
    ExactScalar acc2 = acc + dvec[i] * term * term;
    if ((acc2 - budget).sign() > 0) continue;  // cannot fire: the range is exact
    if (i == 0) {
      bool zero = true;
      for (const auto& m : z) zero = zero && m == 0;
      if (!zero) out.push_back(z);
    } else {
      ellipsoid_dfs(lmat, dvec, budget, i - 1, acc2, z, out);
    }
  }
  z[i] = 0;
}

RatVec canonical_sign(RatVec v) {
  for (const Rational& x : v) {
    if (x.is_zero()) continue;
    if (x.sign() < 0)
      for (auto& y : v) y = -y;
    break;
  }
  return v;
}

}  // namespace

WidthReport lattice_width(const VPolytope& p, const Lattice& l) {
  std::size_t d = p.ambient_dim();
  if (d > 5) fail(errc::dimension_too_large, "width enumeration capped at dimension 5");
  if (l.dim() != d) fail(errc::invalid_argument, "lattice/polytope dimension mismatch");
  if (!p.is_full_dimensional())
    fail(errc::degenerate_polytope, "width infimum of a degenerate polytope is not attained");

  const auto& verts = p.vertices();
  std::size_t n = verts.size();

  // Q(f) = sum_v (f(v - c))^2 = f^T G f with c the vertex centroid.
  Point centroid(d, ExactScalar(0));
  for (const Point& v : verts) centroid = vec_add(centroid, v);
  ExactScalar inv_n = ExactScalar(1) / ExactScalar(Rational(static_cast<long>(n)));
  centroid = vec_scale(inv_n, centroid);
  Mat<ExactScalar> g(d, d);
  for (const Point& v : verts) {
    Point w = vec_sub(v, centroid);
    for (std::size_t i = 0; i < d; ++i) {
      if (w[i].is_zero()) continue;
      for (std::size_t j = 0; j < d; ++j)
        if (!w[j].is_zero()) g(i, j) += w[i] * w[j];
    }
  }

  Mat<Rational> dual_basis = l.dual().basis();
  Mat<ExactScalar> bd = to_scalar_mat(dual_basis);
  Mat<ExactScalar> gram = mat_mul(mat_mul(bd.transposed(), g), bd);

  Mat<Rational> u = lll_reduce(gram);
  Mat<Rational> reduced_basis = mat_mul(dual_basis, u);
  Mat<ExactScalar> us = to_scalar_mat(u);
  Mat<ExactScalar> reduced_gram = mat_mul(mat_mul(us.transposed(), gram), us);

  // Upper bound W: reduced dual basis columns plus coordinate functionals
  // that happen to lie in the dual lattice.
  std::optional<ExactScalar> w_bound;
  for (std::size_t j = 0; j < d; ++j) {
    DualFunctional f{reduced_basis.col(j)};
    ExactScalar w = width_along(p, f);
    if (!w_bound || w < *w_bound) w_bound = w;
  }
  for (std::size_t j = 0; j < d; ++j) {
    RatVec e(d, Rational(0));
    e[j] = Rational(1);
    DualFunctional f{e};
    if (!f.in_dual_of(l)) continue;
    ExactScalar w = width_along(p, f);
    if (w < *w_bound) w_bound = w;
  }

  ExactScalar budget = ExactScalar(Rational(static_cast<long>(n))) * *w_bound * *w_bound;

  Mat<ExactScalar> lmat;
  std::vector<ExactScalar> dvec;
  ldl_decompose(reduced_gram, lmat, dvec);

  std::vector<std::vector<mpz_class>> zs;
  std::vector<mpz_class> z(d, 0);
  ellipsoid_dfs(lmat, dvec, budget, d - 1, ExactScalar(0), z, zs);

  std::optional<ExactScalar> best;
  std::set<RatVec> best_coeffs;
  for (const auto& cand : zs) {
    mpz_class content(0);
    for (const auto& m : cand) {
      mpz_class gcd;
      mpz_gcd(gcd.get_mpz_t(), content.get_mpz_t(), m.get_mpz_t());
      content = gcd;
    }
    if (content != 1) continue;  // non-primitive vectors never minimize
    RatVec zr(d);
    for (std::size_t i = 0; i < d; ++i) zr[i] = Rational::from_integer(cand[i]);
    RatVec coeffs = mat_vec(reduced_basis, zr);
    ExactScalar w = width_along(p, DualFunctional{coeffs});
    if (!best || w < *best) {
      best = w;
      best_coeffs.clear();
    }
    if (w == *best) best_coeffs.insert(canonical_sign(std::move(coeffs)));
  }

  WidthReport report;
  report.value = *best;
  for (const RatVec& c : best_coeffs) report.minimizers.push_back(DualFunctional{c});
  report.search_bound_used =
      "Q(f) <= n*W^2 ellipsoid over the LLL-reduced dual basis; n=" + std::to_string(n) +
      ", W=" + w_bound->str() + ", candidates=" + std::to_string(zs.size());
  return report;
}

}  // namespace latwidth
