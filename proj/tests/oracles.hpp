#pragma once

// Test-only oracles: naive bounded scans and random instance generators,
// deliberately independent of the production search paths (no LLL, no
// Fourier-Motzkin, no ellipsoid pruning).

#include <optional>
#include <random>
#include <set>
#include <vector>

#include "latwidth/enumerate.hpp"
#include "latwidth/lattice.hpp"
#include "latwidth/polytope.hpp"

namespace latwidth::testing {

struct NaiveWidth {
  ExactScalar value;
  std::set<RatVec> minimizers;  // canonical sign, within the scanned box
};

inline RatVec naive_canonical_sign(RatVec v) {
  for (const Rational& x : v) {
    if (x.is_zero()) continue;
    if (x.sign() < 0)
      for (auto& y : v) y = -y;
    break;
  }
  return v;
}

// Minimum width over all dual vectors with coordinates in [-range, range]
// in the dual-basis frame. For Z^d lattices this is the plain integer
// functional scan.
inline NaiveWidth naive_width_scan(const VPolytope& p, const Lattice& l, long range) {
  std::size_t d = p.ambient_dim();
  Mat<Rational> dual = l.dual().basis();
  std::optional<ExactScalar> best;
  std::set<RatVec> mins;
  std::vector<long> z(d, -range);
  while (true) {
    bool zero = true;
    for (long c : z) zero = zero && c == 0;
    if (!zero) {
      RatVec coeffs(d, Rational(0));
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t r = 0; r < d; ++r) coeffs[r] += dual(r, i) * Rational(z[i]);
      ExactScalar w = width_along(p, DualFunctional{coeffs});
      if (!best || w < *best) {
        best = w;
        mins.clear();
      }
      if (w == *best) mins.insert(naive_canonical_sign(coeffs));
    }
    std::size_t i = 0;
    while (i < d && z[i] == range) z[i++] = -range;
    if (i == d) break;
    ++z[i];
  }
  return {*best, std::move(mins)};
}

// All lattice points of the vertex bounding box that lie in P (strictly or
// not), by direct facet evaluation.
inline std::vector<RatVec> naive_lattice_points(const VPolytope& p, const Lattice& l,
                                                bool strict) {
  std::size_t d = p.ambient_dim();
  std::vector<mpz_class> lo(d), hi(d);
  bool first = true;
  for (const Point& v : p.vertices()) {
    Point y = l.to_lattice_coords(v);
    for (std::size_t i = 0; i < d; ++i) {
      mpz_class f = y[i].floor(), c = y[i].ceil();
      if (first || f < lo[i]) lo[i] = f;
      if (first || c > hi[i]) hi[i] = c;
    }
    first = false;
  }
  HRep h = facets(p);
  std::vector<RatVec> out;
  std::vector<mpz_class> z = lo;
  while (true) {
    RatVec zr(d);
    for (std::size_t i = 0; i < d; ++i) zr[i] = Rational::from_integer(z[i]);
    RatVec x = l.from_lattice_coords(zr);
    if (contains_point(h, to_scalar_vec(x), strict)) out.push_back(x);
    std::size_t i = 0;
    while (i < d && z[i] == hi[i]) z[i] = lo[i], ++i;
    if (i == d) break;
    ++z[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Q(f) = sum_v (f(v - c))^2, recomputed directly.
inline ExactScalar q_form(const VPolytope& p, const DualFunctional& f) {
  std::size_t n = p.vertices().size();
  ExactScalar fc(0);
  for (const Point& v : p.vertices()) fc += f.eval(v);
  fc = fc / ExactScalar(Rational(static_cast<long>(n)));
  ExactScalar q(0);
  for (const Point& v : p.vertices()) {
    ExactScalar t = f.eval(v) - fc;
    q += t * t;
  }
  return q;
}

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  long pick(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(gen);
  }
  Rational rational(long num_range, long den_range) {
    return Rational(pick(-num_range, num_range), pick(1, den_range));
  }
};

// Random full-dimensional lattice polytope with vertex coordinates in
// [-coord, coord]; resamples until full-dimensional.
inline VPolytope random_lattice_polytope(Rng& rng, std::size_t dim, long coord,
                                         std::size_t max_points) {
  while (true) {
    std::size_t n = static_cast<std::size_t>(rng.pick(static_cast<long>(dim) + 1,
                                                      static_cast<long>(max_points)));
    std::vector<Point> pts;
    for (std::size_t i = 0; i < n; ++i) {
      Point p(dim);
      for (std::size_t j = 0; j < dim; ++j) p[j] = ExactScalar(rng.pick(-coord, coord));
      pts.push_back(std::move(p));
    }
    VPolytope poly = VPolytope::from_points(dim, std::move(pts));
    if (poly.is_full_dimensional()) return poly;
  }
}

// Random unimodular integer matrix built from elementary shears, swaps and
// sign flips; entries stay small.
inline Mat<Rational> random_unimodular(Rng& rng, std::size_t dim, int steps = 6) {
  Mat<Rational> u = Mat<Rational>::identity(dim);
  for (int s = 0; s < steps; ++s) {
    std::size_t i = static_cast<std::size_t>(rng.pick(0, static_cast<long>(dim) - 1));
    std::size_t j = static_cast<std::size_t>(rng.pick(0, static_cast<long>(dim) - 1));
    switch (rng.pick(0, 2)) {
      case 0:
        if (i != j) {
          Rational f(rng.pick(-2, 2));
          for (std::size_t c = 0; c < dim; ++c) u(i, c) += f * u(j, c);
        }
        break;
      case 1:
        for (std::size_t c = 0; c < dim; ++c) std::swap(u(i, c), u(j, c));
        if (i != j)
          for (std::size_t c = 0; c < dim; ++c) u(i, c) = -u(i, c);
        break;
      default:
        for (std::size_t c = 0; c < dim; ++c) u(i, c) = -u(i, c);
        break;
    }
  }
  return u;
}

inline VPolytope transform(const VPolytope& p, const Mat<Rational>& u) {
  Mat<ExactScalar> us = to_scalar_mat(u);
  std::vector<Point> verts;
  for (const Point& v : p.vertices()) verts.push_back(mat_vec(us, v));
  return VPolytope(p.ambient_dim(), std::move(verts));
}

}  // namespace latwidth::testing
