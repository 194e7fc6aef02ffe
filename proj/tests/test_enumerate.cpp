#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latwidth/enumerate.hpp"
#include "latwidth/gallery.hpp"
#include "oracles.hpp"

using namespace latwidth;
namespace tst = latwidth::testing;

namespace {

Point sv(std::initializer_list<long> xs) {
  Point v;
  for (long x : xs) v.push_back(ExactScalar(x));
  return v;
}

RatVec rv(std::initializer_list<long> xs) {
  RatVec v;
  for (long x : xs) v.push_back(Rational(x));
  return v;
}

}  // namespace

TEST_CASE("interior and closed point enumeration") {
  // The hollow tetrahedron of the sqrt(2) family has no interior points of
  // the shifted fcc lattice.
  GalleryItem ds = delta_star();
  CHECK(lattice_points_in(ds.polytope, ds.lattice, PointMode::interior).empty());

  VPolytope tri3(2, {sv({0, 0}), sv({3, 0}), sv({0, 3})});
  auto interior = lattice_points_in(tri3, Lattice::integer(2), PointMode::interior);
  REQUIRE(interior.size() == 1);
  CHECK(interior[0] == rv({1, 1}));

  GalleryItem s = s0();
  auto closed = lattice_points_in(s.polytope, Lattice::integer(4), PointMode::closed);
  CHECK(closed.size() == 5);
  std::vector<RatVec> expected;
  for (const Point& v : s.polytope.vertices()) expected.push_back(to_rational_vec(v));
  std::sort(expected.begin(), expected.end());
  CHECK(closed == expected);
}

TEST_CASE("hollowness") {
  CHECK(is_hollow(triangle_t().polytope, Lattice::integer(2)).hollow);

  for (std::size_t d : {1u, 2u, 3u, 4u}) {
    std::vector<Point> cube;
    for (std::size_t mask = 0; mask < (1u << d); ++mask) {
      Point v(d);
      for (std::size_t i = 0; i < d; ++i) v[i] = ExactScalar((mask >> i) & 1);
      cube.push_back(std::move(v));
    }
    CHECK(is_hollow(VPolytope(d, cube), Lattice::integer(d)).hollow);
  }

  CHECK(is_hollow(s_dilated().polytope, Lattice::integer(4)).hollow);

  VPolytope tri3(2, {sv({0, 0}), sv({3, 0}), sv({0, 3})});
  HollownessReport r = is_hollow(tri3, Lattice::integer(2));
  CHECK_FALSE(r.hollow);
  REQUIRE(r.witness.has_value());
  CHECK(*r.witness == rv({1, 1}));
}

TEST_CASE("empty simplex test") {
  CHECK(is_empty_simplex(s0().polytope, Lattice::integer(4)));

  GalleryItem d0 = delta0();
  CHECK_FALSE(is_empty_simplex(d0.polytope, d0.lattice));  // boundary points like (1,1,-1)

  std::vector<Point> unimod{sv({0, 0, 0}), sv({1, 0, 0}), sv({0, 1, 0}), sv({0, 0, 1})};
  CHECK(is_empty_simplex(VPolytope(3, unimod), Lattice::integer(3)));

  CHECK_THROWS_AS(is_empty_simplex(unit_square().polytope, Lattice::integer(2)), error);
  GalleryItem star = delta_star();
  CHECK_THROWS_AS(is_empty_simplex(star.polytope, star.lattice), error);
}

TEST_CASE("lattice width on the worked instances") {
  GalleryItem d0 = delta0();
  WidthReport r = lattice_width(d0.polytope, d0.lattice);
  CHECK(r.value == ExactScalar(3));
  REQUIRE(r.minimizers.size() == 2);
  CHECK(r.minimizers[0].coeffs == RatVec{Rational(0), Rational(1, 2), Rational(0)});
  CHECK(r.minimizers[1].coeffs == RatVec{Rational(1, 2), Rational(0), Rational(0)});

  CHECK(lattice_width(triangle_t().polytope, Lattice::integer(2)).value ==
        ExactScalar(Rational(15, 7)));

  GalleryItem star = delta_star();
  WidthReport rs = lattice_width(star.polytope, star.lattice);
  CHECK(rs.value == ExactScalar(2) + ExactScalar::sqrt_of(2));
  CHECK(rs.minimizers.size() * 2 >= 14);

  CHECK(lattice_width(s0().polytope, Lattice::integer(4)).value == ExactScalar(4));
}

TEST_CASE("width errors") {
  std::vector<Point> verts;
  for (std::size_t i = 0; i <= 6; ++i) {
    Point v(6, ExactScalar(0));
    if (i > 0) v[i - 1] = ExactScalar(1);
    verts.push_back(v);
  }
  CHECK_THROWS_AS(lattice_width(VPolytope(6, verts), Lattice::integer(6)), error);

  VPolytope flat(2, {sv({0, 0}), sv({1, 0})});
  CHECK_THROWS_AS(lattice_width(flat, Lattice::integer(2)), error);
  CHECK_THROWS_AS(lattice_points_in(flat, Lattice::integer(2), PointMode::closed), error);
}

TEST_CASE("width agrees with the naive scan") {
  tst::Rng rng(53);
  for (int trial = 0; trial < 60; ++trial) {
    VPolytope p = tst::random_lattice_polytope(rng, 2, 5, 8);
    WidthReport r = lattice_width(p, Lattice::integer(2));
    tst::NaiveWidth naive = tst::naive_width_scan(p, Lattice::integer(2), 20);
    CHECK(r.value == naive.value);
    // All box minimizers are reported (complete minimizer list).
    for (const RatVec& m : naive.minimizers) {
      bool found = false;
      for (const DualFunctional& f : r.minimizers) found = found || f.coeffs == m;
      CHECK(found);
    }
    // The naive optimum satisfies the pruning bound.
    std::size_t n = p.vertices().size();
    for (const RatVec& m : naive.minimizers) {
      ExactScalar q = tst::q_form(p, DualFunctional{m});
      CHECK((ExactScalar(Rational(static_cast<long>(n))) * r.value * r.value - q).sign() >= 0);
    }
  }
  for (int trial = 0; trial < 12; ++trial) {
    VPolytope p = tst::random_lattice_polytope(rng, 3, 4, 7);
    WidthReport r = lattice_width(p, Lattice::integer(3));
    tst::NaiveWidth naive = tst::naive_width_scan(p, Lattice::integer(3), 12);
    CHECK(r.value == naive.value);
  }
}

TEST_CASE("every reported minimizer attains the value, others exceed it") {
  tst::Rng rng(59);
  for (int trial = 0; trial < 25; ++trial) {
    VPolytope p = tst::random_lattice_polytope(rng, 2, 4, 7);
    WidthReport r = lattice_width(p, Lattice::integer(2));
    std::set<RatVec> reported;
    for (const DualFunctional& f : r.minimizers) {
      CHECK(width_along(p, f) == r.value);
      reported.insert(f.coeffs);
    }
    for (long a = -6; a <= 6; ++a)
      for (long b = -6; b <= 6; ++b) {
        if (a == 0 && b == 0) continue;
        RatVec f = tst::naive_canonical_sign(rv({a, b}));
        if (!reported.count(f)) CHECK((width_along(p, {f}) - r.value).sign() > 0);
      }
  }
}

TEST_CASE("pruning bound is valid for arbitrary functionals") {
  tst::Rng rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t d = static_cast<std::size_t>(rng.pick(1, 3));
    VPolytope p = tst::random_lattice_polytope(rng, d, 4, 6);
    RatVec f(d, Rational(0));
    bool zero = true;
    for (std::size_t i = 0; i < d; ++i) {
      f[i] = Rational(rng.pick(-5, 5));
      zero = zero && f[i].is_zero();
    }
    if (zero) f[0] = Rational(1);
    ExactScalar w = width_along(p, {f});
    ExactScalar q = tst::q_form(p, {f});
    ExactScalar n{Rational(static_cast<long>(p.vertices().size()))};
    CHECK((n * w * w - q).sign() >= 0);  // width >= sqrt(Q/n)
  }
}

TEST_CASE("unimodular invariance") {
  tst::Rng rng(67);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t d = static_cast<std::size_t>(rng.pick(2, 3));
    VPolytope p = tst::random_lattice_polytope(rng, d, 4, 7);
    Mat<Rational> u = tst::random_unimodular(rng, d);
    VPolytope q = tst::transform(p, u);
    CHECK(lattice_width(p, Lattice::integer(d)).value ==
          lattice_width(q, Lattice::integer(d)).value);
    CHECK(is_hollow(p, Lattice::integer(d)).hollow == is_hollow(q, Lattice::integer(d)).hollow);
  }
}

TEST_CASE("hollow iff no interior points") {
  tst::Rng rng(71);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t d = static_cast<std::size_t>(rng.pick(1, 3));
    VPolytope p = tst::random_lattice_polytope(rng, d, 3, 6);
    HollownessReport r = is_hollow(p, Lattice::integer(d));
    auto pts = lattice_points_in(p, Lattice::integer(d), PointMode::interior);
    CHECK(r.hollow == pts.empty());
    CHECK(pts == tst::naive_lattice_points(p, Lattice::integer(d), true));
    CHECK(lattice_points_in(p, Lattice::integer(d), PointMode::closed) ==
          tst::naive_lattice_points(p, Lattice::integer(d), false));
    if (!r.hollow) {
      CHECK(Lattice::integer(d).contains(*r.witness));
      CHECK(contains_point(p, to_scalar_vec(*r.witness), true));
    }
  }
}
