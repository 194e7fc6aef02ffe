#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latwidth/certify.hpp"
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

OpenCone cone(std::initializer_list<RatVec> normals) {
  OpenCone c;
  for (const RatVec& n : normals) c.strict_normals.push_back(n);
  return c;
}

// The twelve polar cones of the delta-star certificate: all eight octants
// plus the four components of the complement of {a = +-b}.
std::vector<OpenCone> delta_star_cones() {
  std::vector<OpenCone> cones;
  for (long sa : {1L, -1L})
    for (long sb : {1L, -1L})
      for (long sc : {1L, -1L})
        cones.push_back(cone({rv({4 * sa, 0, 0}), rv({0, 4 * sb, 0}), rv({0, 0, 4 * sc})}));
  for (long s1 : {1L, -1L})
    for (long s2 : {1L, -1L})
      cones.push_back(cone({rv({-2 * s1, -2 * s1, 0}), rv({2 * s2, -2 * s2, 0})}));
  return cones;
}

std::vector<RatVec> delta_star_rays() {
  Rational h(1, 2);
  return {RatVec{0, 0, h}, RatVec{h, h, 0}, RatVec{h, -h, 0}};
}

}  // namespace

TEST_CASE("polar cones of paths") {
  Lattice fcc = fcc_lattice();
  ExactScalar s2 = ExactScalar::sqrt_of(2);
  ExactScalar tp = ExactScalar(2) + s2;
  RationalPath axis{{{-tp, -s2, tp}, {s2, -s2, tp}, {s2, -tp, tp}, {s2, -tp, -tp}}};
  OpenCone c = polar_cone(fcc, axis);
  REQUIRE(c.strict_normals.size() == 3);
  std::set<RatVec> got(c.strict_normals.begin(), c.strict_normals.end());
  CHECK(got == std::set<RatVec>{rv({4, 0, 0}), rv({0, -4, 0}), rv({0, 0, -4})});

  RationalPath diag{{{-s2, tp, -tp}, {-tp, s2, -tp}, {s2, -tp, -tp}}};
  c = polar_cone(fcc, diag);
  std::set<RatVec> got2(c.strict_normals.begin(), c.strict_normals.end());
  CHECK(got2 == std::set<RatVec>{rv({-2, -2, 0}), rv({2, -2, 0})});

  Lattice z2 = Lattice::integer(2);
  RationalPath seg{{sv({0, 0}), sv({1, 0})}};
  CHECK(polar_cone(z2, seg).strict_normals == std::vector<RatVec>{rv({1, 0})});

  // Reversal negates the cone.
  RationalPath rev{{sv({1, 0}), sv({0, 0})}};
  CHECK(polar_cone(z2, rev).strict_normals == std::vector<RatVec>{rv({-1, 0})});
}

TEST_CASE("cover check accepts the dual-space covers of the worked examples") {
  CHECK(verify_cover(delta_star_cones(), delta_star_rays(), 3));

  // Removing any single exceptional ray breaks the cover.
  auto rays = delta_star_rays();
  for (std::size_t i = 0; i < rays.size(); ++i) {
    std::vector<RatVec> fewer;
    for (std::size_t j = 0; j < rays.size(); ++j)
      if (j != i) fewer.push_back(rays[j]);
    CHECK_FALSE(verify_cover(delta_star_cones(), fewer, 3));
  }

  // Unit-square boundary paths: all four quadrants, but the axes stay
  // uncovered without exceptional rays.
  std::vector<OpenCone> quadrants;
  for (long sa : {1L, -1L})
    for (long sb : {1L, -1L}) quadrants.push_back(cone({rv({sa, 0}), rv({0, sb})}));
  CHECK_FALSE(verify_cover(quadrants, {}, 2));
  CHECK(verify_cover(quadrants, {rv({1, 0}), rv({0, 1})}, 2));

  CHECK(verify_cover({cone({rv({1})}), cone({rv({-1})})}, {}, 1));
  CHECK_FALSE(verify_cover({cone({rv({1})})}, {}, 1));

  CHECK_THROWS_AS(verify_cover({}, {}, 2), error);
  CHECK_THROWS_AS(
      verify_cover({cone({rv({1, 0, 0, 0})})}, {}, 4), error);
}

TEST_CASE("cover check is monotone") {
  tst::Rng rng(73);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t d = static_cast<std::size_t>(rng.pick(2, 3));
    std::vector<OpenCone> cones;
    int m = static_cast<int>(rng.pick(1, 4));
    for (int i = 0; i < m; ++i) {
      OpenCone c;
      int k = static_cast<int>(rng.pick(1, static_cast<long>(d)));
      for (int t = 0; t < k; ++t) {
        RatVec n(d, Rational(0));
        bool zero = true;
        for (std::size_t j = 0; j < d; ++j) {
          n[j] = Rational(rng.pick(-2, 2));
          zero = zero && n[j].is_zero();
        }
        if (zero) n[0] = Rational(1);
        c.strict_normals.push_back(std::move(n));
      }
      cones.push_back(std::move(c));
    }
    std::vector<RatVec> rays;
    for (int t = 0; t < rng.pick(0, 2); ++t) {
      RatVec n(d, Rational(0));
      n[static_cast<std::size_t>(rng.pick(0, static_cast<long>(d) - 1))] = Rational(1);
      rays.push_back(std::move(n));
    }
    bool before = verify_cover(cones, rays, d);
    if (!before) continue;

    auto more_rays = rays;
    RatVec extra(d, Rational(1));
    more_rays.push_back(extra);
    CHECK(verify_cover(cones, more_rays, d));

    auto more_cones = cones;
    more_cones.push_back(cone({extra}));
    CHECK(verify_cover(more_cones, rays, d));
  }
}

TEST_CASE("width certificates of the gallery verify exactly") {
  GalleryItem t = triangle_t();
  REQUIRE(t.width_certificates.size() == 1);
  Verdict v = verify_width_certificate(t.polytope, t.lattice, t.width_certificates[0]);
  CHECK(v.exact());
  CHECK(v.bound == ExactScalar(Rational(15, 7)));
  CHECK(t.width_certificates[0].paths.size() == 3);
  CHECK(t.width_certificates[0].exceptional_rays.size() == 3);

  GalleryItem star = delta_star();
  REQUIRE(star.width_certificates.size() == 1);
  Verdict vs = verify_width_certificate(star.polytope, star.lattice, star.width_certificates[0]);
  CHECK(vs.exact());
  CHECK(vs.bound == ExactScalar(2) + ExactScalar::sqrt_of(2));
}

TEST_CASE("the square boundary certificate is rejected at the cover clause") {
  GalleryItem sq = unit_square();
  Verdict v = verify_width_certificate(sq.polytope, sq.lattice, square_boundary_certificate());
  CHECK_FALSE(v.proved());
  CHECK(v.reason.find("cover") != std::string::npos);
}

TEST_CASE("inflated bounds are rejected") {
  for (GalleryItem item : {triangle_t(), delta_star(), hurkens_triangle()}) {
    REQUIRE(item.width_certificates.size() == 1);
    WidthCertificate cert = item.width_certificates[0];
    cert.claimed_bound = cert.claimed_bound + ExactScalar(Rational(1, 1000));
    CHECK_FALSE(verify_width_certificate(item.polytope, item.lattice, cert).proved());
    cert.claimed_bound = item.width_certificates[0].claimed_bound + ExactScalar(Rational(1, 1000000));
    CHECK_FALSE(verify_width_certificate(item.polytope, item.lattice, cert).proved());
  }
}

TEST_CASE("witness and clause failures reject with a reason") {
  GalleryItem t = triangle_t();
  const WidthCertificate& good = t.width_certificates[0];

  WidthCertificate bad = good;
  bad.paths[0].start.coeffs[0] += ExactScalar(1);  // sum != 1
  CHECK_FALSE(verify_width_certificate(t.polytope, t.lattice, bad).proved());

  bad = good;
  for (auto& c : bad.paths[0].start.coeffs) c = ExactScalar(0);
  CHECK_FALSE(verify_width_certificate(t.polytope, t.lattice, bad).proved());

  bad = good;
  bad.paths[0].path.points.back()[0] += ExactScalar(1);  // endpoint no longer witnessed
  CHECK_FALSE(verify_width_certificate(t.polytope, t.lattice, bad).proved());

  bad = good;
  bad.upper_bound_functional = RatVec{Rational(1, 3), Rational(0)};  // not in the dual lattice
  CHECK_FALSE(verify_width_certificate(t.polytope, t.lattice, bad).proved());

  bad = good;
  bad.exceptional_rays[0].stated_width = bad.exceptional_rays[0].stated_width + ExactScalar(1);
  CHECK_FALSE(verify_width_certificate(t.polytope, t.lattice, bad).proved());

  // A symmetry that does not permute the vertices.
  GalleryItem star = delta_star();
  WidthCertificate cert = star.width_certificates[0];
  cert.symmetries.push_back(Mat<Rational>(3, 3, {1, 0, 0, 0, 1, 0, 0, 1, 1}));
  CHECK_FALSE(verify_width_certificate(star.polytope, star.lattice, cert).proved());
}

TEST_CASE("proved mutations stay sound against the enumeration oracle") {
  tst::Rng rng(79);
  for (GalleryItem item : {triangle_t(), delta_star()}) {
    const WidthCertificate& base = item.width_certificates[0];
    ExactScalar true_width = lattice_width(item.polytope, item.lattice).value;
    for (int trial = 0; trial < 40; ++trial) {
      WidthCertificate mut = base;
      switch (rng.pick(0, 4)) {
        case 0:
          mut.claimed_bound = mut.claimed_bound - ExactScalar(rng.rational(2, 5).abs());
          break;
        case 1:
          if (mut.paths.size() > 1)
            mut.paths.erase(mut.paths.begin() +
                            static_cast<long>(rng.pick(0, static_cast<long>(mut.paths.size()) - 1)));
          break;
        case 2:
          if (!mut.exceptional_rays.empty())
            mut.exceptional_rays.erase(
                mut.exceptional_rays.begin() +
                static_cast<long>(rng.pick(0, static_cast<long>(mut.exceptional_rays.size()) - 1)));
          break;
        case 3: {
          std::size_t pi = static_cast<std::size_t>(
              rng.pick(0, static_cast<long>(mut.paths.size()) - 1));
          auto& pts = mut.paths[pi].path.points;
          std::size_t mid = pts.size() / 2;
          pts[mid][static_cast<std::size_t>(rng.pick(0, static_cast<long>(pts[mid].size()) - 1))] +=
              ExactScalar(rng.rational(1, 3));
          break;
        }
        default:
          mut.upper_bound_functional.reset();
          break;
      }
      Verdict v = verify_width_certificate(item.polytope, item.lattice, mut);
      if (v.proved()) CHECK((true_width - v.bound).sign() >= 0);
    }
  }
}

TEST_CASE("hollow sum verdicts") {
  GalleryItem t7 = repeated_sum(RepeatedSum::T7);
  REQUIRE(t7.sum_certificates.size() == 1);
  SumVerdict v = verify_hollow_sum(t7.sum_certificates[0]);
  CHECK(v.verdict.exact());
  CHECK(v.derived_width == ExactScalar(15));
  CHECK(v.dimension == 14);
  CHECK(v.vertex_count == 21);
  CHECK(v.lattice_polytope);
  CHECK_FALSE(v.simplex);
  CHECK(v.inv_dilation_sum == ExactScalar(1));

  DirectSum rebuilt = rebuild_direct_sum(t7.sum_certificates[0]);
  CHECK(rebuilt.polytope == t7.polytope);
  CHECK(rebuilt.lattice == t7.lattice);
}

TEST_CASE("hollow sum negative controls") {
  VPolytope seg(1, {sv({0}), sv({1})});
  HollowSumCertificate bad;
  ComponentEvidence ev;
  ev.kind = ComponentEvidence::Kind::enumeration;
  ev.width = ExactScalar(1);
  bad.components.push_back({seg, Lattice::integer(1), ExactScalar(3), ev});
  bad.components.push_back({seg, Lattice::integer(1), ExactScalar(3), ev});
  SumVerdict v = verify_hollow_sum(bad);
  CHECK_FALSE(v.verdict.proved());
  CHECK(v.verdict.reason.find("reciprocal") != std::string::npos);
}

TEST_CASE("hollow sum rejects wrong widths and non-hollow components") {
  VPolytope seg(1, {sv({0}), sv({1})});
  ComponentEvidence ev;
  ev.kind = ComponentEvidence::Kind::enumeration;
  ev.width = ExactScalar(2);  // wrong: the segment has width 1
  HollowSumCertificate c;
  c.components.push_back({seg, Lattice::integer(1), ExactScalar(1), ev});
  CHECK_FALSE(verify_hollow_sum(c).verdict.proved());

  VPolytope fat(2, {sv({0, 0}), sv({3, 0}), sv({0, 3})});  // interior point (1,1)
  ComponentEvidence ev2;
  ev2.kind = ComponentEvidence::Kind::enumeration;
  ev2.width = ExactScalar(3);
  HollowSumCertificate c2;
  c2.components.push_back({fat, Lattice::integer(2), ExactScalar(1), ev2});
  CHECK_FALSE(verify_hollow_sum(c2).verdict.proved());
}

TEST_CASE("nested evidence depth cap") {
  VPolytope seg(1, {sv({0}), sv({1})});
  ComponentEvidence base;
  base.kind = ComponentEvidence::Kind::enumeration;
  base.width = ExactScalar(1);
  auto leaf = std::make_shared<HollowSumCertificate>();
  leaf->components.push_back({seg, Lattice::integer(1), ExactScalar(1), base});

  auto nested = leaf;
  for (int depth = 0; depth < 6; ++depth) {
    DirectSum ds = rebuild_direct_sum(*nested);
    ComponentEvidence ev;
    ev.kind = ComponentEvidence::Kind::hollow_sum;
    ev.width = ds.claimed_width;
    ev.nested = nested;
    auto outer = std::make_shared<HollowSumCertificate>();
    outer->components.push_back({ds.polytope, ds.lattice, ExactScalar(1), ev});
    nested = outer;
  }
  CHECK_FALSE(verify_hollow_sum(*nested).verdict.proved());
  CHECK(verify_hollow_sum(*leaf).verdict.proved());
}
