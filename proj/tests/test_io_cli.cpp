#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "latwidth/json_io.hpp"
#include "oracles.hpp"

using namespace latwidth;
namespace tst = latwidth::testing;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int exit_code = -1;
  json stdout_json;
};

fs::path work_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "latwidth-cli-test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

CliResult run_cli(const std::string& args) {
  fs::path out = work_dir() / "stdout.json";
  std::string cmd = std::string(LATWIDTH_CLI_PATH) + " " + args + " > " + out.string() + " 2> " +
                    (work_dir() / "stderr.txt").string();
  int status = std::system(cmd.c_str());
  CliResult r;
  r.exit_code = WEXITSTATUS(status);
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  if (!ss.str().empty()) {
    json parsed = json::parse(ss.str(), nullptr, false);
    if (!parsed.is_discarded()) r.stdout_json = parsed;
  }
  return r;
}

std::string emit(const GalleryItem& item, const std::string& kind, const json& j) {
  fs::path p = work_dir() / (item.name + "." + kind + ".json");
  write_json_file(p.string(), j);
  return p.string();
}

}  // namespace

TEST_CASE("scalar grammar round trips") {
  CHECK(scalar_to_json(ExactScalar(Rational(3, 4))) == json("3/4"));
  CHECK(scalar_to_json(ExactScalar(-7)) == json("-7"));
  CHECK(scalar_from_json(json("15/7"), 0) == ExactScalar(Rational(15, 7)));
  ExactScalar q = ExactScalar::quadratic(Rational(1, 2), Rational(-2, 3), 2);
  CHECK(scalar_to_json(q) == json::array({"1/2", "-2/3"}));
  CHECK(scalar_from_json(scalar_to_json(q), 2) == q);

  CHECK_THROWS_AS(scalar_from_json(json("1/0"), 0), error);
  CHECK_THROWS_AS(scalar_from_json(json("1/-2"), 0), error);
  CHECK_THROWS_AS(scalar_from_json(json::array({"1", "2"}), 0), error);  // no radicand declared
  CHECK_THROWS_AS(scalar_from_json(json(3.5), 0), error);

  tst::Rng rng(89);
  for (int i = 0; i < 500; ++i) {
    ExactScalar s = ExactScalar::quadratic(rng.rational(100, 20), rng.rational(100, 20), 3);
    CHECK(scalar_from_json(scalar_to_json(s), 3) == s);
  }
}

TEST_CASE("polytope, lattice and certificate round trips are canonical") {
  GalleryItem star = delta_star();
  json pj = polytope_to_json(star.polytope);
  CHECK(polytope_from_json(pj) == star.polytope);
  CHECK(polytope_to_json(polytope_from_json(pj)).dump() == pj.dump());

  json lj = lattice_to_json(star.lattice);
  CHECK(lattice_from_json(lj) == star.lattice);
  CHECK(lattice_to_json(lattice_from_json(lj)).dump() == lj.dump());

  json cj = width_certificate_to_json(star.width_certificates[0]);
  WidthCertificate parsed = width_certificate_from_json(cj);
  CHECK(width_certificate_to_json(parsed).dump() == cj.dump());
  CHECK(verify_width_certificate(star.polytope, star.lattice, parsed).exact());

  GalleryItem t7 = repeated_sum(RepeatedSum::T7);
  json sj = hollow_sum_to_json(t7.sum_certificates[0]);
  HollowSumCertificate sparsed = hollow_sum_from_json(sj);
  CHECK(hollow_sum_to_json(sparsed).dump() == sj.dump());
  CHECK(verify_hollow_sum(sparsed).verdict.exact());

  CHECK(certificate_kind(cj) == CertKind::width);
  CHECK(certificate_kind(sj) == CertKind::hollow_sum);
}

TEST_CASE("malformed inputs raise parse errors") {
  CHECK_THROWS_AS(polytope_from_json(json::parse(R"({"vertices": []})")), error);
  CHECK_THROWS_AS(
      polytope_from_json(json::parse(
          R"({"ambient_dim": 2, "radicand": 4, "vertices": [["0","0"]]})")),
      error);
  CHECK_THROWS_AS(
      polytope_from_json(json::parse(
          R"({"ambient_dim": 2, "radicand": null, "vertices": [["0"]]})")),
      error);
  CHECK_THROWS_AS(lattice_from_json(json::parse(
                      R"({"dim": 2, "basis": [["1","0"],["2","0"]], "offset": ["0","0"]})")),
                  error);  // singular basis
}

TEST_CASE("hrep serialization") {
  GalleryItem s = s0();
  HRep h = facets(s.polytope);
  json j = hrep_to_json(h, s.polytope.radicand());
  CHECK(j["ambient_dim"] == json(4));
  CHECK(j["normals"].size() == 5);
  CHECK(j["rhs"].size() == 5);
  bool stated = false;
  for (std::size_t i = 0; i < j["normals"].size(); ++i)
    stated = stated || (j["normals"][i] == json::array({"101", "101", "101", "-36"}) &&
                        j["rhs"][i] == json("101"));
  CHECK(stated);
}

TEST_CASE("cli width and hollowness with exit codes") {
  GalleryItem s = s0();
  std::string poly = emit(s, "polytope", polytope_to_json(s.polytope));
  CliResult r = run_cli("width " + poly);
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_json["result"]["value"] == json("4"));
  CHECK(r.stdout_json["inputs"].size() == 1);  // digest of the polytope file
  CHECK(r.stdout_json["result"]["minimizers"].size() == 8);  // truncated without the flag
  CHECK(r.stdout_json["result"]["minimizer_count"] == json(10));

  r = run_cli("width " + poly + " --all-minimizers");
  CHECK(r.stdout_json["result"]["minimizers"].size() == 10);

  VPolytope tri(2, {Point{ExactScalar(0), ExactScalar(0)}, Point{ExactScalar(3), ExactScalar(0)},
                    Point{ExactScalar(0), ExactScalar(3)}});
  GalleryItem fake{"fat-triangle", tri, Lattice::integer(2)};
  std::string fat = emit(fake, "polytope", polytope_to_json(tri));
  r = run_cli("hollow " + fat);
  CHECK(r.exit_code == 1);
  CHECK(r.stdout_json["result"]["hollow"] == json(false));
  CHECK(r.stdout_json["result"]["witness"] == json::array({"1", "1"}));

  r = run_cli("width " + fat + " --oracle");
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_json["result"]["oracle"]["agrees"] == json(true));

  r = run_cli("hollow " + fat + " --oracle");
  CHECK(r.exit_code == 1);
  CHECK(r.stdout_json["result"]["oracle"]["agrees"] == json(true));
}

TEST_CASE("cli certify on emitted gallery files") {
  GalleryItem star = delta_star();
  std::string poly = emit(star, "polytope", polytope_to_json(star.polytope));
  std::string lat = emit(star, "lattice", lattice_to_json(star.lattice));
  std::string cert =
      emit(star, "width-cert", width_certificate_to_json(star.width_certificates[0]));
  CliResult r = run_cli("certify " + poly + " " + lat + " " + cert);
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_json["result"]["verdict"] == json("proved_exact"));

  GalleryItem sq = unit_square();
  std::string sq_poly = emit(sq, "polytope", polytope_to_json(sq.polytope));
  std::string sq_lat = emit(sq, "lattice", lattice_to_json(sq.lattice));
  std::string sq_cert =
      emit(sq, "width-cert", width_certificate_to_json(square_boundary_certificate()));
  r = run_cli("certify " + sq_poly + " " + sq_lat + " " + sq_cert);
  CHECK(r.exit_code == 1);
  CHECK(r.stdout_json["result"]["verdict"] == json("rejected"));

  // The certificate must describe the polytope it is checked against.
  r = run_cli("certify " + sq_poly + " " + sq_lat + " " + cert);
  CHECK(r.exit_code == 1);
}

TEST_CASE("cli errors exit with code 2") {
  fs::path bad = work_dir() / "bad.json";
  std::ofstream(bad) << "{ not json";
  CliResult r = run_cli("width " + bad.string());
  CHECK(r.exit_code == 2);

  fs::path badscalar = work_dir() / "badscalar.json";
  std::ofstream(badscalar)
      << R"({"ambient_dim": 1, "radicand": null, "vertices": [["1/0"], ["1"]]})";
  r = run_cli("width " + badscalar.string());
  CHECK(r.exit_code == 2);

  r = run_cli("gallery no-such-item");
  CHECK(r.exit_code == 2);

  // Dimension guard: width is capped at dimension 5.
  std::vector<Point> simplex6;
  for (std::size_t i = 0; i <= 6; ++i) {
    Point v(6, ExactScalar(0));
    if (i > 0) v[i - 1] = ExactScalar(1);
    simplex6.push_back(v);
  }
  GalleryItem six{"six", VPolytope(6, simplex6), Lattice::integer(6)};
  std::string p6 = emit(six, "polytope", polytope_to_json(six.polytope));
  r = run_cli("width " + p6);
  CHECK(r.exit_code == 2);
}

TEST_CASE("cli reports are deterministic modulo wall time") {
  CliResult a = run_cli("gallery delta-star");
  CliResult b = run_cli("gallery delta-star");
  REQUIRE(a.exit_code == 0);
  json ja = a.stdout_json, jb = b.stdout_json;
  ja.erase("wall_ms");
  jb.erase("wall_ms");
  CHECK(ja.dump() == jb.dump());
}

TEST_CASE("cli gallery emission round trips through certify") {
  fs::path dir = work_dir() / "emitted";
  CliResult r = run_cli("gallery T --emit-certificates " + dir.string());
  REQUIRE(r.exit_code == 0);
  r = run_cli("certify " + (dir / "T.polytope.json").string() + " " +
              (dir / "T.lattice.json").string() + " " + (dir / "T.width-cert-0.json").string());
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_json["result"]["verdict"] == json("proved_exact"));
  CHECK(r.stdout_json["result"]["bound"] == json("15/7"));

  r = run_cli("gallery T7 --emit-certificates " + dir.string());
  REQUIRE(r.exit_code == 0);
  r = run_cli("certify " + (dir / "T7.polytope.json").string() + " " +
              (dir / "T7.lattice.json").string() + " " + (dir / "T7.hollow-sum-0.json").string());
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_json["result"]["derived_width"] == json("15"));

  // Quadratic-field certificate round trip.
  r = run_cli("gallery hurkens --emit-certificates " + dir.string());
  REQUIRE(r.exit_code == 0);
  r = run_cli("certify " + (dir / "hurkens.polytope.json").string() + " " +
              (dir / "hurkens.lattice.json").string() + " " +
              (dir / "hurkens.width-cert-0.json").string());
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_json["result"]["verdict"] == json("proved_exact"));
  CHECK(r.stdout_json["result"]["bound"] == json::array({"1", "2/3"}));
}

TEST_CASE("cli sum and sebo build files") {
  GalleryItem t7 = repeated_sum(RepeatedSum::T7);
  fs::path spec = work_dir() / "t7-spec.json";
  write_json_file(spec.string(), hollow_sum_to_json(t7.sum_certificates[0]));
  fs::path dir = work_dir() / "sum-out";
  CliResult r = run_cli("sum " + spec.string() + " --out-dir " + dir.string());
  REQUIRE(r.exit_code == 0);
  CHECK(r.stdout_json["result"]["dimension"] == json(14));
  CHECK(r.stdout_json["result"]["vertex_count"] == json(21));
  CHECK(r.stdout_json["result"]["claimed_width"] == json("15"));
  CHECK(fs::exists(dir / "sum.polytope.json"));
  VPolytope rebuilt = polytope_from_json(load_json_file((dir / "sum.polytope.json").string()));
  CHECK(rebuilt == t7.polytope);

  GalleryItem seg{"segment", VPolytope(1, {Point{ExactScalar(0)}, Point{ExactScalar(1)}}),
                  Lattice::integer(1)};
  std::string seg_path = emit(seg, "polytope", polytope_to_json(seg.polytope));
  r = run_cli("sebo --simplex " + seg_path + " -m 4");
  REQUIRE(r.exit_code == 0);
  CHECK(r.stdout_json["result"]["ambient_dim"] == json(4));
  CHECK(r.stdout_json["result"]["vertex_count"] == json(5));
  CHECK(r.stdout_json["result"]["claimed_empty"] == json(true));
}

TEST_CASE("mutated certificate files never crash the verifier") {
  GalleryItem star = delta_star();
  json base = width_certificate_to_json(star.width_certificates[0]);
  tst::Rng rng(97);

  std::function<json*(json&)> pick_node = [&](json& j) -> json* {
    if ((j.is_object() || j.is_array()) && !j.empty() && rng.pick(0, 3) > 0) {
      std::size_t idx = static_cast<std::size_t>(rng.pick(0, static_cast<long>(j.size()) - 1));
      std::size_t k = 0;
      for (auto& child : j.items())
        if (k++ == idx) return pick_node(child.value());
    }
    return &j;
  };

  int verdicts = 0, errors = 0;
  for (int trial = 0; trial < 120; ++trial) {
    json mutated = base;
    json* node = pick_node(mutated);
    switch (rng.pick(0, 3)) {
      case 0: *node = json("junk"); break;
      case 1: *node = json(nullptr); break;
      case 2: *node = json::array(); break;
      default:
        if (node->is_array() && !node->empty()) node->erase(0);
        else *node = json(rng.pick(-5, 5));
        break;
    }
    try {
      WidthCertificate cert = width_certificate_from_json(mutated);
      Verdict v = verify_width_certificate(star.polytope, star.lattice, cert);
      ++verdicts;
      // A mutated certificate that still proves must still be sound.
      if (v.proved()) CHECK((ExactScalar(2) + ExactScalar::sqrt_of(2) - v.bound).sign() >= 0);
    } catch (const error&) {
      ++errors;  // parse-level rejection is fine; crashes are not
    }
  }
  CHECK(verdicts + errors == 120);
  CHECK(errors > 0);
  CHECK(verdicts > 0);
}

TEST_CASE("cli family command") {
  CliResult r = run_cli("family --x 3 --y 3");
  REQUIRE(r.exit_code == 0);
  CHECK(r.stdout_json["result"]["ambient_dim"] == json(3));

  r = run_cli("family --x 1 --y 1");
  CHECK(r.exit_code == 2);

  r = run_cli("family --x '[\"2\",\"1\"]' --y '[\"0\",\"1\"]' --radicand 2");
  REQUIRE(r.exit_code == 0);
  CHECK(r.stdout_json["result"]["radicand"] == json(2));
}
