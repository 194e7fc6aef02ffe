// latwidth command-line front end: exact lattice-width, hollowness and
// emptiness computations, direct-sum and gallery constructions, and
// certificate verification. JSON in, JSON out; errors as JSON on stderr.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include "latwidth/json_io.hpp"

namespace lw = latwidth;
using lw::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;   // Rejected / property does not hold
constexpr int kExitError = 2;   // bad input, dimension guard, internal error

struct Report {
  json envelope;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  explicit Report(const std::vector<std::string>& argv) {
    envelope["command"] = argv;
    envelope["inputs"] = json::object();
  }
  void input(const std::string& path) { envelope["inputs"][path] = lw::file_digest(path); }
  int finish(const json& result, int code) {
    envelope["result"] = result;
    envelope["wall_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
    std::cout << envelope.dump(2) << "\n";
    return code;
  }
};

lw::Lattice lattice_or_default(Report& rep, const std::string& path, std::size_t dim) {
  if (path.empty()) return lw::Lattice::integer(dim);
  rep.input(path);
  return lw::lattice_from_json(lw::load_json_file(path));
}

lw::ExactScalar parse_scalar_arg(const std::string& text, long radicand) {
  if (!text.empty() && text.front() == '[')
    return lw::scalar_from_json(json::parse(text), radicand);
  auto r = lw::Rational::parse(text);
  if (!r) lw::fail(lw::errc::parse_error, "malformed scalar argument: " + text);
  return lw::ExactScalar(*r);
}

// Independent re-verification for --oracle: plain box scans that bypass the
// production search paths.
json oracle_check_width(const lw::VPolytope& p, const lw::Lattice& l,
                        const lw::WidthReport& report) {
  std::size_t d = p.ambient_dim();
  if (d > 3) return json{{"ran", false}, {"note", "oracle scan limited to dimension 3"}};
  lw::Mat<lw::Rational> dual = l.dual().basis();
  const long range = 20;
  std::optional<lw::ExactScalar> best;
  std::vector<long> z(d, -range);
  while (true) {
    bool zero = true;
    for (long c : z) zero = zero && c == 0;
    if (!zero) {
      lw::RatVec coeffs(d, lw::Rational(0));
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t r = 0; r < d; ++r)
          coeffs[r] += dual(r, i) * lw::Rational(z[i]);
      lw::ExactScalar w = lw::width_along(p, lw::DualFunctional{coeffs});
      if (!best || w < *best) best = w;
    }
    std::size_t i = 0;
    while (i < d && z[i] == range) z[i++] = -range;
    if (i == d) break;
    ++z[i];
  }
  bool agrees = best && *best == report.value;
  return json{{"ran", true}, {"scan_range", range}, {"agrees", agrees}};
}

json oracle_check_hollow(const lw::VPolytope& p, const lw::Lattice& l, bool hollow) {
  // Scan the lattice box spanned by the vertices and test interior
  // membership via the facet inequalities directly.
  std::size_t d = p.ambient_dim();
  std::vector<mpz_class> lo(d), hi(d);
  bool first = true;
  for (const lw::Point& v : p.vertices()) {
    lw::Point y = l.to_lattice_coords(v);
    for (std::size_t i = 0; i < d; ++i) {
      mpz_class f = y[i].floor(), c = y[i].ceil();
      if (first || f < lo[i]) lo[i] = f;
      if (first || c > hi[i]) hi[i] = c;
    }
    first = false;
  }
  lw::HRep h = lw::facets(p);
  bool found = false;
  std::vector<mpz_class> z = lo;
  while (!found) {
    lw::RatVec zr(d);
    for (std::size_t i = 0; i < d; ++i) zr[i] = lw::Rational::from_integer(z[i]);
    lw::RatVec x = l.from_lattice_coords(zr);
    found = lw::contains_point(h, lw::to_scalar_vec(x), /*strict=*/true);
    std::size_t i = 0;
    while (i < d && z[i] == hi[i]) z[i] = lo[i], ++i;
    if (i == d) break;
    if (!found) ++z[i];
  }
  return json{{"ran", true}, {"agrees", found == !hollow}};
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  CLI::App app{"exact lattice width, hollowness and certificates for low-dimensional polytopes"};
  app.require_subcommand(1);

  std::string poly_path, lattice_path, cert_path, spec_path, out_dir, name;
  std::string x_arg, y_arg, simplex_path;
  long radicand_arg = 0, m_arg = 0;
  bool all_minimizers = false, oracle = false;

  auto* width = app.add_subcommand("width", "exact lattice width with all minimizers");
  width->add_option("polytope", poly_path)->required();
  width->add_option("--lattice", lattice_path);
  width->add_flag("--all-minimizers", all_minimizers);
  width->add_flag("--oracle", oracle);

  auto* hollow = app.add_subcommand("hollow", "interior lattice-point test");
  hollow->add_option("polytope", poly_path)->required();
  hollow->add_option("--lattice", lattice_path);
  hollow->add_flag("--oracle", oracle);

  auto* empty = app.add_subcommand("empty", "empty-simplex test");
  empty->add_option("polytope", poly_path)->required();
  empty->add_option("--lattice", lattice_path);

  auto* sum = app.add_subcommand("sum", "build a dilated direct sum from a component spec");
  sum->add_option("spec", spec_path)->required();
  sum->add_option("--out-dir", out_dir);

  auto* sebo = app.add_subcommand("sebo", "stretched cyclic sum of an empty simplex");
  sebo->add_option("--simplex", simplex_path)->required();
  sebo->add_option("--lattice", lattice_path);
  sebo->add_option("-m", m_arg)->required();
  sebo->add_option("--out-dir", out_dir);

  auto* gallery = app.add_subcommand("gallery", "named constructions");
  gallery->add_option("name", name)->required();
  gallery->add_option("--emit-certificates", out_dir);

  auto* certify = app.add_subcommand("certify", "verify a certificate against a polytope");
  certify->add_option("polytope", poly_path)->required();
  certify->add_option("lattice", lattice_path)->required();
  certify->add_option("certificate", cert_path)->required();

  auto* family = app.add_subcommand("family", "order-4 symmetric circumscribed tetrahedron");
  family->add_option("--x", x_arg)->required();
  family->add_option("--y", y_arg)->required();
  family->add_option("--radicand", radicand_arg);
  family->add_option("--out-dir", out_dir);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  Report rep(args);

  auto emit_item = [&](const lw::GalleryItem& item, const std::string& dir) {
    std::filesystem::create_directories(dir);
    auto path = [&](const std::string& suffix) {
      return dir + "/" + item.name + "." + suffix + ".json";
    };
    lw::write_json_file(path("polytope"), lw::polytope_to_json(item.polytope));
    lw::write_json_file(path("lattice"), lw::lattice_to_json(item.lattice));
    for (std::size_t i = 0; i < item.width_certificates.size(); ++i)
      lw::write_json_file(path("width-cert-" + std::to_string(i)),
                          lw::width_certificate_to_json(item.width_certificates[i]));
    for (std::size_t i = 0; i < item.sum_certificates.size(); ++i)
      lw::write_json_file(path("hollow-sum-" + std::to_string(i)),
                          lw::hollow_sum_to_json(item.sum_certificates[i]));
    if (item.name == "square-counterexample")
      lw::write_json_file(path("width-cert-rejected"),
                          lw::width_certificate_to_json(lw::square_boundary_certificate()));
  };

  if (*width) {
    rep.input(poly_path);
    lw::VPolytope p = lw::polytope_from_json(lw::load_json_file(poly_path));
    lw::Lattice l = lattice_or_default(rep, lattice_path, p.ambient_dim());
    lw::WidthReport r = lw::lattice_width(p, l);
    json result = lw::width_report_to_json(r, all_minimizers);
    int code = kExitOk;
    if (oracle) {
      result["oracle"] = oracle_check_width(p, l, r);
      if (result["oracle"].value("ran", false) && !result["oracle"].value("agrees", true))
        code = kExitFalse;
    }
    return rep.finish(result, code);
  }
  if (*hollow) {
    rep.input(poly_path);
    lw::VPolytope p = lw::polytope_from_json(lw::load_json_file(poly_path));
    lw::Lattice l = lattice_or_default(rep, lattice_path, p.ambient_dim());
    lw::HollownessReport r = lw::is_hollow(p, l);
    json result = lw::hollowness_report_to_json(r);
    int code = r.hollow ? kExitOk : kExitFalse;
    if (oracle) {
      result["oracle"] = oracle_check_hollow(p, l, r.hollow);
      if (!result["oracle"].value("agrees", true)) code = kExitFalse;
    }
    return rep.finish(result, code);
  }
  if (*empty) {
    rep.input(poly_path);
    lw::VPolytope p = lw::polytope_from_json(lw::load_json_file(poly_path));
    lw::Lattice l = lattice_or_default(rep, lattice_path, p.ambient_dim());
    bool e = lw::is_empty_simplex(p, l);
    return rep.finish(json{{"empty", e}}, e ? kExitOk : kExitFalse);
  }
  if (*sum) {
    rep.input(spec_path);
    lw::HollowSumCertificate cert = lw::hollow_sum_from_json(lw::load_json_file(spec_path));
    lw::DirectSum ds = lw::rebuild_direct_sum(cert);
    json result{{"dimension", ds.dimension},
                {"vertex_count", ds.polytope.vertices().size()},
                {"claimed_width", lw::scalar_to_json(ds.claimed_width)},
                {"inv_dilation_sum", lw::scalar_to_json(ds.inv_dilation_sum)},
                {"sum_condition_holds", ds.sum_condition_holds},
                {"simplex", ds.simplex},
                {"lattice_polytope", ds.lattice_polytope}};
    std::string dir = out_dir.empty() ? "." : out_dir;
    std::filesystem::create_directories(dir);
    lw::write_json_file(dir + "/sum.polytope.json", lw::polytope_to_json(ds.polytope));
    lw::write_json_file(dir + "/sum.lattice.json", lw::lattice_to_json(ds.lattice));
    lw::write_json_file(dir + "/sum.certificate.json", lw::hollow_sum_to_json(cert));
    result["emitted"] = dir;
    return rep.finish(result, kExitOk);
  }
  if (*sebo) {
    rep.input(simplex_path);
    lw::VPolytope p = lw::polytope_from_json(lw::load_json_file(simplex_path));
    lw::Lattice l = lattice_or_default(rep, lattice_path, p.ambient_dim());
    lw::GalleryItem item = lw::sebo_sum(p, l, m_arg);
    if (!out_dir.empty()) emit_item(item, out_dir);
    return rep.finish(lw::gallery_summary_json(item), kExitOk);
  }
  if (*gallery) {
    auto item = lw::gallery_by_name(name);
    if (!item) lw::fail(lw::errc::invalid_argument, "unknown gallery name: " + name);
    if (!out_dir.empty()) emit_item(*item, out_dir);
    return rep.finish(lw::gallery_summary_json(*item), kExitOk);
  }
  if (*certify) {
    rep.input(poly_path);
    rep.input(lattice_path);
    rep.input(cert_path);
    lw::VPolytope p = lw::polytope_from_json(lw::load_json_file(poly_path));
    lw::Lattice l = lw::lattice_from_json(lw::load_json_file(lattice_path));
    json cj = lw::load_json_file(cert_path);
    if (lw::certificate_kind(cj) == lw::CertKind::width) {
      lw::WidthCertificate cert = lw::width_certificate_from_json(cj);
      lw::Verdict v = lw::verify_width_certificate(p, l, cert);
      return rep.finish(lw::verdict_to_json(v), v.proved() ? kExitOk : kExitFalse);
    }
    lw::HollowSumCertificate cert = lw::hollow_sum_from_json(cj);
    lw::DirectSum ds = lw::rebuild_direct_sum(cert);
    if (!(ds.polytope == p) || !(ds.lattice == l)) {
      lw::Verdict v;
      v.reason = "certificate does not describe the given polytope and lattice";
      return rep.finish(lw::verdict_to_json(v), kExitFalse);
    }
    lw::SumVerdict v = lw::verify_hollow_sum(cert);
    return rep.finish(lw::sum_verdict_to_json(v), v.verdict.proved() ? kExitOk : kExitFalse);
  }
  if (*family) {
    if (radicand_arg != 0) lw::require_valid_radicand(radicand_arg);
    lw::ExactScalar x = parse_scalar_arg(x_arg, radicand_arg);
    lw::ExactScalar y = parse_scalar_arg(y_arg, radicand_arg);
    lw::GalleryItem item = lw::delta_family(x, y);
    if (!out_dir.empty()) emit_item(item, out_dir);
    json result = lw::gallery_summary_json(item);
    result["vertices"] = lw::polytope_to_json(item.polytope)["vertices"];
    return rep.finish(result, kExitOk);
  }
  return kExitError;  // unreachable: a subcommand is required
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* threads = std::getenv("LATWIDTH_THREADS")) {
    char* end = nullptr;
    long n = std::strtol(threads, &end, 10);
    if (end == threads || *end != '\0' || n < 1) {
      std::cerr << json{{"error", {{"kind", "InvalidArgument"},
                                   {"message", "LATWIDTH_THREADS must be a positive integer"}}}}
                       .dump()
                << "\n";
      return kExitError;
    }
    // Computations are single-threaded; the cap is accepted for compatibility.
  }

  try {
    return run(argc, argv);
  } catch (const lw::error& e) {
    std::cerr << json{{"error", {{"kind", lw::errc_name(e.code())}, {"message", e.what()}}}}.dump()
              << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", {{"kind", "Internal"}, {"message", e.what()}}}}.dump() << "\n";
    return kExitError;
  }
}
