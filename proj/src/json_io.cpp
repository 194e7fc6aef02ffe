#include "latwidth/json_io.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>

namespace latwidth {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(errc::parse_error, what); }

// Shape errors from the json library (wrong types, missing keys) become
// parse errors of this library.
template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    bad(std::string(what) + ": " + e.what());
  }
}

long radicand_from_json(const json& j) {
  if (!j.contains("radicand") || j["radicand"].is_null()) return 0;
  if (!j["radicand"].is_number_integer()) bad("radicand must be an integer or null");
  long d = j["radicand"].get<long>();
  require_valid_radicand(d);
  return d;
}

json radicand_to_json(long d) { return d == 0 ? json(nullptr) : json(d); }

// Joint radicand of a set of scalars, for the per-file declaration.
struct RadicandScan {
  long d = 0;
  void see(const ExactScalar& s) {
    if (s.radicand() == 0) return;
    if (d == 0) d = s.radicand();
    else if (d != s.radicand())
      fail(errc::radicand_mismatch, "mixed radicands in one file");
  }
  void see(const Point& p) {
    for (const auto& x : p) see(x);
  }
};

Point point_from_json(const json& j, long radicand, std::size_t dim) {
  if (!j.is_array() || j.size() != dim) bad("point has the wrong dimension");
  Point p;
  p.reserve(dim);
  for (const auto& c : j) p.push_back(scalar_from_json(c, radicand));
  return p;
}

json point_to_json(const Point& p) {
  json a = json::array();
  for (const auto& x : p) a.push_back(scalar_to_json(x));
  return a;
}

RatVec ratvec_from_json(const json& j, std::size_t dim) {
  if (!j.is_array() || j.size() != dim) bad("vector has the wrong dimension");
  RatVec v;
  v.reserve(dim);
  for (const auto& c : j) v.push_back(rational_from_json(c));
  return v;
}

json ratvec_to_json(const RatVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(rational_to_json(x));
  return a;
}

}  // namespace

json scalar_to_json(const ExactScalar& s) {
  if (s.is_rational()) return json(s.rational_part().str());
  return json::array({s.rational_part().str(), s.irrational_part().str()});
}

ExactScalar scalar_from_json(const json& j, long radicand) {
  if (j.is_string()) {
    auto r = Rational::parse(j.get<std::string>());
    if (!r) bad("malformed rational scalar: " + j.get<std::string>());
    return ExactScalar(*r);
  }
  if (j.is_array() && j.size() == 2 && j[0].is_string() && j[1].is_string()) {
    if (radicand == 0) bad("quadratic scalar in a file without a radicand");
    auto rat = Rational::parse(j[0].get<std::string>());
    auto irr = Rational::parse(j[1].get<std::string>());
    if (!rat || !irr) bad("malformed quadratic scalar");
    return ExactScalar::quadratic(*rat, *irr, radicand);
  }
  bad("scalar must be a string or a two-string array");
}

json rational_to_json(const Rational& r) { return json(r.str()); }

Rational rational_from_json(const json& j) {
  if (!j.is_string()) bad("expected a rational scalar string");
  auto r = Rational::parse(j.get<std::string>());
  if (!r) bad("malformed rational scalar: " + j.get<std::string>());
  return *r;
}

json polytope_to_json(const VPolytope& p) {
  json j;
  j["ambient_dim"] = p.ambient_dim();
  j["radicand"] = radicand_to_json(p.radicand());
  json verts = json::array();
  for (const Point& v : p.vertices()) verts.push_back(point_to_json(v));
  j["vertices"] = std::move(verts);
  return j;
}

VPolytope polytope_from_json(const json& j) {
  return guarded("polytope", [&]() -> VPolytope {
  if (!j.is_object() || !j.contains("ambient_dim") || !j.contains("vertices"))
    bad("polytope needs ambient_dim and vertices");
  std::size_t dim = j["ambient_dim"].get<std::size_t>();
  long radicand = radicand_from_json(j);
  std::vector<Point> verts;
  for (const auto& v : j["vertices"]) verts.push_back(point_from_json(v, radicand, dim));
    if (dim <= 6) return VPolytope::from_points(dim, std::move(verts));
    return VPolytope(dim, std::move(verts));
  });
}

json lattice_to_json(const Lattice& l) {
  json j;
  j["dim"] = l.dim();
  j["radicand"] = nullptr;
  json basis = json::array();
  for (std::size_t c = 0; c < l.dim(); ++c) basis.push_back(ratvec_to_json(l.basis().col(c)));
  j["basis"] = std::move(basis);
  j["offset"] = ratvec_to_json(l.offset());
  return j;
}

Lattice lattice_from_json(const json& j) {
  return guarded("lattice", [&]() -> Lattice {
  if (!j.is_object() || !j.contains("dim") || !j.contains("basis"))
    bad("lattice needs dim and basis");
  std::size_t dim = j["dim"].get<std::size_t>();
  if (!j["basis"].is_array() || j["basis"].size() != dim) bad("lattice basis shape mismatch");
  Mat<Rational> basis(dim, dim);
  for (std::size_t c = 0; c < dim; ++c) {
    RatVec col = ratvec_from_json(j["basis"][c], dim);
    for (std::size_t r = 0; r < dim; ++r) basis(r, c) = col[r];
  }
  RatVec offset(dim, Rational(0));
  if (j.contains("offset") && !j["offset"].is_null())
    offset = ratvec_from_json(j["offset"], dim);
    return Lattice(std::move(basis), std::move(offset));
  });
}

json hrep_to_json(const HRep& h, long radicand) {
  json j;
  j["ambient_dim"] = h.ambient_dim;
  j["radicand"] = radicand_to_json(radicand);
  json normals = json::array(), rhs = json::array();
  for (const Halfspace& hs : h.halfspaces) {
    normals.push_back(point_to_json(hs.normal));
    rhs.push_back(scalar_to_json(hs.rhs));
  }
  j["normals"] = std::move(normals);
  j["rhs"] = std::move(rhs);
  return j;
}

json width_report_to_json(const WidthReport& r, bool all_minimizers) {
  json j;
  j["value"] = scalar_to_json(r.value);
  j["minimizer_count"] = r.minimizers.size();
  json mins = json::array();
  std::size_t limit = all_minimizers ? r.minimizers.size() : std::min<std::size_t>(8, r.minimizers.size());
  for (std::size_t i = 0; i < limit; ++i) mins.push_back(ratvec_to_json(r.minimizers[i].coeffs));
  j["minimizers"] = std::move(mins);
  j["search_bound_used"] = r.search_bound_used;
  return j;
}

json hollowness_report_to_json(const HollownessReport& r) {
  json j;
  j["hollow"] = r.hollow;
  j["witness"] = r.witness ? ratvec_to_json(*r.witness) : json(nullptr);
  return j;
}

json verdict_to_json(const Verdict& v) {
  json j;
  switch (v.kind) {
    case Verdict::Kind::proved_exact: j["verdict"] = "proved_exact"; break;
    case Verdict::Kind::proved_at_least: j["verdict"] = "proved_at_least"; break;
    case Verdict::Kind::rejected: j["verdict"] = "rejected"; break;
  }
  j["bound"] = v.proved() ? scalar_to_json(v.bound) : json(nullptr);
  j["reason"] = v.proved() ? json(nullptr) : json(v.reason);
  return j;
}

json sum_verdict_to_json(const SumVerdict& v) {
  json j = verdict_to_json(v.verdict);
  if (v.verdict.proved()) {
    j["derived_width"] = scalar_to_json(v.derived_width);
    j["inv_dilation_sum"] = scalar_to_json(v.inv_dilation_sum);
    j["dimension"] = v.dimension;
    j["vertex_count"] = v.vertex_count;
    j["lattice_polytope"] = v.lattice_polytope;
    j["simplex"] = v.simplex;
  }
  return j;
}

json width_certificate_to_json(const WidthCertificate& c) {
  RadicandScan scan;
  scan.see(c.claimed_bound);
  for (const CertPath& p : c.paths) {
    for (const Point& pt : p.path.points) scan.see(pt);
    for (const auto& w : p.start.coeffs) scan.see(w);
    for (const auto& w : p.end.coeffs) scan.see(w);
  }
  for (const auto& r : c.exceptional_rays) scan.see(r.stated_width);

  json j;
  j["kind"] = "width";
  j["radicand"] = radicand_to_json(scan.d);
  j["claimed_bound"] = scalar_to_json(c.claimed_bound);
  json paths = json::array();
  for (const CertPath& p : c.paths) {
    json pj;
    json pts = json::array();
    for (const Point& pt : p.path.points) pts.push_back(point_to_json(pt));
    pj["points"] = std::move(pts);
    pj["endpoint_witnesses"] =
        json::array({point_to_json(p.start.coeffs), point_to_json(p.end.coeffs)});
    paths.push_back(std::move(pj));
  }
  j["paths"] = std::move(paths);
  json rays = json::array();
  for (const auto& r : c.exceptional_rays) {
    json rj;
    rj["coeffs"] = ratvec_to_json(r.coeffs);
    rj["stated_width"] = scalar_to_json(r.stated_width);
    rays.push_back(std::move(rj));
  }
  j["exceptional_rays"] = std::move(rays);
  json syms = json::array();
  for (const Mat<Rational>& m : c.symmetries) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(rational_to_json(m(i, k)));
      rows.push_back(std::move(row));
    }
    syms.push_back(std::move(rows));
  }
  j["symmetries"] = std::move(syms);
  j["upper_bound_functional"] =
      c.upper_bound_functional ? json{{"coeffs", ratvec_to_json(*c.upper_bound_functional)}}
                               : json(nullptr);
  return j;
}

WidthCertificate width_certificate_from_json(const json& j) {
  return guarded("width certificate", [&]() -> WidthCertificate {
  if (!j.is_object() || j.value("kind", "") != "width") bad("not a width certificate");
  long radicand = radicand_from_json(j);
  WidthCertificate c;
  c.claimed_bound = scalar_from_json(j.at("claimed_bound"), radicand);
  for (const auto& pj : j.at("paths")) {
    CertPath cp;
    const auto& pts = pj.at("points");
    if (!pts.is_array() || pts.size() < 2) bad("path needs at least two points");
    std::size_t dim = pts[0].size();
    for (const auto& pt : pts) cp.path.points.push_back(point_from_json(pt, radicand, dim));
    const auto& wit = pj.at("endpoint_witnesses");
    if (!wit.is_array() || wit.size() != 2) bad("endpoint_witnesses needs two vectors");
    for (const auto& w : wit[0]) cp.start.coeffs.push_back(scalar_from_json(w, radicand));
    for (const auto& w : wit[1]) cp.end.coeffs.push_back(scalar_from_json(w, radicand));
    c.paths.push_back(std::move(cp));
  }
  if (j.contains("exceptional_rays"))
    for (const auto& rj : j.at("exceptional_rays")) {
      ExceptionalRay r;
      r.coeffs = ratvec_from_json(rj.at("coeffs"), rj.at("coeffs").size());
      r.stated_width = scalar_from_json(rj.at("stated_width"), radicand);
      c.exceptional_rays.push_back(std::move(r));
    }
  if (j.contains("symmetries"))
    for (const auto& mj : j.at("symmetries")) {
      std::size_t n = mj.size();
      Mat<Rational> m(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        if (mj[i].size() != n) bad("symmetry matrix must be square");
        for (std::size_t k = 0; k < n; ++k) m(i, k) = rational_from_json(mj[i][k]);
      }
      c.symmetries.push_back(std::move(m));
    }
  if (j.contains("upper_bound_functional") && !j["upper_bound_functional"].is_null()) {
    const auto& u = j["upper_bound_functional"].at("coeffs");
    c.upper_bound_functional = ratvec_from_json(u, u.size());
  }
  return c;
  });
}

namespace {

const char* evidence_kind_name(ComponentEvidence::Kind k) {
  switch (k) {
    case ComponentEvidence::Kind::enumeration: return "enumerate";
    case ComponentEvidence::Kind::width_certificate: return "width_certificate";
    case ComponentEvidence::Kind::hollow_sum: return "hollow_sum";
  }
  return "enumerate";
}

}  // namespace

json hollow_sum_to_json(const HollowSumCertificate& c) {
  json j;
  j["kind"] = "hollow_sum";
  json comps = json::array();
  for (const HollowSumComponent& comp : c.components) {
    json cj;
    cj["polytope"] = polytope_to_json(comp.polytope);
    cj["lattice"] = lattice_to_json(comp.lattice);
    RadicandScan scan;
    scan.see(comp.dilation);
    scan.see(comp.evidence.width);
    cj["radicand"] = radicand_to_json(scan.d);
    cj["k"] = scalar_to_json(comp.dilation);
    json ev;
    ev["kind"] = evidence_kind_name(comp.evidence.kind);
    ev["width"] = scalar_to_json(comp.evidence.width);
    if (comp.evidence.kind == ComponentEvidence::Kind::width_certificate)
      ev["certificate"] = width_certificate_to_json(*comp.evidence.certificate);
    if (comp.evidence.kind == ComponentEvidence::Kind::hollow_sum)
      ev["certificate"] = hollow_sum_to_json(*comp.evidence.nested);
    cj["evidence"] = std::move(ev);
    comps.push_back(std::move(cj));
  }
  j["components"] = std::move(comps);
  return j;
}

HollowSumCertificate hollow_sum_from_json(const json& j) {
  return guarded("hollow-sum certificate", [&]() -> HollowSumCertificate {
  if (!j.is_object() || !j.contains("components")) bad("not a hollow-sum certificate");
  if (j.contains("kind") && j["kind"] != "hollow_sum") bad("not a hollow-sum certificate");
  HollowSumCertificate c;
  // Share parsed evidence across byte-identical components so that repeated
  // components (the 101-fold sum) verify once.
  std::map<std::string, std::size_t> seen;
  for (const auto& cj : j.at("components")) {
    std::string key = cj.dump();
    auto it = seen.find(key);
    if (it != seen.end()) {
      c.components.push_back(c.components[it->second]);
      continue;
    }
    HollowSumComponent comp{polytope_from_json(cj.at("polytope")),
                            lattice_from_json(cj.at("lattice")),
                            ExactScalar(0),
                            {}};
    long radicand = radicand_from_json(cj);
    comp.dilation = scalar_from_json(cj.at("k"), radicand);
    const auto& ev = cj.at("evidence");
    std::string kind = ev.at("kind").get<std::string>();
    comp.evidence.width = scalar_from_json(ev.at("width"), radicand);
    if (kind == "enumerate") {
      comp.evidence.kind = ComponentEvidence::Kind::enumeration;
    } else if (kind == "width_certificate") {
      comp.evidence.kind = ComponentEvidence::Kind::width_certificate;
      comp.evidence.certificate =
          std::make_shared<WidthCertificate>(width_certificate_from_json(ev.at("certificate")));
    } else if (kind == "hollow_sum") {
      comp.evidence.kind = ComponentEvidence::Kind::hollow_sum;
      comp.evidence.nested =
          std::make_shared<HollowSumCertificate>(hollow_sum_from_json(ev.at("certificate")));
    } else {
      bad("unknown evidence kind: " + kind);
    }
    seen.emplace(std::move(key), c.components.size());
    c.components.push_back(std::move(comp));
  }
  return c;
  });
}

CertKind certificate_kind(const json& j) {
  return guarded("certificate", [&]() -> CertKind {
  if (!j.is_object() || !j.contains("kind")) bad("certificate needs a kind field");
  std::string k = j["kind"].get<std::string>();
  if (k == "width") return CertKind::width;
  if (k == "hollow_sum") return CertKind::hollow_sum;
  bad("unknown certificate kind: " + k);
  });
}

json gallery_summary_json(const GalleryItem& item) {
  json j;
  j["name"] = item.name;
  j["ambient_dim"] = item.polytope.ambient_dim();
  j["vertex_count"] = item.polytope.vertices().size();
  j["radicand"] = radicand_to_json(item.polytope.radicand());
  j["claimed_width"] = item.claimed_width ? scalar_to_json(*item.claimed_width) : json(nullptr);
  j["claimed_width_lower_bound"] = item.claimed_width_lower_bound
                                       ? scalar_to_json(*item.claimed_width_lower_bound)
                                       : json(nullptr);
  j["claimed_hollow"] = item.claimed_hollow ? json(*item.claimed_hollow) : json(nullptr);
  j["claimed_empty"] = item.claimed_empty ? json(*item.claimed_empty) : json(nullptr);
  j["width_certificates"] = item.width_certificates.size();
  j["sum_certificates"] = item.sum_certificates.size();
  j["provenance_notes"] = item.provenance_notes;
  return j;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::invalid_argument, "cannot open " + path);
  json j = json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) bad("malformed JSON in " + path);
  return j;
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) fail(errc::invalid_argument, "cannot write " + path);
  out << j.dump(2) << "\n";
}

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::invalid_argument, "cannot open " + path);
  std::uint64_t h = 1469598103934665603ull;
  char c;
  while (in.get(c)) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

}  // namespace latwidth
