#pragma once

#include <json.hpp>

#include <string>

#include "latwidth/certify.hpp"
#include "latwidth/enumerate.hpp"
#include "latwidth/gallery.hpp"
#include "latwidth/lattice.hpp"
#include "latwidth/polytope.hpp"

// File formats. Scalars use the text grammar "p/q" (or "p") for rationals and
// a two-element array ["p/q", "r/s"] for p/q + (r/s)*sqrt(D), with D declared
// once per file in a "radicand" field. Round-trips are bit-exact: emission is
// canonical (reduced fractions, sorted vertex lists, fixed key order).
namespace latwidth {

using json = nlohmann::ordered_json;

json scalar_to_json(const ExactScalar& s);
ExactScalar scalar_from_json(const json& j, long radicand);

json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

json polytope_to_json(const VPolytope& p);
VPolytope polytope_from_json(const json& j);

json lattice_to_json(const Lattice& l);
Lattice lattice_from_json(const json& j);

json hrep_to_json(const HRep& h, long radicand);

json width_report_to_json(const WidthReport& r, bool all_minimizers);
json hollowness_report_to_json(const HollownessReport& r);
json verdict_to_json(const Verdict& v);
json sum_verdict_to_json(const SumVerdict& v);

json width_certificate_to_json(const WidthCertificate& c);
WidthCertificate width_certificate_from_json(const json& j);

json hollow_sum_to_json(const HollowSumCertificate& c);
// Identical components share evidence objects after parsing, so repeated
// components verify once.
HollowSumCertificate hollow_sum_from_json(const json& j);

// Dispatch on the "kind" field.
enum class CertKind { width, hollow_sum };
CertKind certificate_kind(const json& j);

json gallery_summary_json(const GalleryItem& item);

json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

// FNV-1a 64 content digest, hex.
std::string file_digest(const std::string& path);

}  // namespace latwidth
