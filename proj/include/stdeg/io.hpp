#pragma once

// JSON, DOT and plain-text renderings of the library's values.  Output is
// deterministic: element, face and pair orders follow the library's canonical
// orders and JSON objects are key-sorted.

#include <string>

#include "json.hpp"
#include "stdeg/cluster.hpp"
#include "stdeg/crystal_polytopes.hpp"
#include "stdeg/minors.hpp"
#include "stdeg/semitoric.hpp"

namespace stdeg::io {

using nlohmann::json;

/// Integral rationals become JSON numbers, others "p/q" strings.
json rational_json(const Rational& q);
json to_json(const RootDatum& d);
json to_json(const WeylElement& w);
json to_json(const Weight& w);

/// Elements in canonical order with Psi- and Phi-vectors; edges are lowering
/// arrows {from, to, color} between element indices.
json crystal_json(const LambdaCrystal& crystal);
/// Nodes labelled by coordinate vectors, arrows labelled by color.
std::string crystal_dot(const LambdaCrystal& crystal, Coordinates coords = Coordinates::String);

json polytope_json(const RationalPolytope& p, const std::vector<IntVec>& lattice_points);
json polytope_json(const ParametrizedPolytope& p);
std::string polytope_text(const ParametrizedPolytope& p);

json exchange_json(const ExchangeMatrix& eps);
json seed_json(const Seed& seed);
std::string seed_text(const Seed& seed);

json minor_report_json(const MinorReport& r);

json report_json(const DegenerationReport& r);
std::string report_text(const DegenerationReport& r);
json scan_json(const ScanSummary& s, bool with_reports = false);
std::string scan_text(const ScanSummary& s);

/// Indented JSON with arrays of scalars kept on one line.
std::string dump(const json& j);

std::string vector_text(const IntVec& v, const char* sep = ",");

}  // namespace stdeg::io
