#include "stdeg/io.hpp"

#include <algorithm>
#include <sstream>

namespace stdeg::io {

namespace {

json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

json int_matrix_json(const IntMatrix& m) {
  json out = json::array();
  for (const auto& row : m) out.push_back(row);
  return out;
}

json points_json(const std::vector<IntVec>& pts) {
  json out = json::array();
  for (const auto& p : pts) out.push_back(p);
  return out;
}

json rat_vec_json(const RatVec& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(rational_json(q));
  return out;
}

json halfspace_json(const Halfspace& h) {
  json n = json::array();
  for (const auto& z : h.normal) n.push_back(integer_json(z));
  return {{"normal", n}, {"offset", rational_json(h.offset)}};
}

bool is_flat(const json& j) {
  if (!j.is_array()) return !j.is_object();
  return std::all_of(j.begin(), j.end(), [](const json& x) { return !x.is_structured(); });
}

void write(std::ostream& os, const json& j, int indent) {
  const std::string pad(indent + 2, ' ');
  if (is_flat(j) || j.empty()) {
    os << j.dump();
  } else if (j.is_array()) {
    os << "[\n";
    for (size_t k = 0; k < j.size(); ++k) {
      os << pad;
      write(os, j[k], indent + 2);
      os << (k + 1 < j.size() ? ",\n" : "\n");
    }
    os << std::string(indent, ' ') << "]";
  } else {
    os << "{\n";
    size_t k = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++k) {
      os << pad << json(it.key()).dump() << ": ";
      write(os, it.value(), indent + 2);
      os << (k + 1 < j.size() ? ",\n" : "\n");
    }
    os << std::string(indent, ' ') << "}";
  }
}

std::string paren(const IntVec& v) { return "(" + vector_text(v, ", ") + ")"; }

}  // namespace

std::string vector_text(const IntVec& v, const char* sep) {
  std::string s;
  for (size_t k = 0; k < v.size(); ++k) s += (k ? sep : "") + std::to_string(v[k]);
  return s;
}

json rational_json(const Rational& q) {
  if (q.get_den() == 1) return integer_json(q.get_num());
  return to_string(q);
}

json to_json(const RootDatum& d) {
  return {{"series", std::string(1, d.series())}, {"rank", d.rank()}, {"cartan", int_matrix_json(d.cartan())}};
}

json to_json(const WeylElement& w) { return {{"word", w.word}}; }

json to_json(const Weight& w) { return w.coords; }

json crystal_json(const LambdaCrystal& c) {
  const int n = c.context().datum().rank();
  json elements = json::array(), edges = json::array();
  for (size_t b = 0; b < c.size(); ++b) {
    const auto& el = c.element(b);
    elements.push_back({{"index", b},
                        {"psi", kashiwara_embedding(c, b)},
                        {"string", string_parametrization(c, b)},
                        {"weight", el.wt.coords},
                        {"epsilon", el.eps},
                        {"phi", el.phi}});
    for (int i = 1; i <= n; ++i)
      if (c.f(b, i) != LambdaCrystal::npos) edges.push_back({{"from", b}, {"to", c.f(b, i)}, {"color", i}});
  }
  return {{"datum", to_json(c.context().datum())},
          {"word", c.context().word()},
          {"lambda", to_json(c.highest_weight())},
          {"size", c.size()},
          {"highest", c.highest()},
          {"lowest", c.lowest()},
          {"elements", elements},
          {"edges", edges}};
}

std::string crystal_dot(const LambdaCrystal& c, Coordinates coords) {
  const int n = c.context().datum().rank();
  std::ostringstream os;
  os << "digraph crystal {\n  rankdir=LR;\n";
  for (size_t b = 0; b < c.size(); ++b)
    os << "  n" << b << " [label=\"" << paren(crystal_coordinates(c, b, coords)) << "\"];\n";
  for (size_t b = 0; b < c.size(); ++b)
    for (int i = 1; i <= n; ++i)
      if (c.f(b, i) != LambdaCrystal::npos) os << "  n" << b << " -> n" << c.f(b, i) << " [label=\"" << i << "\"];\n";
  os << "}\n";
  return os.str();
}

json polytope_json(const RationalPolytope& p, const std::vector<IntVec>& lattice_points) {
  json vertices = json::array(), halfspaces = json::array(), equalities = json::array();
  for (const auto& v : p.vertices()) vertices.push_back(rat_vec_json(v));
  for (const auto& h : p.halfspaces()) halfspaces.push_back(halfspace_json(h));
  for (const auto& h : p.equalities()) equalities.push_back(halfspace_json(h));
  return {{"ambient", p.ambient()},   {"dim", p.dim()},
          {"vertices", vertices},     {"halfspaces", halfspaces},
          {"equalities", equalities}, {"lattice_points", points_json(lattice_points)}};
}

json polytope_json(const ParametrizedPolytope& p) {
  json out = polytope_json(p.polytope, p.points);
  out["coordinates"] = to_string(p.coords);
  out["saturated"] = p.saturated;
  out["level"] = p.level;
  if (!p.warning.empty()) out["warning"] = p.warning;
  return out;
}

std::string polytope_text(const ParametrizedPolytope& p) {
  std::ostringstream os;
  os << inequality_text(p.polytope);
  os << "# " << p.points.size() << " lattice points, dim " << p.polytope.dim() << ", "
     << (p.saturated ? "saturated at level " + std::to_string(p.level) : "not saturated") << "\n";
  if (!p.warning.empty()) os << "# warning: " << p.warning << "\n";
  return os.str();
}

json exchange_json(const ExchangeMatrix& eps) {
  return {{"size", eps.size()},
          {"unfrozen", eps.unfrozen()},
          {"matrix", int_matrix_json(eps.rows())},
          {"symmetrizer", eps.symmetrizer()},
          {"full_rank", eps.full_rank()}};
}

json seed_json(const Seed& seed) {
  const auto names = variable_names(seed.matrix.size());
  json vars = json::array();
  for (const auto& v : seed.variables) vars.push_back(v.to_string(names));
  json out = exchange_json(seed.matrix);
  out["variables"] = vars;
  out["mutations"] = seed.provenance;
  return out;
}

std::string seed_text(const Seed& seed) {
  const auto names = variable_names(seed.matrix.size());
  std::ostringstream os;
  os << "mutations: " << (seed.provenance.empty() ? "none" : vector_text(IntVec(seed.provenance.begin(), seed.provenance.end()))) << "\n";
  os << "unfrozen: " << vector_text(IntVec(seed.matrix.unfrozen().begin(), seed.matrix.unfrozen().end())) << "\n";
  os << "matrix:\n";
  for (const auto& row : seed.matrix.rows()) {
    os << " ";
    for (int64_t x : row) os << (x < 0 ? " " : "  ") << x;
    os << "\n";
  }
  os << "variables:\n";
  for (size_t k = 0; k < seed.variables.size(); ++k)
    os << "  " << k + 1 << (seed.matrix.is_unfrozen(k + 1) ? "  " : "* ") << seed.variables[k].to_string(names) << "\n";
  return os.str();
}

json minor_report_json(const MinorReport& r) {
  json out{{"word", r.word},
           {"direction", r.direction},
           {"samples_ok", r.samples_ok},
           {"samples_skipped", r.samples_skipped},
           {"samples_failed", r.samples_failed},
           {"consistent", r.consistent},
           {"regular", r.regular},
           {"passed", r.passed()}};
  if (r.regular) {
    size_t size = 1;
    while (unitriangular_variable_count(size) < r.mutated.nvars()) ++size;
    out["mutated"] = r.mutated.to_string(unitriangular_variable_names(size));
  }
  if (r.witness) out["witness"] = *r.witness;
  return out;
}

json report_json(const DegenerationReport& r) {
  json faces = json::array();
  for (const auto& f : r.certificate) {
    json verts = json::array();
    for (const auto& v : f.vertices) verts.push_back(rat_vec_json(v));
    faces.push_back({{"dim", f.dim}, {"tight", f.tight}, {"vertices", verts}, {"points", points_json(f.points)}});
  }
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  json out{{"context", {{"datum", r.datum}, {"word", r.word}, {"coordinates", to_string(r.system)}}},
           {"lambda", to_json(r.lambda)},
           {"v", to_json(r.v)},
           {"w", to_json(r.w)},
           {"polytope", polytope_json(r.polytope, {})},
           {"richardson", points_json(r.richardson)},
           {"certificate", faces},
           {"checks", checks},
           {"passed", r.passed()}};
  out["polytope"].erase("lattice_points");
  if (r.system == CoordinateSystem::Cluster) out["context"]["mutations"] = r.mutation_word;
  out["witness"] = r.witness ? json(*r.witness) : json(nullptr);
  return out;
}

std::string report_text(const DegenerationReport& r) {
  std::ostringstream os;
  os << r.datum << " word " << word_text(r.word) << ", lambda (" << vector_text(r.lambda.coords) << "), "
     << to_string(r.system) << " coordinates";
  if (r.system == CoordinateSystem::Cluster && !r.mutation_word.empty())
    os << " after mutations " << vector_text(IntVec(r.mutation_word.begin(), r.mutation_word.end()));
  os << "\nv = " << word_text(r.v.word) << ", w = " << word_text(r.w.word) << "\n";
  os << "Richardson points: " << r.richardson.size() << "\n";
  os << "certificate: " << r.certificate.size() << " maximal face" << (r.certificate.size() == 1 ? "" : "s") << "\n";
  for (const auto& f : r.certificate) {
    os << "  dim " << f.dim << ":";
    for (const auto& p : f.points) os << " " << paren(p);
    os << "\n";
  }
  if (r.witness) os << "uncovered point: " << paren(*r.witness) << "\n";
  for (const auto& c : r.checks)
    os << (c.passed ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
  return os.str();
}

json scan_json(const ScanSummary& s, bool with_reports) {
  json dims = json::object();
  for (const auto& [d, k] : s.face_dimensions) dims[std::to_string(d)] = k;
  json out{{"pairs", s.pairs},
           {"certified", s.certified},
           {"face_dimensions", dims},
           {"violations", s.violations},
           {"passed", s.passed()}};
  if (with_reports) {
    json reps = json::array();
    for (const auto& r : s.reports) reps.push_back(report_json(r));
    out["reports"] = reps;
  }
  return out;
}

std::string scan_text(const ScanSummary& s) {
  std::ostringstream os;
  for (const auto& r : s.reports) {
    os << (r.passed() ? "PASS" : "FAIL") << " v=" << word_text(r.v.word) << " w=" << word_text(r.w.word) << ": "
       << r.richardson.size() << " points, " << r.certificate.size() << " faces (dims";
    for (const auto& f : r.certificate) os << " " << f.dim;
    os << ")\n";
  }
  os << s.certified << "/" << s.pairs << " pairs certified";
  os << "; face dimensions";
  for (const auto& [d, k] : s.face_dimensions) os << " " << d << ":" << k;
  os << "\n";
  for (const auto& v : s.violations) os << "violation " << v << "\n";
  return os.str();
}

std::string dump(const json& j) {
  std::ostringstream os;
  write(os, j, 0);
  os << "\n";
  return os.str();
}

}  // namespace stdeg::io
