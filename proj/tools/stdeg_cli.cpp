#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "stdeg/acceptance.hpp"
#include "stdeg/io.hpp"

using namespace stdeg;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string type = "A";
  int rank = 2;
  std::string word;
  std::string weight;
  std::string v = "e", w;
  std::string mutations;
  std::string coords = "string";
  std::string format;
  std::string output;
  size_t crystal_cap = LambdaCrystal::kDefaultCap;
  size_t group_cap = WeylGroup::kDefaultCap;
  int max_level = 3;
  size_t samples = 100;
  uint64_t sample_seed = 1;
  std::string directions;
  std::string criteria;
  bool with_reports = false;
};

std::vector<int64_t> parse_list(const std::string& text, const char* what) {
  std::vector<int64_t> out;
  if (text.empty() || text == "e") return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    int64_t x = 0;
    try {
      x = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw UsageError(std::string("malformed ") + what + ": '" + text + "'");
    out.push_back(x);
  }
  return out;
}

RootDatum datum_of(const Options& o) {
  if (o.type.size() != 1) throw UsageError("--type takes one letter among A, B, C, D, G");
  return RootDatum::build(static_cast<char>(std::toupper(o.type[0])), o.rank);
}

Word word_of(const RootDatum& d, const std::string& text, const char* what) {
  Word out;
  for (int64_t x : parse_list(text, what)) {
    if (x < 1 || x > d.rank()) throw UsageError(std::string(what) + " letter " + std::to_string(x) + " out of range");
    out.push_back(static_cast<int>(x));
  }
  return out;
}

Word reduced_word_of(const RootDatum& d, const Options& o) {
  if (o.word.empty()) return enumerate_group(d, o.group_cap).longest().word;
  return word_of(d, o.word, "--word");
}

Weight weight_of(const RootDatum& d, const Options& o) {
  if (o.weight.empty()) throw UsageError("--weight is required");
  const IntVec c = parse_list(o.weight, "--weight");
  if (static_cast<int>(c.size()) != d.rank())
    throw UsageError("--weight needs " + std::to_string(d.rank()) + " coordinates");
  const Weight l(c);
  if (!l.is_dominant()) throw UsageError("--weight must be dominant");
  return l;
}

std::vector<size_t> directions_of(const std::string& text, const char* what) {
  std::vector<size_t> out;
  for (int64_t x : parse_list(text, what)) {
    if (x < 1) throw UsageError(std::string(what) + " entries are positive");
    out.push_back(static_cast<size_t>(x));
  }
  return out;
}

CoordinateSystem system_of(const std::string& s) {
  if (s == "string") return CoordinateSystem::String;
  if (s == "nz") return CoordinateSystem::NZ;
  if (s == "cluster") return CoordinateSystem::Cluster;
  throw UsageError("--coords must be string, nz or cluster");
}

std::string format_of(const Options& o, const std::string& fallback, std::initializer_list<const char*> allowed) {
  const std::string f = o.format.empty() ? fallback : o.format;
  for (const char* a : allowed)
    if (f == a) return f;
  std::string list;
  for (const char* a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
  throw UsageError("--format must be one of " + list + " here");
}

void emit(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.output, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + o.output);
  f << text;
}

void emit(const Options& o, const json& j) { emit(o, io::dump(j)); }

int cmd_rootdata(const Options& o) {
  const RootDatum d = datum_of(o);
  const WeylGroup g = enumerate_group(d, o.group_cap);
  const std::string f = format_of(o, "text", {"text", "json"});
  if (f == "json") {
    json j = io::to_json(d);
    j["symmetrizers"] = d.symmetrizers();
    j["weyl_group_order"] = g.size();
    j["longest"] = io::to_json(g.longest());
    json roots = json::array();
    for (const auto& r : positive_roots(d)) roots.push_back(r.coords);
    j["positive_roots"] = roots;
    emit(o, j);
    return kOk;
  }
  std::ostringstream os;
  os << d.name() << "\ncartan:\n";
  for (const auto& row : d.cartan()) os << "  " << io::vector_text(row, " ") << "\n";
  os << "symmetrizers: " << io::vector_text(d.symmetrizers()) << "\n";
  os << "|W| = " << g.size() << ", w0 = " << word_text(g.longest().word) << "\n";
  os << "positive roots: " << positive_roots(d).size() << "\n";
  emit(o, os.str());
  return kOk;
}

int cmd_crystal(const Options& o) {
  const RootDatum d = datum_of(o);
  const WordContext ctx(d, reduced_word_of(d, o));
  const LambdaCrystal c = generate_B_lambda(ctx, weight_of(d, o), o.crystal_cap);
  const std::string f = format_of(o, "text", {"text", "json", "dot"});
  const CoordinateSystem sys = system_of(o.coords);
  if (sys == CoordinateSystem::Cluster) throw UsageError("crystal --coords must be string or nz");
  const Coordinates coords = sys == CoordinateSystem::NZ ? Coordinates::NZ : Coordinates::String;
  if (f == "json") {
    emit(o, io::crystal_json(c));
  } else if (f == "dot") {
    emit(o, io::crystal_dot(c, coords));
  } else {
    std::ostringstream os;
    os << "# index string nz weight\n";
    for (size_t b = 0; b < c.size(); ++b)
      os << b << " (" << io::vector_text(string_parametrization(c, b)) << ") (" << io::vector_text(kashiwara_embedding(c, b))
         << ") (" << io::vector_text(c.element(b).wt.coords) << ")\n";
    os << "# " << c.size() << " elements\n";
    emit(o, os.str());
  }
  return kOk;
}

int cmd_polytope(const Options& o, Coordinates coords) {
  const RootDatum d = datum_of(o);
  CrystalCache cache(WordContext(d, reduced_word_of(d, o)), o.crystal_cap);
  const ParametrizedPolytope p = parametrized_polytope(cache, weight_of(d, o), coords, o.max_level);
  const std::string f = format_of(o, "text", {"text", "json"});
  if (f == "json")
    emit(o, io::polytope_json(p));
  else
    emit(o, io::polytope_text(p));
  return kOk;
}

enum class SeedMode { Build, Mutate, Quiver };

int cmd_seed(const Options& o, SeedMode mode) {
  const RootDatum d = datum_of(o);
  const Word word = o.word.empty() ? enumerate_group(d, o.group_cap).longest().word : word_of(d, o.word, "--word");
  Seed s = initial_seed(build_exchange_from_word(d, word));
  if (mode == SeedMode::Mutate) {
    if (o.mutations.empty()) throw UsageError("seed mutate needs --mutations");
    s = mutate_seed(s, directions_of(o.mutations, "--mutations"));
  } else if (!o.mutations.empty()) {
    throw UsageError("--mutations applies to seed mutate only");
  }
  const std::string f = format_of(o, mode == SeedMode::Quiver ? "dot" : "text", {"text", "json", "dot"});
  if (f == "dot") {
    emit(o, quiver_dot(s.matrix));
  } else if (f == "json") {
    json j = mode == SeedMode::Quiver ? io::exchange_json(s.matrix) : io::seed_json(s);
    j["word"] = word;
    if (mode == SeedMode::Quiver) {
      json arrows = json::array();
      for (const auto& [a, b] : quiver_arrows(s.matrix)) arrows.push_back({a, b});
      j["arrows"] = arrows;
    }
    emit(o, j);
  } else {
    emit(o, "word: " + word_text(word) + "\n" + io::seed_text(s));
  }
  return kOk;
}

int cmd_minors(const Options& o) {
  const RootDatum d = datum_of(o);
  const Word word = reduced_word_of(d, o);
  const auto reports = verify_initial_seed(d, word, o.samples, o.sample_seed, directions_of(o.directions, "--direction"));
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.passed();
  const std::string f = format_of(o, "text", {"text", "json"});
  if (f == "json") {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(io::minor_report_json(r));
    emit(o, json{{"reports", arr}, {"passed", ok}});
  } else {
    std::ostringstream os;
    const auto names = unitriangular_variable_names(static_cast<size_t>(d.rank() + 1));
    for (const auto& r : reports) {
      os << (r.passed() ? "PASS" : "FAIL") << " direction " << r.direction << ": " << r.samples_ok << " samples ok, "
         << r.samples_skipped << " skipped, " << r.samples_failed << " failed";
      if (r.regular) os << "; mutated variable " << r.mutated.to_string(names);
      if (r.witness) os << "; " << *r.witness;
      os << "\n";
    }
    emit(o, os.str());
  }
  return ok ? kOk : kCheckFailed;
}

int cmd_richardson(const Options& o, bool scan) {
  const RootDatum d = datum_of(o);
  const CoordinateSystem sys = system_of(o.coords);
  const std::vector<size_t> mutations = directions_of(o.mutations, "--mutations");
  if (!mutations.empty() && sys != CoordinateSystem::Cluster) throw UsageError("--mutations needs --coords cluster");
  CrystalCache cache(WordContext(d, reduced_word_of(d, o)), o.crystal_cap);
  const Weight lambda = weight_of(d, o);
  const std::string f = format_of(o, "text", {"text", "json"});
  if (scan) {
    const ScanSummary s = all_pairs_scan(cache, lambda, sys, mutations, o.max_level);
    if (f == "json")
      emit(o, io::scan_json(s, o.with_reports));
    else
      emit(o, io::scan_text(s));
    return s.passed() ? kOk : kCheckFailed;
  }
  if (o.w.empty()) throw UsageError("richardson report needs --w");
  const WeylElement v = weyl_from_word(d, word_of(d, o.v, "--v"));
  const WeylElement w = weyl_from_word(d, word_of(d, o.w, "--w"));
  const DegenerationReport r = DegenerationSetup(cache, lambda, sys, mutations, o.max_level).report(v, w);
  if (f == "json")
    emit(o, io::report_json(r));
  else
    emit(o, io::report_text(r));
  return r.passed() ? kOk : kCheckFailed;
}

int cmd_verify_all(const Options& o) {
  std::vector<int> only;
  for (int64_t x : parse_list(o.criteria, "--criteria")) {
    if (x < 1 || x > criterion_count()) throw UsageError("no criterion " + std::to_string(x));
    only.push_back(static_cast<int>(x));
  }
  const std::string f = format_of(o, "text", {"text", "json"});
  bool ok = true;
  std::ostringstream os;
  json arr = json::array();
  for (int id = 1; id <= criterion_count(); ++id) {
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    const CriterionResult r = run_criterion(id);
    ok = ok && r.ok();
    if (f == "json")
      arr.push_back({{"id", r.id},
                     {"title", r.title},
                     {"passed", r.passed},
                     {"within_limit", r.within_limit()},
                     {"limit_seconds", r.limit_seconds},
                     {"detail", r.detail},
                     {"failures", r.failures}});
    else
      os << result_line(r) << "\n";
  }
  if (f == "json")
    emit(o, json{{"criteria", arr}, {"passed", ok}});
  else
    emit(o, os.str());
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"String, NZ and cluster polytopes of flag varieties and semi-toric degenerations of Richardson varieties"};
  app.require_subcommand(1);
  Options o;

  auto datum_opts = [&o](CLI::App* c) {
    c->add_option("--type", o.type, "Cartan type (A, B, C, D, G)")->capture_default_str();
    c->add_option("--rank", o.rank, "rank")->capture_default_str()->check(CLI::Range(1, 8));
    c->add_option("--group-cap", o.group_cap, "maximal Weyl group order")->capture_default_str();
  };
  auto word_opt = [&o](CLI::App* c) {
    c->add_option("--word", o.word, "reduced word, comma-separated (default: a reduced word of w0)");
  };
  auto format_opt = [&o](CLI::App* c, const char* help) {
    c->add_option("--format", o.format, help);
    c->add_option("--output,-o", o.output, "write to this file instead of stdout");
  };
  auto crystal_opts = [&o](CLI::App* c) {
    c->add_option("--weight", o.weight, "dominant weight in fundamental coordinates, e.g. 1,1")->required();
    c->add_option("--crystal-cap", o.crystal_cap, "maximal crystal size")->capture_default_str();
  };
  auto level_opt = [&o](CLI::App* c) {
    c->add_option("--max-level", o.max_level, "dilation levels tried for saturation")
        ->capture_default_str()
        ->check(CLI::Range(1, 8));
  };

  auto* rootdata = app.add_subcommand("rootdata", "Cartan matrix, symmetrizers and Weyl group");
  datum_opts(rootdata);
  format_opt(rootdata, "text or json");

  auto* crystal = app.add_subcommand("crystal", "the crystal B(lambda) with string and NZ coordinates");
  datum_opts(crystal);
  word_opt(crystal);
  crystal_opts(crystal);
  crystal->add_option("--coords", o.coords, "DOT labels: string or nz")->capture_default_str();
  format_opt(crystal, "text, json or dot");

  auto* polytope = app.add_subcommand("polytope", "string or NZ polytope");
  polytope->require_subcommand(1);
  CLI::App* poly_sub[2];
  for (int k = 0; k < 2; ++k) {
    poly_sub[k] = polytope->add_subcommand(k == 0 ? "string" : "nz", k == 0 ? "string polytope" : "NZ polytope");
    datum_opts(poly_sub[k]);
    word_opt(poly_sub[k]);
    crystal_opts(poly_sub[k]);
    level_opt(poly_sub[k]);
    format_opt(poly_sub[k], "text (inequalities) or json");
  }

  auto* seed = app.add_subcommand("seed", "exchange matrices, seeds and mutation");
  seed->require_subcommand(1);
  const char* seed_names[3] = {"build", "mutate", "quiver"};
  const char* seed_help[3] = {"initial seed of a reduced word", "seed after a mutation sequence",
                              "quiver of the exchange matrix"};
  CLI::App* seed_sub[3];
  for (int k = 0; k < 3; ++k) {
    seed_sub[k] = seed->add_subcommand(seed_names[k], seed_help[k]);
    datum_opts(seed_sub[k]);
    word_opt(seed_sub[k]);
    format_opt(seed_sub[k], "text, json or dot");
  }
  seed_sub[1]->add_option("--mutations", o.mutations, "mutation directions, comma-separated")->required();

  auto* minors = app.add_subcommand("minors", "generalized minors");
  minors->require_subcommand(1);
  auto* verify = minors->add_subcommand("verify", "check the initial seed against generalized minors (type A)");
  datum_opts(verify);
  word_opt(verify);
  verify->add_option("--samples", o.samples, "random unitriangular samples")->capture_default_str();
  verify->add_option("--seed", o.sample_seed, "random seed")->capture_default_str();
  verify->add_option("--direction", o.directions, "unfrozen directions (default: all)");
  format_opt(verify, "text or json");

  auto* richardson = app.add_subcommand("richardson", "Richardson lattice points as unions of faces");
  richardson->require_subcommand(1);
  auto* report = richardson->add_subcommand("report", "one pair v <= w");
  auto* scan = richardson->add_subcommand("scan", "every pair v <= w");
  for (CLI::App* c : {report, scan}) {
    datum_opts(c);
    word_opt(c);
    crystal_opts(c);
    level_opt(c);
    c->add_option("--coords", o.coords, "string, nz or cluster")->capture_default_str();
    c->add_option("--mutations", o.mutations, "mutation directions applied to cluster coordinates");
    format_opt(c, "text or json");
  }
  report->add_option("--v", o.v, "word for v (e for the identity)")->capture_default_str();
  report->add_option("--w", o.w, "word for w")->required();
  scan->add_flag("--reports", o.with_reports, "include every report in JSON output");

  auto* verify_all = app.add_subcommand("verify-all", "run the acceptance suite");
  verify_all->add_option("--criteria", o.criteria, "only these criteria, comma-separated");
  format_opt(verify_all, "text or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*rootdata) return cmd_rootdata(o);
    if (*crystal) return cmd_crystal(o);
    if (*poly_sub[0]) return cmd_polytope(o, Coordinates::String);
    if (*poly_sub[1]) return cmd_polytope(o, Coordinates::NZ);
    if (*seed_sub[0]) return cmd_seed(o, SeedMode::Build);
    if (*seed_sub[1]) return cmd_seed(o, SeedMode::Mutate);
    if (*seed_sub[2]) return cmd_seed(o, SeedMode::Quiver);
    if (*verify) return cmd_minors(o);
    if (*report) return cmd_richardson(o, false);
    if (*scan) return cmd_richardson(o, true);
    if (*verify_all) return cmd_verify_all(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kUsage;
}
