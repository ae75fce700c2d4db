#include "stdeg/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "stdeg/cluster.hpp"
#include "stdeg/crystal_polytopes.hpp"
#include "stdeg/minors.hpp"
#include "stdeg/semitoric.hpp"

namespace stdeg {

namespace {

using Edge = std::tuple<IntVec, IntVec, int>;

struct Checks {
  CriterionResult& r;
  size_t count = 0;
  void expect(bool ok, const std::string& what) {
    ++count;
    if (!ok) r.failures.push_back(what);
  }
};

std::string vec(const IntVec& v) {
  std::string s = "(";
  for (size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + ")";
}

std::set<Edge> labelled_edges(const LambdaCrystal& c, Coordinates coords) {
  std::set<Edge> out;
  for (size_t b = 0; b < c.size(); ++b)
    for (int i = 1; i <= c.context().datum().rank(); ++i)
      if (c.f(b, i) != LambdaCrystal::npos)
        out.emplace(crystal_coordinates(c, b, coords), crystal_coordinates(c, c.f(b, i), coords), i);
  return out;
}

Halfspace hs(BigVec normal, int64_t offset) { return {std::move(normal), Rational(offset)}; }

void sl3_diagram(CriterionResult& r, Coordinates coords, const std::set<IntVec>& table, const std::set<Edge>& arrows,
                 const std::vector<Halfspace>& hrep) {
  Checks chk{r};
  const WordContext ctx(RootDatum::build('A', 2), {1, 2, 1});
  const LambdaCrystal c = generate_B_lambda(ctx, Weight({1, 1}));
  const auto pts = crystal_points(c, coords);
  chk.expect(std::set<IntVec>(pts.begin(), pts.end()) == table && pts.size() == 8, "value set differs from the table");
  chk.expect(labelled_edges(c, coords) == arrows, "labelled crystal graph differs from the diagram");
  const ParametrizedPolytope p = coords == Coordinates::String ? string_polytope(ctx, Weight({1, 1}))
                                                               : nz_polytope(ctx, Weight({1, 1}));
  chk.expect(p.saturated, "polytope not saturated");
  chk.expect(equivalent(p.polytope, from_inequalities(3, hrep)), "H-representation not equivalent");
  chk.expect(lattice_points(p.polytope) == pts, "lattice points differ from the crystal image");
  r.detail = "8 values, 8 labelled arrows, H-representation by double inclusion";
}

void criterion_1(CriterionResult& r) {
  sl3_diagram(r, Coordinates::String,
              {{0, 0, 0}, {1, 0, 0}, {0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {0, 1, 0}, {1, 1, 0}, {2, 1, 0}},
              {{{0, 0, 0}, {1, 0, 0}, 1}, {{1, 0, 0}, {0, 1, 1}, 2}, {{0, 1, 1}, {0, 2, 1}, 2}, {{0, 2, 1}, {1, 2, 1}, 1},
               {{0, 0, 0}, {0, 1, 0}, 2}, {{0, 1, 0}, {1, 1, 0}, 1}, {{1, 1, 0}, {2, 1, 0}, 1}, {{2, 1, 0}, {1, 2, 1}, 2}},
              // 0 <= a3 <= 1, a3 <= a2 <= a3 + 1, 0 <= a1 <= a2 - 2 a3 + 1
              {hs({0, 0, -1}, 0), hs({0, 0, 1}, 1), hs({0, -1, 1}, 0), hs({0, 1, -1}, 1), hs({-1, 0, 0}, 0),
               hs({1, -1, 2}, 1)});
}

void criterion_2(CriterionResult& r) {
  sl3_diagram(r, Coordinates::NZ,
              {{0, 0, 0}, {0, 0, 1}, {0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {0, 1, 0}, {1, 1, 0}, {1, 1, 1}},
              {{{0, 0, 0}, {0, 0, 1}, 1}, {{0, 0, 1}, {0, 1, 1}, 2}, {{0, 1, 1}, {0, 2, 1}, 2}, {{0, 2, 1}, {1, 2, 1}, 1},
               {{0, 0, 0}, {0, 1, 0}, 2}, {{0, 1, 0}, {1, 1, 0}, 1}, {{1, 1, 0}, {1, 1, 1}, 1}, {{1, 1, 1}, {1, 2, 1}, 2}},
              // 0 <= a1 <= 1, 0 <= a3 <= 1, a1 <= a2 <= a3 + 1
              {hs({-1, 0, 0}, 0), hs({1, 0, 0}, 1), hs({0, 0, -1}, 0), hs({0, 0, 1}, 1), hs({1, -1, 0}, 0),
               hs({0, 1, -1}, 1)});
}

void criterion_3(CriterionResult& r) {
  Checks chk{r};
  const ExchangeMatrix e = build_exchange_from_word(RootDatum::build('A', 3), {1, 2, 1, 3, 2, 1});
  chk.expect(e.unfrozen() == std::vector<size_t>{1, 2, 3}, "unfrozen set is not {1,2,3}");
  chk.expect(e.rows() == IntMatrix{{0, -1, 1, 0, 0, 0}, {1, 0, -1, -1, 1, 0}, {-1, 1, 0, 0, -1, 1}},
             "matrix differs entrywise");
  // The figure numbers its vertices 1..6 row by row; as word positions they are:
  const size_t position[7] = {0, 4, 2, 5, 1, 3, 6};
  std::set<std::pair<size_t, size_t>> figure;
  for (auto [s, t] : std::vector<std::pair<int, int>>{{2, 1}, {4, 2}, {2, 5}, {5, 3}, {3, 2}, {5, 4}, {6, 5}})
    figure.emplace(position[s], position[t]);
  const auto arrows = quiver_arrows(e);
  chk.expect(arrows.size() == 7, std::to_string(arrows.size()) + " arrows instead of 7");
  chk.expect(std::set<std::pair<size_t, size_t>>(arrows.begin(), arrows.end()) == figure, "arrows differ from the figure");
  const std::string dot = quiver_dot(e);
  size_t n = 0;
  for (size_t pos = dot.find("->"); pos != std::string::npos; pos = dot.find("->", pos + 2)) ++n;
  chk.expect(n == 7, "DOT output has " + std::to_string(n) + " arrows");
  r.detail = "3x6 matrix and 7 quiver arrows";
}

void criterion_4(CriterionResult& r) {
  Checks chk{r};
  struct Case {
    char series;
    int rank;
    Word word;
  };
  size_t weights = 0, elements = 0;
  for (const Case& c : {Case{'A', 2, {1, 2, 1}}, Case{'A', 3, {1, 2, 1, 3, 2, 1}}, Case{'B', 2, {1, 2, 1, 2}}}) {
    const RootDatum d = RootDatum::build(c.series, c.rank);
    const WordContext ctx(d, c.word);
    IntVec lam(c.rank, 0);
    for (;;) {
      const LambdaCrystal crystal = generate_B_lambda(ctx, Weight(lam));
      std::map<IntVec, int64_t> seen;
      for (const auto& el : crystal.elements()) ++seen[el.wt.coords];
      const WeightMultiplicities oracle = weight_multiplicities_oracle(d, Weight(lam));
      chk.expect(seen == oracle.multiplicity && static_cast<int64_t>(crystal.size()) == oracle.dimension,
                 d.name() + " lambda " + vec(lam) + ": weight multiset differs from Freudenthal");
      ++weights;
      elements += crystal.size();
      size_t k = 0;
      while (k < lam.size() && lam[k] == 2) lam[k++] = 0;
      if (k == lam.size()) break;
      ++lam[k];
    }
  }
  const WordContext a3(RootDatum::build('A', 3), {1, 2, 1, 3, 2, 1});
  const size_t rho = generate_B_lambda(a3, Weight({1, 1, 1})).size();
  chk.expect(rho == 64, "|B(rho)| = " + std::to_string(rho) + " for A3");
  r.detail = std::to_string(weights) + " weights, " + std::to_string(elements) + " elements, A3 |B(rho)| = " + std::to_string(rho);
}

void criterion_5(CriterionResult& r) {
  Checks chk{r};
  struct Case {
    char series;
    int rank;
    Word word;
    Weight lambda;
    size_t pairs;
  };
  const std::vector<Case> cases{{'A', 2, {1, 2, 1}, Weight({1, 1}), 19},
                                {'A', 2, {1, 2, 1}, Weight({2, 2}), 19},
                                {'A', 2, {1, 2, 1}, Weight({1, 2}), 19},
                                {'B', 2, {1, 2, 1, 2}, Weight({1, 1}), 0}};
  size_t scans = 0, certified = 0;
  for (const auto& c : cases) {
    const RootDatum d = RootDatum::build(c.series, c.rank);
    CrystalCache cache(WordContext(d, c.word));
    const size_t expected = c.pairs ? c.pairs : enumerate_group(d).bruhat_pairs().size();
    for (CoordinateSystem sys : {CoordinateSystem::String, CoordinateSystem::NZ}) {
      const ScanSummary s = all_pairs_scan(cache, c.lambda, sys);
      const std::string where = d.name() + " " + to_string(sys) + " lambda " + vec(c.lambda.coords);
      chk.expect(s.pairs == expected, where + ": " + std::to_string(s.pairs) + " pairs");
      chk.expect(s.passed(), where + ": " + std::to_string(s.violations.size()) + " violations");
      ++scans;
      certified += s.certified;
    }
  }

  // The stated certificate for (s1, s2 s1) at lambda = (1,1): the vertex (1,0,0)
  // and the edge (0,1,1)-(0,2,1).
  const RootDatum a2 = RootDatum::build('A', 2);
  CrystalCache cache(WordContext(a2, {1, 2, 1}));
  const DegenerationReport rep = semi_toric_report_string(cache, Weight({1, 1}), weyl_from_word(a2, {1}),
                                                          weyl_from_word(a2, {2, 1}));
  std::set<std::pair<int, std::vector<IntVec>>> got;
  for (const auto& f : rep.certificate) got.emplace(f.dim, f.points);
  const std::set<std::pair<int, std::vector<IntVec>>> stated{{0, {{1, 0, 0}}}, {1, {{0, 1, 1}, {0, 2, 1}}}};
  if (got != stated) {
    std::string faces;
    for (const auto& [dim, pts] : got) {
      faces += faces.empty() ? "" : ", ";
      faces += dim == 0 ? "vertex" : dim == 1 ? "edge" : "face of dim " + std::to_string(dim);
      for (size_t k = 0; k < pts.size(); ++k) faces += (k ? "-" : " ") + vec(pts[k]);
    }
    chk.expect(false, "certificate for (s1, s2s1) is {" + faces +
                          "}, not {vertex (1,0,0), edge (0,1,1)-(0,2,1)}: conv{(1,0,0),(0,1,1)} is an edge of the "
                          "string polytope inside the Richardson set, so the vertex is not maximal");
  } else {
    chk.expect(true, "");
  }
  r.detail = std::to_string(scans) + " scans, " + std::to_string(certified) + " pairs certified";
}

void criterion_6(CriterionResult& r) {
  Checks chk{r};
  const RootDatum a2 = RootDatum::build('A', 2);
  CrystalCache cache(WordContext(a2, {1, 2, 1}));
  const WeylGroup g = enumerate_group(a2);
  size_t sums = 0, dilations = 0;
  for (const auto& [vi, wi] : g.bruhat_pairs())
    for (Coordinates coords : {Coordinates::String, Coordinates::NZ}) {
      const MinkowskiReport m = minkowski_condition_check(cache, Weight({1, 1}), Weight({1, 1}), g.element(vi),
                                                          g.element(wi), coords, 2);
      chk.expect(m.passed(), to_string(coords) + " v=" + word_text(g.element(vi).word) +
                                 " w=" + word_text(g.element(wi).word) + " fails");
      sums += m.sums_checked;
      dilations += m.dilations_checked;
    }
  r.detail = std::to_string(g.bruhat_pairs().size()) + " pairs in string and NZ coordinates, " + std::to_string(sums) +
             " sums, " + std::to_string(dilations) + " dilations";
}

std::vector<std::vector<size_t>> words_up_to(const std::vector<size_t>& letters, size_t max_len) {
  std::vector<std::vector<size_t>> out{{}}, frontier{{}};
  for (size_t len = 1; len <= max_len; ++len) {
    std::vector<std::vector<size_t>> next;
    for (const auto& w : frontier)
      for (size_t k : letters) {
        next.push_back(w);
        next.back().push_back(k);
      }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

ExchangeMatrix sl3_matrix() { return build_exchange_from_word(RootDatum::build('A', 2), {1, 2, 1}); }
ExchangeMatrix sl4_matrix() { return build_exchange_from_word(RootDatum::build('A', 3), {1, 2, 1, 3, 2, 1}); }

void criterion_7(CriterionResult& r) {
  Checks chk{r};
  for (const ExchangeMatrix& e : {sl3_matrix(), sl4_matrix()}) {
    const Seed s0 = initial_seed(e);
    for (size_t k : e.unfrozen()) {
      chk.expect(mutate_matrix(mutate_matrix(e, k), k) == e, "matrix mutation at " + std::to_string(k));
      const Seed once = mutate_seed(s0, k);
      Seed twice = mutate_seed(once, k);
      chk.expect(twice == s0, "seed mutation at " + std::to_string(k));
      chk.expect(once.variables[k - 1] != s0.variables[k - 1], "mutation at " + std::to_string(k) + " is trivial");
    }
  }
  const Seed a3 = initial_seed(sl4_matrix());
  size_t laurent = 0;
  for (const auto& word : words_up_to(a3.matrix.unfrozen(), 4)) {
    const Seed s = mutate_seed(a3, word);
    for (size_t j = 0; j < s.variables.size(); ++j) {
      std::string w;
      for (size_t k : word) w += std::to_string(k);
      chk.expect(s.variables[j].is_laurent(), "variable " + std::to_string(j + 1) + " after " + w + " is not Laurent");
      ++laurent;
    }
  }
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int64_t> entry(-20, 20);
  size_t tropical = 0;
  for (const ExchangeMatrix& e : {sl3_matrix(), sl4_matrix()})
    for (size_t k : e.unfrozen()) {
      const ExchangeMatrix ek = mutate_matrix(e, k);
      for (int trial = 0; trial < 1000; ++trial) {
        IntVec g(e.size());
        for (auto& x : g) x = entry(rng);
        const IntVec back = tropical_mutate(tropical_mutate(g, e, k), ek, k);
        if (back != g) chk.expect(false, "tropical mutation at " + std::to_string(k) + " is not involutive at " + vec(g));
        ++tropical;
      }
    }
  r.detail = "involutions in 5 directions, " + std::to_string(laurent) + " Laurent variables, " +
             std::to_string(tropical) + " tropical round trips";
}

void criterion_8(CriterionResult& r) {
  Checks chk{r};
  const RootDatum a2 = RootDatum::build('A', 2);
  const auto reps = verify_initial_seed(a2, {1, 2, 1}, 100, 11);
  chk.expect(reps.size() == 1, "A2 has one unfrozen direction");
  size_t ok = 0, skipped = 0;
  if (reps.size() == 1) {
    chk.expect(reps[0].passed(), "A2 direction 1 is not consistent");
    chk.expect(reps[0].mutated == Polynomial::variable(3, unitriangular_variable(2, 1)), "mu_1 variable is not g_32");
    chk.expect(reps[0].samples_ok + reps[0].samples_skipped == 100, "sample count");
    ok += reps[0].samples_ok;
    skipped += reps[0].samples_skipped;
  }
  // Cross-check through the seed itself, one sample at a time.
  std::mt19937_64 rng(13);
  const Seed s1 = mutate_seed(initial_seed(sl3_matrix()), 1);
  for (int trial = 0; trial < 100; ++trial) {
    const RatMatrix g = random_unitriangular(3, rng);
    const auto value = s1.variables[0].evaluate(initial_minors(a2, {1, 2, 1}, g));
    if (value) chk.expect(*value == g[2][1], "sample " + std::to_string(trial) + " differs from g_32");
  }
  const auto a3 = verify_initial_seed(RootDatum::build('A', 3), {1, 2, 1, 3, 2, 1}, 100, 19);
  chk.expect(a3.size() == 3, "A3 has three unfrozen directions");
  for (const auto& rep : a3) {
    chk.expect(rep.passed(), "A3 direction " + std::to_string(rep.direction) + " is not consistent");
    ok += rep.samples_ok;
    skipped += rep.samples_skipped;
  }
  r.detail = std::to_string(ok) + " samples consistent, " + std::to_string(skipped) + " skipped";
}

void criterion_9(CriterionResult& r) {
  Checks chk{r};
  const RootDatum a2 = RootDatum::build('A', 2);
  CrystalCache cache(WordContext(a2, {1, 2, 1}));
  const ScanSummary base = all_pairs_scan(cache, Weight({1, 1}), CoordinateSystem::Cluster);
  const ScanSummary moved = all_pairs_scan(cache, Weight({1, 1}), CoordinateSystem::Cluster, {1});
  chk.expect(base.pairs == 19 && moved.pairs == 19, "pair count");
  chk.expect(base.passed(), "initial seed: " + std::to_string(base.violations.size()) + " violations");
  chk.expect(moved.passed(), "after mutation 1: " + std::to_string(moved.violations.size()) + " violations");
  for (size_t k = 0; k < std::min(base.reports.size(), moved.reports.size()); ++k) {
    const auto& a = base.reports[k];
    const auto& b = moved.reports[k];
    const std::string pair = "v=" + word_text(a.v.word) + " w=" + word_text(a.w.word);
    chk.expect(a.v == b.v && a.w == b.w, pair + ": pair order differs");
    chk.expect(a.richardson.size() == b.richardson.size(), pair + ": lattice-point count changes");
    chk.expect(transport_points(a.richardson, sl3_matrix(), {1}) == b.richardson, pair + ": images differ");
    const ReportCheck* closed = b.check("transport_convex_closed");
    chk.expect(closed && closed->passed, pair + ": image not convex-closed");
  }
  r.detail = std::to_string(base.certified) + "/" + std::to_string(base.pairs) + " pairs certified before and " +
             std::to_string(moved.certified) + "/" + std::to_string(moved.pairs) + " after mutation 1";
}

void criterion_10(CriterionResult& r) {
  Checks chk{r};
  size_t words = 0;
  for (int rank : {2, 3}) {
    const RootDatum d = RootDatum::build('A', rank);
    const WeylGroup g = enumerate_group(d);
    for (const auto& word : g.reduced_words(g.longest())) {
      const UpsilonMatrix u = upsilon_matrix(d, word);
      const Rational det = determinant(to_rational(u.m));
      chk.expect(det == 1 || det == -1, d.name() + " word " + word_text(word) + ": det " + to_string(det));
      ++words;
    }
  }
  std::mt19937 rng(21);
  std::uniform_int_distribution<int64_t> gdist(-3, 3), adist(0, 2);
  std::uniform_int_distribution<int> coef(1, 4), count(0, 4);
  size_t expressions = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const ExchangeMatrix e = trial % 2 ? sl4_matrix() : sl3_matrix();
    IntVec g(e.size());
    for (auto& x : g) x = gdist(rng);
    // A^g (1 + sum c_a Xhat^a) with a >= 0 and a != 0
    RationalFunction sum(Polynomial::constant(e.size(), 1));
    const int extra = count(rng);
    for (int t = 0; t < extra; ++t) {
      IntVec a(e.unfrozen().size());
      for (auto& x : a) x = adist(rng);
      if (std::all_of(a.begin(), a.end(), [](int64_t x) { return x == 0; })) continue;
      std::vector<int64_t> exponent(e.size(), 0);
      for (size_t row = 0; row < a.size(); ++row)
        for (size_t j = 0; j < e.size(); ++j) exponent[j] += a[row] * e.rows()[row][j];
      sum = sum + RationalFunction::laurent_monomial(exponent) * RationalFunction(Polynomial::constant(e.size(), coef(rng)));
    }
    const RationalFunction f = RationalFunction::laurent_monomial(std::vector<int64_t>(g.begin(), g.end())) * sum;
    const GVectorResult gv = g_vector(f, e);
    chk.expect(gv.kind == GVectorResult::Kind::Pointed && gv.g == g, "expression " + std::to_string(trial) + " g-vector");
    for (Tiebreak t : {Tiebreak::RevLex, Tiebreak::Lex, Tiebreak::Weighted})
      chk.expect(lowest_term_valuation(f, e, t) == gv.g,
                 "expression " + std::to_string(trial) + " valuation under tiebreak " + std::to_string(static_cast<int>(t)));
    ++expressions;
  }
  r.detail = std::to_string(words) + " reduced words unimodular, " + std::to_string(expressions) +
             " expressions x 3 tiebreaks";
}

struct Spec {
  const char* title;
  double limit;
  void (*run)(CriterionResult&);
};

const Spec kCriteria[] = {
    {"SL3 string data", 1, criterion_1},
    {"SL3 NZ data", 1, criterion_2},
    {"SL4 seed and quiver", 1, criterion_3},
    {"crystal weights against Freudenthal", 60, criterion_4},
    {"Richardson sets are face unions", 120, criterion_5},
    {"Minkowski conditions", 60, criterion_6},
    {"mutation involutions and Laurent phenomenon", 120, criterion_7},
    {"seed variables through generalized minors", 30, criterion_8},
    {"transport along tropical mutation", 30, criterion_9},
    {"transfer matrix and g-vector valuations", 30, criterion_10},
};

}  // namespace

int criterion_count() { return static_cast<int>(std::size(kCriteria)); }

CriterionResult run_criterion(int id) {
  if (id < 1 || id > criterion_count()) throw std::out_of_range("no criterion " + std::to_string(id));
  const Spec& s = kCriteria[id - 1];
  CriterionResult r;
  r.id = id;
  r.title = s.title;
  r.limit_seconds = s.limit;
  const auto start = std::chrono::steady_clock::now();
  try {
    s.run(r);
  } catch (const std::exception& e) {
    r.failures.push_back(std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.passed = r.failures.empty();
  return r;
}

std::vector<CriterionResult> run_acceptance(const std::vector<int>& only) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= criterion_count(); ++id)
    if (only.empty() || std::find(only.begin(), only.end(), id) != only.end()) out.push_back(run_criterion(id));
  return out;
}

std::string result_line(const CriterionResult& r) {
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2f s / %g s", r.seconds, r.limit_seconds);
  std::ostringstream os;
  os << (r.ok() ? "PASS" : "FAIL") << " " << (r.id < 10 ? " " : "") << r.id << " " << r.title << " (" << timing << ")";
  if (!r.within_limit()) os << " over time limit;";
  os << ": " << r.detail;
  for (size_t k = 0; k < std::min<size_t>(r.failures.size(), 5); ++k) os << (k ? "; " : " | failed: ") << r.failures[k];
  if (r.failures.size() > 5) os << "; and " << r.failures.size() - 5 << " more";
  return os.str();
}

}  // namespace stdeg
