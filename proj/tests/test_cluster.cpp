#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "stdeg/cluster.hpp"

using namespace stdeg;

namespace {

const Word kSL4{1, 2, 1, 3, 2, 1};

ExchangeMatrix sl4() { return build_exchange_from_word(RootDatum::build('A', 3), kSL4); }
ExchangeMatrix sl3() { return build_exchange_from_word(RootDatum::build('A', 2), {1, 2, 1}); }

ExchangeMatrix random_matrix(std::mt19937& rng) {
  std::uniform_int_distribution<int> size(1, 5), val(-2, 2), dv(1, 3);
  const size_t nu = size(rng), m = nu + size(rng) - 1;
  std::vector<size_t> unf(nu);
  for (size_t a = 0; a < nu; ++a) unf[a] = a + 1;
  IntVec d(nu);
  for (auto& x : d) x = dv(rng);
  IntMatrix rows(nu, IntVec(m, 0));
  for (size_t a = 0; a < nu; ++a)
    for (size_t b = a + 1; b < nu; ++b) {
      const int64_t s = val(rng);
      rows[a][b] = s * d[b];
      rows[b][a] = -s * d[a];
    }
  for (size_t a = 0; a < nu; ++a)
    for (size_t j = nu; j < m; ++j) rows[a][j] = val(rng);
  return ExchangeMatrix(m, unf, rows);
}

IntVec random_vec(std::mt19937& rng, size_t m, int bound) {
  std::uniform_int_distribution<int> v(-bound, bound);
  IntVec g(m);
  for (auto& x : g) x = v(rng);
  return g;
}

RationalFunction xhat_power(const ExchangeMatrix& eps, const IntVec& a) {
  std::vector<int64_t> e(eps.size(), 0);
  for (size_t r = 0; r < a.size(); ++r)
    for (size_t j = 0; j < eps.size(); ++j) e[j] += a[r] * eps.rows()[r][j];
  return RationalFunction::laurent_monomial(e);
}

std::vector<std::vector<size_t>> all_words(const std::vector<size_t>& letters, size_t max_len) {
  std::vector<std::vector<size_t>> out{{}}, frontier{{}};
  for (size_t len = 1; len <= max_len; ++len) {
    std::vector<std::vector<size_t>> next;
    for (const auto& w : frontier)
      for (size_t k : letters) {
        auto v = w;
        v.push_back(k);
        next.push_back(v);
      }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("exchange matrix of the SL4 word") {
  const ExchangeMatrix e = sl4();
  CHECK(e.unfrozen() == std::vector<size_t>{1, 2, 3});
  CHECK(e.rows() == IntMatrix{{0, -1, 1, 0, 0, 0}, {1, 0, -1, -1, 1, 0}, {-1, 1, 0, 0, -1, 1}});
  CHECK(e.full_rank());
  CHECK(e.symmetrizer() == IntVec{1, 1, 1});
}

TEST_CASE("small exchange matrices") {
  const ExchangeMatrix e = sl3();
  CHECK(e.unfrozen() == std::vector<size_t>{1});
  CHECK(e.rows() == IntMatrix{{0, -1, 1}});
  const ExchangeMatrix one = build_exchange_from_word(RootDatum::build('A', 2), {2});
  CHECK(one.unfrozen().empty());
  CHECK(one.rows().empty());
  CHECK_THROWS_AS(build_exchange_from_word(RootDatum::build('A', 2), {1, 1}), std::invalid_argument);
  CHECK(next_occurrence({1, 2, 1, 3, 2, 1}) == std::vector<size_t>{3, 5, 6, 7, 7, 7});
}

TEST_CASE("skew-symmetrizability for non-simply-laced words") {
  for (char series : {'B', 'G'}) {
    const RootDatum d = RootDatum::build(series, 2);
    const WeylGroup g = enumerate_group(d, 100);
    for (const auto& word : g.reduced_words(g.longest())) {
      const ExchangeMatrix e = build_exchange_from_word(d, word);
      CHECK(e.full_rank());
      for (size_t s : e.unfrozen())
        for (size_t t : e.unfrozen())
          CHECK(e.symmetrizer()[*e.row_of(s)] * e.entry(s, t) == -e.symmetrizer()[*e.row_of(t)] * e.entry(t, s));
    }
  }
}

TEST_CASE("quiver of the SL4 seed") {
  const auto arrows = quiver_arrows(sl4());
  const std::set<std::pair<size_t, size_t>> got(arrows.begin(), arrows.end());
  const std::set<std::pair<size_t, size_t>> expected{{1, 2}, {2, 3}, {2, 4}, {3, 5}, {5, 2}, {3, 1}, {6, 3}};
  CHECK(arrows.size() == 7);
  CHECK(got == expected);
  const std::string dot = quiver_dot(sl4());
  CHECK(dot.find("4 [shape=box]") != std::string::npos);
  CHECK(dot.find("1 [shape=circle]") != std::string::npos);
  CHECK(dot.find("6 -> 3;") != std::string::npos);
}

TEST_CASE("matrix mutation") {
  CHECK(mutate_matrix(sl3(), 1).rows() == IntMatrix{{0, 1, -1}});
  CHECK_THROWS_AS(mutate_matrix(sl3(), 2), std::invalid_argument);
  const ExchangeMatrix m1 = mutate_matrix(sl4(), 1);
  CHECK(m1.rows()[0] == IntVec{0, 1, -1, 0, 0, 0});
  // e'_{2,3} = e_{2,3} + sgn(e_{2,1}) [e_{2,1} e_{1,3}]_+ = -1 + 1
  CHECK(m1.entry(2, 3) == 0);
  // e'_{3,2} = e_{3,2} + sgn(e_{3,1}) [e_{3,1} e_{1,2}]_+ = 1 - 1
  CHECK(m1.entry(3, 2) == 0);
  CHECK(m1.entry(2, 1) == -1);
}

TEST_CASE("matrix mutation is an involution preserving symmetrizer and rank") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const ExchangeMatrix e = random_matrix(rng);
    for (size_t k : e.unfrozen()) {
      const ExchangeMatrix f = mutate_matrix(e, k);
      CHECK(mutate_matrix(f, k) == e);
      CHECK(f.symmetrizer() == e.symmetrizer());
      CHECK(f.full_rank() == e.full_rank());
    }
  }
}

TEST_CASE("seed mutation") {
  const Seed s0 = initial_seed(sl3());
  const Seed s1 = mutate_seed(s0, 1);
  const auto a = s0.variables;
  CHECK(s1.variables[0] == (a[2] + a[1]) / a[0]);
  CHECK(s1.variables[0].to_string(variable_names(3)) == "(A_2 + A_3)/A_1");
  CHECK(s1.provenance == std::vector<size_t>{1});
  CHECK(mutate_seed(s1, 1) == s0);
  CHECK(mutate_seed(s1, 1).provenance.empty());
  CHECK_THROWS_AS(mutate_seed(s0, 3), std::invalid_argument);
}

TEST_CASE("seed mutation involution for SL3 and SL4") {
  for (const ExchangeMatrix& e : {sl3(), sl4()}) {
    const Seed s0 = initial_seed(e);
    for (size_t k : e.unfrozen()) {
      const Seed s1 = mutate_seed(s0, k);
      CHECK(mutate_seed(s1, k) == s0);
      for (size_t j : e.unfrozen()) {
        const Seed s2 = mutate_seed(s1, j);
        CHECK(mutate_seed(s2, j) == s1);
      }
    }
  }
}

TEST_CASE("Laurent phenomenon from the SL4 seed") {
  const Seed s0 = initial_seed(sl4());
  size_t checked = 0;
  for (const auto& word : all_words({1, 2, 3}, 4)) {
    const Seed s = mutate_seed(s0, word);
    for (const auto& v : s.variables) {
      CHECK(v.is_laurent());
      ++checked;
    }
  }
  CHECK(checked == 121 * 6);
}

TEST_CASE("dominance order") {
  const ExchangeMatrix e = sl3();
  CHECK(dominance_leq({1, 2, 3}, {1, 2, 3}, e));
  CHECK(dominance_leq({0, -1, 1}, {0, 0, 0}, e));
  CHECK_FALSE(dominance_leq({0, 0, 0}, {0, -1, 1}, e));
  CHECK_FALSE(dominance_leq({0, 1, 0}, {0, 0, 0}, e));
  CHECK_FALSE(dominance_leq({0, 0, 0}, {0, 1, 0}, e));
  const ExchangeMatrix degenerate(2, {1, 2}, {{0, 1}, {-1, 0}});
  CHECK(degenerate.full_rank());
  const ExchangeMatrix singular(3, {1, 2}, {{0, 0, 1}, {0, 0, 1}});
  CHECK_FALSE(singular.full_rank());
  CHECK_THROWS_AS(dominance_leq({0, 0, 0}, {0, 0, 0}, singular), std::domain_error);
}

TEST_CASE("refined orders refine the opposite dominance order") {
  std::mt19937 rng(9);
  const ExchangeMatrix e = sl4();
  for (Tiebreak t : {Tiebreak::RevLex, Tiebreak::Lex, Tiebreak::Weighted}) {
    const RefinedOrder order(e, t);
    for (int trial = 0; trial < 300; ++trial) {
      const IntVec a = random_vec(rng, 6, 3);
      const IntVec v = random_vec(rng, 3, 2);
      IntVec b = a;
      bool nonzero = false;
      for (size_t r = 0; r < 3; ++r) {
        const int64_t c = v[r] < 0 ? -v[r] : v[r];
        nonzero = nonzero || c != 0;
        for (size_t j = 0; j < 6; ++j) b[j] += c * e.rows()[r][j];
      }
      // b = a + v eps with v >= 0, so b is dominance-below a and above it in the refinement.
      if (nonzero) {
        CHECK(order.less(a, b));
        CHECK_FALSE(order.less(b, a));
      }
      const IntVec c = random_vec(rng, 6, 3);
      CHECK(order.less(a, c) + order.less(c, a) + (a == c) == 1);
    }
  }
}

TEST_CASE("lowest term valuation") {
  const ExchangeMatrix e = sl3();
  const auto a = initial_seed(e).variables;
  CHECK(lowest_term_valuation(a[0], e) == IntVec{1, 0, 0});
  const RationalFunction one(Polynomial::constant(3, 1));
  CHECK(lowest_term_valuation(one + a[2] / a[1], e) == IntVec{0, 0, 0});
  CHECK_THROWS_AS(lowest_term_valuation(a[0] - a[0], e), std::invalid_argument);

  std::mt19937 rng(4);
  std::uniform_int_distribution<int> coef(-3, 3), ex(-2, 2);
  auto random_laurent = [&]() {
    RationalFunction f(Polynomial(3));
    while (f.is_zero())
      for (int t = 0; t < 3; ++t)
        f = f + RationalFunction::laurent_monomial({ex(rng), ex(rng), ex(rng)}) *
                    RationalFunction(Polynomial::constant(3, coef(rng)));
    return f;
  };
  for (int trial = 0; trial < 100; ++trial) {
    const RationalFunction f = random_laurent(), g = random_laurent();
    for (Tiebreak t : {Tiebreak::RevLex, Tiebreak::Lex, Tiebreak::Weighted}) {
      IntVec sum = lowest_term_valuation(f, e, t);
      const IntVec vg = lowest_term_valuation(g, e, t);
      for (size_t j = 0; j < 3; ++j) sum[j] += vg[j];
      CHECK(lowest_term_valuation(f * g, e, t) == sum);
    }
  }
}

TEST_CASE("g-vectors") {
  const ExchangeMatrix e = sl3();
  const auto a = initial_seed(e).variables;
  const RationalFunction one(Polynomial::constant(3, 1));
  auto r = g_vector(a[0], e);
  CHECK(r.kind == GVectorResult::Kind::Pointed);
  CHECK(r.g == IntVec{1, 0, 0});
  r = g_vector(one + a[2] / a[1], e);
  CHECK(r.kind == GVectorResult::Kind::Pointed);
  CHECK(r.g == IntVec{0, 0, 0});
  CHECK(r.expansion.size() == 2);
  // A_2 + A_3 = A_2 (1 + Xhat_1) is pointed at (0,1,0).
  r = g_vector(a[1] + a[2], e);
  CHECK(r.kind == GVectorResult::Kind::Pointed);
  CHECK(r.g == IntVec{0, 1, 0});
  CHECK(g_vector(a[0] + a[1], e).kind == GVectorResult::Kind::NotPointed);
  CHECK(g_vector(a[1] * RationalFunction(Polynomial::constant(3, 2)) + a[2], e).kind == GVectorResult::Kind::WeaklyPointed);
  CHECK(g_vector(a[1] + a[2] * RationalFunction(Polynomial::constant(3, 2)), e).kind == GVectorResult::Kind::Pointed);
  CHECK(g_vector(one / (a[0] + a[1]), e).kind == GVectorResult::Kind::NotPointed);
}

TEST_CASE("valuation equals g-vector on constructed pointed expressions") {
  std::mt19937 rng(21);
  std::uniform_int_distribution<int> coef(1, 4), count(0, 4);
  for (const ExchangeMatrix& e : {sl3(), sl4()}) {
    const size_t nu = e.unfrozen().size();
    for (int trial = 0; trial < 50; ++trial) {
      const IntVec g = random_vec(rng, e.size(), 3);
      RationalFunction sum(Polynomial::constant(e.size(), 1));
      const int extra = count(rng);
      for (int t = 0; t < extra; ++t) {
        IntVec av = random_vec(rng, nu, 2);
        for (auto& x : av) x = x < 0 ? -x : x;
        if (std::all_of(av.begin(), av.end(), [](int64_t x) { return x == 0; })) continue;
        sum = sum + xhat_power(e, av) * RationalFunction(Polynomial::constant(e.size(), coef(rng)));
      }
      const RationalFunction f = RationalFunction::laurent_monomial(std::vector<int64_t>(g.begin(), g.end())) * sum;
      const auto r = g_vector(f, e);
      CHECK(r.kind == GVectorResult::Kind::Pointed);
      CHECK(r.g == g);
      for (Tiebreak t : {Tiebreak::RevLex, Tiebreak::Lex, Tiebreak::Weighted})
        CHECK(lowest_term_valuation(f, e, t) == g);
    }
  }
}

TEST_CASE("tropical mutation") {
  const ExchangeMatrix e = sl3();
  CHECK(tropical_mutate(IntVec{0, 0, 0}, e, 1) == IntVec{0, 0, 0});
  CHECK(tropical_mutate(IntVec{1, 0, 0}, e, 1) == IntVec{-1, 0, 1});
  CHECK(tropical_mutate(IntVec{-1, 0, 0}, e, 1) == IntVec{1, -1, 0});
  CHECK_THROWS_AS(tropical_mutate(IntVec{0, 0, 0}, e, 2), std::invalid_argument);

  std::mt19937 rng(8);
  for (const ExchangeMatrix& m : {sl3(), sl4()})
    for (size_t k : m.unfrozen()) {
      const ExchangeMatrix mk = mutate_matrix(m, k);
      for (int trial = 0; trial < 1000; ++trial) {
        const IntVec g = random_vec(rng, m.size(), 20);
        CHECK(tropical_mutate(tropical_mutate(g, m, k), mk, k) == g);
      }
      for (int64_t gk : {-3, -1, 0, 1, 3}) {
        IntVec g(m.size(), 2);
        g[k - 1] = gk;
        CHECK(tropical_mutate(tropical_mutate(g, m, k), mk, k) == g);
      }
    }
}

TEST_CASE("tropical mutation transports g-vectors of cluster variables") {
  for (const ExchangeMatrix& e : {sl3(), sl4()}) {
    const Seed s0 = initial_seed(e);
    for (const auto& word : all_words(e.unfrozen(), 3)) {
      const Seed s = mutate_seed(s0, word);
      for (size_t j = 1; j <= e.size(); ++j) {
        const auto r = g_vector(s.variables[j - 1], e);
        REQUIRE(r.kind == GVectorResult::Kind::Pointed);
        IntVec unit(e.size(), 0);
        unit[j - 1] = 1;
        CHECK(tropical_mutate(r.g, e, word) == unit);
      }
    }
  }
}

TEST_CASE("transfer matrix") {
  const UpsilonMatrix u = upsilon_matrix(RootDatum::build('A', 2), {1, 2, 1});
  CHECK(u.m == IntMatrix{{1, 0, 0}, {1, 1, 0}, {0, 1, 1}});
  CHECK(u.invert(u.apply({3, -1, 2})) == IntVec{3, -1, 2});
  CHECK_THROWS_AS(upsilon_matrix(RootDatum::build('A', 2), {1, 2}), std::invalid_argument);
  for (auto [series, rank] : {std::pair{'A', 2}, std::pair{'A', 3}, std::pair{'B', 2}, std::pair{'G', 2}}) {
    const RootDatum d = RootDatum::build(series, rank);
    const WeylGroup g = enumerate_group(d, 100);
    for (const auto& word : g.reduced_words(g.longest())) {
      const UpsilonMatrix m = upsilon_matrix(d, word);
      const Rational det = determinant(to_rational(m.m));
      CHECK((det == 1 || det == -1));
      for (size_t k = 0; k < word.size(); ++k) {
        CHECK(m.m[k][k] == 1);
        for (size_t l = k + 1; l < word.size(); ++l) CHECK(m.m[k][l] == 0);
      }
    }
  }
}

TEST_CASE("rows of the transfer matrix are string data of fundamental crystals") {
  // The initial cluster variable A_k has g-vector e_k and lies in degree
  // varpi_{i_k}, so row k must be a string parametrization in B(varpi_{i_k}).
  const RootDatum d = RootDatum::build('A', 3);
  const WeylGroup g = enumerate_group(d, 100);
  for (const auto& word : g.reduced_words(g.longest())) {
    const WordContext ctx(d, word);
    const UpsilonMatrix u = upsilon_matrix(d, word);
    CrystalCache cache(ctx);
    for (size_t k = 0; k < word.size(); ++k) {
      const auto pts = crystal_points(cache.get(d.fundamental_weight(word[k])), Coordinates::String);
      CHECK(std::binary_search(pts.begin(), pts.end(), u.m[k]));
    }
  }
}

TEST_CASE("cluster polytopes") {
  const WordContext a2(RootDatum::build('A', 2), {1, 2, 1});
  const ClusterPolytope c = cluster_polytope(a2, Weight({1, 1}));
  CHECK(c.saturated);
  CHECK(c.points.size() == 8);
  CHECK(lattice_points(c.polytope) == c.points);
  const auto string_pts = crystal_points(CrystalCache(a2).get(Weight({1, 1})), Coordinates::String);
  std::vector<IntVec> back;
  for (const auto& p : c.points) back.push_back(c.upsilon.apply(p));
  std::sort(back.begin(), back.end());
  CHECK(back == string_pts);

  const ClusterPolytope z = cluster_polytope(a2, Weight({0, 0}));
  CHECK(z.points == std::vector<IntVec>{{0, 0, 0}});

  const WordContext a3(RootDatum::build('A', 3), kSL4);
  const ClusterPolytope r = cluster_polytope(a3, Weight({1, 1, 1}));
  CHECK(r.points.size() == 64);
  CHECK(lattice_points(r.polytope).size() == 64);
}

TEST_CASE("polytope transport") {
  const WordContext a2(RootDatum::build('A', 2), {1, 2, 1});
  const ClusterPolytope c = cluster_polytope(a2, Weight({1, 1}));
  const TransportResult id = transport_polytope(c.polytope, c.matrix, {});
  CHECK(equivalent(id.polytope, c.polytope));
  const TransportResult t = transport_polytope(c.polytope, c.matrix, {1});
  CHECK(t.points.size() == 8);
  CHECK(t.convex_closed);
  CHECK(t.matrix == mutate_matrix(c.matrix, 1));
  const TransportResult back = transport_polytope(t.polytope, t.matrix, {1});
  CHECK(back.points == c.points);
  CHECK(equivalent(back.polytope, c.polytope));

  const WordContext a3(RootDatum::build('A', 3), kSL4);
  const ClusterPolytope r = cluster_polytope(a3, Weight({1, 1, 1}));
  for (const auto& word : all_words({1, 2, 3}, 2)) {
    const TransportResult tr = transport_polytope(r.polytope, r.matrix, word);
    CHECK(tr.points.size() == 64);
    CHECK(tr.convex_closed);
  }
}
