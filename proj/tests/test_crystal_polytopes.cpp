#include "doctest.h"
#include "oracles.hpp"
#include "stdeg/crystal_polytopes.hpp"

using namespace stdeg;

namespace {
Halfspace hs(BigVec n, Rational o) { return {std::move(n), std::move(o)}; }
}  // namespace

TEST_CASE("SL3 string and NZ polytopes") {
  WordContext ctx(RootDatum::build('A', 2), {1, 2, 1});
  auto s = string_polytope(ctx, Weight({1, 1}));
  CHECK(s.saturated);
  CHECK(s.level == 1);
  auto paper = from_inequalities(3, {hs({0, 0, -1}, 0), hs({0, 0, 1}, 1), hs({0, -1, 1}, 0), hs({0, 1, -1}, 1),
                                     hs({-1, 0, 0}, 0), hs({1, -1, 2}, 1)});
  CHECK(equivalent(s.polytope, paper));
  CHECK(lattice_points(s.polytope) == s.points);

  auto nz = nz_polytope(ctx, Weight({1, 1}));
  CHECK(nz.saturated);
  auto paper_nz = from_inequalities(3, {hs({-1, 0, 0}, 0), hs({1, 0, 0}, 1), hs({0, 0, -1}, 0), hs({0, 0, 1}, 1),
                                        hs({1, -1, 0}, 0), hs({0, 1, -1}, 1)});
  CHECK(equivalent(nz.polytope, paper_nz));
}

TEST_CASE("rank one segments and the zero weight") {
  WordContext ctx(RootDatum::build('A', 1), {1});
  for (int64_t m = 0; m <= 4; ++m) {
    auto s = string_polytope(ctx, Weight({m}));
    CHECK(s.saturated);
    CHECK(equivalent(s.polytope, convex_hull(std::vector<IntVec>{{0}, {m}})));
    CHECK(equivalent(nz_polytope(ctx, Weight({m})).polytope, s.polytope));
  }
  WordContext a2(RootDatum::build('A', 2), {1, 2, 1});
  CHECK(string_polytope(a2, Weight({0, 0})).polytope.dim() == 0);
}

TEST_CASE("A3 rho polytopes have 64 lattice points") {
  WordContext ctx(RootDatum::build('A', 3), {1, 2, 1, 3, 2, 1});
  auto s = string_polytope(ctx, Weight({1, 1, 1}));
  CHECK(s.saturated);
  CHECK(lattice_points(s.polytope).size() == 64);
  auto nz = nz_polytope(ctx, Weight({1, 1, 1}));
  CHECK(nz.saturated);
  CHECK(lattice_points(nz.polytope).size() == 64);
}

TEST_CASE("dilation consistency and saturation on small cases") {
  struct Case { char s; int r; Word word; };
  for (const auto& c : {Case{'A', 2, {1, 2, 1}}, Case{'A', 2, {2, 1, 2}}, Case{'B', 2, {1, 2, 1, 2}}, Case{'B', 2, {2, 1, 2, 1}}}) {
    auto d = RootDatum::build(c.s, c.r);
    CrystalCache cache(WordContext(d, c.word));
    for (Coordinates coords : {Coordinates::String, Coordinates::NZ})
      for (IntVec lam : {IntVec{1, 0}, IntVec{0, 1}, IntVec{1, 1}, IntVec{2, 1}}) {
        auto p = parametrized_polytope(cache, Weight(lam), coords);
        CHECK(p.saturated);
        CHECK(static_cast<int64_t>(p.points.size()) == oracle::weyl_dimension(d, lam));
        // lattice points of 2P contain the level-two set, with equality when saturated by level 2
        std::vector<RatVec> doubled;
        for (const auto& v : p.polytope.vertices()) {
          RatVec x;
          for (const auto& q : v) x.push_back(2 * q);
          doubled.push_back(x);
        }
        auto two = lattice_points(convex_hull(doubled));
        auto level2 = crystal_points(cache.get(Weight(lam) * 2), coords);
        CHECK(std::includes(two.begin(), two.end(), level2.begin(), level2.end()));
        if (p.level <= 2) CHECK(two == level2);
        auto fam = level_family(cache, Weight(lam), coords, 2);
        CHECK(static_cast<int64_t>(fam.levels[2].size()) == oracle::weyl_dimension(d, (Weight(lam) * 2).coords));
      }
  }
}

TEST_CASE("Minkowski conditions on SL3") {
  auto a2 = RootDatum::build('A', 2);
  CrystalCache cache(WordContext(a2, {1, 2, 1}));
  auto e = weyl_identity(a2), w0 = weyl_from_word(a2, {1, 2, 1}), s1 = weyl_from_word(a2, {1});
  auto vac = minkowski_condition_check(cache, Weight({1, 1}), Weight({1, 1}), e, w0, Coordinates::String);
  CHECK(vac.passed());
  CHECK(vac.sums_checked == 0);
  auto r = minkowski_condition_check(cache, Weight({1, 1}), Weight({1, 1}), s1, w0, Coordinates::String);
  CHECK(r.passed());
  CHECK(r.sums_checked == 8 * 3);
  auto single = minkowski_condition_check(cache, Weight({1, 1}), Weight({1, 1}), s1, s1, Coordinates::String);
  CHECK(single.condition_ii);
  CHECK(single.dilations_checked == 1);
}
