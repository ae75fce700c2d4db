#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "stdeg/rootdata.hpp"

using namespace stdeg;

TEST_CASE("standard Cartan matrices") {
  CHECK(RootDatum::build('A', 2).cartan() == IntMatrix{{2, -1}, {-1, 2}});
  auto a3 = RootDatum::build('A', 3);
  CHECK(a3.c(1, 3) == 0);
  CHECK(a3.c(1, 2) == -1);
  auto g2 = RootDatum::build('G', 2);
  CHECK(std::min(g2.c(1, 2), g2.c(2, 1)) == -3);
  CHECK(std::max(g2.c(1, 2), g2.c(2, 1)) == -1);
  for (auto [s, r] : std::vector<std::pair<char, int>>{{'A', 1}, {'B', 3}, {'C', 3}, {'D', 4}, {'E', 6}, {'E', 7}, {'E', 8}, {'F', 4}, {'G', 2}}) {
    auto d = RootDatum::build(s, r);
    for (int i = 1; i <= r; ++i)
      for (int j = 1; j <= r; ++j) CHECK(d.d(i) * d.c(i, j) == d.d(j) * d.c(j, i));
  }
  CHECK_THROWS_AS(RootDatum::build('C', 2), std::invalid_argument);
  CHECK_THROWS_AS(RootDatum::build('D', 3), std::invalid_argument);
  CHECK_THROWS_AS(RootDatum::build('E', 9), std::invalid_argument);
  CHECK_THROWS_AS(RootDatum::build('X', 2), std::invalid_argument);
}

TEST_CASE("reflections") {
  auto a2 = RootDatum::build('A', 2);
  CHECK(a2.reflect(1, Weight({1, 0})) == Weight({-1, 1}));
  CHECK(a2.reflect(2, Weight({0, 1})) == Weight({1, -1}));
  CHECK(a2.reflect(1, Weight::zero(2)) == Weight::zero(2));
  CHECK_THROWS_AS(a2.reflect(3, Weight::zero(2)), std::out_of_range);

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int64_t> coord(-5, 5);
  for (char s : {'A', 'B', 'G'}) {
    auto d = RootDatum::build(s, s == 'A' ? 3 : 2);
    for (int t = 0; t < 200; ++t) {
      Weight a = Weight::zero(d.rank()), b = Weight::zero(d.rank());
      for (auto& x : a.coords) x = coord(rng);
      for (auto& x : b.coords) x = coord(rng);
      const int i = 1 + t % d.rank();
      CHECK(d.reflect(i, d.reflect(i, a)) == a);
      CHECK(d.inner_product(d.reflect(i, a), d.reflect(i, b)) == d.inner_product(a, b));
    }
  }
}

TEST_CASE("words and canonical forms") {
  auto a2 = RootDatum::build('A', 2);
  CHECK(weyl_from_word(a2, {1, 2, 1}) == weyl_from_word(a2, {2, 1, 2}));
  CHECK(weyl_from_word(a2, {2, 1, 2}).word == Word{1, 2, 1});
  CHECK(weyl_from_word(a2, {}).action == identity_matrix(2));
  CHECK(weyl_from_word(a2, {1, 1}).length() == 0);
  CHECK_FALSE(is_reduced(a2, {1, 1}));
  CHECK(is_reduced(a2, {2, 1}));
  CHECK_THROWS(weyl_from_word(a2, {3}));
}

TEST_CASE("group enumeration") {
  struct Case { char s; int r; size_t size, maxlen; };
  for (auto c : {Case{'A', 2, 6, 3}, Case{'A', 3, 24, 6}, Case{'B', 2, 8, 4}, Case{'G', 2, 12, 6}, Case{'B', 3, 48, 9}}) {
    auto g = enumerate_group(RootDatum::build(c.s, c.r));
    CHECK(g.size() == c.size);
    CHECK(g.max_length() == c.maxlen);
  }
  CHECK_THROWS_AS(enumerate_group(RootDatum::build('E', 8), 1000), CapExceeded);
}

TEST_CASE("every element: canonical word is lex-min reduced, action matches, duality with w0") {
  for (auto [s, r] : std::vector<std::pair<char, int>>{{'A', 2}, {'A', 3}, {'B', 2}}) {
    auto d = RootDatum::build(s, r);
    auto g = enumerate_group(d);
    const WeylElement& w0 = g.longest();
    for (const auto& w : g.elements()) {
      CHECK(is_reduced(d, w.word));
      CHECK(weyl_from_word(d, w.word).action == w.action);
      auto words = g.reduced_words(w);
      REQUIRE(!words.empty());
      CHECK(words.front() == w.word);
      for (const auto& u : words) CHECK(weyl_from_word(d, u) == w);
      CHECK(w.length() == w0.length() - weyl_multiply(d, w0, w).length());
    }
  }
}

TEST_CASE("Bruhat order") {
  auto a2 = RootDatum::build('A', 2);
  auto g = enumerate_group(a2);
  CHECK(g.bruhat_pairs().size() == 19);
  CHECK_FALSE(g.bruhat_leq(weyl_from_word(a2, {1}), weyl_from_word(a2, {2})));
  for (const auto& w : g.elements()) CHECK(g.bruhat_leq(weyl_identity(a2), w));

  for (auto [s, r] : std::vector<std::pair<char, int>>{{'A', 2}, {'A', 3}, {'B', 2}}) {
    auto d = RootDatum::build(s, r);
    auto grp = enumerate_group(d);
    const size_t n = grp.size();
    size_t count = 0;
    for (size_t v = 0; v < n; ++v)
      for (size_t w = 0; w < n; ++w) {
        const bool le = grp.bruhat_leq(v, w);
        count += le;
        CHECK(le == oracle::bruhat_subword(d, grp.element(v), grp.element(w)));
        CHECK(le == bruhat_leq_lifting(d, grp.element(v), grp.element(w)));
        if (v == w) CHECK(le);
        if (v != w && le) CHECK_FALSE(grp.bruhat_leq(w, v));
        if (le)
          for (size_t u = 0; u < n; ++u)
            if (grp.bruhat_leq(w, u)) CHECK(grp.bruhat_leq(v, u));
      }
    CHECK(count == grp.bruhat_pairs().size());
  }
}
