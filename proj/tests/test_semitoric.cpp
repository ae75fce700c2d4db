#include <set>

#include "doctest.h"
#include "stdeg/semitoric.hpp"

using namespace stdeg;

namespace {

const RootDatum kA2 = RootDatum::build('A', 2);

WeylElement we(const RootDatum& d, const Word& w) { return weyl_from_word(d, w); }

std::set<std::vector<IntVec>> face_point_sets(const DegenerationReport& r) {
  std::set<std::vector<IntVec>> out;
  for (const auto& f : r.certificate) out.insert(f.points);
  return out;
}

}  // namespace

TEST_CASE("string reports for SL3") {
  CrystalCache cache(WordContext(kA2, {1, 2, 1}));
  const Weight l({1, 1});

  const auto whole = semi_toric_report_string(cache, l, weyl_identity(kA2), we(kA2, {1, 2, 1}));
  CHECK(whole.passed());
  REQUIRE(whole.certificate.size() == 1);
  CHECK(whole.certificate[0].dim == 3);
  CHECK(whole.richardson.size() == 8);

  const auto r = semi_toric_report_string(cache, l, we(kA2, {1}), we(kA2, {2, 1}));
  CHECK(r.passed());
  CHECK(r.richardson == std::vector<IntVec>{{0, 1, 1}, {0, 2, 1}, {1, 0, 0}});
  CHECK(face_point_sets(r) == std::set<std::vector<IntVec>>{{{0, 1, 1}, {1, 0, 0}}, {{0, 1, 1}, {0, 2, 1}}});
  for (const auto& f : r.certificate) CHECK(f.dim == 1);

  const auto pt = semi_toric_report_string(cache, l, we(kA2, {2}), we(kA2, {2}));
  CHECK(pt.passed());
  REQUIRE(pt.certificate.size() == 1);
  CHECK(pt.certificate[0].dim == 0);
  REQUIRE(pt.check("extremal_weight"));
  CHECK(pt.check("extremal_weight")->passed);

  CHECK_THROWS_AS(semi_toric_report_string(cache, l, we(kA2, {1, 2}), we(kA2, {2, 1})), std::invalid_argument);
}

TEST_CASE("NZ reports for SL3") {
  CrystalCache cache(WordContext(kA2, {1, 2, 1}));
  const Weight l({1, 1});
  const auto whole = semi_toric_report_nz(cache, l, weyl_identity(kA2), we(kA2, {1, 2, 1}));
  CHECK(whole.passed());
  CHECK(whole.certificate.size() == 1);
  const auto low = semi_toric_report_nz(cache, l, we(kA2, {1, 2, 1}), we(kA2, {1, 2, 1}));
  CHECK(low.passed());
  CHECK(low.richardson == std::vector<IntVec>{{1, 2, 1}});
  const auto r = semi_toric_report_nz(cache, l, we(kA2, {1}), we(kA2, {2, 1}));
  CHECK(r.passed());
  CHECK(r.richardson.size() == 3);
}

TEST_CASE("cluster reports and transport") {
  CrystalCache cache(WordContext(kA2, {1, 2, 1}));
  const Weight l({1, 1});
  const WeylElement v = we(kA2, {1}), w = we(kA2, {2, 1});
  const auto s = semi_toric_report_string(cache, l, v, w);
  const auto c0 = semi_toric_report_cluster(cache, l, v, w, {});
  CHECK(c0.passed());
  CHECK(c0.certificate.size() == s.certificate.size());
  CHECK(c0.richardson.size() == s.richardson.size());
  const UpsilonMatrix u = upsilon_matrix(kA2, {1, 2, 1});
  for (const auto& p : c0.richardson)
    CHECK(std::binary_search(s.richardson.begin(), s.richardson.end(), u.apply(p)));

  const auto c1 = semi_toric_report_cluster(cache, l, v, w, {1});
  CHECK(c1.passed());
  CHECK(c1.richardson.size() == 3);
  const auto c11 = semi_toric_report_cluster(cache, l, v, w, {1, 1});
  CHECK(c11.richardson == c0.richardson);
  CHECK(face_point_sets(c11) == face_point_sets(c0));
  CHECK(equivalent(c11.polytope, c0.polytope));
}

TEST_CASE("all pairs of SL3") {
  CrystalCache cache(WordContext(kA2, {1, 2, 1}));
  for (const Weight& l : {Weight({1, 1}), Weight({2, 2}), Weight({1, 2})}) {
    for (CoordinateSystem sys : {CoordinateSystem::String, CoordinateSystem::NZ, CoordinateSystem::Cluster}) {
      const ScanSummary s = all_pairs_scan(cache, l, sys);
      CHECK(s.pairs == 19);
      CHECK(s.certified == 19);
      CHECK(s.violations.empty());
    }
  }
  const ScanSummary t = all_pairs_scan(cache, Weight({1, 1}), CoordinateSystem::Cluster, {1});
  CHECK(t.passed());
  CHECK(t.pairs == 19);
}

TEST_CASE("string and NZ Richardson sets have equal size") {
  CrystalCache cache(WordContext(kA2, {1, 2, 1}));
  const ScanSummary s = all_pairs_scan(cache, Weight({2, 1}), CoordinateSystem::String);
  const ScanSummary n = all_pairs_scan(cache, Weight({2, 1}), CoordinateSystem::NZ);
  REQUIRE(s.reports.size() == n.reports.size());
  for (size_t k = 0; k < s.reports.size(); ++k) {
    CHECK(s.reports[k].v == n.reports[k].v);
    CHECK(s.reports[k].richardson.size() == n.reports[k].richardson.size());
  }
}

TEST_CASE("rank one") {
  const RootDatum a1 = RootDatum::build('A', 1);
  CrystalCache cache(WordContext(a1, {1}));
  const ScanSummary s = all_pairs_scan(cache, Weight({2}), CoordinateSystem::String);
  CHECK(s.pairs == 3);
  CHECK(s.passed());
  CHECK(s.face_dimensions == std::map<int, size_t>{{0, 2}, {1, 1}});
}

TEST_CASE("B2 scan") {
  const RootDatum b2 = RootDatum::build('B', 2);
  CrystalCache cache(WordContext(b2, {1, 2, 1, 2}));
  for (CoordinateSystem sys : {CoordinateSystem::String, CoordinateSystem::NZ, CoordinateSystem::Cluster}) {
    const ScanSummary s = all_pairs_scan(cache, Weight({1, 1}), sys);
    CHECK(s.pairs == 33);
    CHECK(s.passed());
  }
}

TEST_CASE("A3 scan in string coordinates") {
  const RootDatum a3 = RootDatum::build('A', 3);
  CrystalCache cache(WordContext(a3, {1, 2, 1, 3, 2, 1}));
  const ScanSummary s = all_pairs_scan(cache, Weight({1, 0, 1}), CoordinateSystem::String);
  CHECK(s.pairs == enumerate_group(a3, 100).bruhat_pairs().size());
  CHECK(s.passed());
  for (const auto& v : s.violations) MESSAGE(v);
}

TEST_CASE("certificate faces have the dimension of the Richardson variety for regular weights") {
  struct Case {
    RootDatum d;
    Word word;
    Weight lambda;
  };
  const std::vector<Case> cases{{kA2, {1, 2, 1}, Weight({1, 1})},
                                {kA2, {2, 1, 2}, Weight({2, 1})},
                                {RootDatum::build('B', 2), {1, 2, 1, 2}, Weight({1, 1})},
                                {RootDatum::build('A', 3), {1, 2, 1, 3, 2, 1}, Weight({1, 1, 1})}};
  for (const auto& c : cases) {
    CrystalCache cache(WordContext(c.d, c.word));
    std::vector<CoordinateSystem> systems{CoordinateSystem::String};
    if (c.d.rank() < 3) systems = {CoordinateSystem::String, CoordinateSystem::NZ, CoordinateSystem::Cluster};
    for (CoordinateSystem sys : systems) {
      const ScanSummary s = all_pairs_scan(cache, c.lambda, sys);
      CHECK(s.passed());
      for (const auto& r : s.reports)
        for (const auto& f : r.certificate) CHECK(f.dim == static_cast<int>(r.w.length() - r.v.length()));
    }
  }
}
