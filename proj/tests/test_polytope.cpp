#include <random>
#include <set>

#include "doctest.h"
#include "stdeg/polytope.hpp"

using namespace stdeg;

namespace {

Halfspace hs(BigVec n, Rational o) { return {std::move(n), std::move(o)}; }

// Andrew's monotone chain on integer points; strict hull vertices.
std::set<IntVec> chain_hull(std::vector<IntVec> p) {
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());
  if (p.size() <= 2) return {p.begin(), p.end()};
  auto cross = [](const IntVec& o, const IntVec& a, const IntVec& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  std::vector<IntVec> h(2 * p.size());
  size_t k = 0;
  for (size_t i = 0; i < p.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
    h[k++] = p[i];
  }
  for (size_t i = p.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
    h[k++] = p[i];
  }
  h.resize(k - 1);
  return {h.begin(), h.end()};
}

std::set<IntVec> integral_vertices(const RationalPolytope& p) {
  std::set<IntVec> out;
  for (const auto& v : p.vertices()) {
    IntVec x;
    for (const auto& q : v) x.push_back(q.get_num().get_si());
    out.insert(x);
  }
  return out;
}

// Faces by brute force over all subsets of halfspaces.
std::set<std::vector<size_t>> brute_faces(const RationalPolytope& p) {
  std::set<std::vector<size_t>> out;
  const size_t m = p.halfspaces().size();
  for (uint64_t mask = 0; mask < (uint64_t{1} << m); ++mask) {
    std::vector<size_t> vs;
    for (size_t v = 0; v < p.vertices().size(); ++v) {
      bool ok = true;
      for (size_t h = 0; h < m && ok; ++h)
        if (mask >> h & 1) ok = p.tight(h, p.vertices()[v]);
      if (ok) vs.push_back(v);
    }
    if (!vs.empty()) out.insert(vs);
  }
  return out;
}

std::vector<IntVec> box_points(const RationalPolytope& p, int64_t lo, int64_t hi) {
  std::vector<IntVec> out;
  IntVec x(p.ambient(), lo);
  for (;;) {
    if (p.contains(x)) out.push_back(x);
    size_t k = 0;
    while (k < x.size() && x[k] == hi) x[k++] = lo;
    if (k == x.size()) break;
    ++x[k];
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("triangle and point") {
  auto t = convex_hull(std::vector<IntVec>{{0, 0}, {1, 0}, {0, 1}});
  CHECK(t.dim() == 2);
  CHECK(t.halfspaces().size() == 3);
  CHECK(t.vertices().size() == 3);
  CHECK(enumerate_faces(t).size() == 7);
  auto pt = convex_hull(std::vector<IntVec>{{2, 3, 4}});
  CHECK(pt.dim() == 0);
  CHECK(pt.halfspaces().empty());
  CHECK(pt.equalities().size() == 3);
  CHECK(lattice_points(pt) == std::vector<IntVec>{{2, 3, 4}});
  auto seg = convex_hull(std::vector<IntVec>{{0, 0}, {1, 1}, {2, 2}});
  CHECK(seg.dim() == 1);
  CHECK(seg.vertices().size() == 2);
  CHECK(enumerate_faces(seg).size() == 3);
  CHECK(lattice_points(convex_hull(std::vector<IntVec>{{0, 0}, {2, 0}, {0, 2}})).size() == 6);
  CHECK_THROWS_AS(convex_hull(std::vector<IntVec>{}), std::invalid_argument);
  HullLimits tiny{2, 10};
  CHECK_THROWS_AS(convex_hull(std::vector<IntVec>{{0, 0, 0}}, tiny), std::invalid_argument);
}

TEST_CASE("paper SL3 polytopes from their lattice points") {
  const std::vector<IntVec> phi{{0, 0, 0}, {1, 0, 0}, {0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {0, 1, 0}, {1, 1, 0}, {2, 1, 0}};
  auto p = convex_hull(phi);
  // 0<=a3<=1, a3<=a2<=a3+1, 0<=a1<=a2-2a3+1
  auto q = from_inequalities(3, {hs({0, 0, -1}, 0), hs({0, 0, 1}, 1), hs({0, -1, 1}, 0), hs({0, 1, -1}, 1),
                                 hs({-1, 0, 0}, 0), hs({1, -1, 2}, 1)});
  CHECK(equivalent(p, q));
  std::vector<IntVec> sorted_phi = phi;
  std::sort(sorted_phi.begin(), sorted_phi.end());
  CHECK(lattice_points(p) == sorted_phi);
  CHECK(brute_faces(p).size() == enumerate_faces(p).size());

  const std::vector<IntVec> psi{{0, 0, 0}, {0, 0, 1}, {0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {0, 1, 0}, {1, 1, 0}, {1, 1, 1}};
  auto nz = from_inequalities(3, {hs({-1, 0, 0}, 0), hs({1, 0, 0}, 1), hs({0, 0, -1}, 0), hs({0, 0, 1}, 1),
                                  hs({1, -1, 0}, 0), hs({0, 1, -1}, 1)});
  CHECK(equivalent(convex_hull(psi), nz));
  CHECK(lattice_points(nz).size() == 8);
  CHECK_FALSE(equivalent(p, nz));

  auto text = inequality_text(nz);
  CHECK(text.find("0 <= a_1 <= 1") != std::string::npos);
  CHECK(text.find("0 <= a_3 <= 1") != std::string::npos);
}

TEST_CASE("union of faces on the SL3 string polytope") {
  const std::vector<IntVec> phi{{0, 0, 0}, {1, 0, 0}, {0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {0, 1, 0}, {1, 1, 0}, {2, 1, 0}};
  auto p = convex_hull(phi);
  auto all = union_of_faces_decompose(p, phi);
  REQUIRE(all.is_union);
  REQUIRE(all.certificate.size() == 1);
  CHECK(all.certificate[0].dim == 3);

  auto r = union_of_faces_decompose(p, {{1, 0, 0}, {0, 1, 1}, {0, 2, 1}});
  REQUIRE(r.is_union);
  REQUIRE(r.certificate.size() == 2);
  std::set<std::vector<IntVec>> got(r.face_points.begin(), r.face_points.end());
  // (1,0,0)-(0,1,1) is an edge: tight on a_1 + 2a_3 <= a_2 + 1 and a_3 <= a_2
  CHECK(got == std::set<std::vector<IntVec>>{{{0, 1, 1}, {1, 0, 0}}, {{0, 1, 1}, {0, 2, 1}}});
  for (const auto& f : r.certificate) CHECK(f.dim == 1);

  auto one = union_of_faces_decompose(p, {{2, 1, 0}});
  REQUIRE(one.is_union);
  CHECK(one.certificate.size() == 1);
  CHECK(one.certificate[0].dim == 0);

  auto bad = union_of_faces_decompose(p, {{1, 1, 0}});  // relative interior of an edge
  CHECK_FALSE(bad.is_union);
  REQUIRE(bad.witness);
  CHECK(*bad.witness == IntVec{1, 1, 0});
  CHECK_THROWS_AS(union_of_faces_decompose(p, {{5, 5, 5}}), std::invalid_argument);
}

TEST_CASE("rational vertices and unbounded input") {
  auto p = from_inequalities(2, {hs({-1, 0}, 0), hs({0, -1}, 0), hs({2, 2}, 1)});
  CHECK(p.vertices().size() == 3);
  CHECK(p.contains(RatVec{Rational(1, 2), 0}));
  CHECK(lattice_points(p) == std::vector<IntVec>{{0, 0}});
  CHECK_THROWS_AS(from_inequalities(2, {hs({-1, 0}, 0), hs({0, -1}, 0)}), std::invalid_argument);
  CHECK_THROWS_AS(from_inequalities(1, {hs({1}, -1), hs({-1}, -1)}), std::invalid_argument);
}

TEST_CASE("random hulls: 2D oracle, round trip, faces, lattice points, certifier") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 150; ++trial) {
    const size_t dim = 1 + trial % 3;
    std::uniform_int_distribution<int64_t> coord(0, 3);
    std::uniform_int_distribution<size_t> count(1, dim == 3 ? 6 : 7);
    std::vector<IntVec> pts(count(rng), IntVec(dim));
    for (auto& p : pts)
      for (auto& x : p) x = coord(rng);
    auto poly = convex_hull(pts);

    for (const auto& p : pts) CHECK(poly.contains(p));
    if (dim == 2) CHECK(integral_vertices(poly) == chain_hull(pts));
    if (poly.dim() >= 0 && poly.dim() == static_cast<int>(dim)) {
      auto back = from_inequalities(dim, poly.halfspaces(), poly.equalities());
      CHECK(back.vertices() == poly.vertices());
    }
    for (size_t h = 0; h < poly.halfspaces().size(); ++h) {
      std::vector<size_t> vs;
      for (size_t v = 0; v < poly.vertices().size(); ++v)
        if (poly.tight(h, poly.vertices()[v])) vs.push_back(v);
      CHECK(static_cast<int>(vs.size()) >= poly.dim());
    }

    auto faces = enumerate_faces(poly);
    auto brute = brute_faces(poly);
    brute.insert([&] { std::vector<size_t> a(poly.vertices().size()); for (size_t k = 0; k < a.size(); ++k) a[k] = k; return a; }());
    std::set<std::vector<size_t>> got;
    for (const auto& f : faces) got.insert(f.vertices);
    CHECK(got == brute);
    // closed under intersection
    for (const auto& a : got)
      for (const auto& b : got) {
        std::vector<size_t> m;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(m));
        if (!m.empty()) CHECK(got.count(m));
      }

    const auto lp = lattice_points(poly);
    CHECK(lp == box_points(poly, 0, 3));

    if (faces.size() > 16 || lp.size() > 12) continue;
    // certifier against exhaustive search over face collections
    std::vector<std::vector<IntVec>> fpts;
    for (const auto& f : faces) fpts.push_back(face_lattice_points(poly, f, lp));
    for (int s = 0; s < 6; ++s) {
      std::vector<IntVec> subset;
      for (const auto& x : lp)
        if (rng() % 2) subset.push_back(x);
      if (subset.empty()) continue;
      bool exists = false;
      for (uint64_t mask = 1; mask < (uint64_t{1} << faces.size()) && !exists; ++mask) {
        std::set<IntVec> u;
        for (size_t k = 0; k < faces.size(); ++k)
          if (mask >> k & 1) u.insert(fpts[k].begin(), fpts[k].end());
        exists = std::vector<IntVec>(u.begin(), u.end()) == subset;
      }
      auto res = union_of_faces_decompose(poly, subset);
      CHECK(res.is_union == exists);
      if (res.is_union) {
        std::set<IntVec> u;
        for (const auto& fp : res.face_points) u.insert(fp.begin(), fp.end());
        CHECK(std::vector<IntVec>(u.begin(), u.end()) == subset);
      }
    }
  }
}

TEST_CASE("extreme rays of a simple cone") {
  // x >= 0, y >= 0 in the plane: rays e1, e2
  auto rays = extreme_rays({{-1, 0}, {0, -1}}, 2);
  CHECK(rays == std::vector<BigVec>{{0, 1}, {1, 0}});
  CHECK_THROWS_AS(extreme_rays({{-1, 0}}, 2), std::invalid_argument);
}
