#include "stdeg/crystal_polytopes.hpp"

#include <algorithm>

namespace stdeg {

std::string to_string(Coordinates c) { return c == Coordinates::String ? "string" : "nz"; }

IntVec crystal_coordinates(const LambdaCrystal& crystal, size_t b, Coordinates coords) {
  return coords == Coordinates::String ? string_parametrization(crystal, b) : kashiwara_embedding(crystal, b);
}

std::vector<IntVec> crystal_points(const LambdaCrystal& crystal, const std::vector<size_t>& members,
                                   Coordinates coords) {
  std::vector<IntVec> out;
  out.reserve(members.size());
  for (size_t b : members) out.push_back(crystal_coordinates(crystal, b, coords));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntVec> crystal_points(const LambdaCrystal& crystal, Coordinates coords) {
  std::vector<size_t> all(crystal.size());
  for (size_t b = 0; b < all.size(); ++b) all[b] = b;
  return crystal_points(crystal, all, coords);
}

const LambdaCrystal& CrystalCache::get(const Weight& lambda) {
  std::lock_guard<std::mutex> lock(mutex_);
  auto& slot = crystals_[lambda.coords];
  if (!slot) slot = std::make_unique<LambdaCrystal>(generate_B_lambda(ctx_, lambda, cap_));
  return *slot;
}

LevelFamily level_family(CrystalCache& cache, const Weight& lambda, Coordinates coords, int max_level) {
  LevelFamily fam{lambda, coords, {}};
  for (int k = 1; k <= max_level; ++k) fam.levels[k] = crystal_points(cache.get(lambda * k), coords);
  return fam;
}

namespace {

std::vector<RatVec> scaled(const std::vector<IntVec>& pts, int k) {
  std::vector<RatVec> out;
  out.reserve(pts.size());
  for (const auto& p : pts) {
    RatVec r;
    for (int64_t x : p) {
      Rational q(Integer(static_cast<long>(x)), Integer(k));
      q.canonicalize();
      r.push_back(std::move(q));
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

ParametrizedPolytope parametrized_polytope(CrystalCache& cache, const Weight& lambda, Coordinates coords,
                                           int max_level) {
  if (max_level < 1) throw std::invalid_argument("maximal level must be at least 1");
  ParametrizedPolytope out;
  out.coords = coords;
  out.points = crystal_points(cache.get(lambda), coords);
  RationalPolytope p = convex_hull(scaled(out.points, 1));
  for (int k = 1; k < max_level; ++k) {
    const std::vector<RatVec> next = scaled(crystal_points(cache.get(lambda * (k + 1)), coords), k + 1);
    if (std::all_of(next.begin(), next.end(), [&](const RatVec& x) { return p.contains(x); })) {
      out.saturated = true;
      out.level = k;
      break;
    }
    std::vector<RatVec> pts = p.vertices();
    pts.insert(pts.end(), next.begin(), next.end());
    p = convex_hull(std::move(pts));
  }
  if (!out.saturated) {
    out.level = max_level;
    out.warning = "polytope did not stabilize up to level " + std::to_string(max_level);
  }
  out.polytope = std::move(p);
  if (out.saturated && lattice_points(out.polytope) != out.points)
    throw InternalError("lattice points of the saturated polytope differ from the crystal points");
  return out;
}

ParametrizedPolytope string_polytope(const WordContext& ctx, const Weight& lambda, int max_level, size_t cap) {
  CrystalCache cache(ctx, cap);
  return parametrized_polytope(cache, lambda, Coordinates::String, max_level);
}

ParametrizedPolytope nz_polytope(const WordContext& ctx, const Weight& lambda, int max_level, size_t cap) {
  CrystalCache cache(ctx, cap);
  return parametrized_polytope(cache, lambda, Coordinates::NZ, max_level);
}

std::vector<IntVec> richardson_points(const LambdaCrystal& crystal, const WeylElement& v, const WeylElement& w,
                                      Coordinates coords) {
  return crystal_points(crystal, richardson_subset(crystal, v, w).members, coords);
}

MinkowskiReport minkowski_condition_check(CrystalCache& cache, const Weight& lambda, const Weight& lambda_prime,
                                          const WeylElement& v, const WeylElement& w, Coordinates coords,
                                          int dilation) {
  const LambdaCrystal& c1 = cache.get(lambda);
  const std::vector<IntVec> all1 = crystal_points(c1, coords);
  const std::vector<IntVec> rich1 = richardson_points(c1, v, w, coords);
  const LambdaCrystal& c2 = cache.get(lambda_prime);
  const std::vector<IntVec> all2 = crystal_points(c2, coords);
  const std::vector<IntVec> rich2 = richardson_points(c2, v, w, coords);
  const std::vector<IntVec> rich_sum = richardson_points(cache.get(lambda + lambda_prime), v, w, coords);
  const std::vector<IntVec> rich_k = richardson_points(cache.get(lambda * dilation), v, w, coords);

  MinkowskiReport rep;
  std::vector<IntVec> outside;
  std::set_difference(all2.begin(), all2.end(), rich2.begin(), rich2.end(), std::back_inserter(outside));
  for (const auto& a : all1)
    for (const auto& ap : outside) {
      ++rep.sums_checked;
      IntVec s(a.size());
      for (size_t k = 0; k < a.size(); ++k) s[k] = a[k] + ap[k];
      if (std::binary_search(rich_sum.begin(), rich_sum.end(), s)) {
        rep.condition_i = false;
        if (!rep.witness_i) rep.witness_i = std::make_pair(a, ap);
      }
    }
  for (const auto& a : rich1) {
    ++rep.dilations_checked;
    IntVec s(a.size());
    for (size_t k = 0; k < a.size(); ++k) s[k] = dilation * a[k];
    if (!std::binary_search(rich_k.begin(), rich_k.end(), s)) {
      rep.condition_ii = false;
      if (!rep.witness_ii) rep.witness_ii = a;
    }
  }
  return rep;
}

}  // namespace stdeg
