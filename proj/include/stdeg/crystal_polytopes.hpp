#pragma once

// String and Nakashima-Zelevinsky polytopes as limits of level families of
// crystal point sets, and the two finite conditions of the union-of-faces
// lemma on Richardson point sets.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stdeg/polytope.hpp"
#include "stdeg/zcrystal.hpp"

namespace stdeg {

enum class Coordinates { String, NZ };

std::string to_string(Coordinates c);

IntVec crystal_coordinates(const LambdaCrystal& crystal, size_t b, Coordinates coords);
/// Sorted coordinate vectors of the given members.
std::vector<IntVec> crystal_points(const LambdaCrystal& crystal, const std::vector<size_t>& members, Coordinates coords);
std::vector<IntVec> crystal_points(const LambdaCrystal& crystal, Coordinates coords);

/// Generated crystals B(lambda) for one word context, built on first use.
class CrystalCache {
 public:
  explicit CrystalCache(WordContext ctx, size_t cap = LambdaCrystal::kDefaultCap) : ctx_(std::move(ctx)), cap_(cap) {}

  const WordContext& context() const { return ctx_; }
  const LambdaCrystal& get(const Weight& lambda);

 private:
  WordContext ctx_;
  size_t cap_;
  std::mutex mutex_;
  std::map<IntVec, std::unique_ptr<LambdaCrystal>> crystals_;
};

struct LevelFamily {
  Weight lambda;
  Coordinates coords = Coordinates::String;
  std::map<int, std::vector<IntVec>> levels;  // k -> points of B(k lambda)
};

LevelFamily level_family(CrystalCache& cache, const Weight& lambda, Coordinates coords, int max_level);

struct ParametrizedPolytope {
  RationalPolytope polytope;
  Coordinates coords = Coordinates::String;
  bool saturated = false;
  int level = 0;                 // first k with P_k = P_{k+1}, or K_max
  std::vector<IntVec> points;    // level-one points, sorted
  std::string warning;
};

/// P_k = hull of the level-j points scaled by 1/j, j <= k.  Stops at the
/// first k with P_k = P_{k+1}.  When saturated, the lattice points of the
/// result are asserted to equal the level-one points.
ParametrizedPolytope parametrized_polytope(CrystalCache& cache, const Weight& lambda, Coordinates coords,
                                           int max_level = 3);
ParametrizedPolytope string_polytope(const WordContext& ctx, const Weight& lambda, int max_level = 3,
                                     size_t cap = LambdaCrystal::kDefaultCap);
ParametrizedPolytope nz_polytope(const WordContext& ctx, const Weight& lambda, int max_level = 3,
                                 size_t cap = LambdaCrystal::kDefaultCap);

std::vector<IntVec> richardson_points(const LambdaCrystal& crystal, const WeylElement& v, const WeylElement& w,
                                      Coordinates coords);

struct MinkowskiReport {
  bool condition_i = true;
  bool condition_ii = true;
  size_t sums_checked = 0;
  size_t dilations_checked = 0;
  std::optional<std::pair<IntVec, IntVec>> witness_i;  // (a, a') with a + a' in the Richardson set
  std::optional<IntVec> witness_ii;                    // a with k a outside the dilated Richardson set

  bool passed() const { return condition_i && condition_ii; }
};

/// (i) a + a' stays outside the Richardson set at lambda + lambda' for every
/// a at lambda and a' outside the Richardson set at lambda';
/// (ii) k a lies in the Richardson set at k lambda for a in the set at lambda.
MinkowskiReport minkowski_condition_check(CrystalCache& cache, const Weight& lambda, const Weight& lambda_prime,
                                          const WeylElement& v, const WeylElement& w, Coordinates coords,
                                          int dilation = 2);

}  // namespace stdeg
