#pragma once

// Exact rational polytopes: convex hulls via double description, vertex
// enumeration from inequalities, face lattices, lattice points and the
// union-of-faces certifier.

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "stdeg/linalg.hpp"

namespace stdeg {

/// normal . x <= offset, with a primitive integer normal.  Offsets stay
/// rational since string polytopes may have rational vertices.
struct Halfspace {
  BigVec normal;
  Rational offset;

  std::weak_ordering operator<=>(const Halfspace& o) const {
    if (normal != o.normal) return normal < o.normal ? std::weak_ordering::less : std::weak_ordering::greater;
    return cmp(offset, o.offset) <=> 0;
  }
  bool operator==(const Halfspace&) const = default;
};

Rational evaluate(const BigVec& normal, const RatVec& x);

struct HullLimits {
  size_t max_dimension = 12;
  size_t max_points = 100000;
};

class RationalPolytope {
 public:
  size_t ambient() const { return ambient_; }
  /// Affine dimension; -1 for the empty polytope.
  int dim() const { return dim_; }
  const std::vector<RatVec>& vertices() const { return vertices_; }
  /// Facet-defining inequalities, sorted.
  const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }
  /// The affine hull as normal . x = offset, sorted.
  const std::vector<Halfspace>& equalities() const { return equalities_; }

  bool contains(const RatVec& x) const;
  bool contains(const IntVec& x) const { return contains(to_rational(x)); }
  /// Halfspace k holds with equality at x.
  bool tight(size_t k, const RatVec& x) const { return evaluate(halfspaces_[k].normal, x) == halfspaces_[k].offset; }

  friend RationalPolytope convex_hull(std::vector<RatVec> points, const HullLimits& limits);

 private:
  size_t ambient_ = 0;
  int dim_ = -1;
  std::vector<RatVec> vertices_;
  std::vector<Halfspace> halfspaces_;
  std::vector<Halfspace> equalities_;
};

RationalPolytope convex_hull(std::vector<RatVec> points, const HullLimits& limits = {});
RationalPolytope convex_hull(const std::vector<IntVec>& points, const HullLimits& limits = {});

/// Polytope cut out by inequalities (and optional equalities).  Throws
/// std::invalid_argument for unbounded or empty input.
RationalPolytope from_inequalities(size_t ambient, const std::vector<Halfspace>& halfspaces,
                                   const std::vector<Halfspace>& equalities = {});

/// Extreme rays of the pointed cone {x : row . x <= 0 for every row}.
/// Rays are primitive integer vectors in lexicographic order.
std::vector<BigVec> extreme_rays(const std::vector<BigVec>& rows, size_t dimension);

/// Same point set (double inclusion of vertices).
bool equivalent(const RationalPolytope& p, const RationalPolytope& q);

struct Face {
  std::vector<size_t> tight;     // indices into halfspaces()
  std::vector<size_t> vertices;  // indices into vertices()
  int dim = -1;
};

/// Every nonempty face exactly once, P itself included; ordered by
/// (dimension, vertex indices).
std::vector<Face> enumerate_faces(const RationalPolytope& p);

/// Sorted lattice points.
std::vector<IntVec> lattice_points(const RationalPolytope& p);
/// Lattice points of P lying on the face.
std::vector<IntVec> face_lattice_points(const RationalPolytope& p, const Face& f,
                                        const std::vector<IntVec>& polytope_points);

struct FaceUnionResult {
  bool is_union = false;
  std::vector<Face> certificate;                 // inclusion-maximal faces
  std::vector<std::vector<IntVec>> face_points;  // lattice points of each certificate face
  std::optional<IntVec> witness;                 // uncovered point when !is_union
};

/// Faces whose (nonempty) lattice point sets lie in S; certifies S as their
/// union or returns an uncovered witness.  S must consist of lattice points
/// of P.
FaceUnionResult union_of_faces_decompose(const RationalPolytope& p, const std::vector<IntVec>& s);
FaceUnionResult union_of_faces_decompose(const RationalPolytope& p, const std::vector<Face>& faces,
                                         const std::vector<IntVec>& polytope_points, const std::vector<IntVec>& s);

/// "a_1 + 2a_3 <= a_2 + 1" style text; opposite pairs are merged into chains.
std::string inequality_text(const RationalPolytope& p);

}  // namespace stdeg
