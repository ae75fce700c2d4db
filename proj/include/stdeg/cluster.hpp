#pragma once

// Fomin-Zelevinsky seeds of geometric type: exchange matrices built from
// reduced words, matrix and seed mutation, the dominance order, lowest term
// valuations, extended g-vectors, tropicalized mutation, the unimodular
// transfer matrix between string and g-vector coordinates, and transport of
// polytopes across seeds.
//
// Indices in J are 1-based throughout, matching word positions.

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stdeg/crystal_polytopes.hpp"
#include "stdeg/polynomial.hpp"
#include "stdeg/polytope.hpp"
#include "stdeg/rootdata.hpp"

namespace stdeg {

class ExchangeMatrix {
 public:
  ExchangeMatrix() = default;
  /// rows[r] is the row of unfrozen index unfrozen[r]; each row has m entries.
  /// Throws std::invalid_argument unless the principal part is
  /// skew-symmetrizable.
  ExchangeMatrix(size_t m, std::vector<size_t> unfrozen, IntMatrix rows);

  size_t size() const { return m_; }
  const std::vector<size_t>& unfrozen() const { return unfrozen_; }
  bool is_unfrozen(size_t s) const { return row_of(s).has_value(); }
  std::optional<size_t> row_of(size_t s) const;
  const IntMatrix& rows() const { return rows_; }
  /// epsilon_{s,t} for s in J_uf.
  int64_t entry(size_t s, size_t t) const;
  /// Positive integer d_s with d_s e_{s,t} = -d_t e_{t,s} on J_uf.
  const IntVec& symmetrizer() const { return symmetrizer_; }
  bool full_rank() const { return full_rank_; }

  bool operator==(const ExchangeMatrix& o) const {
    return m_ == o.m_ && unfrozen_ == o.unfrozen_ && rows_ == o.rows_;
  }

 private:
  size_t m_ = 0;
  std::vector<size_t> unfrozen_;
  IntMatrix rows_;
  IntVec symmetrizer_;
  bool full_rank_ = true;
};

/// k^+ for every position of the word; m+1 when color i_k does not recur.
std::vector<size_t> next_occurrence(const Word& word);
ExchangeMatrix build_exchange_from_word(const RootDatum& datum, const Word& word);

ExchangeMatrix mutate_matrix(const ExchangeMatrix& eps, size_t k);

struct Seed {
  ExchangeMatrix matrix;
  std::vector<RationalFunction> variables;  // in the initial variables A_1..A_m
  std::vector<size_t> provenance;           // mutation directions from the initial seed

  bool operator==(const Seed& o) const { return matrix == o.matrix && variables == o.variables; }
};

Seed initial_seed(const ExchangeMatrix& eps);
Seed mutate_seed(const Seed& seed, size_t k);
Seed mutate_seed(const Seed& seed, const std::vector<size_t>& word);
std::vector<std::string> variable_names(size_t m);

/// a <= a' in the dominance order: a - a' = v eps with v >= 0 integral.
bool dominance_leq(const IntVec& a, const IntVec& a_prime, const ExchangeMatrix& eps);

enum class Tiebreak { RevLex, Lex, Weighted };

/// A total order on Z^J refining the opposite dominance order: compare by a
/// linear functional x with eps x > 0 on every row, then by the tiebreak.
class RefinedOrder {
 public:
  explicit RefinedOrder(const ExchangeMatrix& eps, Tiebreak tiebreak = Tiebreak::RevLex);
  bool less(const IntVec& a, const IntVec& b) const;
  Tiebreak tiebreak() const { return tiebreak_; }

 private:
  RatVec functional_;
  Tiebreak tiebreak_;
};

IntVec lowest_term_valuation(const RationalFunction& f, const RefinedOrder& order);
IntVec lowest_term_valuation(const RationalFunction& f, const ExchangeMatrix& eps,
                             Tiebreak tiebreak = Tiebreak::RevLex);

struct GVectorResult {
  enum class Kind { Pointed, WeaklyPointed, NotPointed };
  Kind kind = Kind::NotPointed;
  IntVec g;
  std::map<IntVec, Integer> expansion;  // a -> c_a in f = A^g sum c_a Xhat^a
};

/// f is read as a Laurent expression in the seed's own cluster variables.
GVectorResult g_vector(const RationalFunction& f, const ExchangeMatrix& eps);

IntVec tropical_mutate(const IntVec& g, const ExchangeMatrix& eps, size_t k);
/// Applies the word left to right, mutating eps along the way.
IntVec tropical_mutate(IntVec g, ExchangeMatrix eps, const std::vector<size_t>& word);

struct UpsilonMatrix {
  IntMatrix m;        // rows k, columns l
  IntMatrix inverse;

  IntVec apply(const IntVec& a) const { return multiply(a, m); }
  IntVec invert(const IntVec& a) const { return multiply(a, inverse); }
};

/// d_{k,l} = <s_{i_{l+1}} ... s_{i_k} varpi_{i_k}, h_{i_l}> for l <= k.
UpsilonMatrix upsilon_matrix(const RootDatum& datum, const Word& word);

struct TransportResult {
  RationalPolytope polytope;
  std::vector<IntVec> points;  // sorted images
  ExchangeMatrix matrix;       // exchange matrix at the target seed
  bool convex_closed = true;   // images are exactly the lattice points of their hull
};

std::vector<IntVec> transport_points(const std::vector<IntVec>& points, const ExchangeMatrix& eps,
                                     const std::vector<size_t>& word);
TransportResult transport_polytope(const RationalPolytope& p, const ExchangeMatrix& eps,
                                   const std::vector<size_t>& word);

struct ClusterPolytope {
  RationalPolytope polytope;
  std::vector<IntVec> points;  // g-vectors, sorted
  ExchangeMatrix matrix;
  UpsilonMatrix upsilon;
  bool saturated = false;
  std::string warning;
};

/// Pullback of the string polytope along the transfer matrix.
ClusterPolytope cluster_polytope(CrystalCache& cache, const Weight& lambda, int max_level = 3);
ClusterPolytope cluster_polytope(const WordContext& ctx, const Weight& lambda, int max_level = 3);

/// Quiver of the exchange matrix; frozen vertices are boxes.  Entries other
/// than 0 and +-1 are written as edge labels.
std::string quiver_dot(const ExchangeMatrix& eps);
/// Arrows s -> t of the quiver.
std::vector<std::pair<size_t, size_t>> quiver_arrows(const ExchangeMatrix& eps);

}  // namespace stdeg
