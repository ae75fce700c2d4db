#pragma once

// Type A generalized minors on SL_{n+1} through exterior powers of the
// defining representation, and a check that the initial seed of a reduced
// word mutates to regular functions on the lower unipotent group.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "stdeg/cluster.hpp"
#include "stdeg/polynomial.hpp"
#include "stdeg/rootdata.hpp"

namespace stdeg {

/// Lower unitriangular (n+1) x (n+1) rational matrix.
using UnitriangularPoint = RatMatrix;

bool is_unitriangular(const RatMatrix& g);
/// Entries below the diagonal are p/q with |p| <= 9, 1 <= q <= 5.
UnitriangularPoint random_unitriangular(size_t size, std::mt19937_64& rng);

/// Product of the lifts of s_i (identity with the block [[0,-1],[1,0]] in
/// rows and columns i, i+1) along the word.
IntMatrix lift_matrix(const RootDatum& datum, const Word& word);
IntMatrix lift_matrix(const RootDatum& datum, const WeylElement& w);

struct MinorSpec {
  WeylElement u;
  WeylElement u_prime;
  int i = 1;
};

/// Delta_{u varpi_i, u' varpi_i}(g) = det((g u')[J, 1..i]) / det(u[J, 1..i]),
/// J the rows where the first i columns of the lift of u are supported.
Rational generalized_minor(const RootDatum& datum, const MinorSpec& spec, const RatMatrix& g);
/// The same minor as a polynomial in the entries of a generic lower
/// unitriangular matrix; variable index of entry (r, c), r > c, is
/// unitriangular_variable(r, c).
Polynomial generalized_minor_symbolic(const RootDatum& datum, const MinorSpec& spec);
size_t unitriangular_variable(size_t r, size_t c);
size_t unitriangular_variable_count(size_t size);
std::vector<std::string> unitriangular_variable_names(size_t size);

/// D(k, i) = Delta_{w_{<=k} varpi_{i_k}, varpi_{i_k}} for k = 1..m.
RatVec initial_minors(const RootDatum& datum, const Word& word, const RatMatrix& g);
std::vector<Polynomial> initial_minors_symbolic(const RootDatum& datum, const Word& word);

struct MinorReport {
  Word word;
  size_t direction = 0;
  size_t samples_ok = 0;
  size_t samples_skipped = 0;
  size_t samples_failed = 0;
  /// Binomial evaluated on minors, the symbolic mutated variable evaluated on
  /// minors, and the polynomial quotient evaluated on g agree on every
  /// generic sample.
  bool consistent = true;
  /// The exchange binomial in the minors is divisible by D(k) as a
  /// polynomial in the matrix entries.
  bool regular = false;
  Polynomial mutated;  // the quotient when regular
  std::optional<std::string> witness;

  bool passed() const { return consistent && regular; }
};

/// One report per requested direction (all unfrozen directions by default).
/// Throws std::invalid_argument for frozen directions, non-type-A data or
/// rank above 4, and std::runtime_error when every sample is non-generic.
std::vector<MinorReport> verify_initial_seed(const RootDatum& datum, const Word& word, size_t samples,
                                             uint64_t seed = 1, std::vector<size_t> directions = {});

}  // namespace stdeg
