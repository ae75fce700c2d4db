#pragma once

// Exact rational and integer linear algebra used throughout the library.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace stdeg {

using Rational = mpq_class;
using Integer = mpz_class;

using IntVec = std::vector<int64_t>;
using IntMatrix = std::vector<IntVec>;
using RatVec = std::vector<Rational>;
using RatMatrix = std::vector<RatVec>;
using BigVec = std::vector<Integer>;

/// "p/q" when q != 1, otherwise "p".
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);

RatVec to_rational(const IntVec& v);
RatMatrix to_rational(const IntMatrix& m);

/// Narrowing conversion; throws std::overflow_error if the value does not fit.
int64_t to_int64(const Integer& z);

struct RowEchelon {
  RatMatrix rows;               // reduced row echelon form, zero rows dropped
  std::vector<size_t> pivots;   // pivot column of each row
};

RowEchelon row_reduce(RatMatrix m);
size_t rank(const RatMatrix& m);
size_t rank(const IntMatrix& m);

/// Basis of {x : m x = 0}, one vector per free column, in RREF order.
std::vector<RatVec> nullspace(const RatMatrix& m, size_t columns);

/// Some solution of a x = b, or nullopt when inconsistent.  Unique when a
/// has full column rank.
std::optional<RatVec> solve(const RatMatrix& a, const RatVec& b);

std::optional<RatMatrix> inverse(const RatMatrix& m);
Rational determinant(RatMatrix m);

/// Scales a nonzero rational vector to the primitive integer vector with the
/// same direction (positive multiple).
BigVec primitive_integer(const RatVec& v);
BigVec primitive_integer(BigVec v);

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntVec multiply(const IntMatrix& a, const IntVec& x);
/// Row vector times matrix.
IntVec multiply(const IntVec& x, const IntMatrix& a);
IntMatrix identity_matrix(size_t n);

}  // namespace stdeg
