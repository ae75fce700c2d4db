#pragma once

// Sparse multivariate integer polynomials in a fixed number of variables,
// with exact division and a recursive primitive-PRS gcd; and rational
// functions kept in a canonical reduced form.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stdeg/linalg.hpp"

namespace stdeg {

using Monomial = std::vector<int32_t>;

class Polynomial {
 public:
  explicit Polynomial(size_t nvars = 0) : nvars_(nvars) {}
  static Polynomial constant(size_t nvars, const Integer& c);
  static Polynomial variable(size_t nvars, size_t var);
  static Polynomial monomial(const Monomial& m, const Integer& c = 1);

  size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  size_t size() const { return terms_.size(); }
  /// Terms in increasing lexicographic exponent order.
  const std::map<Monomial, Integer>& terms() const { return terms_; }

  /// Lexicographically largest term.
  const std::pair<const Monomial, Integer>& leading() const { return *terms_.rbegin(); }
  int32_t degree(size_t var) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Integer& c) const;
  Polynomial& operator+=(const Polynomial& o);
  bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }
  bool operator<(const Polynomial& o) const { return terms_ < o.terms_; }

  void add_term(const Monomial& m, const Integer& c);
  Polynomial times_monomial(const Monomial& m) const;
  Polynomial pow(unsigned k) const;

  /// gcd of the coefficients (nonnegative; 0 for the zero polynomial).
  Integer content() const;
  /// Componentwise minimum exponent over all terms.
  Monomial monomial_content() const;
  /// Quotient when o divides *this exactly, else nullopt.
  std::optional<Polynomial> divide_exact(const Polynomial& o) const;
  Polynomial divide_by_monomial(const Monomial& m) const;
  Polynomial divide_by_integer(const Integer& c) const;

  std::optional<Rational> evaluate(const RatVec& x) const;
  Rational evaluate_unchecked(const RatVec& x) const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  size_t nvars_;
  std::map<Monomial, Integer> terms_;
};

/// Greatest common divisor, normalized so that the leading coefficient is
/// positive.  gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// num / den over the integers, reduced: no common polynomial factor, no
/// common monomial factor, integer content removed and the denominator's
/// leading coefficient positive.  Equal functions have equal representations.
class RationalFunction {
 public:
  RationalFunction() = default;
  explicit RationalFunction(Polynomial p);
  RationalFunction(Polynomial num, Polynomial den);
  static RationalFunction variable(size_t nvars, size_t var);
  /// prod x_j^{e_j} with integer (possibly negative) exponents.
  static RationalFunction laurent_monomial(const std::vector<int64_t>& exponents);

  size_t nvars() const { return num_.nvars(); }
  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  /// Denominator is a monomial.
  bool is_laurent() const { return den_.is_monomial(); }

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction pow(unsigned k) const;
  bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  /// nullopt when the denominator vanishes at x.
  std::optional<Rational> evaluate(const RatVec& x) const;
  /// Laurent polynomial as exponent -> coefficient (requires is_laurent()).
  std::map<std::vector<int64_t>, Integer> laurent_terms() const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void canonicalize();

  Polynomial num_, den_;
};

}  // namespace stdeg
