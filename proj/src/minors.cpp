#include "stdeg/minors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace stdeg {

namespace {

void require_type_a(const RootDatum& datum) {
  if (datum.series() != 'A') throw std::invalid_argument("generalized minors are implemented for type A only");
}

// Rows carrying the first i columns of a signed permutation matrix.
std::vector<size_t> support_rows(const IntMatrix& lift, int i) {
  std::vector<size_t> rows;
  for (size_t r = 0; r < lift.size(); ++r)
    for (int c = 0; c < i; ++c)
      if (lift[r][c] != 0) rows.push_back(r);
  std::sort(rows.begin(), rows.end());
  return rows;
}

template <class T>
T leibniz(const std::vector<std::vector<T>>& m, const T& zero) {
  const size_t n = m.size();
  std::vector<size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  T total = zero;
  do {
    int inversions = 0;
    for (size_t a = 0; a < n; ++a)
      for (size_t b = a + 1; b < n; ++b)
        if (perm[a] > perm[b]) ++inversions;
    T term = m[0][perm[0]];
    for (size_t a = 1; a < n; ++a) term = term * m[a][perm[a]];
    total = inversions % 2 ? total - term : total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

int64_t sign_of(const IntMatrix& lift, const std::vector<size_t>& rows, int i) {
  RatMatrix sub;
  for (size_t r : rows) {
    RatVec row;
    for (int c = 0; c < i; ++c) row.push_back(Rational(static_cast<long>(lift[r][c])));
    sub.push_back(std::move(row));
  }
  const Rational d = determinant(sub);
  if (d != 1 && d != -1) throw InternalError("lift of a Weyl group element is not a signed permutation");
  return d == 1 ? 1 : -1;
}

Polynomial polynomial_power(const Polynomial& p, int64_t e) {
  return p.pow(static_cast<unsigned>(e));
}

}  // namespace

bool is_unitriangular(const RatMatrix& g) {
  for (size_t r = 0; r < g.size(); ++r) {
    if (g[r].size() != g.size()) return false;
    for (size_t c = r; c < g.size(); ++c)
      if (g[r][c] != (r == c ? 1 : 0)) return false;
  }
  return true;
}

UnitriangularPoint random_unitriangular(size_t size, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  RatMatrix g(size, RatVec(size, Rational(0)));
  for (size_t r = 0; r < size; ++r) {
    g[r][r] = 1;
    for (size_t c = 0; c < r; ++c) {
      Rational q(num(rng), den(rng));
      q.canonicalize();
      g[r][c] = q;
    }
  }
  return g;
}

IntMatrix lift_matrix(const RootDatum& datum, const Word& word) {
  require_type_a(datum);
  const size_t n = static_cast<size_t>(datum.rank()) + 1;
  IntMatrix m = identity_matrix(n);
  for (int i : word) {
    datum.check_color(i);
    IntMatrix s = identity_matrix(n);
    s[i - 1][i - 1] = 0;
    s[i][i] = 0;
    s[i - 1][i] = -1;
    s[i][i - 1] = 1;
    m = multiply(m, s);
  }
  return m;
}

IntMatrix lift_matrix(const RootDatum& datum, const WeylElement& w) { return lift_matrix(datum, w.word); }

Rational generalized_minor(const RootDatum& datum, const MinorSpec& spec, const RatMatrix& g) {
  require_type_a(datum);
  datum.check_color(spec.i);
  const size_t n = static_cast<size_t>(datum.rank()) + 1;
  if (g.size() != n) throw std::invalid_argument("matrix size does not match the rank");
  const IntMatrix lu = lift_matrix(datum, spec.u), lp = lift_matrix(datum, spec.u_prime);
  const std::vector<size_t> rows = support_rows(lu, spec.i);
  RatMatrix sub;
  for (size_t r : rows) {
    RatVec row(spec.i, Rational(0));
    for (int c = 0; c < spec.i; ++c)
      for (size_t k = 0; k < n; ++k)
        if (lp[k][c] != 0) row[c] += g[r][k] * Rational(static_cast<long>(lp[k][c]));
    sub.push_back(std::move(row));
  }
  return determinant(sub) * Rational(static_cast<long>(sign_of(lu, rows, spec.i)));
}

size_t unitriangular_variable(size_t r, size_t c) {
  if (r <= c) throw std::invalid_argument("only entries below the diagonal are variables");
  return r * (r - 1) / 2 + c;
}

size_t unitriangular_variable_count(size_t size) { return size * (size - 1) / 2; }

std::vector<std::string> unitriangular_variable_names(size_t size) {
  std::vector<std::string> names(unitriangular_variable_count(size));
  for (size_t r = 1; r < size; ++r)
    for (size_t c = 0; c < r; ++c)
      names[unitriangular_variable(r, c)] = "g_" + std::to_string(r + 1) + std::to_string(c + 1);
  return names;
}

Polynomial generalized_minor_symbolic(const RootDatum& datum, const MinorSpec& spec) {
  require_type_a(datum);
  datum.check_color(spec.i);
  const size_t n = static_cast<size_t>(datum.rank()) + 1;
  const size_t nv = unitriangular_variable_count(n);
  auto entry = [&](size_t r, size_t c) {
    if (r == c) return Polynomial::constant(nv, 1);
    if (r < c) return Polynomial(nv);
    return Polynomial::variable(nv, unitriangular_variable(r, c));
  };
  const IntMatrix lu = lift_matrix(datum, spec.u), lp = lift_matrix(datum, spec.u_prime);
  const std::vector<size_t> rows = support_rows(lu, spec.i);
  std::vector<std::vector<Polynomial>> sub;
  for (size_t r : rows) {
    std::vector<Polynomial> row(spec.i, Polynomial(nv));
    for (int c = 0; c < spec.i; ++c)
      for (size_t k = 0; k < n; ++k)
        if (lp[k][c] != 0) row[c] += entry(r, k) * Integer(static_cast<long>(lp[k][c]));
    sub.push_back(std::move(row));
  }
  return leibniz(sub, Polynomial(nv)) * Integer(static_cast<long>(sign_of(lu, rows, spec.i)));
}

namespace {

std::vector<MinorSpec> initial_specs(const RootDatum& datum, const Word& word) {
  std::vector<MinorSpec> specs;
  Word prefix;
  for (int i : word) {
    prefix.push_back(i);
    specs.push_back({weyl_from_word(datum, prefix), weyl_identity(datum), i});
  }
  return specs;
}

}  // namespace

RatVec initial_minors(const RootDatum& datum, const Word& word, const RatMatrix& g) {
  RatVec out;
  for (const auto& s : initial_specs(datum, word)) out.push_back(generalized_minor(datum, s, g));
  return out;
}

std::vector<Polynomial> initial_minors_symbolic(const RootDatum& datum, const Word& word) {
  std::vector<Polynomial> out;
  for (const auto& s : initial_specs(datum, word)) out.push_back(generalized_minor_symbolic(datum, s));
  return out;
}

std::vector<MinorReport> verify_initial_seed(const RootDatum& datum, const Word& word, size_t samples, uint64_t seed,
                                             std::vector<size_t> directions) {
  require_type_a(datum);
  if (datum.rank() > 4) throw std::invalid_argument("seed verification is limited to rank at most 4");
  const ExchangeMatrix eps = build_exchange_from_word(datum, word);
  if (directions.empty()) directions = eps.unfrozen();
  for (size_t k : directions)
    if (!eps.is_unfrozen(k)) throw std::invalid_argument("direction " + std::to_string(k) + " is frozen");

  const size_t n = static_cast<size_t>(datum.rank()) + 1;
  const size_t nv = unitriangular_variable_count(n);
  const std::vector<Polynomial> d = initial_minors_symbolic(datum, word);
  const Seed s0 = initial_seed(eps);
  std::mt19937_64 rng(seed);
  std::vector<UnitriangularPoint> points;
  for (size_t s = 0; s < samples; ++s) points.push_back(random_unitriangular(n, rng));

  std::vector<MinorReport> reports;
  for (size_t k : directions) {
    MinorReport rep;
    rep.word = word;
    rep.direction = k;
    Polynomial up = Polynomial::constant(nv, 1), down = Polynomial::constant(nv, 1);
    for (size_t l = 1; l <= eps.size(); ++l) {
      const int64_t e = eps.entry(k, l);
      if (e > 0) up = up * polynomial_power(d[l - 1], e);
      if (e < 0) down = down * polynomial_power(d[l - 1], -e);
    }
    const auto q = (up + down).divide_exact(d[k - 1]);
    rep.regular = q.has_value();
    if (q) rep.mutated = *q;
    const RationalFunction symbolic = mutate_seed(s0, k).variables[k - 1];

    for (const auto& g : points) {
      RatVec x;
      for (size_t r = 1; r < n; ++r)
        for (size_t c = 0; c < r; ++c) x.push_back(g[r][c]);
      const RatVec minors = initial_minors(datum, word, g);
      if (minors[k - 1] == 0) {
        ++rep.samples_skipped;
        continue;
      }
      const auto via_seed = symbolic.evaluate(minors);
      if (!via_seed) {
        ++rep.samples_skipped;
        continue;
      }
      Rational u = 1, v = 1;
      for (size_t l = 1; l <= eps.size(); ++l) {
        const int64_t e = eps.entry(k, l);
        for (int64_t t = 0; t < e; ++t) u *= minors[l - 1];
        for (int64_t t = 0; t < -e; ++t) v *= minors[l - 1];
      }
      const Rational via_binomial = (u + v) / minors[k - 1];
      bool ok = via_binomial == *via_seed;
      if (q) ok = ok && q->evaluate_unchecked(x) == via_binomial;
      if (ok) {
        ++rep.samples_ok;
      } else {
        rep.consistent = false;
        if (!rep.witness) rep.witness = "binomial " + to_string(via_binomial) + " vs seed " + to_string(*via_seed);
        ++rep.samples_failed;
      }
    }
    if (rep.samples_ok == 0 && rep.samples_failed == 0)
      throw std::runtime_error("every sample is non-generic for direction " + std::to_string(k));
    reports.push_back(std::move(rep));
  }
  return reports;
}

}  // namespace stdeg
