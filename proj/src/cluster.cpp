#include "stdeg/cluster.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace stdeg {

namespace {

int64_t positive_part(int64_t x) { return x > 0 ? x : 0; }

int sign(int64_t x) { return (x > 0) - (x < 0); }

// eps^T as an m x |J_uf| rational matrix.
RatMatrix transpose_rows(const ExchangeMatrix& eps) {
  RatMatrix t(eps.size(), RatVec(eps.unfrozen().size()));
  for (size_t r = 0; r < eps.unfrozen().size(); ++r)
    for (size_t j = 0; j < eps.size(); ++j) t[j][r] = Rational(static_cast<long>(eps.rows()[r][j]));
  return t;
}

// Nonnegative integral v with v eps = d, if any.
std::optional<IntVec> nonnegative_combination(const ExchangeMatrix& eps, const IntVec& d) {
  const size_t nu = eps.unfrozen().size();
  if (nu == 0) {
    if (std::all_of(d.begin(), d.end(), [](int64_t x) { return x == 0; })) return IntVec{};
    return std::nullopt;
  }
  const auto v = solve(transpose_rows(eps), to_rational(d));
  if (!v) return std::nullopt;
  IntVec out;
  for (const auto& q : *v) {
    if (q.get_den() != 1 || q < 0) return std::nullopt;
    out.push_back(to_int64(q.get_num()));
  }
  return out;
}

void check_direction(const ExchangeMatrix& eps, size_t k) {
  if (!eps.is_unfrozen(k)) throw std::invalid_argument("mutation direction " + std::to_string(k) + " is not unfrozen");
}

}  // namespace

ExchangeMatrix::ExchangeMatrix(size_t m, std::vector<size_t> unfrozen, IntMatrix rows)
    : m_(m), unfrozen_(std::move(unfrozen)), rows_(std::move(rows)) {
  if (!std::is_sorted(unfrozen_.begin(), unfrozen_.end()) ||
      std::adjacent_find(unfrozen_.begin(), unfrozen_.end()) != unfrozen_.end())
    throw std::invalid_argument("unfrozen indices must be strictly increasing");
  for (size_t s : unfrozen_)
    if (s < 1 || s > m_) throw std::invalid_argument("unfrozen index out of range");
  if (rows_.size() != unfrozen_.size()) throw std::invalid_argument("one row per unfrozen index expected");
  for (const auto& r : rows_)
    if (r.size() != m_) throw std::invalid_argument("exchange matrix row has the wrong length");

  const size_t nu = unfrozen_.size();
  for (size_t a = 0; a < nu; ++a) {
    if (rows_[a][unfrozen_[a] - 1] != 0) throw std::invalid_argument("principal part has a nonzero diagonal");
    for (size_t b = 0; b < nu; ++b) {
      const int64_t x = rows_[a][unfrozen_[b] - 1], y = rows_[b][unfrozen_[a] - 1];
      if (sign(x) != -sign(y)) throw std::invalid_argument("principal part is not sign-skew-symmetric");
    }
  }
  std::vector<Rational> d(nu, Rational(0));
  for (size_t root = 0; root < nu; ++root) {
    if (d[root] != 0) continue;
    d[root] = 1;
    std::deque<size_t> queue{root};
    std::vector<size_t> component{root};
    while (!queue.empty()) {
      const size_t a = queue.front();
      queue.pop_front();
      for (size_t b = 0; b < nu; ++b) {
        const int64_t x = rows_[a][unfrozen_[b] - 1];
        if (x == 0) continue;
        const int64_t y = rows_[b][unfrozen_[a] - 1];
        Rational db = -d[a] * Rational(static_cast<long>(x)) / Rational(static_cast<long>(y));
        if (d[b] == 0) {
          d[b] = db;
          queue.push_back(b);
          component.push_back(b);
        } else if (d[b] != db) {
          throw std::invalid_argument("principal part is not skew-symmetrizable");
        }
      }
    }
    Integer l = 1, g = 0;
    for (size_t a : component) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d[a].get_den_mpz_t());
    for (size_t a : component) {
      d[a] *= l;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d[a].get_num_mpz_t());
    }
    for (size_t a : component) d[a] /= g;
  }
  symmetrizer_.clear();
  for (const auto& q : d) symmetrizer_.push_back(to_int64(q.get_num()));
  full_rank_ = rank(rows_) == nu;
}

std::optional<size_t> ExchangeMatrix::row_of(size_t s) const {
  auto it = std::lower_bound(unfrozen_.begin(), unfrozen_.end(), s);
  if (it == unfrozen_.end() || *it != s) return std::nullopt;
  return static_cast<size_t>(it - unfrozen_.begin());
}

int64_t ExchangeMatrix::entry(size_t s, size_t t) const {
  const auto r = row_of(s);
  if (!r) throw std::out_of_range("row index is frozen");
  if (t < 1 || t > m_) throw std::out_of_range("column index out of range");
  return rows_[*r][t - 1];
}

std::vector<size_t> next_occurrence(const Word& word) {
  const size_t m = word.size();
  std::vector<size_t> plus(m, m + 1);
  for (size_t k = 0; k < m; ++k)
    for (size_t j = k + 1; j < m; ++j)
      if (word[j] == word[k]) {
        plus[k] = j + 1;
        break;
      }
  return plus;
}

ExchangeMatrix build_exchange_from_word(const RootDatum& datum, const Word& word) {
  if (!is_reduced(datum, word)) throw std::invalid_argument("word is not reduced");
  const size_t m = word.size();
  const std::vector<size_t> plus = next_occurrence(word);
  std::vector<size_t> unfrozen;
  for (size_t j = 1; j <= m; ++j)
    if (plus[j - 1] != m + 1) unfrozen.push_back(j);
  IntMatrix rows;
  for (size_t s : unfrozen) {
    IntVec row(m, 0);
    const size_t sp = plus[s - 1];
    for (size_t t = 1; t <= m; ++t) {
      const size_t tp = plus[t - 1];
      const int64_t c = datum.c(word[t - 1], word[s - 1]);
      if (sp == t)
        row[t - 1] = 1;
      else if (s == tp)
        row[t - 1] = -1;
      else if (s < t && t < sp && sp < tp)
        row[t - 1] = c;
      else if (t < s && s < tp && tp < sp)
        row[t - 1] = -c;
    }
    rows.push_back(std::move(row));
  }
  return ExchangeMatrix(m, std::move(unfrozen), std::move(rows));
}

ExchangeMatrix mutate_matrix(const ExchangeMatrix& eps, size_t k) {
  check_direction(eps, k);
  const size_t rk = *eps.row_of(k);
  IntMatrix rows = eps.rows();
  for (size_t r = 0; r < rows.size(); ++r) {
    const size_t i = eps.unfrozen()[r];
    const int64_t eik = eps.rows()[r][k - 1];
    for (size_t j = 1; j <= eps.size(); ++j) {
      const int64_t eij = eps.rows()[r][j - 1];
      if (i == k || j == k)
        rows[r][j - 1] = -eij;
      else
        rows[r][j - 1] = eij + sign(eik) * positive_part(eik * eps.rows()[rk][j - 1]);
    }
  }
  return ExchangeMatrix(eps.size(), eps.unfrozen(), std::move(rows));
}

Seed initial_seed(const ExchangeMatrix& eps) {
  Seed s{eps, {}, {}};
  for (size_t j = 0; j < eps.size(); ++j) s.variables.push_back(RationalFunction::variable(eps.size(), j));
  return s;
}

Seed mutate_seed(const Seed& seed, size_t k) {
  check_direction(seed.matrix, k);
  const size_t m = seed.matrix.size();
  const RationalFunction one(Polynomial::constant(m, 1));
  RationalFunction up = one, down = one;
  for (size_t l = 1; l <= m; ++l) {
    const int64_t e = seed.matrix.entry(k, l);
    if (e > 0) up = up * seed.variables[l - 1].pow(static_cast<unsigned>(e));
    if (e < 0) down = down * seed.variables[l - 1].pow(static_cast<unsigned>(-e));
  }
  Seed out{mutate_matrix(seed.matrix, k), seed.variables, seed.provenance};
  out.variables[k - 1] = (up + down) / seed.variables[k - 1];
  if (!out.provenance.empty() && out.provenance.back() == k)
    out.provenance.pop_back();
  else
    out.provenance.push_back(k);
  return out;
}

Seed mutate_seed(const Seed& seed, const std::vector<size_t>& word) {
  Seed s = seed;
  for (size_t k : word) s = mutate_seed(s, k);
  return s;
}

std::vector<std::string> variable_names(size_t m) {
  std::vector<std::string> names;
  for (size_t j = 1; j <= m; ++j) names.push_back("A_" + std::to_string(j));
  return names;
}

bool dominance_leq(const IntVec& a, const IntVec& a_prime, const ExchangeMatrix& eps) {
  if (a.size() != eps.size() || a_prime.size() != eps.size())
    throw std::invalid_argument("exponent vectors must have one entry per index in J");
  if (!eps.full_rank())
    throw std::domain_error("dominance order needs an exchange matrix of full rank");
  IntVec d(a.size());
  for (size_t j = 0; j < a.size(); ++j) d[j] = a[j] - a_prime[j];
  return nonnegative_combination(eps, d).has_value();
}

RefinedOrder::RefinedOrder(const ExchangeMatrix& eps, Tiebreak tiebreak)
    : functional_(eps.size(), Rational(0)), tiebreak_(tiebreak) {
  if (!eps.full_rank()) throw std::domain_error("refined order needs an exchange matrix of full rank");
  const size_t nu = eps.unfrozen().size();
  if (nu == 0) return;
  // Minimum-norm x with eps x = r for a positive r.
  const RatMatrix e = to_rational(eps.rows());
  RatMatrix gram(nu, RatVec(nu, Rational(0)));
  for (size_t a = 0; a < nu; ++a)
    for (size_t b = 0; b < nu; ++b)
      for (size_t j = 0; j < eps.size(); ++j) gram[a][b] += e[a][j] * e[b][j];
  RatVec r(nu);
  for (size_t a = 0; a < nu; ++a) r[a] = tiebreak == Tiebreak::Weighted ? Rational(static_cast<long>(a + 1)) : 1;
  const RatVec y = *solve(gram, r);
  for (size_t a = 0; a < nu; ++a)
    for (size_t j = 0; j < eps.size(); ++j) functional_[j] += y[a] * e[a][j];
}

bool RefinedOrder::less(const IntVec& a, const IntVec& b) const {
  Rational s = 0;
  for (size_t j = 0; j < a.size(); ++j)
    if (a[j] != b[j]) s += functional_[j] * Rational(static_cast<long>(a[j] - b[j]));
  if (s != 0) return s < 0;
  if (tiebreak_ == Tiebreak::RevLex) {
    for (size_t j = a.size(); j-- > 0;)
      if (a[j] != b[j]) return a[j] > b[j];
    return false;
  }
  return a < b;
}

namespace {

IntVec lowest_exponent(const Polynomial& p, const RefinedOrder& order) {
  std::optional<IntVec> best;
  for (const auto& [m, c] : p.terms()) {
    IntVec e(m.begin(), m.end());
    if (!best || order.less(e, *best)) best = std::move(e);
  }
  return *best;
}

}  // namespace

IntVec lowest_term_valuation(const RationalFunction& f, const RefinedOrder& order) {
  if (f.is_zero()) throw std::invalid_argument("the valuation of zero is undefined");
  IntVec a = lowest_exponent(f.numerator(), order);
  const IntVec b = lowest_exponent(f.denominator(), order);
  for (size_t j = 0; j < a.size(); ++j) a[j] -= b[j];
  return a;
}

IntVec lowest_term_valuation(const RationalFunction& f, const ExchangeMatrix& eps, Tiebreak tiebreak) {
  if (f.nvars() != eps.size()) throw std::invalid_argument("expression and exchange matrix sizes differ");
  return lowest_term_valuation(f, RefinedOrder(eps, tiebreak));
}

GVectorResult g_vector(const RationalFunction& f, const ExchangeMatrix& eps) {
  GVectorResult out;
  if (f.is_zero() || !f.is_laurent()) return out;
  const IntVec g = lowest_term_valuation(f, eps);
  for (const auto& [e, c] : f.laurent_terms()) {
    IntVec d(e.size());
    for (size_t j = 0; j < e.size(); ++j) d[j] = e[j] - g[j];
    auto a = nonnegative_combination(eps, d);
    if (!a) {
      out.expansion.clear();
      return out;
    }
    out.expansion.emplace(std::move(*a), c);
  }
  out.g = g;
  const auto c0 = out.expansion.find(IntVec(eps.unfrozen().size(), 0));
  out.kind = c0->second == 1 ? GVectorResult::Kind::Pointed : GVectorResult::Kind::WeaklyPointed;
  return out;
}

IntVec tropical_mutate(const IntVec& g, const ExchangeMatrix& eps, size_t k) {
  check_direction(eps, k);
  if (g.size() != eps.size()) throw std::invalid_argument("vector must have one entry per index in J");
  IntVec out(g);
  const int64_t gk = g[k - 1];
  for (size_t j = 1; j <= g.size(); ++j) {
    if (j == k) continue;
    const int64_t e = eps.entry(k, j);
    out[j - 1] = g[j - 1] + positive_part(-e) * gk + e * positive_part(gk);
  }
  out[k - 1] = -gk;
  return out;
}

IntVec tropical_mutate(IntVec g, ExchangeMatrix eps, const std::vector<size_t>& word) {
  for (size_t k : word) {
    g = tropical_mutate(g, eps, k);
    eps = mutate_matrix(eps, k);
  }
  return g;
}

UpsilonMatrix upsilon_matrix(const RootDatum& datum, const Word& word) {
  if (!is_reduced(datum, word)) throw std::invalid_argument("word is not reduced");
  Weight r = datum.rho();
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = datum.reflect(*it, r);
  if (std::any_of(r.coords.begin(), r.coords.end(), [](int64_t x) { return x >= 0; }))
    throw std::invalid_argument("word is not a reduced word of the longest element");
  const size_t n = word.size();
  UpsilonMatrix u;
  u.m.assign(n, IntVec(n, 0));
  for (size_t k = 1; k <= n; ++k) {
    Weight mu = datum.fundamental_weight(word[k - 1]);
    for (size_t l = k; l >= 1; --l) {
      u.m[k - 1][l - 1] = mu.coords[word[l - 1] - 1];
      mu = datum.reflect(word[l - 1], mu);
    }
  }
  const RatMatrix rm = to_rational(u.m);
  const Rational det = determinant(rm);
  if (det != 1 && det != -1) throw InternalError("transfer matrix is not unimodular");
  const RatMatrix inv = *inverse(rm);
  for (const auto& row : inv) {
    IntVec r2;
    for (const auto& q : row) r2.push_back(to_int64(q.get_num()));
    u.inverse.push_back(std::move(r2));
  }
  return u;
}

std::vector<IntVec> transport_points(const std::vector<IntVec>& points, const ExchangeMatrix& eps,
                                     const std::vector<size_t>& word) {
  std::vector<IntVec> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(tropical_mutate(p, eps, word));
  std::sort(out.begin(), out.end());
  return out;
}

TransportResult transport_polytope(const RationalPolytope& p, const ExchangeMatrix& eps,
                                   const std::vector<size_t>& word) {
  TransportResult out;
  out.points = transport_points(lattice_points(p), eps, word);
  out.polytope = convex_hull(out.points);
  out.convex_closed = lattice_points(out.polytope) == out.points;
  out.matrix = eps;
  for (size_t k : word) out.matrix = mutate_matrix(out.matrix, k);
  return out;
}

ClusterPolytope cluster_polytope(CrystalCache& cache, const Weight& lambda, int max_level) {
  const WordContext& ctx = cache.context();
  const ParametrizedPolytope sp = parametrized_polytope(cache, lambda, Coordinates::String, max_level);
  ClusterPolytope out;
  out.upsilon = upsilon_matrix(ctx.datum(), ctx.word());
  out.matrix = build_exchange_from_word(ctx.datum(), ctx.word());
  out.saturated = sp.saturated;
  out.warning = sp.warning;
  const RatMatrix inv = to_rational(out.upsilon.inverse);
  std::vector<RatVec> verts;
  for (const auto& v : sp.polytope.vertices()) {
    RatVec w(v.size(), Rational(0));
    for (size_t k = 0; k < v.size(); ++k)
      for (size_t l = 0; l < v.size(); ++l) w[l] += v[k] * inv[k][l];
    verts.push_back(std::move(w));
  }
  out.polytope = convex_hull(std::move(verts));
  for (const auto& p : sp.points) out.points.push_back(out.upsilon.invert(p));
  std::sort(out.points.begin(), out.points.end());
  if (out.saturated && lattice_points(out.polytope) != out.points)
    throw InternalError("lattice points of the cluster polytope differ from the g-vector set");
  return out;
}

ClusterPolytope cluster_polytope(const WordContext& ctx, const Weight& lambda, int max_level) {
  CrystalCache cache(ctx);
  return cluster_polytope(cache, lambda, max_level);
}

std::vector<std::pair<size_t, size_t>> quiver_arrows(const ExchangeMatrix& eps) {
  std::vector<std::pair<size_t, size_t>> out;
  for (size_t s = 1; s <= eps.size(); ++s)
    for (size_t t = 1; t <= eps.size(); ++t) {
      if (s == t) continue;
      const bool su = eps.is_unfrozen(s), tu = eps.is_unfrozen(t);
      if ((su && eps.entry(s, t) < 0) || (!su && tu && eps.entry(t, s) > 0)) out.emplace_back(s, t);
    }
  return out;
}

std::string quiver_dot(const ExchangeMatrix& eps) {
  std::ostringstream os;
  os << "digraph quiver {\n";
  for (size_t s = 1; s <= eps.size(); ++s)
    os << "  " << s << " [shape=" << (eps.is_unfrozen(s) ? "circle" : "box") << "];\n";
  for (const auto& [s, t] : quiver_arrows(eps)) {
    const int64_t a = eps.is_unfrozen(s) ? eps.entry(s, t) : -eps.entry(t, s);
    const int64_t b = eps.is_unfrozen(t) ? eps.entry(t, s) : -a;
    os << "  " << s << " -> " << t;
    if (a != -1 || b != 1) os << " [label=\"" << -a << "," << b << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace stdeg
