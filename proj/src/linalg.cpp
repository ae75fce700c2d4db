#include "stdeg/linalg.hpp"

#include <stdexcept>

namespace stdeg {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("not a rational number: '" + text + "'");
  q.canonicalize();
  return q;
}

RatVec to_rational(const IntVec& v) {
  RatVec out;
  out.reserve(v.size());
  for (int64_t x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out;
  out.reserve(m.size());
  for (const auto& row : m) out.push_back(to_rational(row));
  return out;
}

int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits: " + z.get_str());
  return z.get_si();
}

RowEchelon row_reduce(RatMatrix m) {
  RowEchelon out;
  if (m.empty()) return out;
  const size_t cols = m.front().size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < m.size(); ++c) {
    size_t pivot = r;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[r], m[pivot]);
    const Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

size_t rank(const RatMatrix& m) { return row_reduce(m).pivots.size(); }
size_t rank(const IntMatrix& m) { return rank(to_rational(m)); }

std::vector<RatVec> nullspace(const RatMatrix& m, size_t columns) {
  const RowEchelon e = row_reduce(m);
  std::vector<bool> is_pivot(columns, false);
  for (size_t p : e.pivots) is_pivot[p] = true;
  std::vector<RatVec> basis;
  for (size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    RatVec x(columns, 0);
    x[free] = 1;
    for (size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = -e.rows[r][free];
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<RatVec> solve(const RatMatrix& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("solve: dimension mismatch");
  if (a.empty()) return RatVec{};
  const size_t cols = a.front().size();
  RatMatrix aug = a;
  for (size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  const RowEchelon e = row_reduce(std::move(aug));
  RatVec x(cols, 0);
  for (size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == cols) return std::nullopt;
    x[e.pivots[r]] = e.rows[r][cols];
  }
  return x;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  const size_t n = m.size();
  RatMatrix aug = m;
  for (size_t i = 0; i < n; ++i) {
    if (aug[i].size() != n) throw std::invalid_argument("inverse: matrix is not square");
    for (size_t j = 0; j < n; ++j) aug[i].push_back(i == j ? 1 : 0);
  }
  const RowEchelon e = row_reduce(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  RatMatrix inv(n);
  for (size_t i = 0; i < n; ++i) inv[i].assign(e.rows[i].begin() + n, e.rows[i].end());
  return inv;
}

Rational determinant(RatMatrix m) {
  const size_t n = m.size();
  Rational det = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t pivot = c;
    while (pivot < n && m[pivot][c] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[c][c];
      for (size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

BigVec primitive_integer(const RatVec& v) {
  Integer lcm = 1;
  for (const auto& q : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
  BigVec out;
  out.reserve(v.size());
  for (const auto& q : v) out.push_back(Integer(q * lcm));
  return primitive_integer(std::move(out));
}

BigVec primitive_integer(BigVec v) {
  Integer g = 0;
  for (const auto& z : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
  if (g == 0) throw std::invalid_argument("primitive_integer: zero vector");
  if (g != 1)
    for (auto& z : v) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), g.get_mpz_t());
  return v;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b.front().size();
  IntMatrix c(n, IntVec(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

IntVec multiply(const IntMatrix& a, const IntVec& x) {
  IntVec y(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  return y;
}

IntVec multiply(const IntVec& x, const IntMatrix& a) {
  const size_t m = a.empty() ? 0 : a.front().size();
  IntVec y(m, 0);
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (size_t j = 0; j < m; ++j) y[j] += x[i] * a[i][j];
  }
  return y;
}

IntMatrix identity_matrix(size_t n) {
  IntMatrix m(n, IntVec(n, 0));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

}  // namespace stdeg
