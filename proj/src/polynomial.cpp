#include "stdeg/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace stdeg {

Polynomial Polynomial::constant(size_t nvars, const Integer& c) {
  Polynomial p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(size_t nvars, size_t var) {
  Monomial m(nvars, 0);
  m.at(var) = 1;
  return monomial(m);
}

Polynomial Polynomial::monomial(const Monomial& m, const Integer& c) {
  Polynomial p(m.size());
  p.add_term(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const auto& m = terms_.begin()->first;
  return std::all_of(m.begin(), m.end(), [](int32_t e) { return e == 0; });
}

int32_t Polynomial::degree(size_t var) const {
  int32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

void Polynomial::add_term(const Monomial& m, const Integer& c) {
  if (m.size() != nvars_) throw std::invalid_argument("monomial has the wrong number of variables");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  r += o;
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r(nvars_);
  Monomial m(nvars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      for (size_t k = 0; k < nvars_; ++k) m[k] = ma[k] + mb[k];
      r.add_term(m, ca * cb);
    }
  return r;
}

Polynomial Polynomial::operator*(const Integer& c) const {
  if (c == 0) return Polynomial(nvars_);
  Polynomial r = *this;
  for (auto& [m, x] : r.terms_) x *= c;
  return r;
}

Polynomial Polynomial::times_monomial(const Monomial& mono) const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) {
    Monomial t = m;
    for (size_t k = 0; k < nvars_; ++k) t[k] += mono[k];
    r.terms_.emplace_hint(r.terms_.end(), std::move(t), c);
  }
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial r = constant(nvars_, 1);
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

Integer Polynomial::content() const {
  Integer g = 0;
  for (const auto& [m, c] : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

Monomial Polynomial::monomial_content() const {
  if (terms_.empty()) return Monomial(nvars_, 0);
  Monomial m = terms_.begin()->first;
  for (const auto& [t, c] : terms_)
    for (size_t k = 0; k < nvars_; ++k) m[k] = std::min(m[k], t[k]);
  return m;
}

Polynomial Polynomial::divide_by_monomial(const Monomial& mono) const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) {
    Monomial t = m;
    for (size_t k = 0; k < nvars_; ++k) {
      t[k] -= mono[k];
      if (t[k] < 0) throw std::domain_error("monomial does not divide polynomial");
    }
    r.terms_.emplace_hint(r.terms_.end(), std::move(t), c);
  }
  return r;
}

Polynomial Polynomial::divide_by_integer(const Integer& d) const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) {
    if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t())) throw std::domain_error("integer does not divide polynomial");
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
  }
  return r;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& o) const {
  if (o.is_zero()) throw std::domain_error("division by the zero polynomial");
  Polynomial q(nvars_), r = *this;
  const auto& [lm, lc] = o.leading();
  Monomial t(nvars_), bound(nvars_);
  for (size_t k = 0; k < nvars_; ++k) {
    bound[k] = degree(k) - o.degree(k);
    if (bound[k] < 0) return std::nullopt;
  }
  while (!r.is_zero()) {
    const auto& [rm, rc] = r.leading();
    for (size_t k = 0; k < nvars_; ++k) {
      t[k] = rm[k] - lm[k];
      if (t[k] < 0 || t[k] > bound[k]) return std::nullopt;
    }
    if (!mpz_divisible_p(rc.get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
    Integer c;
    mpz_divexact(c.get_mpz_t(), rc.get_mpz_t(), lc.get_mpz_t());
    q.add_term(t, c);
    r = r - o.times_monomial(t) * c;
  }
  return q;
}

Rational Polynomial::evaluate_unchecked(const RatVec& x) const {
  if (x.size() != nvars_) throw std::invalid_argument("evaluation point has the wrong dimension");
  Rational s = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (size_t k = 0; k < nvars_; ++k)
      for (int32_t e = 0; e < m[k]; ++e) t *= x[k];
    s += t;
  }
  return s;
}

std::optional<Rational> Polynomial::evaluate(const RatVec& x) const { return evaluate_unchecked(x); }

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string mono;
    for (size_t k = 0; k < nvars_; ++k) {
      if (m[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names.at(k);
      if (m[k] != 1) mono += "^" + std::to_string(m[k]);
    }
    const Integer a = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (mono.empty()) out += a.get_str();
    else if (a == 1) out += mono;
    else out += a.get_str() + "*" + mono;
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

Polynomial normalize_sign(Polynomial p) {
  if (!p.is_zero() && p.leading().second < 0) return -p;
  return p;
}

std::map<int32_t, Polynomial> coefficients_in(const Polynomial& p, size_t var) {
  std::map<int32_t, Polynomial> out;
  for (const auto& [m, c] : p.terms()) {
    Monomial t = m;
    t[var] = 0;
    auto it = out.try_emplace(m[var], p.nvars()).first;
    it->second.add_term(t, c);
  }
  return out;
}

// Univariate image in var after substituting x for the other variables.
std::vector<Rational> univariate_image(const Polynomial& p, size_t var, const RatVec& x) {
  std::vector<Rational> out(p.degree(var) + 1, Rational(0));
  for (const auto& [m, c] : p.terms()) {
    Rational t(c);
    for (size_t k = 0; k < m.size(); ++k)
      if (k != var)
        for (int32_t e = 0; e < m[k]; ++e) t *= x[k];
    out[m[var]] += t;
  }
  return out;
}

size_t univariate_gcd_degree(std::vector<Rational> a, std::vector<Rational> b) {
  auto trim = [](std::vector<Rational>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    if (a.size() < b.size()) std::swap(a, b);
    while (a.size() >= b.size() && !a.empty()) {
      const Rational q = a.back() / b.back();
      const size_t shift = a.size() - b.size();
      for (size_t k = 0; k < b.size(); ++k) a[shift + k] -= q * b[k];
      a.pop_back();
      trim(a);
    }
    std::swap(a, b);
  }
  return a.empty() ? 0 : a.size() - 1;
}

// True when some specialization proves gcd(a, b) has degree 0 in var: the
// image gcd bounds the true degree whenever both leading coefficients survive.
bool coprime_in(const Polynomial& a, const Polynomial& b, size_t var) {
  const size_t n = a.nvars();
  for (int attempt = 0; attempt < 3; ++attempt) {
    RatVec x(n);
    for (size_t k = 0; k < n; ++k) x[k] = Rational(static_cast<long>(2 + 3 * k + 7 * attempt + (k * k + attempt) % 5));
    const auto ia = univariate_image(a, var, x), ib = univariate_image(b, var, x);
    if (ia.back() == 0 || ib.back() == 0) continue;
    return univariate_gcd_degree(ia, ib) == 0;
  }
  return false;
}

Polynomial gcd_rec(const Polynomial& a, const Polynomial& b);

Polynomial content_in(const Polynomial& p, size_t var) {
  Polynomial g(p.nvars());
  for (const auto& [d, c] : coefficients_in(p, var)) {
    g = gcd_rec(g, c);
    if (g.is_constant() && g.leading().second == 1) break;
  }
  return g;
}

// Pseudo-remainder of a by b with respect to var.
Polynomial prem(Polynomial a, const Polynomial& b, size_t var) {
  const int32_t db = b.degree(var);
  const auto cb = coefficients_in(b, var);
  const Polynomial& lb = cb.rbegin()->second;
  for (;;) {
    if (a.is_zero()) return a;
    const int32_t da = a.degree(var);
    if (da < db) return a;
    const Polynomial la = coefficients_in(a, var).rbegin()->second;
    Monomial shift(a.nvars(), 0);
    shift[var] = da - db;
    a = a * lb - (b * la).times_monomial(shift);
  }
}

Polynomial gcd_rec(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return normalize_sign(b);
  if (b.is_zero()) return normalize_sign(a);
  const size_t n = a.nvars();
  const Monomial ma = a.monomial_content(), mb = b.monomial_content();
  if (std::any_of(ma.begin(), ma.end(), [](int32_t e) { return e > 0; }) ||
      std::any_of(mb.begin(), mb.end(), [](int32_t e) { return e > 0; })) {
    Monomial m(n);
    for (size_t k = 0; k < n; ++k) m[k] = std::min(ma[k], mb[k]);
    return gcd_rec(a.divide_by_monomial(ma), b.divide_by_monomial(mb)).times_monomial(m);
  }
  size_t var = n;
  for (size_t k = 0; k < n; ++k) {
    const int32_t d = std::max(a.degree(k), b.degree(k));
    if (d > 0 && (var == n || d < std::max(a.degree(var), b.degree(var)))) var = k;
  }
  if (var == n) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.leading().second.get_mpz_t(), b.leading().second.get_mpz_t());
    return Polynomial::constant(n, g);
  }
  if (a.degree(var) == 0) return gcd_rec(a, content_in(b, var));
  if (b.degree(var) == 0) return gcd_rec(content_in(a, var), b);
  if (coprime_in(a, b, var)) return gcd_rec(content_in(a, var), content_in(b, var));

  const Polynomial ca = content_in(a, var), cb = content_in(b, var);
  const Polynomial c = gcd_rec(ca, cb);
  Polynomial pa = *a.divide_exact(ca), pb = *b.divide_exact(cb);
  if (pa.degree(var) < pb.degree(var)) std::swap(pa, pb);
  while (!pb.is_zero()) {
    Polynomial r = prem(pa, pb, var);
    pa = std::move(pb);
    if (r.is_zero()) break;
    pb = *r.divide_exact(content_in(r, var));
  }
  return normalize_sign(c * pa);
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("gcd: variable count mismatch");
  return gcd_rec(a, b);
}

// ---------------------------------------------------------------------------

RationalFunction::RationalFunction(Polynomial p) : num_(std::move(p)), den_(Polynomial::constant(num_.nvars(), 1)) {
  canonicalize();
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_.nvars() != den_.nvars()) throw std::invalid_argument("numerator and denominator variable counts differ");
  canonicalize();
}

RationalFunction RationalFunction::variable(size_t nvars, size_t var) {
  return RationalFunction(Polynomial::variable(nvars, var));
}

RationalFunction RationalFunction::laurent_monomial(const std::vector<int64_t>& exponents) {
  const size_t n = exponents.size();
  Monomial up(n, 0), down(n, 0);
  for (size_t k = 0; k < n; ++k) {
    if (exponents[k] > 0) up[k] = static_cast<int32_t>(exponents[k]);
    if (exponents[k] < 0) down[k] = static_cast<int32_t>(-exponents[k]);
  }
  return RationalFunction(Polynomial::monomial(up), Polynomial::monomial(down));
}

void RationalFunction::canonicalize() {
  const size_t n = num_.nvars();
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Polynomial::constant(n, 1);
    return;
  }
  if (!den_.is_monomial()) {
    const Monomial dm = den_.monomial_content();
    const Polynomial core = den_.divide_by_monomial(dm);
    if (auto q = num_.divide_exact(core)) {
      num_ = std::move(*q);
      den_ = Polynomial::monomial(dm);
    } else {
      const Polynomial g = gcd(num_, den_);
      if (!g.is_constant()) {
        num_ = *num_.divide_exact(g);
        den_ = *den_.divide_exact(g);
      }
    }
  }
  Monomial mn = num_.monomial_content();
  const Monomial md = den_.monomial_content();
  for (size_t k = 0; k < n; ++k) mn[k] = std::min(mn[k], md[k]);
  if (std::any_of(mn.begin(), mn.end(), [](int32_t e) { return e > 0; })) {
    num_ = num_.divide_by_monomial(mn);
    den_ = den_.divide_by_monomial(mn);
  }
  Integer g;
  const Integer cn = num_.content(), cd = den_.content();
  mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (g != 1) {
    num_ = num_.divide_by_integer(g);
    den_ = den_.divide_by_integer(g);
  }
  if (den_.leading().second < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  if (den_ == o.den_) return RationalFunction(num_ + o.num_, den_);
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  if (den_ == o.den_) return RationalFunction(num_ - o.num_, den_);
  return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) throw std::domain_error("division by zero rational function");
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::pow(unsigned k) const { return RationalFunction(num_.pow(k), den_.pow(k)); }

std::optional<Rational> RationalFunction::evaluate(const RatVec& x) const {
  const Rational d = den_.evaluate_unchecked(x);
  if (d == 0) return std::nullopt;
  return num_.evaluate_unchecked(x) / d;
}

std::map<std::vector<int64_t>, Integer> RationalFunction::laurent_terms() const {
  if (!is_laurent()) throw std::logic_error("not a Laurent polynomial");
  const auto& [dm, dc] = den_.leading();
  std::map<std::vector<int64_t>, Integer> out;
  for (const auto& [m, c] : num_.terms()) {
    std::vector<int64_t> e(m.size());
    for (size_t k = 0; k < m.size(); ++k) e[k] = m[k] - dm[k];
    if (!mpz_divisible_p(c.get_mpz_t(), dc.get_mpz_t()))
      throw std::logic_error("Laurent polynomial with non-integral coefficients");
    Integer q;
    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), dc.get_mpz_t());
    out.emplace(std::move(e), q);
  }
  return out;
}

std::string RationalFunction::to_string(const std::vector<std::string>& names) const {
  if (den_.is_constant() && den_.leading().second == 1) return num_.to_string(names);
  const std::string n = num_.size() > 1 ? "(" + num_.to_string(names) + ")" : num_.to_string(names);
  const std::string d = den_.size() > 1 || den_.leading().second != 1 ? "(" + den_.to_string(names) + ")"
                                                                       : den_.to_string(names);
  return n + "/" + d;
}

}  // namespace stdeg
