#include "stdeg/rootdata.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace stdeg {

bool Weight::is_dominant() const {
  return std::all_of(coords.begin(), coords.end(), [](int64_t x) { return x >= 0; });
}

bool Weight::is_regular_dominant() const {
  return std::all_of(coords.begin(), coords.end(), [](int64_t x) { return x > 0; });
}

Weight Weight::operator+(const Weight& o) const {
  Weight r = *this;
  for (size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
  return r;
}

Weight Weight::operator-(const Weight& o) const {
  Weight r = *this;
  for (size_t i = 0; i < coords.size(); ++i) r.coords[i] -= o.coords[i];
  return r;
}

Weight Weight::operator*(int64_t k) const {
  Weight r = *this;
  for (auto& x : r.coords) x *= k;
  return r;
}

std::string to_string(const Weight& w) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < w.coords.size(); ++i) os << (i ? "," : "") << w.coords[i];
  os << ')';
  return os.str();
}

namespace {

void link(IntMatrix& c, int i, int j, int64_t cij = -1, int64_t cji = -1) {
  c[i - 1][j - 1] = cij;
  c[j - 1][i - 1] = cji;
}

IntMatrix cartan_matrix(char series, int n) {
  IntMatrix c(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  switch (series) {
    case 'A':
      for (int i = 1; i < n; ++i) link(c, i, i + 1);
      break;
    case 'B':
      for (int i = 1; i < n - 1; ++i) link(c, i, i + 1);
      link(c, n - 1, n, -1, -2);  // alpha_n short
      break;
    case 'C':
      for (int i = 1; i < n - 1; ++i) link(c, i, i + 1);
      link(c, n - 1, n, -2, -1);  // alpha_n long
      break;
    case 'D':
      for (int i = 1; i < n - 1; ++i) link(c, i, i + 1);
      link(c, n - 2, n);
      break;
    case 'E':
      link(c, 1, 3);
      link(c, 2, 4);
      for (int i = 3; i < n; ++i) link(c, i, i + 1);
      break;
    case 'F':
      link(c, 1, 2);
      link(c, 2, 3, -1, -2);
      link(c, 3, 4);
      break;
    case 'G':
      link(c, 1, 2, -3, -1);
      break;
    default:
      break;
  }
  return c;
}

bool valid_pair(char series, int n) {
  switch (series) {
    case 'A': return n >= 1;
    case 'B': return n >= 2;
    case 'C': return n >= 3;
    case 'D': return n >= 4;
    case 'E': return n >= 6 && n <= 8;
    case 'F': return n == 4;
    case 'G': return n == 2;
    default: return false;
  }
}

// Smallest positive integers d_i with d_i c_{ij} = d_j c_{ji}.
IntVec find_symmetrizers(const IntMatrix& c) {
  const size_t n = c.size();
  RatVec d(n, 0);
  d[0] = 1;
  std::vector<size_t> stack{0};
  while (!stack.empty()) {
    const size_t i = stack.back();
    stack.pop_back();
    for (size_t j = 0; j < n; ++j) {
      if (i == j || c[i][j] == 0 || d[j] != 0) continue;
      d[j] = d[i] * Rational(static_cast<long>(c[i][j]), 1) / Rational(static_cast<long>(c[j][i]), 1);
      stack.push_back(j);
    }
  }
  for (size_t i = 0; i < n; ++i)
    if (d[i] == 0) throw std::invalid_argument("Cartan matrix is not connected");
  BigVec z = primitive_integer(d);
  IntVec out;
  for (const auto& x : z) out.push_back(to_int64(x));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (out[i] * c[i][j] != out[j] * c[j][i]) throw std::invalid_argument("Cartan matrix is not symmetrizable");
  return out;
}

}  // namespace

RootDatum::RootDatum(char series, int rank, IntMatrix cartan)
    : series_(series), rank_(rank), cartan_(std::move(cartan)) {
  symmetrizers_ = find_symmetrizers(cartan_);
  // Positive definiteness of (d_i c_ij) via leading principal minors.
  for (int k = 1; k <= rank_; ++k) {
    RatMatrix m(k, RatVec(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) m[i][j] = Rational(static_cast<long>(symmetrizers_[i] * cartan_[i][j]), 1);
    if (determinant(m) <= 0) throw std::invalid_argument("Cartan matrix is not of finite type");
  }
  inverse_cartan_ = *inverse(to_rational(cartan_));
}

RootDatum RootDatum::build(char series, int rank) {
  if (!valid_pair(series, rank)) {
    std::ostringstream os;
    os << "invalid finite type " << series << "_" << rank
       << " (valid: A_n n>=1, B_n n>=2, C_n n>=3, D_n n>=4, E_6..E_8, F_4, G_2)";
    throw std::invalid_argument(os.str());
  }
  return RootDatum(series, rank, cartan_matrix(series, rank));
}

std::string RootDatum::name() const { return std::string(1, series_) + "_" + std::to_string(rank_); }

void RootDatum::check_color(int i) const {
  if (i < 1 || i > rank_)
    throw std::out_of_range("color " + std::to_string(i) + " out of range 1.." + std::to_string(rank_));
}

Weight RootDatum::simple_root(int i) const {
  check_color(i);
  Weight a = Weight::zero(rank_);
  for (int k = 0; k < rank_; ++k) a.coords[k] = cartan_[k][i - 1];
  return a;
}

Weight RootDatum::fundamental_weight(int i) const {
  check_color(i);
  Weight w = Weight::zero(rank_);
  w.coords[i - 1] = 1;
  return w;
}

Weight RootDatum::rho() const { return Weight(IntVec(rank_, 1)); }

Weight RootDatum::reflect(int i, const Weight& lambda) const {
  check_color(i);
  if (static_cast<int>(lambda.rank()) != rank_) throw std::invalid_argument("weight rank mismatch");
  Weight r = lambda;
  const int64_t li = lambda.coords[i - 1];
  for (int k = 0; k < rank_; ++k) r.coords[k] -= li * cartan_[k][i - 1];
  return r;
}

IntMatrix RootDatum::reflection_matrix(int i) const {
  check_color(i);
  IntMatrix s = identity_matrix(rank_);
  for (int k = 0; k < rank_; ++k) s[k][i - 1] -= cartan_[k][i - 1];
  return s;
}

RatVec RootDatum::root_coordinates(const Weight& lambda) const {
  RatVec out(rank_, 0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) out[i] += inverse_cartan_[i][j] * static_cast<long>(lambda.coords[j]);
  return out;
}

Rational RootDatum::inner_product(const Weight& a, const Weight& b) const {
  // (a, alpha_j) = d_j <a, h_j>, expand b in simple roots.
  const RatVec rb = root_coordinates(b);
  Rational s = 0;
  for (int j = 0; j < rank_; ++j) s += rb[j] * static_cast<long>(symmetrizers_[j] * a.coords[j]);
  return s;
}

namespace {

// Left-descent walk from the weight w(rho): repeatedly strip the smallest
// left descent; yields the lexicographically minimal reduced word.
Word lexmin_word_from_rho(const RootDatum& datum, Weight mu) {
  Word word;
  for (;;) {
    int descent = 0;
    for (int i = 1; i <= datum.rank(); ++i)
      if (mu.coords[i - 1] < 0) {
        descent = i;
        break;
      }
    if (descent == 0) break;
    word.push_back(descent);
    mu = datum.reflect(descent, mu);
  }
  return word;
}

IntMatrix action_of_word(const RootDatum& datum, const Word& word) {
  IntMatrix m = identity_matrix(datum.rank());
  for (auto it = word.rbegin(); it != word.rend(); ++it) m = multiply(datum.reflection_matrix(*it), m);
  return m;
}

}  // namespace

WeylElement weyl_from_word(const RootDatum& datum, const Word& word) {
  for (int i : word) datum.check_color(i);
  const IntMatrix action = action_of_word(datum, word);
  const Weight mu(multiply(action, datum.rho().coords));
  WeylElement w;
  w.word = lexmin_word_from_rho(datum, mu);
  w.action = action;
  return w;
}

WeylElement weyl_identity(const RootDatum& datum) { return WeylElement{{}, identity_matrix(datum.rank())}; }

WeylElement weyl_multiply(const RootDatum& datum, const WeylElement& a, const WeylElement& b) {
  Word w = a.word;
  w.insert(w.end(), b.word.begin(), b.word.end());
  return weyl_from_word(datum, w);
}

WeylElement weyl_inverse(const RootDatum& datum, const WeylElement& w) {
  return weyl_from_word(datum, Word(w.word.rbegin(), w.word.rend()));
}

bool is_reduced(const RootDatum& datum, const Word& word) {
  return weyl_from_word(datum, word).length() == word.size();
}

std::vector<int> left_descents(const RootDatum& datum, const WeylElement& w) {
  const IntVec mu = multiply(w.action, datum.rho().coords);
  std::vector<int> out;
  for (int i = 1; i <= datum.rank(); ++i)
    if (mu[i - 1] < 0) out.push_back(i);
  return out;
}

bool bruhat_leq_lifting(const RootDatum& datum, const WeylElement& v, const WeylElement& w) {
  if (v.length() > w.length()) return false;
  if (w.length() == 0) return v.length() == 0;
  const int s = w.word.front();
  const WeylElement sw = weyl_from_word(datum, Word(w.word.begin() + 1, w.word.end()));
  Word sv_word{s};
  sv_word.insert(sv_word.end(), v.word.begin(), v.word.end());
  const WeylElement sv = weyl_from_word(datum, sv_word);
  if (sv.length() < v.length()) return bruhat_leq_lifting(datum, sv, sw);
  return bruhat_leq_lifting(datum, v, sw);
}

// ---------------------------------------------------------------------------

WeylGroup enumerate_group(const RootDatum& datum, size_t cap) {
  WeylGroup g(datum);
  const int n = datum.rank();

  // Breadth-first over lengths using w(rho) as a faithful key.
  std::vector<std::vector<Weight>> layers{{datum.rho()}};
  std::map<IntVec, size_t> seen{{datum.rho().coords, 0}};
  size_t total = 1;
  for (;;) {
    std::vector<Weight> next;
    for (const Weight& mu : layers.back())
      for (int i = 1; i <= n; ++i) {
        if (mu.coords[i - 1] <= 0) continue;  // i is a left descent
        Weight nu = datum.reflect(i, mu);
        if (seen.emplace(nu.coords, 0).second) {
          next.push_back(std::move(nu));
          if (++total > cap)
            throw CapExceeded("Weyl group of " + datum.name() + " exceeds cap of " + std::to_string(cap) +
                              " elements");
        }
      }
    if (next.empty()) break;
    layers.push_back(std::move(next));
  }

  std::map<IntVec, WeylElement> by_rho;
  by_rho.emplace(datum.rho().coords, weyl_identity(datum));
  for (size_t len = 1; len < layers.size(); ++len)
    for (const Weight& mu : layers[len]) {
      int j = 0;
      for (int i = 1; i <= n; ++i)
        if (mu.coords[i - 1] < 0) {
          j = i;
          break;
        }
      const WeylElement& shorter = by_rho.at(datum.reflect(j, mu).coords);
      WeylElement x;
      x.word = {j};
      x.word.insert(x.word.end(), shorter.word.begin(), shorter.word.end());
      x.action = multiply(datum.reflection_matrix(j), shorter.action);
      by_rho.emplace(mu.coords, std::move(x));
    }

  for (auto& [rho, w] : by_rho) g.elements_.push_back(std::move(w));
  std::sort(g.elements_.begin(), g.elements_.end(), [](const WeylElement& a, const WeylElement& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.word < b.word;
  });
  const IntVec rho = datum.rho().coords;
  for (size_t k = 0; k < g.elements_.size(); ++k) g.index_by_rho_[multiply(g.elements_[k].action, rho)] = k;

  g.left_mult_.assign(g.size(), std::vector<size_t>(n));
  g.inverse_.assign(g.size(), 0);
  for (size_t k = 0; k < g.size(); ++k) {
    const IntVec mu = multiply(g.elements_[k].action, rho);
    for (int i = 1; i <= n; ++i) g.left_mult_[k][i - 1] = g.index_by_rho_.at(datum.reflect(i, Weight(mu)).coords);
    size_t inv = 0;
    for (auto it = g.elements_[k].word.begin(); it != g.elements_[k].word.end(); ++it)
      inv = g.left_mult_[inv][*it - 1];
    g.inverse_[k] = inv;
  }

  // Reflections are the conjugates u s_i u^{-1}.
  g.reflection_.assign(g.size(), false);
  for (size_t u = 0; u < g.size(); ++u)
    for (int i = 1; i <= n; ++i) g.reflection_[g.multiply(g.multiply(u, g.left_mult_[0][i - 1]), g.inverse_[u])] = true;
  return g;
}

size_t WeylGroup::index_of(const WeylElement& w) const {
  const auto it = index_by_rho_.find(stdeg::multiply(w.action, datum_.rho().coords));
  if (it == index_by_rho_.end()) throw std::invalid_argument("element not in the enumerated group");
  return it->second;
}

size_t WeylGroup::multiply(size_t a, size_t b) const {
  // a b = s_{a_1} ... s_{a_k} b
  size_t r = b;
  const Word& w = elements_[a].word;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r = left_mult_[r][*it - 1];
  return r;
}

bool WeylGroup::is_reflection(size_t idx) const { return reflection_[idx]; }

const WeylGroup::BruhatCache& WeylGroup::bruhat() const {
  std::call_once(bruhat_->once, [this] {
    auto& cache = *bruhat_;
    const size_t n = size();
    const IntVec rho = datum_.rho().coords;
    std::vector<size_t> reflections;
    for (size_t t = 0; t < n; ++t)
      if (reflection_[t]) reflections.push_back(t);
    // v < w is a cover iff l(w) = l(v) + 1 and w v^{-1} is a reflection t,
    // i.e. v = t w, computed through the action matrices.
    cache.covers.assign(n, {});
    for (size_t w = 0; w < n; ++w) {
      const IntVec wrho = stdeg::multiply(elements_[w].action, rho);
      for (size_t t : reflections) {
        const size_t v = index_by_rho_.at(stdeg::multiply(elements_[t].action, wrho));
        if (elements_[v].length() + 1 == elements_[w].length()) cache.covers[w].push_back(v);
      }
      std::sort(cache.covers[w].begin(), cache.covers[w].end());
    }
    const size_t words = (n + 63) / 64;
    cache.below.assign(n, std::vector<uint64_t>(words, 0));
    for (size_t w = 0; w < n; ++w) {
      auto& bits = cache.below[w];
      bits[w / 64] |= uint64_t{1} << (w % 64);
      for (size_t v : cache.covers[w])
        for (size_t k = 0; k < words; ++k) bits[k] |= cache.below[v][k];
    }
  });
  return *bruhat_;
}

const std::vector<size_t>& WeylGroup::lower_covers(size_t w) const { return bruhat().covers.at(w); }

bool WeylGroup::bruhat_leq(size_t v, size_t w) const {
  const auto& below = bruhat().below.at(w);
  return (below[v / 64] >> (v % 64)) & 1;
}

bool WeylGroup::bruhat_leq(const WeylElement& v, const WeylElement& w) const {
  return bruhat_leq(index_of(v), index_of(w));
}

std::vector<std::pair<size_t, size_t>> WeylGroup::bruhat_pairs() const {
  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t w = 0; w < size(); ++w)
    for (size_t v = 0; v < size(); ++v)
      if (bruhat_leq(v, w)) pairs.emplace_back(v, w);
  std::sort(pairs.begin(), pairs.end(), [this](const auto& a, const auto& b) {
    const auto key = [this](const auto& p) {
      return std::tuple(elements_[p.first].length(), elements_[p.second].length(), p.first, p.second);
    };
    return key(a) < key(b);
  });
  return pairs;
}

std::vector<Word> WeylGroup::reduced_words(const WeylElement& w) const {
  std::vector<Word> out;
  Word prefix;
  const auto recurse = [&](auto&& self, size_t x) -> void {
    if (elements_[x].length() == 0) {
      out.push_back(prefix);
      return;
    }
    for (int i = 1; i <= datum_.rank(); ++i) {
      const size_t y = left_mult_[x][i - 1];
      if (elements_[y].length() >= elements_[x].length()) continue;
      prefix.push_back(i);
      self(self, y);
      prefix.pop_back();
    }
  };
  recurse(recurse, index_of(w));
  return out;
}

}  // namespace stdeg
