#include "stdeg/zcrystal.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace stdeg {

WordContext::WordContext(RootDatum datum, Word word, ExtensionPolicy policy)
    : datum_(std::move(datum)), word_(std::move(word)), policy_(policy) {
  const WeylElement w = weyl_from_word(datum_, word_);
  if (w.length() != word_.size()) throw std::invalid_argument("word is not reduced");
  const IntVec mu = multiply(w.action, datum_.rho().coords);
  if (!std::all_of(mu.begin(), mu.end(), [](int64_t x) { return x < 0; }))
    throw std::invalid_argument("word does not evaluate to the longest element");

  const int n = datum_.rank();
  const size_t N = word_.size();
  colors_.resize(N);
  for (size_t k = 1; k <= N; ++k) colors_[k - 1] = word_[N - k];
  // Extension: each color at least twice past N, never repeating a neighbour
  // (rank one has a single color, where the no-repeat rule cannot hold).
  int prev = N ? colors_.back() : 1;
  for (int step = 0; step < 2 * n + 1; ++step) {
    int next = policy_ == ExtensionPolicy::Cyclic ? prev % n + 1 : (prev + n - 2) % n + 1;
    colors_.push_back(next);
    prev = next;
  }
}

namespace {

struct Sigma {
  std::vector<int64_t> per_position;  // sigma_k for k = 1..N
};

Sigma compute_sigma(const WordContext& ctx, const ZSequence& a) {
  const size_t N = ctx.length();
  if (a.entries.size() != N) throw std::invalid_argument("ZSequence length does not match the word");
  const RootDatum& datum = ctx.datum();
  const int n = datum.rank();
  std::vector<int64_t> acc(n, 0);  // acc[c-1] = sum_{l > k} c_{c, j_l} a_l
  Sigma s;
  s.per_position.assign(N, 0);
  for (size_t k = N; k >= 1; --k) {
    const int jk = ctx.color_at(k);
    const int64_t ak = a.entries[k - 1];
    s.per_position[k - 1] = ak + acc[jk - 1];
    if (ak != 0)
      for (int c = 1; c <= n; ++c) acc[c - 1] += datum.c(c, jk) * ak;
  }
  return s;
}

// sigma^{(i)}; positions beyond N all carry sigma = 0 and every color occurs
// there, so the maximum is at least 0.
int64_t sigma_max(const WordContext& ctx, const Sigma& s, int color) {
  int64_t best = 0;
  for (size_t k = 1; k <= ctx.length(); ++k)
    if (ctx.color_at(k) == color) best = std::max(best, s.per_position[k - 1]);
  return best;
}

}  // namespace

int64_t zinf_epsilon(const WordContext& ctx, const ZSequence& a, int color) {
  ctx.datum().check_color(color);
  return sigma_max(ctx, compute_sigma(ctx, a), color);
}

Weight zinf_weight(const WordContext& ctx, const ZSequence& a) {
  const RootDatum& datum = ctx.datum();
  Weight wt = Weight::zero(datum.rank());
  for (size_t k = 1; k <= ctx.length(); ++k) {
    const int64_t ak = a.entries[k - 1];
    if (ak == 0) continue;
    wt = wt - datum.simple_root(ctx.color_at(k)) * ak;
  }
  return wt;
}

std::optional<ZSequence> zinf_apply(const WordContext& ctx, const ZSequence& a, int color, Direction direction) {
  ctx.datum().check_color(color);
  const Sigma s = compute_sigma(ctx, a);
  const int64_t top = sigma_max(ctx, s, color);
  const size_t N = ctx.length();
  if (direction == Direction::Raise) {
    if (top <= 0) return std::nullopt;
    for (size_t k = N; k >= 1; --k)
      if (ctx.color_at(k) == color && s.per_position[k - 1] == top) {
        ZSequence out = a;
        --out.entries[k - 1];
        return out;
      }
    throw InternalError("raise: maximizing position not found");
  }
  for (size_t k = 1; k <= N; ++k)
    if (ctx.color_at(k) == color && s.per_position[k - 1] == top) {
      ZSequence out = a;
      ++out.entries[k - 1];
      return out;
    }
  // min M^{(i)} lies beyond N: not an element of the image of B(infinity).
  throw InternalError("position overflow");
}

// ---------------------------------------------------------------------------

std::optional<size_t> LambdaCrystal::find(const ZSequence& seq) const {
  const auto it = std::lower_bound(elements_.begin(), elements_.end(), seq,
                                   [](const Element& el, const ZSequence& s) { return el.seq < s; });
  if (it == elements_.end() || it->seq != seq) return std::nullopt;
  return static_cast<size_t>(it - elements_.begin());
}

LambdaCrystal generate_B_lambda(const WordContext& ctx, const Weight& lambda, size_t cap) {
  const RootDatum& datum = ctx.datum();
  const int n = datum.rank();
  if (static_cast<int>(lambda.rank()) != n) throw std::invalid_argument("weight rank mismatch");
  if (!lambda.is_dominant()) throw std::invalid_argument("highest weight " + to_string(lambda) + " is not dominant");

  LambdaCrystal crystal(ctx, lambda);
  std::map<ZSequence, size_t> index;
  std::vector<LambdaCrystal::Element> found;
  std::vector<std::vector<size_t>> f_edges;

  const auto add = [&](ZSequence seq) -> size_t {
    auto [it, inserted] = index.emplace(seq, found.size());
    if (!inserted) return it->second;
    if (found.size() >= cap)
      throw CapExceeded("crystal B" + to_string(lambda) + " exceeds cap of " + std::to_string(cap) + " elements");
    LambdaCrystal::Element el;
    el.seq = std::move(seq);
    el.wt = lambda + zinf_weight(ctx, el.seq);
    const Sigma s = compute_sigma(ctx, el.seq);
    for (int i = 1; i <= n; ++i) {
      const int64_t eps = sigma_max(ctx, s, i);
      el.eps.push_back(eps);
      el.phi.push_back(eps + el.wt.coords[i - 1]);
    }
    found.push_back(std::move(el));
    f_edges.emplace_back(n, LambdaCrystal::npos);
    return found.size() - 1;
  };

  add(ZSequence{std::vector<int64_t>(ctx.length(), 0)});
  for (size_t cur = 0; cur < found.size(); ++cur)
    for (int i = 1; i <= n; ++i) {
      if (found[cur].phi[i - 1] <= 0) continue;
      auto next = zinf_apply(ctx, found[cur].seq, i, Direction::Lower);
      const size_t to = add(std::move(*next));
      f_edges[cur][i - 1] = to;
    }

  // Canonical order: sorted by sequence.
  std::vector<size_t> order(found.size());
  for (size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return found[a].seq < found[b].seq; });
  std::vector<size_t> rank_of(found.size());
  for (size_t k = 0; k < order.size(); ++k) rank_of[order[k]] = k;

  const size_t M = found.size();
  crystal.elements_.resize(M);
  crystal.f_.assign(M, std::vector<size_t>(n, LambdaCrystal::npos));
  crystal.e_.assign(M, std::vector<size_t>(n, LambdaCrystal::npos));
  for (size_t old = 0; old < M; ++old) {
    const size_t b = rank_of[old];
    crystal.elements_[b] = std::move(found[old]);
    for (int i = 1; i <= n; ++i) {
      const size_t to = f_edges[old][i - 1];
      if (to == LambdaCrystal::npos) continue;
      crystal.f_[b][i - 1] = rank_of[to];
      crystal.e_[rank_of[to]][i - 1] = b;
    }
  }
  crystal.highest_ = rank_of[0];
  for (size_t b = 0; b < M; ++b) {
    const auto& phi = crystal.elements_[b].phi;
    if (std::all_of(phi.begin(), phi.end(), [](int64_t x) { return x == 0; })) {
      if (crystal.lowest_ != LambdaCrystal::npos) throw InternalError("two lowest weight elements");
      crystal.lowest_ = b;
    }
  }
  if (crystal.lowest_ == LambdaCrystal::npos) throw InternalError("no lowest weight element");
  return crystal;
}

IntVec string_parametrization(const LambdaCrystal& crystal, size_t b) {
  const WordContext& ctx = crystal.context();
  ZSequence cur = crystal.element(b).seq;
  IntVec out;
  out.reserve(ctx.length());
  for (int color : ctx.word()) {
    int64_t steps = 0;
    while (auto up = zinf_apply(ctx, cur, color, Direction::Raise)) {
      cur = std::move(*up);
      ++steps;
    }
    out.push_back(steps);
  }
  if (std::any_of(cur.entries.begin(), cur.entries.end(), [](int64_t x) { return x != 0; }))
    throw InternalError("did not reach highest weight");
  return out;
}

IntVec kashiwara_embedding(const LambdaCrystal& crystal, size_t b) {
  const auto& entries = crystal.element(b).seq.entries;
  return IntVec(entries.rbegin(), entries.rend());
}

// ---------------------------------------------------------------------------

bool CrystalSubset::contains(size_t b) const { return std::binary_search(members.begin(), members.end(), b); }

std::vector<size_t> string_closure(const LambdaCrystal& crystal, std::vector<size_t> members, int color,
                                   Direction direction) {
  crystal.context().datum().check_color(color);
  std::vector<bool> in(crystal.size(), false);
  for (size_t b : members) in[b] = true;
  const size_t initial = members.size();
  for (size_t k = 0; k < initial; ++k) {
    size_t cur = members[k];
    for (;;) {
      cur = direction == Direction::Lower ? crystal.f(cur, color) : crystal.e(cur, color);
      if (cur == LambdaCrystal::npos) break;
      if (!in[cur]) {
        in[cur] = true;
        members.push_back(cur);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

CrystalSubset demazure_subset(const LambdaCrystal& crystal, const WeylElement& w) {
  CrystalSubset s{&crystal, {crystal.highest()}, SubsetTag::Demazure};
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it)
    s.members = string_closure(crystal, std::move(s.members), *it, Direction::Lower);
  return s;
}

CrystalSubset opposite_demazure_subset(const LambdaCrystal& crystal, const WeylElement& v) {
  const RootDatum& datum = crystal.context().datum();
  Word word = crystal.context().word();
  word.insert(word.end(), v.word.rbegin(), v.word.rend());
  const WeylElement u = weyl_from_word(datum, word);  // w_0 v^{-1}
  CrystalSubset s{&crystal, {crystal.lowest()}, SubsetTag::OppositeDemazure};
  for (int color : u.word) s.members = string_closure(crystal, std::move(s.members), color, Direction::Raise);
  return s;
}

CrystalSubset richardson_subset(const LambdaCrystal& crystal, const WeylElement& v, const WeylElement& w) {
  if (!bruhat_leq_lifting(crystal.context().datum(), v, w)) throw std::invalid_argument("empty Richardson condition");
  const CrystalSubset dem = demazure_subset(crystal, w);
  const CrystalSubset opp = opposite_demazure_subset(crystal, v);
  CrystalSubset out{&crystal, {}, SubsetTag::Richardson};
  std::set_intersection(dem.members.begin(), dem.members.end(), opp.members.begin(), opp.members.end(),
                        std::back_inserter(out.members));
  if (out.members.empty()) throw InternalError("Richardson subset is empty although v <= w");
  return out;
}

// ---------------------------------------------------------------------------

std::vector<Weight> positive_roots(const RootDatum& datum) {
  const int n = datum.rank();
  std::set<IntVec> roots;
  std::deque<Weight> queue;
  for (int i = 1; i <= n; ++i) {
    queue.push_back(datum.simple_root(i));
    roots.insert(queue.back().coords);
  }
  while (!queue.empty()) {
    const Weight r = queue.front();
    queue.pop_front();
    for (int i = 1; i <= n; ++i) {
      Weight s = datum.reflect(i, r);
      if (roots.insert(s.coords).second) queue.push_back(std::move(s));
    }
  }
  std::vector<std::pair<Rational, Weight>> pos;
  for (const auto& c : roots) {
    const RatVec rc = datum.root_coordinates(Weight(c));
    if (std::all_of(rc.begin(), rc.end(), [](const Rational& q) { return q >= 0; })) {
      Rational height = 0;
      for (const auto& q : rc) height += q;
      pos.emplace_back(height, Weight(c));
    }
  }
  std::sort(pos.begin(), pos.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  });
  std::vector<Weight> out;
  for (auto& p : pos) out.push_back(std::move(p.second));
  return out;
}

namespace {

Weight dominant_conjugate(const RootDatum& datum, Weight mu) {
  for (;;) {
    int neg = 0;
    for (int i = 1; i <= datum.rank(); ++i)
      if (mu.coords[i - 1] < 0) {
        neg = i;
        break;
      }
    if (neg == 0) return mu;
    mu = datum.reflect(neg, mu);
  }
}

std::vector<Weight> weyl_orbit(const RootDatum& datum, const Weight& mu) {
  std::set<IntVec> seen{mu.coords};
  std::vector<Weight> orbit{mu};
  for (size_t k = 0; k < orbit.size(); ++k)
    for (int i = 1; i <= datum.rank(); ++i) {
      Weight nu = datum.reflect(i, orbit[k]);
      if (seen.insert(nu.coords).second) orbit.push_back(std::move(nu));
    }
  return orbit;
}

}  // namespace

WeightMultiplicities weight_multiplicities_oracle(const RootDatum& datum, const Weight& lambda, int64_t cap) {
  if (!lambda.is_dominant()) throw std::invalid_argument("highest weight " + to_string(lambda) + " is not dominant");
  const std::vector<Weight> roots = positive_roots(datum);

  // Dominant weights below lambda, reached by subtracting positive roots
  // while staying dominant.
  std::map<IntVec, Rational> depth;  // height of lambda - mu
  std::vector<Weight> dominant{lambda};
  depth[lambda.coords] = 0;
  for (size_t k = 0; k < dominant.size(); ++k)
    for (const Weight& a : roots) {
      Weight mu = dominant[k] - a;
      if (!mu.is_dominant() || depth.count(mu.coords)) continue;
      const RatVec rc = datum.root_coordinates(lambda - mu);
      Rational h = 0;
      for (const auto& q : rc) h += q;
      depth[mu.coords] = h;
      dominant.push_back(std::move(mu));
    }
  std::sort(dominant.begin(), dominant.end(), [&](const Weight& a, const Weight& b) {
    const Rational& da = depth.at(a.coords);
    const Rational& db = depth.at(b.coords);
    if (da != db) return da < db;
    return a < b;
  });

  const Weight rho = datum.rho();
  const Rational top = datum.inner_product(lambda + rho, lambda + rho);
  std::map<IntVec, int64_t> dom_mult;
  const auto mult_of = [&](const Weight& mu) -> int64_t {
    const auto it = dom_mult.find(dominant_conjugate(datum, mu).coords);
    return it == dom_mult.end() ? 0 : it->second;
  };
  for (const Weight& mu : dominant) {
    if (mu == lambda) {
      dom_mult[mu.coords] = 1;
      continue;
    }
    Rational num = 0;
    for (const Weight& a : roots)
      for (int64_t k = 1;; ++k) {
        const Weight nu = mu + a * k;
        const int64_t m = mult_of(nu);
        if (m == 0) break;
        num += 2 * m * datum.inner_product(nu, a);
      }
    const Rational den = top - datum.inner_product(mu + rho, mu + rho);
    const Rational m = num / den;
    if (m.get_den() != 1) throw InternalError("Freudenthal recursion produced a non-integer multiplicity");
    dom_mult[mu.coords] = m.get_num().get_si();
  }

  WeightMultiplicities out;
  for (const auto& [coords, m] : dom_mult) {
    if (m == 0) continue;
    for (const Weight& nu : weyl_orbit(datum, Weight(coords))) {
      out.multiplicity[nu.coords] = m;
      out.dimension += m;
    }
    if (out.dimension > cap)
      throw CapExceeded("representation of highest weight " + to_string(lambda) + " exceeds dimension cap");
  }
  return out;
}

}  // namespace stdeg
