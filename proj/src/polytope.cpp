#include "stdeg/polytope.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace stdeg {

Rational evaluate(const BigVec& normal, const RatVec& x) {
  Rational s = 0;
  for (size_t k = 0; k < normal.size(); ++k)
    if (normal[k] != 0) s += normal[k] * x[k];
  return s;
}

namespace {

using Bits = std::vector<uint64_t>;

bool subset(const Bits& a, const Bits& b) {
  for (size_t k = 0; k < a.size(); ++k)
    if (a[k] & ~b[k]) return false;
  return true;
}

size_t popcount(const Bits& a) {
  size_t c = 0;
  for (uint64_t x : a) c += static_cast<size_t>(__builtin_popcountll(x));
  return c;
}

Integer dot(const BigVec& a, const BigVec& b) {
  Integer s = 0;
  for (size_t k = 0; k < a.size(); ++k)
    if (a[k] != 0 && b[k] != 0) s += a[k] * b[k];
  return s;
}

// Row scaled by a positive integer so that every entry is integral.
BigVec integral_row(const RatVec& row) {
  Integer lcm = 1;
  for (const auto& q : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
  BigVec out;
  out.reserve(row.size());
  for (const auto& q : row) out.push_back(Integer(q * lcm));
  return out;
}

Halfspace normalized(BigVec normal, Rational offset) {
  Integer g = 0;
  for (const auto& z : normal) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
  if (g == 0) throw std::invalid_argument("halfspace with zero normal");
  if (g != 1) {
    for (auto& z : normal) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), g.get_mpz_t());
    offset /= g;
  }
  return {std::move(normal), std::move(offset)};
}

// Equalities orient their normal with a positive leading entry.
Halfspace normalized_equality(BigVec normal, Rational offset) {
  Halfspace h = normalized(std::move(normal), std::move(offset));
  const auto lead = std::find_if(h.normal.begin(), h.normal.end(), [](const Integer& z) { return z != 0; });
  if (*lead < 0) {
    for (auto& z : h.normal) z = -z;
    h.offset = -h.offset;
  }
  return h;
}

}  // namespace

std::vector<BigVec> extreme_rays(const std::vector<BigVec>& rows, size_t dimension) {
  const size_t m = rows.size();
  for (const auto& r : rows)
    if (r.size() != dimension) throw std::invalid_argument("extreme_rays: row length mismatch");

  // Initial simplicial cone from the first linearly independent rows.
  std::vector<size_t> basis;
  RatMatrix chosen;
  size_t current_rank = 0;
  for (size_t k = 0; k < m && basis.size() < dimension; ++k) {
    RatMatrix trial = chosen;
    RatVec row;
    for (const auto& z : rows[k]) row.emplace_back(z);
    trial.push_back(row);
    const size_t r = rank(trial);
    if (r > current_rank) {
      chosen = std::move(trial);
      basis.push_back(k);
      current_rank = r;
    }
  }
  if (basis.size() < dimension) throw std::invalid_argument("cone is not pointed");

  const size_t words = (m + 63) / 64;
  struct Ray {
    BigVec v;
    Bits zero;
  };
  std::vector<Ray> rays;
  const RatMatrix inv = *inverse(chosen);
  for (size_t j = 0; j < dimension; ++j) {
    RatVec col(dimension);
    for (size_t i = 0; i < dimension; ++i) col[i] = -inv[i][j];
    Ray r{primitive_integer(col), Bits(words, 0)};
    for (size_t b = 0; b < dimension; ++b)
      if (b != j) r.zero[basis[b] / 64] |= uint64_t{1} << (basis[b] % 64);
    rays.push_back(std::move(r));
  }

  std::vector<bool> in_basis(m, false);
  for (size_t b : basis) in_basis[b] = true;
  for (size_t k = 0; k < m; ++k) {
    if (in_basis[k]) continue;
    const BigVec& a = rows[k];
    std::vector<Integer> s(rays.size());
    std::vector<size_t> pos, neg;
    for (size_t r = 0; r < rays.size(); ++r) {
      s[r] = dot(a, rays[r].v);
      if (s[r] > 0) pos.push_back(r);
      else if (s[r] < 0) neg.push_back(r);
    }
    if (pos.empty()) {
      for (size_t r = 0; r < rays.size(); ++r)
        if (s[r] == 0) rays[r].zero[k / 64] |= uint64_t{1} << (k % 64);
      continue;
    }
    std::vector<Ray> next;
    for (size_t p : pos)
      for (size_t q : neg) {
        Bits common(words);
        for (size_t w = 0; w < words; ++w) common[w] = rays[p].zero[w] & rays[q].zero[w];
        if (popcount(common) + 2 < dimension) continue;
        bool adjacent = true;
        for (size_t r = 0; r < rays.size() && adjacent; ++r)
          if (r != p && r != q && subset(common, rays[r].zero)) adjacent = false;
        if (!adjacent) continue;
        BigVec v(dimension);
        for (size_t i = 0; i < dimension; ++i) v[i] = s[p] * rays[q].v[i] - s[q] * rays[p].v[i];
        Ray nr{primitive_integer(std::move(v)), std::move(common)};
        nr.zero[k / 64] |= uint64_t{1} << (k % 64);
        next.push_back(std::move(nr));
      }
    for (size_t r = 0; r < rays.size(); ++r) {
      if (s[r] > 0) continue;
      if (s[r] == 0) rays[r].zero[k / 64] |= uint64_t{1} << (k % 64);
      next.push_back(std::move(rays[r]));
    }
    rays = std::move(next);
  }
  std::vector<BigVec> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.v));
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

RationalPolytope convex_hull(std::vector<RatVec> points, const HullLimits& limits) {
  if (points.empty()) throw std::invalid_argument("convex_hull: empty point set");
  const size_t n = points.front().size();
  if (n > limits.max_dimension)
    throw std::invalid_argument("convex_hull: ambient dimension " + std::to_string(n) + " exceeds cap");
  if (points.size() > limits.max_points)
    throw std::invalid_argument("convex_hull: " + std::to_string(points.size()) + " points exceed cap");
  for (const auto& p : points)
    if (p.size() != n) throw std::invalid_argument("convex_hull: inconsistent point dimensions");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  RationalPolytope out;
  out.ambient_ = n;
  const RatVec& p0 = points.front();
  RatMatrix diffs;
  for (size_t k = 1; k < points.size(); ++k) {
    RatVec d(n);
    for (size_t i = 0; i < n; ++i) d[i] = points[k][i] - p0[i];
    diffs.push_back(std::move(d));
  }
  const RowEchelon ech = row_reduce(diffs);
  const std::vector<size_t>& piv = ech.pivots;
  const size_t d = piv.size();
  out.dim_ = static_cast<int>(d);

  for (auto& nv : nullspace(diffs.empty() ? RatMatrix{} : diffs, n)) {
    BigVec normal = primitive_integer(nv);
    const Rational off = evaluate(normal, p0);
    out.equalities_.push_back(normalized_equality(std::move(normal), off));
  }
  std::sort(out.equalities_.begin(), out.equalities_.end());

  if (d == 0) {
    out.vertices_ = {p0};
    return out;
  }

  std::vector<BigVec> rows;
  rows.reserve(points.size());
  for (const auto& p : points) {
    RatVec r(d + 1);
    for (size_t k = 0; k < d; ++k) r[k] = p[piv[k]];
    r[d] = -1;
    rows.push_back(integral_row(r));
  }
  for (const BigVec& ray : extreme_rays(rows, d + 1)) {
    if (std::all_of(ray.begin(), ray.begin() + d, [](const Integer& z) { return z == 0; })) continue;
    BigVec normal(n, 0);
    for (size_t k = 0; k < d; ++k) normal[piv[k]] = ray[k];
    out.halfspaces_.push_back(normalized(std::move(normal), Rational(ray[d])));
  }
  std::sort(out.halfspaces_.begin(), out.halfspaces_.end());

  for (const auto& p : points) {
    RatMatrix tight;
    for (size_t h = 0; h < out.halfspaces_.size(); ++h)
      if (evaluate(out.halfspaces_[h].normal, p) == out.halfspaces_[h].offset) {
        RatVec r;
        for (size_t k = 0; k < d; ++k) r.emplace_back(out.halfspaces_[h].normal[piv[k]]);
        tight.push_back(std::move(r));
      }
    if (tight.size() >= d && rank(tight) == d) out.vertices_.push_back(p);
  }
  return out;
}

RationalPolytope convex_hull(const std::vector<IntVec>& points, const HullLimits& limits) {
  std::vector<RatVec> rp;
  rp.reserve(points.size());
  for (const auto& p : points) rp.push_back(to_rational(p));
  return convex_hull(std::move(rp), limits);
}

RationalPolytope from_inequalities(size_t ambient, const std::vector<Halfspace>& halfspaces,
                                   const std::vector<Halfspace>& equalities) {
  std::vector<BigVec> rows;
  const auto push = [&](const BigVec& normal, const Rational& offset, int sign) {
    if (normal.size() != ambient) throw std::invalid_argument("from_inequalities: normal length mismatch");
    RatVec r;
    for (const auto& z : normal) r.emplace_back(sign * z);
    r.push_back(-sign * offset);
    rows.push_back(integral_row(r));
  };
  for (const auto& h : halfspaces) push(h.normal, h.offset, 1);
  for (const auto& e : equalities) {
    push(e.normal, e.offset, 1);
    push(e.normal, e.offset, -1);
  }
  BigVec t(ambient + 1, 0);
  t[ambient] = -1;
  rows.push_back(t);

  std::vector<BigVec> rays;
  try {
    rays = extreme_rays(rows, ambient + 1);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("from_inequalities: polyhedron is unbounded");
  }
  std::vector<RatVec> vertices;
  for (const auto& r : rays) {
    if (r[ambient] == 0) throw std::invalid_argument("from_inequalities: polyhedron is unbounded");
    RatVec v(ambient);
    for (size_t k = 0; k < ambient; ++k) v[k] = Rational(r[k], r[ambient]);
    for (auto& q : v) q.canonicalize();
    vertices.push_back(std::move(v));
  }
  if (vertices.empty()) throw std::invalid_argument("from_inequalities: polytope is empty");
  return convex_hull(std::move(vertices));
}

bool RationalPolytope::contains(const RatVec& x) const {
  if (x.size() != ambient_) throw std::invalid_argument("contains: dimension mismatch");
  for (const auto& e : equalities_)
    if (evaluate(e.normal, x) != e.offset) return false;
  for (const auto& h : halfspaces_)
    if (evaluate(h.normal, x) > h.offset) return false;
  return true;
}

bool equivalent(const RationalPolytope& p, const RationalPolytope& q) {
  if (p.ambient() != q.ambient()) return false;
  for (const auto& v : p.vertices())
    if (!q.contains(v)) return false;
  for (const auto& v : q.vertices())
    if (!p.contains(v)) return false;
  return true;
}

// ---------------------------------------------------------------------------

namespace {

int affine_rank(const RationalPolytope& p, const std::vector<size_t>& vs) {
  if (vs.empty()) return -1;
  RatMatrix diffs;
  const RatVec& v0 = p.vertices()[vs.front()];
  for (size_t k = 1; k < vs.size(); ++k) {
    RatVec d(p.ambient());
    for (size_t i = 0; i < p.ambient(); ++i) d[i] = p.vertices()[vs[k]][i] - v0[i];
    diffs.push_back(std::move(d));
  }
  return static_cast<int>(rank(diffs));
}

}  // namespace

std::vector<Face> enumerate_faces(const RationalPolytope& p) {
  const size_t nv = p.vertices().size();
  const size_t nh = p.halfspaces().size();
  std::vector<std::vector<size_t>> incidence(nh);
  for (size_t h = 0; h < nh; ++h)
    for (size_t v = 0; v < nv; ++v)
      if (p.tight(h, p.vertices()[v])) incidence[h].push_back(v);

  std::vector<size_t> all(nv);
  for (size_t v = 0; v < nv; ++v) all[v] = v;
  std::set<std::vector<size_t>> seen{all};
  std::deque<std::vector<size_t>> queue{all};
  while (!queue.empty()) {
    const std::vector<size_t> cur = std::move(queue.front());
    queue.pop_front();
    for (size_t h = 0; h < nh; ++h) {
      std::vector<size_t> meet;
      std::set_intersection(cur.begin(), cur.end(), incidence[h].begin(), incidence[h].end(), std::back_inserter(meet));
      if (meet.empty() || seen.count(meet)) continue;
      seen.insert(meet);
      queue.push_back(std::move(meet));
    }
  }

  std::vector<Face> faces;
  faces.reserve(seen.size());
  for (const auto& vs : seen) {
    Face f;
    f.vertices = vs;
    for (size_t h = 0; h < nh; ++h)
      if (std::includes(incidence[h].begin(), incidence[h].end(), vs.begin(), vs.end())) f.tight.push_back(h);
    f.dim = affine_rank(p, vs);
    faces.push_back(std::move(f));
  }
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vertices < b.vertices;
  });
  return faces;
}

std::vector<IntVec> lattice_points(const RationalPolytope& p) {
  const size_t n = p.ambient();
  if (p.dim() < 0) return {};
  IntVec lo(n), hi(n);
  for (size_t i = 0; i < n; ++i) {
    Rational mn = p.vertices().front()[i], mx = mn;
    for (const auto& v : p.vertices()) {
      mn = std::min(mn, v[i]);
      mx = std::max(mx, v[i]);
    }
    Integer f, c;
    mpz_cdiv_q(c.get_mpz_t(), mn.get_num_mpz_t(), mn.get_den_mpz_t());
    mpz_fdiv_q(f.get_mpz_t(), mx.get_num_mpz_t(), mx.get_den_mpz_t());
    lo[i] = to_int64(c);
    hi[i] = to_int64(f);
    if (lo[i] > hi[i]) return {};
  }

  // Integer constraints normal . x <= floor(offset).
  struct Row {
    IntVec normal;
    int64_t bound;
    IntVec rest_min;  // rest_min[k] = min of sum_{j >= k} normal_j x_j over the box
  };
  std::vector<Row> rows;
  const auto add = [&](const BigVec& normal, const Rational& offset, int sign) {
    Row r;
    for (const auto& z : normal) r.normal.push_back(sign * to_int64(z));
    Integer b;
    const Rational o = sign * offset;
    mpz_fdiv_q(b.get_mpz_t(), o.get_num_mpz_t(), o.get_den_mpz_t());
    r.bound = to_int64(b);
    r.rest_min.assign(n + 1, 0);
    for (size_t k = n; k-- > 0;)
      r.rest_min[k] = r.rest_min[k + 1] + std::min(r.normal[k] * lo[k], r.normal[k] * hi[k]);
    rows.push_back(std::move(r));
  };
  for (const auto& h : p.halfspaces()) add(h.normal, h.offset, 1);
  for (const auto& e : p.equalities()) {
    add(e.normal, e.offset, 1);
    add(e.normal, e.offset, -1);
  }

  std::vector<IntVec> out;
  IntVec x(n);
  std::vector<int64_t> partial(rows.size(), 0);
  std::function<void(size_t)> rec = [&](size_t k) {
    if (k == n) {
      out.push_back(x);
      return;
    }
    for (int64_t t = lo[k]; t <= hi[k]; ++t) {
      bool ok = true;
      for (size_t r = 0; r < rows.size() && ok; ++r)
        ok = partial[r] + rows[r].normal[k] * t + rows[r].rest_min[k + 1] <= rows[r].bound;
      if (!ok) continue;
      x[k] = t;
      for (size_t r = 0; r < rows.size(); ++r) partial[r] += rows[r].normal[k] * t;
      rec(k + 1);
      for (size_t r = 0; r < rows.size(); ++r) partial[r] -= rows[r].normal[k] * t;
    }
  };
  rec(0);
  return out;
}

std::vector<IntVec> face_lattice_points(const RationalPolytope& p, const Face& f,
                                        const std::vector<IntVec>& polytope_points) {
  std::vector<IntVec> out;
  for (const auto& x : polytope_points) {
    const RatVec rx = to_rational(x);
    if (std::all_of(f.tight.begin(), f.tight.end(), [&](size_t h) { return p.tight(h, rx); })) out.push_back(x);
  }
  return out;
}

FaceUnionResult union_of_faces_decompose(const RationalPolytope& p, const std::vector<Face>& faces,
                                         const std::vector<IntVec>& polytope_points, const std::vector<IntVec>& s) {
  std::vector<IntVec> target = s;
  std::sort(target.begin(), target.end());
  target.erase(std::unique(target.begin(), target.end()), target.end());
  for (const auto& x : target)
    if (!std::binary_search(polytope_points.begin(), polytope_points.end(), x))
      throw std::invalid_argument("point set is not contained in the lattice points of the polytope");

  std::vector<size_t> candidates;
  std::vector<std::vector<IntVec>> pts(faces.size());
  std::set<IntVec> covered;
  for (size_t k = 0; k < faces.size(); ++k) {
    pts[k] = face_lattice_points(p, faces[k], polytope_points);
    if (pts[k].empty()) continue;
    if (!std::all_of(pts[k].begin(), pts[k].end(),
                     [&](const IntVec& x) { return std::binary_search(target.begin(), target.end(), x); }))
      continue;
    candidates.push_back(k);
    covered.insert(pts[k].begin(), pts[k].end());
  }

  FaceUnionResult out;
  for (const auto& x : target)
    if (!covered.count(x)) {
      out.witness = x;
      return out;
    }
  out.is_union = true;
  for (size_t a : candidates) {
    bool maximal = true;
    for (size_t b : candidates)
      if (a != b && faces[b].vertices.size() > faces[a].vertices.size() &&
          std::includes(faces[b].vertices.begin(), faces[b].vertices.end(), faces[a].vertices.begin(),
                        faces[a].vertices.end())) {
        maximal = false;
        break;
      }
    if (!maximal) continue;
    out.certificate.push_back(faces[a]);
    out.face_points.push_back(pts[a]);
  }
  return out;
}

FaceUnionResult union_of_faces_decompose(const RationalPolytope& p, const std::vector<IntVec>& s) {
  return union_of_faces_decompose(p, enumerate_faces(p), lattice_points(p), s);
}

// ---------------------------------------------------------------------------

namespace {

std::string linear_form(const std::vector<std::pair<size_t, Integer>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (size_t k = 0; k < terms.size(); ++k) {
    const auto& [var, c] = terms[k];
    Integer a = abs(c);
    if (k == 0) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (a != 1) out += a.get_str();
    out += "a_" + std::to_string(var + 1);
  }
  return out;
}

// Splits normal . x <= offset into "positive side <= negative side + offset".
std::string single(const BigVec& normal, const Rational& offset, const char* rel) {
  std::vector<std::pair<size_t, Integer>> left, right;
  for (size_t k = 0; k < normal.size(); ++k) {
    if (normal[k] > 0) left.emplace_back(k, normal[k]);
    if (normal[k] < 0) right.emplace_back(k, -normal[k]);
  }
  std::string lhs = linear_form(left);
  std::string rhs;
  if (right.empty()) {
    rhs = to_string(offset);
  } else {
    rhs = linear_form(right);
    if (offset > 0) rhs += " + " + to_string(offset);
    if (offset < 0) rhs += " - " + to_string(Rational(-offset));
  }
  return lhs + " " + rel + " " + rhs;
}

}  // namespace

std::string inequality_text(const RationalPolytope& p) {
  std::ostringstream os;
  for (const auto& e : p.equalities()) os << single(e.normal, e.offset, "=") << "\n";
  const auto& hs = p.halfspaces();
  std::vector<bool> used(hs.size(), false);
  for (size_t a = 0; a < hs.size(); ++a) {
    if (used[a]) continue;
    used[a] = true;
    BigVec neg = hs[a].normal;
    for (auto& z : neg) z = -z;
    size_t partner = hs.size();
    for (size_t b = a + 1; b < hs.size(); ++b)
      if (!used[b] && hs[b].normal == neg) {
        partner = b;
        break;
      }
    if (partner == hs.size()) {
      os << single(hs[a].normal, hs[a].offset, "<=") << "\n";
      continue;
    }
    used[partner] = true;
    // lower <= form <= upper, with the form's leading coefficient positive
    size_t up = a, down = partner;
    const auto lead = std::find_if(hs[a].normal.begin(), hs[a].normal.end(), [](const Integer& z) { return z != 0; });
    if (*lead < 0) std::swap(up, down);
    std::vector<std::pair<size_t, Integer>> terms;
    for (size_t k = 0; k < hs[up].normal.size(); ++k)
      if (hs[up].normal[k] != 0) terms.emplace_back(k, hs[up].normal[k]);
    os << to_string(Rational(-hs[down].offset)) << " <= " << linear_form(terms) << " <= " << to_string(hs[up].offset)
       << "\n";
  }
  return os.str();
}

}  // namespace stdeg
