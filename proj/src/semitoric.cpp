#include "stdeg/semitoric.hpp"

#include <algorithm>
#include <set>

namespace stdeg {

std::string to_string(CoordinateSystem c) {
  switch (c) {
    case CoordinateSystem::String:
      return "string";
    case CoordinateSystem::NZ:
      return "nz";
    case CoordinateSystem::Cluster:
      return "cluster";
  }
  return "";
}

std::string word_text(const Word& w) {
  if (w.empty()) return "e";
  std::string s;
  for (size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + std::to_string(w[k]);
  return s;
}

bool DegenerationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const ReportCheck& c) { return c.passed; });
}

const ReportCheck* DegenerationReport::check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

std::string point_text(const IntVec& p) {
  std::string s = "(";
  for (size_t k = 0; k < p.size(); ++k) s += (k ? "," : "") + std::to_string(p[k]);
  return s + ")";
}

}  // namespace

DegenerationSetup::DegenerationSetup(CrystalCache& cache, const Weight& lambda, CoordinateSystem system,
                                     std::vector<size_t> mutation_word, int max_level)
    : cache_(&cache), lambda_(lambda), system_(system), mutation_word_(std::move(mutation_word)) {
  if (system_ != CoordinateSystem::Cluster && !mutation_word_.empty())
    throw std::invalid_argument("mutation words apply to cluster coordinates only");
  crystal_size_ = cache.get(lambda).size();
  if (system_ == CoordinateSystem::Cluster) {
    const ClusterPolytope c = cluster_polytope(cache, lambda, max_level);
    matrix_ = c.matrix;
    upsilon_ = c.upsilon;
    saturated_ = c.saturated;
    warning_ = c.warning;
    const TransportResult t = transport_polytope(c.polytope, c.matrix, mutation_word_);
    polytope_ = t.polytope;
    points_ = t.points;
    convex_closed_ = t.convex_closed;
  } else {
    const Coordinates coords = system_ == CoordinateSystem::String ? Coordinates::String : Coordinates::NZ;
    const ParametrizedPolytope p = parametrized_polytope(cache, lambda, coords, max_level);
    polytope_ = p.polytope;
    points_ = p.points;
    saturated_ = p.saturated;
    warning_ = p.warning;
  }
  faces_ = enumerate_faces(polytope_);
}

std::vector<IntVec> DegenerationSetup::to_system(const std::vector<IntVec>& pts) const {
  if (system_ != CoordinateSystem::Cluster) return pts;
  std::vector<IntVec> g;
  for (const auto& p : pts) g.push_back(upsilon_.invert(p));
  return transport_points(g, matrix_, mutation_word_);
}

DegenerationReport DegenerationSetup::report(const WeylElement& v, const WeylElement& w) const {
  const LambdaCrystal& crystal = cache_->get(lambda_);
  const CrystalSubset rich = richardson_subset(crystal, v, w);
  const Coordinates coords = system_ == CoordinateSystem::NZ ? Coordinates::NZ : Coordinates::String;

  DegenerationReport rep;
  rep.datum = crystal.context().datum().name();
  rep.word = crystal.context().word();
  rep.lambda = lambda_;
  rep.v = v;
  rep.w = w;
  rep.system = system_;
  rep.mutation_word = mutation_word_;
  rep.polytope = polytope_;
  rep.richardson = to_system(crystal_points(crystal, rich.members, coords));

  rep.checks.push_back({"saturated", saturated_, warning_});
  const FaceUnionResult fu = union_of_faces_decompose(polytope_, faces_, points_, rep.richardson);
  for (size_t k = 0; k < fu.certificate.size(); ++k) {
    const Face& f = fu.certificate[k];
    CertificateFace cf{f.tight, {}, f.dim, fu.face_points[k]};
    for (size_t vi : f.vertices) cf.vertices.push_back(polytope_.vertices()[vi]);
    rep.certificate.push_back(std::move(cf));
  }
  rep.witness = fu.witness;
  rep.checks.push_back({"face_union", fu.is_union,
                        fu.is_union ? std::to_string(fu.certificate.size()) + " maximal faces"
                                    : "uncovered point " + point_text(*fu.witness)});

  std::set<IntVec> covered;
  for (const auto& f : rep.certificate) covered.insert(f.points.begin(), f.points.end());
  const bool exact = std::vector<IntVec>(covered.begin(), covered.end()) == rep.richardson;
  rep.checks.push_back({"certificate_union", exact,
                        std::to_string(covered.size()) + " of " + std::to_string(rep.richardson.size()) + " points"});

  if (v == w) {
    bool ok = rich.size() == 1 && crystal.element(rich.members[0]).wt == w.apply(lambda_);
    rep.checks.push_back({"extremal_weight", ok, "singleton of weight " + to_string(w.apply(lambda_))});
  }

  if (system_ == CoordinateSystem::Cluster) {
    rep.checks.push_back({"transport_convex_closed", convex_closed_, ""});
    const bool counts = points_.size() == crystal_size_ && rep.richardson.size() == rich.size();
    rep.checks.push_back({"bijective_counts", counts,
                          std::to_string(rep.richardson.size()) + " Richardson points, " +
                              std::to_string(points_.size()) + " polytope points"});
  } else {
    const MinkowskiReport mk = minkowski_condition_check(*cache_, lambda_, lambda_, v, w, coords, 2);
    std::string d1 = std::to_string(mk.sums_checked) + " sums";
    if (mk.witness_i) d1 += ", witness " + point_text(mk.witness_i->first) + " + " + point_text(mk.witness_i->second);
    std::string d2 = std::to_string(mk.dilations_checked) + " dilations";
    if (mk.witness_ii) d2 += ", witness " + point_text(*mk.witness_ii);
    rep.checks.push_back({"minkowski_i", mk.condition_i, d1});
    rep.checks.push_back({"minkowski_ii", mk.condition_ii, d2});
  }
  return rep;
}

DegenerationReport semi_toric_report_string(CrystalCache& cache, const Weight& lambda, const WeylElement& v,
                                            const WeylElement& w, int max_level) {
  return DegenerationSetup(cache, lambda, CoordinateSystem::String, {}, max_level).report(v, w);
}

DegenerationReport semi_toric_report_nz(CrystalCache& cache, const Weight& lambda, const WeylElement& v,
                                        const WeylElement& w, int max_level) {
  return DegenerationSetup(cache, lambda, CoordinateSystem::NZ, {}, max_level).report(v, w);
}

DegenerationReport semi_toric_report_cluster(CrystalCache& cache, const Weight& lambda, const WeylElement& v,
                                             const WeylElement& w, const std::vector<size_t>& mutation_word,
                                             int max_level) {
  return DegenerationSetup(cache, lambda, CoordinateSystem::Cluster, mutation_word, max_level).report(v, w);
}

ScanSummary all_pairs_scan(CrystalCache& cache, const Weight& lambda, CoordinateSystem system,
                           const std::vector<size_t>& mutation_word, int max_level) {
  const RootDatum& datum = cache.context().datum();
  const WeylGroup group = enumerate_group(datum, 100000);
  const std::vector<std::pair<size_t, size_t>> pairs = group.bruhat_pairs();
  const DegenerationSetup setup(cache, lambda, system, mutation_word, max_level);
  ScanSummary out;
  for (const auto& [vi, wi] : pairs) {
    DegenerationReport rep = setup.report(group.element(vi), group.element(wi));
    ++out.pairs;
    if (rep.passed()) {
      ++out.certified;
    } else {
      std::string failed;
      for (const auto& c : rep.checks)
        if (!c.passed) failed += (failed.empty() ? "" : ", ") + c.name;
      out.violations.push_back("v=" + word_text(rep.v.word) + " w=" + word_text(rep.w.word) + ": " + failed);
    }
    for (const auto& f : rep.certificate) ++out.face_dimensions[f.dim];
    out.reports.push_back(std::move(rep));
  }
  return out;
}

}  // namespace stdeg
