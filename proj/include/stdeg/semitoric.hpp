#pragma once

// Richardson lattice-point sets as unions of faces of string, NZ and cluster
// polytopes: per-pair reports and exhaustive scans over Bruhat intervals.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stdeg/cluster.hpp"
#include "stdeg/crystal_polytopes.hpp"
#include "stdeg/polytope.hpp"

namespace stdeg {

enum class CoordinateSystem { String, NZ, Cluster };

std::string to_string(CoordinateSystem c);

struct ReportCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CertificateFace {
  std::vector<size_t> tight;  // halfspace indices of the polytope
  std::vector<RatVec> vertices;
  int dim = -1;
  std::vector<IntVec> points;
};

struct DegenerationReport {
  std::string datum;
  Word word;
  Weight lambda;
  WeylElement v, w;
  CoordinateSystem system = CoordinateSystem::String;
  std::vector<size_t> mutation_word;
  RationalPolytope polytope;
  std::vector<IntVec> richardson;  // sorted
  std::vector<CertificateFace> certificate;
  std::optional<IntVec> witness;  // uncovered Richardson point, if any
  std::vector<ReportCheck> checks;

  bool passed() const;
  const ReportCheck* check(const std::string& name) const;
};

/// The polytope, its faces and lattice points for one weight and coordinate
/// system, shared by every pair of a scan.
class DegenerationSetup {
 public:
  DegenerationSetup(CrystalCache& cache, const Weight& lambda, CoordinateSystem system,
                    std::vector<size_t> mutation_word = {}, int max_level = 3);

  /// Throws std::invalid_argument("empty Richardson condition") unless v <= w.
  DegenerationReport report(const WeylElement& v, const WeylElement& w) const;

  const RationalPolytope& polytope() const { return polytope_; }
  const std::vector<IntVec>& points() const { return points_; }
  bool saturated() const { return saturated_; }

 private:
  std::vector<IntVec> to_system(const std::vector<IntVec>& string_or_nz) const;

  CrystalCache* cache_;
  Weight lambda_;
  CoordinateSystem system_;
  std::vector<size_t> mutation_word_;
  RationalPolytope polytope_;
  std::vector<Face> faces_;
  std::vector<IntVec> points_;
  bool saturated_ = false;
  std::string warning_;
  // Cluster coordinates only.
  ExchangeMatrix matrix_;
  UpsilonMatrix upsilon_;
  bool convex_closed_ = true;
  size_t crystal_size_ = 0;
};

DegenerationReport semi_toric_report_string(CrystalCache& cache, const Weight& lambda, const WeylElement& v,
                                            const WeylElement& w, int max_level = 3);
DegenerationReport semi_toric_report_nz(CrystalCache& cache, const Weight& lambda, const WeylElement& v,
                                        const WeylElement& w, int max_level = 3);
DegenerationReport semi_toric_report_cluster(CrystalCache& cache, const Weight& lambda, const WeylElement& v,
                                             const WeylElement& w, const std::vector<size_t>& mutation_word,
                                             int max_level = 3);

struct ScanSummary {
  size_t pairs = 0;
  size_t certified = 0;
  std::map<int, size_t> face_dimensions;  // dimension -> number of certificate faces
  std::vector<std::string> violations;    // "v=<word> w=<word>: <failed checks>"
  std::vector<DegenerationReport> reports;

  bool passed() const { return violations.empty() && certified == pairs; }
};

/// Every Bruhat pair v <= w, ordered by (l(v), l(w), words).
ScanSummary all_pairs_scan(CrystalCache& cache, const Weight& lambda, CoordinateSystem system,
                           const std::vector<size_t>& mutation_word = {}, int max_level = 3);

std::string word_text(const Word& w);

}  // namespace stdeg
