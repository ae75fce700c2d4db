#pragma once

// Finite-type root data, weights in fundamental-weight coordinates, Weyl group
// elements and the Bruhat order.
//
// Conventions: colors (simple reflection indices) are 1-based everywhere in
// the public interface, so a word is a sequence over {1..n}.  Vectors are
// stored 0-based, i.e. Weight::coords[i-1] = <lambda, h_i>.  The Cartan integer
// c(i, j) = <alpha_j, h_i>, so alpha_j has fundamental coordinates equal to
// column j of the Cartan matrix.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "stdeg/linalg.hpp"

namespace stdeg {

/// Thrown when a configurable size limit would be exceeded.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Word = std::vector<int>;

struct Weight {
  IntVec coords;

  Weight() = default;
  explicit Weight(IntVec c) : coords(std::move(c)) {}
  static Weight zero(size_t rank) { return Weight(IntVec(rank, 0)); }

  size_t rank() const { return coords.size(); }
  bool is_dominant() const;
  bool is_regular_dominant() const;

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator*(int64_t k) const;
  auto operator<=>(const Weight&) const = default;
};

std::string to_string(const Weight& w);

class RootDatum {
 public:
  /// Standard Cartan matrix with Bourbaki numbering.  Valid pairs: A_n (n>=1),
  /// B_n (n>=2), C_n (n>=3), D_n (n>=4), E_6..E_8, F_4, G_2.
  static RootDatum build(char series, int rank);

  char series() const { return series_; }
  int rank() const { return rank_; }
  std::string name() const;
  const IntMatrix& cartan() const { return cartan_; }
  /// c_{i,j} with 1-based indices.
  int64_t c(int i, int j) const { return cartan_[i - 1][j - 1]; }
  const IntVec& symmetrizers() const { return symmetrizers_; }
  int64_t d(int i) const { return symmetrizers_[i - 1]; }

  Weight simple_root(int i) const;
  Weight fundamental_weight(int i) const;
  Weight rho() const;
  Weight reflect(int i, const Weight& lambda) const;
  /// Matrix of s_i acting on fundamental-weight coordinates.
  IntMatrix reflection_matrix(int i) const;

  /// Weyl-invariant form with (alpha_i, alpha_j) = d_i c_{i,j}.
  Rational inner_product(const Weight& a, const Weight& b) const;
  /// Coordinates of a weight in the basis of simple roots.
  RatVec root_coordinates(const Weight& lambda) const;

  void check_color(int i) const;
  bool operator==(const RootDatum& o) const { return series_ == o.series_ && rank_ == o.rank_; }

 private:
  RootDatum(char series, int rank, IntMatrix cartan);

  char series_;
  int rank_;
  IntMatrix cartan_;
  IntVec symmetrizers_;
  RatMatrix inverse_cartan_;
};

struct WeylElement {
  Word word;          // lexicographically minimal reduced word
  IntMatrix action;   // action on fundamental-weight coordinates

  size_t length() const { return word.size(); }
  bool operator==(const WeylElement& o) const { return action == o.action; }
  Weight apply(const Weight& lambda) const { return Weight(multiply(action, lambda.coords)); }
};

/// Canonicalizes an arbitrary word (not necessarily reduced).
WeylElement weyl_from_word(const RootDatum& datum, const Word& word);
WeylElement weyl_identity(const RootDatum& datum);
WeylElement weyl_multiply(const RootDatum& datum, const WeylElement& a, const WeylElement& b);
WeylElement weyl_inverse(const RootDatum& datum, const WeylElement& w);
bool is_reduced(const RootDatum& datum, const Word& word);
/// Left descents of w: the colors i with l(s_i w) < l(w).
std::vector<int> left_descents(const RootDatum& datum, const WeylElement& w);

/// Bruhat comparison by the lifting property; needs no group enumeration.
bool bruhat_leq_lifting(const RootDatum& datum, const WeylElement& v, const WeylElement& w);

/// The full Weyl group, enumerated and sorted by (length, canonical word).
class WeylGroup {
 public:
  static constexpr size_t kDefaultCap = 50000;

  size_t size() const { return elements_.size(); }
  const RootDatum& datum() const { return datum_; }
  const WeylElement& element(size_t idx) const { return elements_[idx]; }
  const std::vector<WeylElement>& elements() const { return elements_; }
  size_t index_of(const WeylElement& w) const;
  size_t identity_index() const { return 0; }
  size_t longest_index() const { return elements_.size() - 1; }
  const WeylElement& longest() const { return elements_.back(); }
  size_t max_length() const { return elements_.back().length(); }

  /// Indices v with v covered by w in the Bruhat order.
  const std::vector<size_t>& lower_covers(size_t w) const;
  bool bruhat_leq(size_t v, size_t w) const;
  bool bruhat_leq(const WeylElement& v, const WeylElement& w) const;
  /// All pairs (v, w) with v <= w, ordered by (l(v), l(w), words).
  std::vector<std::pair<size_t, size_t>> bruhat_pairs() const;

  /// All reduced words of w, lexicographically sorted.
  std::vector<Word> reduced_words(const WeylElement& w) const;
  bool is_reflection(size_t idx) const;

  /// Index of s_i w.
  size_t left_multiply(int i, size_t w) const { return left_mult_[w][i - 1]; }
  size_t multiply(size_t a, size_t b) const;
  size_t inverse(size_t w) const { return inverse_[w]; }

  friend WeylGroup enumerate_group(const RootDatum& datum, size_t cap);

 private:
  // Cover relations and down-sets are built once, on first Bruhat query.
  struct BruhatCache {
    std::once_flag once;
    std::vector<std::vector<size_t>> covers;
    std::vector<std::vector<uint64_t>> below;
  };

  explicit WeylGroup(RootDatum datum) : datum_(std::move(datum)), bruhat_(std::make_shared<BruhatCache>()) {}
  const BruhatCache& bruhat() const;

  RootDatum datum_;
  std::vector<WeylElement> elements_;
  std::map<IntVec, size_t> index_by_rho_;
  std::vector<size_t> inverse_;
  std::vector<bool> reflection_;
  std::vector<std::vector<size_t>> left_mult_;  // left_mult_[w][i-1] = index of s_i w
  std::shared_ptr<BruhatCache> bruhat_;
};

WeylGroup enumerate_group(const RootDatum& datum, size_t cap = WeylGroup::kDefaultCap);

}  // namespace stdeg
