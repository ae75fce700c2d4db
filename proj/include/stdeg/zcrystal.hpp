#pragma once

// Polyhedral realization of B(infinity) inside the Z^infinity crystal, the
// highest weight crystals B(lambda) generated inside it, string
// parametrizations, Kashiwara embeddings and (opposite) Demazure subsets.
//
// A ZSequence stores positions 1..N (N = length of the longest element) as
// entries[0..N-1].  Position k carries color j_k, where j_k = i_{N-k+1} for
// k <= N and the extension policy supplies colors beyond N.

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "stdeg/rootdata.hpp"

namespace stdeg {

/// Invariant violations that indicate a bug (or a caller feeding sequences
/// outside the image of B(infinity)).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class ExtensionPolicy { Cyclic, ReverseCyclic };

class WordContext {
 public:
  WordContext(RootDatum datum, Word word, ExtensionPolicy policy = ExtensionPolicy::Cyclic);

  const RootDatum& datum() const { return datum_; }
  const Word& word() const { return word_; }
  size_t length() const { return word_.size(); }
  ExtensionPolicy policy() const { return policy_; }
  /// Color j_k of a 1-based position; positions past the stored window are
  /// not addressable.
  int color_at(size_t position) const { return colors_.at(position - 1); }
  /// Number of positions with an assigned color (N plus the extension window).
  size_t window() const { return colors_.size(); }

 private:
  RootDatum datum_;
  Word word_;
  ExtensionPolicy policy_;
  std::vector<int> colors_;
};

struct ZSequence {
  std::vector<int64_t> entries;  // entries[k-1] = a_k

  auto operator<=>(const ZSequence&) const = default;
};

enum class Direction { Raise, Lower };

/// One Kashiwara operator on the Z^infinity crystal.  Returns nullopt for the
/// zero element.  Throws InternalError("position overflow") when lowering
/// would need a position beyond N.
std::optional<ZSequence> zinf_apply(const WordContext& ctx, const ZSequence& a, int color, Direction direction);

/// sigma^{(i)}(a), which equals epsilon_i on Z^infinity.
int64_t zinf_epsilon(const WordContext& ctx, const ZSequence& a, int color);
/// wt(a) = -sum_k a_k alpha_{j_k}.
Weight zinf_weight(const WordContext& ctx, const ZSequence& a);

class LambdaCrystal {
 public:
  struct Element {
    ZSequence seq;               // image in B(infinity)
    Weight wt;
    std::vector<int64_t> eps;    // eps[i-1] = epsilon_i
    std::vector<int64_t> phi;    // phi[i-1] = phi_i
  };
  static constexpr size_t npos = static_cast<size_t>(-1);
  static constexpr size_t kDefaultCap = 2'000'000;

  const WordContext& context() const { return ctx_; }
  const Weight& highest_weight() const { return lambda_; }
  size_t size() const { return elements_.size(); }
  const Element& element(size_t b) const { return elements_.at(b); }
  const std::vector<Element>& elements() const { return elements_; }

  /// Index of f_i b / e_i b, or npos for zero.
  size_t f(size_t b, int color) const { return f_[b][color - 1]; }
  size_t e(size_t b, int color) const { return e_[b][color - 1]; }
  size_t highest() const { return highest_; }
  size_t lowest() const { return lowest_; }
  std::optional<size_t> find(const ZSequence& seq) const;

  friend LambdaCrystal generate_B_lambda(const WordContext& ctx, const Weight& lambda, size_t cap);

 private:
  LambdaCrystal(WordContext ctx, Weight lambda) : ctx_(std::move(ctx)), lambda_(std::move(lambda)) {}

  WordContext ctx_;
  Weight lambda_;
  std::vector<Element> elements_;   // sorted by seq
  std::vector<std::vector<size_t>> f_, e_;
  size_t highest_ = npos, lowest_ = npos;
};

LambdaCrystal generate_B_lambda(const WordContext& ctx, const Weight& lambda,
                                size_t cap = LambdaCrystal::kDefaultCap);

/// Phi_i(b): successive maximal raising strings in colors i_1, ..., i_N.
IntVec string_parametrization(const LambdaCrystal& crystal, size_t b);
/// Psi_i(b): coordinate m is the entry at position N - m + 1.
IntVec kashiwara_embedding(const LambdaCrystal& crystal, size_t b);

enum class SubsetTag { Demazure, OppositeDemazure, Richardson, Custom };

struct CrystalSubset {
  const LambdaCrystal* crystal = nullptr;
  std::vector<size_t> members;  // sorted
  SubsetTag tag = SubsetTag::Custom;

  size_t size() const { return members.size(); }
  bool contains(size_t b) const;
};

CrystalSubset demazure_subset(const LambdaCrystal& crystal, const WeylElement& w);
CrystalSubset opposite_demazure_subset(const LambdaCrystal& crystal, const WeylElement& v);
/// Throws std::invalid_argument("empty Richardson condition") unless v <= w.
CrystalSubset richardson_subset(const LambdaCrystal& crystal, const WeylElement& v, const WeylElement& w);

/// Closure of a set under f_i (Direction::Lower) or e_i (Direction::Raise).
std::vector<size_t> string_closure(const LambdaCrystal& crystal, std::vector<size_t> members, int color,
                                   Direction direction);

// -- character oracle -------------------------------------------------------

struct WeightMultiplicities {
  std::map<IntVec, int64_t> multiplicity;  // keyed by fundamental coordinates
  int64_t dimension = 0;
};

/// Freudenthal's recursion over dominant weights, spread over Weyl orbits.
WeightMultiplicities weight_multiplicities_oracle(const RootDatum& datum, const Weight& lambda,
                                                  int64_t cap = 2'000'000);

/// Positive roots in fundamental-weight coordinates, sorted by height.
std::vector<Weight> positive_roots(const RootDatum& datum);

}  // namespace stdeg
