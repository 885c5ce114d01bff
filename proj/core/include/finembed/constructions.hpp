#pragma once

#include <optional>
#include <string>
#include <vector>

#include "finembed/embedding.hpp"
#include "finembed/report.hpp"
#include "finembed/setrep.hpp"

namespace finembed {

/// The interleaved recursion over the increasing enumeration of a source X:
///   a_0 = x_0, b_0 = x_1,
///   a_{n+1} = min{x in X : x > a_n + b_n + 1},
///   b_{n+1} = min{x in X : x > b_n + a_{n+1} + 1}.
/// Terms are produced in (a_n, b_n) pairs.
class PairRecursion {
 public:
  explicit PairRecursion(GroundSet source) : source_(std::move(source)) {}

  /// Throws HorizonError when the source runs out or cannot answer, and
  /// std::overflow_error if a term would exceed the range of Nat.
  std::pair<Nat, Nat> next();
  std::size_t produced() const noexcept { return a_.size(); }

 private:
  GroundSet source_;
  std::vector<Nat> a_;
  std::vector<Nat> b_;
};

struct UnembeddablePair {
  std::vector<Nat> a_elements;
  std::vector<Nat> b_elements;
  GroundSet source;
  /// Positions of the source below this bound were consulted.
  Nat horizon = 0;

  /// Each side as a prefix of the infinite sequence it begins. Horizons
  /// and tail gaps follow from the growth guard of the recursion. Require
  /// at least one term.
  SampledPrefix as_sampled_a() const;
  SampledPrefix as_sampled_b() const;
};

/// First n terms of each sequence. Throws std::invalid_argument on n = 0 and
/// HorizonError (naming the shortfall) when the source is exhausted.
UnembeddablePair unembeddable_pair(const GroundSet& x, std::size_t n);

/// Disjointness, containment in the source, and disjoint difference sets.
/// A fail carries the offending element or pair.
LawReport verify_pair(const UnembeddablePair& p);

struct ChainResult {
  /// sets[0] is the input; sets[i + 1] is the certified side built inside
  /// sets[i].
  std::vector<GroundSet> sets;
  /// certificates[i] is the oracle's No for sets[i] <=_fe sets[i + 1].
  std::vector<TriVerdict> certificates;
  std::vector<char> used_a_side;
  /// Set when the chain stopped short of the requested depth.
  std::optional<std::string> error;
};

/// `depth` certified steps X_0 ⊃ X_1 ⊃ ... with X_i not <=_fe X_{i+1}. Each
/// step runs the pair recursion inside the previous level, keeps the
/// A-side when the oracle certifies it (else the B-side), and stops with
/// `error` set when neither side can be certified or the levels below run
/// out. The deepest level has at least `count` elements. Throws
/// std::invalid_argument on zero depth or count.
ChainResult descending_chain(const GroundSet& x, std::size_t depth, std::size_t count);

/// Subsets of {0, ..., m} that contain 0 and have n elements, in
/// lexicographic order; C(m, n - 1) of them. Empty when m < n - 1. Throws
/// std::invalid_argument on n = 0.
std::vector<FiniteSet> minimal_sets(std::size_t n, Nat m);

/// Binomial coefficient; throws std::overflow_error when out of range.
Nat binomial(Nat m, Nat k);

}  // namespace finembed
