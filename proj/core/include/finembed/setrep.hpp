#pragma once

#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "finembed/types.hpp"

namespace finembed {

/// A finite subset of N, stored strictly increasing.
class FiniteSet {
 public:
  FiniteSet() = default;
  FiniteSet(std::initializer_list<Nat> xs);
  /// Sorts and removes duplicates.
  explicit FiniteSet(std::vector<Nat> xs);

  std::span<const Nat> elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  bool contains(Nat x) const noexcept;
  /// Precondition: non-empty.
  Nat min() const { return elements_.front(); }
  Nat max() const { return elements_.back(); }

  friend bool operator==(const FiniteSet&, const FiniteSet&) = default;

 private:
  std::vector<Nat> elements_;
};

/// x is a member iff (x < p and bit x of the preperiod is set) or
/// (x >= p and x mod q is in the pattern). Residues are absolute, not
/// offset by p. Instances are not necessarily canonical; `normalize` makes
/// them so.
class UltimatelyPeriodic {
 public:
  /// Throws std::invalid_argument on period 0 or a residue >= period.
  UltimatelyPeriodic(std::vector<bool> preperiod, Nat period, const std::vector<Nat>& residues);

  static UltimatelyPeriodic naturals() { return {{}, 1, {0}}; }
  static UltimatelyPeriodic evens() { return {{}, 2, {0}}; }
  static UltimatelyPeriodic odds() { return {{}, 2, {1}}; }

  Nat preperiod_length() const noexcept { return preperiod_.size(); }
  const std::vector<bool>& preperiod_bits() const noexcept { return preperiod_; }
  Nat period() const noexcept { return pattern_.size(); }
  bool in_pattern(Nat residue) const { return pattern_[residue]; }
  std::vector<Nat> residues() const;
  std::size_t pattern_size() const noexcept;
  bool contains(Nat x) const noexcept;

  friend bool operator==(const UltimatelyPeriodic&, const UltimatelyPeriodic&) = default;

 private:
  friend class PeriodicForm;
  UltimatelyPeriodic(std::vector<bool> preperiod, std::vector<bool> pattern)
      : preperiod_(std::move(preperiod)), pattern_(std::move(pattern)) {}

  std::vector<bool> preperiod_;
  std::vector<bool> pattern_;
};

/// A finite window onto a set that may be infinite.
///
/// Every x < horizon is decided by `known_members`. Listed members at or
/// beyond the horizon are certain members; other positions there are
/// unknown. When `tail_gap` g > 0, every member >= horizon exceeds its
/// predecessor in the set by at least g. The pair recursion in
/// constructions produces such sets.
class SampledPrefix {
 public:
  /// Throws std::invalid_argument if known_members is not strictly increasing.
  SampledPrefix(std::vector<Nat> known_members, Nat horizon, Nat tail_gap = 0);

  std::span<const Nat> known_members() const noexcept { return members_; }
  Nat horizon() const noexcept { return horizon_; }
  Nat tail_gap() const noexcept { return tail_gap_; }

  Outcome contains(Nat x) const noexcept;
  /// Joint membership of increasing points. Can answer No when each point
  /// alone is Unknown, via the tail-gap guarantee.
  Outcome contains_all(std::span<const Nat> points) const;

  friend bool operator==(const SampledPrefix&, const SampledPrefix&) = default;

 private:
  bool listed(Nat x) const noexcept;
  std::optional<Nat> listed_before(Nat x) const noexcept;

  std::vector<Nat> members_;
  Nat horizon_ = 0;
  Nat tail_gap_ = 0;
};

/// One of the three representations. FiniteSet and UltimatelyPeriodic are
/// "exact" and answer every membership query definitely.
class GroundSet {
 public:
  using Rep = std::variant<FiniteSet, UltimatelyPeriodic, SampledPrefix>;

  GroundSet() : rep_(FiniteSet{}) {}
  GroundSet(FiniteSet s) : rep_(std::move(s)) {}
  GroundSet(UltimatelyPeriodic s) : rep_(std::move(s)) {}
  GroundSet(SampledPrefix s) : rep_(std::move(s)) {}

  const Rep& rep() const noexcept { return rep_; }
  const FiniteSet* finite() const noexcept { return std::get_if<FiniteSet>(&rep_); }
  const UltimatelyPeriodic* periodic() const noexcept { return std::get_if<UltimatelyPeriodic>(&rep_); }
  const SampledPrefix* sampled() const noexcept { return std::get_if<SampledPrefix>(&rep_); }
  bool is_exact() const noexcept { return sampled() == nullptr; }

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  Rep rep_;
};

/// Canonical form: minimal period, then minimal preperiod; an empty tail
/// pattern becomes a FiniteSet. Idempotent.
GroundSet normalize(const GroundSet& s);

Outcome member(const GroundSet& s, Nat x);
/// Membership of every point in an increasing sequence.
Outcome member_all(const GroundSet& s, std::span<const Nat> points);

GroundSet translate(const GroundSet& s, Nat k);
GroundSet intersect(const GroundSet& a, const GroundSet& b);
GroundSet unite(const GroundSet& a, const GroundSet& b);

/// {x : x + t in s for every t in g}. Throws std::invalid_argument on empty g.
GroundSet shift_down_intersect(const GroundSet& s, const FiniteSet& g);

/// Positive differences {a' - a : a < a' in s}. Exact for exact inputs;
/// for sampled input, the differences below `window` realized by known
/// members (a sound under-approximation).
GroundSet difference_set(const GroundSet& s, Nat window);

/// Elements below `bound`. Throws HorizonError if a sampled set cannot
/// answer that far.
FiniteSet enumerate(const GroundSet& s, Nat bound);

std::optional<Nat> min_element(const GroundSet& s);

/// Least element strictly greater than `after` (least element overall when
/// `after` is empty). nullopt means definitely none. Throws HorizonError
/// when a sampled set cannot decide.
std::optional<Nat> next_after(const GroundSet& s, std::optional<Nat> after);

/// Exact inputs only: least x in a with x + shift not in b, or nullopt when
/// a + shift is contained in b.
std::optional<Nat> first_escape(const GroundSet& a, const GroundSet& b, Nat shift);

/// Yes for infinite exact sets, No for finite ones, Unknown for sampled.
Outcome is_infinite(const GroundSet& s);

/// Exact UP with full tail, i.e. contains every x >= preperiod length.
bool is_cofinite(const GroundSet& s);

/// The prefix view of s below `horizon`.
SampledPrefix sample_prefix(const GroundSet& s, Nat horizon);

/// Compact human-readable form; exact sets print in DSL syntax.
std::string to_string(const GroundSet& s);
std::string to_string(const FiniteSet& s);

/// A representation-independent (preperiod, period, pattern) view of an
/// exact set; finite sets use period 1 with empty pattern.
class PeriodicForm {
 public:
  explicit PeriodicForm(const GroundSet& exact);

  Nat preperiod() const noexcept { return preperiod_; }
  Nat period() const noexcept { return period_; }
  bool contains(Nat x) const noexcept {
    return x < preperiod_ ? bits_[x] : pattern_[x % period_];
  }
  bool tail_residue(Nat r) const { return pattern_[r]; }
  bool tail_empty() const noexcept;

  UltimatelyPeriodic to_periodic() const { return {bits_, pattern_}; }

 private:
  Nat preperiod_ = 0;
  Nat period_ = 1;
  std::vector<bool> bits_;
  std::vector<bool> pattern_;
};

/// lcm that throws std::overflow_error instead of wrapping.
Nat checked_lcm(Nat a, Nat b);

}  // namespace finembed
