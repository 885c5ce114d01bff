#pragma once

#include <optional>
#include <string>

#include "finembed/setrep.hpp"

namespace finembed {

/// A three-valued answer with evidence.
///
/// Yes from the embedding procedures carries a translate k with F + k ⊆ B.
/// No carries a finite certificate (a finite subset of the left operand that
/// has no admissible translate). Unknown carries the reason the horizon was
/// insufficient.
struct TriVerdict {
  Outcome outcome = Outcome::Unknown;
  std::optional<Nat> witness;
  std::optional<FiniteSet> certificate;
  std::string reason;

  static TriVerdict yes(std::optional<Nat> witness, std::string reason = {}) {
    return {Outcome::Yes, witness, std::nullopt, std::move(reason)};
  }
  static TriVerdict no(std::optional<FiniteSet> certificate, std::string reason = {}) {
    return {Outcome::No, std::nullopt, std::move(certificate), std::move(reason)};
  }
  static TriVerdict unknown(std::string reason) {
    return {Outcome::Unknown, std::nullopt, std::nullopt, std::move(reason)};
  }

  bool is_yes() const noexcept { return outcome == Outcome::Yes; }
  bool is_no() const noexcept { return outcome == Outcome::No; }
  bool is_unknown() const noexcept { return outcome == Outcome::Unknown; }
};

struct EquivVerdict {
  Outcome outcome = Outcome::Unknown;
  TriVerdict forward;   // A <=_fe B
  TriVerdict backward;  // B <=_fe A
};

/// Prefixes of infinite or sampled left operands are taken below this bound
/// when the right operand is sampled.
inline constexpr Nat kDefaultWindow = 10'000;

/// Least k with f + k ⊆ b. Complete for exact b (translates beyond
/// p_b + q_b repeat a residue class); for sampled b a failed search is
/// Unknown unless the tail-gap guarantee rules out every placement.
TriVerdict fe_finite_into(const FiniteSet& f, const GroundSet& b);

/// A <=_fe B. Exact operands are decided outright: for ultimately periodic
/// A and B, A <=_fe B holds iff a single k < p_B + q_B has A + k ⊆ B.
/// No verdicts carry the union over those k of the least escaping element.
/// With a sampled operand, Yes needs a finite or exact left side (or a
/// cofinite exact right side); No needs a finite subset of A that refuses B.
TriVerdict fe_decide(const GroundSet& a, const GroundSet& b, Nat window = kDefaultWindow);

/// A ≡_fe B, the three-valued conjunction of both directions.
EquivVerdict fe_equiv(const GroundSet& a, const GroundSet& b, Nat window = kDefaultWindow);

/// Strong non-embeddability: no two-element subset of a embeds in b.
/// A pair {c, c + d} embeds iff some b' >= c has b', b' + d in b. Yes means
/// strongly non f.e.; No carries the embeddable pair as certificate and its
/// translate as witness.
TriVerdict strongly_non_fe(const GroundSet& a, const GroundSet& b, Nat window);

/// Both directions of strong non-embeddability. For any common positive
/// difference one side translates rightward onto the other, so this holds
/// iff the difference sets are disjoint. No carries the least common
/// difference as witness.
TriVerdict mutually_strongly_unembeddable(const GroundSet& a, const GroundSet& b, Nat window);

/// Independent brute-force check of A <=_fe B by direct membership tests:
/// every prefix A ∩ [0, n], n < window, against translates k <= kmax.
/// No is returned only when the scanned translates are exhaustive for b;
/// Yes only when a is finite and lies entirely below the window.
TriVerdict fe_oracle_bruteforce(const GroundSet& a, const GroundSet& b, Nat window, Nat kmax);

}  // namespace finembed
