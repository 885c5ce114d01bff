#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "finembed/embedding.hpp"
#include "finembed/report.hpp"
#include "finembed/setrep.hpp"

namespace finembed {

struct InstanceConfig {
  Nat seed = 1;
  Nat max_preperiod = 6;
  Nat max_period = 10;
  Nat horizon = kDefaultWindow;
  std::size_t corpus_size = 50;
};

/// Throws std::invalid_argument unless every bound is at least 1.
void validate(const InstanceConfig& cfg);

/// Upward invariance under A <=_fe B: thickness, piecewise syndeticity,
/// k-term progressions (k <= 8), upper Banach density (exact operands),
/// difference sets, and shifted intersections A ∩ (A - g) for small G ∋ 0.
/// Vacuous when A <=_fe B is false.
LawReport check_upward_invariance(const GroundSet& a, const GroundSet& b, const InstanceConfig& cfg);

/// Inclusion forced by the successor translate, two ways: B not <=_fe A and
/// B <=_fe A+1 imply B ⊆ A+1 (key "b_in_a_plus_1"); A <=_fe B and A+1 not
/// <=_fe B imply A ⊆ B (key "a_in_b").
LawReport check_translate_inclusion(const GroundSet& a, const GroundSet& b, Nat window = kDefaultWindow);

/// A <=_fe B <=_fe A+1 implies B ≡_fe A or B ≡_fe A+1.
LawReport check_sandwich(const GroundSet& a, const GroundSet& b, Nat window = kDefaultWindow);

LawReport check_reflexivity(const GroundSet& a, Nat window = kDefaultWindow);
LawReport check_transitivity(const GroundSet& a, const GroundSet& b, const GroundSet& c, Nat window = kDefaultWindow);

/// A random ultimately periodic set with preperiod <= max_preperiod,
/// period in [1, max_period] and a nonempty tail pattern, normalized.
GroundSet random_periodic(std::mt19937_64& rng, Nat max_preperiod, Nat max_period);
/// A random finite set with 1 to 5 elements below `bound`.
GroundSet random_finite(std::mt19937_64& rng, Nat bound);

/// ℕ, evens, odds, then seeded random sets (one in five finite), truncated
/// to corpus_size.
std::vector<GroundSet> generate_corpus(const InstanceConfig& cfg);

/// Every law over the seeded corpus: reflexivity, the three pairwise laws
/// on ordered pairs plus translate pairs (A, A + j), transitivity on
/// sampled chains, and pair/chain constructions on infinite members.
/// Deterministic for a given cfg regardless of `threads` (0 = hardware).
std::vector<LawReport> run_corpus(const InstanceConfig& cfg, unsigned threads = 0);

struct Tally {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t vacuous = 0;
  std::size_t unknown = 0;

  std::size_t total() const noexcept { return pass + fail + vacuous + unknown; }
};

std::map<std::string, Tally> tally(const std::vector<LawReport>& reports);

/// One JSON object on one line: law, instance, outcome, witness, and the
/// counterexample and target when present.
std::string to_json_line(const LawReport& r);

/// Oracle verdict on the report's counterexample against its target; No
/// confirms the counterexample. nullopt when the report carries none.
std::optional<Outcome> reverify_counterexample(const LawReport& r);

}  // namespace finembed
