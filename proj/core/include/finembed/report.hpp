#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "finembed/setrep.hpp"

namespace finembed {

enum class LawOutcome : std::uint8_t { Pass, Fail, Vacuous, Unknown };

constexpr std::string_view to_string(LawOutcome o) noexcept {
  switch (o) {
    case LawOutcome::Pass: return "pass";
    case LawOutcome::Fail: return "fail";
    case LawOutcome::Vacuous: return "vacuous";
    case LawOutcome::Unknown: return "unknown";
  }
  return "unknown";
}

/// Any fail wins, then any pass, then any unknown; vacuous only if all are.
LawOutcome combine(LawOutcome a, LawOutcome b) noexcept;

/// Outcome of a checked law instance.
///
/// Vacuous means the hypothesis is definitely false; Unknown means it (or
/// the conclusion) could not be settled within the horizon. A fail on an
/// embedding law carries `counterexample`, a finite subset of the left side
/// that must not embed in `refuted_target`; the oracle can re-check it.
struct LawReport {
  std::string law;
  std::string instance;
  LawOutcome outcome = LawOutcome::Vacuous;
  std::vector<std::pair<std::string, std::string>> witness;
  std::optional<FiniteSet> counterexample;
  std::optional<GroundSet> refuted_target;

  void note(std::string key, std::string value) { witness.emplace_back(std::move(key), std::move(value)); }
  /// First witness value under `key`, if any.
  std::optional<std::string> lookup(std::string_view key) const;
};

}  // namespace finembed
