#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace finembed {

using Nat = std::uint64_t;

/// Three-valued answer used for membership and every decision procedure.
enum class Outcome : std::uint8_t { No, Yes, Unknown };

/// Kleene conjunction.
constexpr Outcome all_of(Outcome a, Outcome b) noexcept {
  if (a == Outcome::No || b == Outcome::No) return Outcome::No;
  if (a == Outcome::Yes && b == Outcome::Yes) return Outcome::Yes;
  return Outcome::Unknown;
}

/// Kleene disjunction.
constexpr Outcome any_of(Outcome a, Outcome b) noexcept {
  if (a == Outcome::Yes || b == Outcome::Yes) return Outcome::Yes;
  if (a == Outcome::No && b == Outcome::No) return Outcome::No;
  return Outcome::Unknown;
}

constexpr Outcome from_bool(bool b) noexcept { return b ? Outcome::Yes : Outcome::No; }

constexpr std::string_view to_string(Outcome o) noexcept {
  switch (o) {
    case Outcome::No: return "No";
    case Outcome::Yes: return "Yes";
    case Outcome::Unknown: return "Unknown";
  }
  return "Unknown";
}

/// Raised when an answer depends on membership beyond what a sampled set
/// (or a finite set being enumerated as if infinite) can supply.
class HorizonError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace finembed
