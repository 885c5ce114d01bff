#pragma once

#include <compare>
#include <optional>
#include <string>

#include "finembed/embedding.hpp"
#include "finembed/setrep.hpp"

namespace finembed {

__extension__ using Wide = unsigned __int128;

/// Non-negative rational in lowest terms. Comparisons are exact.
class Rational {
 public:
  Rational() = default;
  /// Throws std::invalid_argument on a zero denominator.
  Rational(Nat num, Nat den);

  Nat num() const noexcept { return num_; }
  Nat den() const noexcept { return den_; }
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    const auto lhs = static_cast<Wide>(a.num_) * b.den_;
    const auto rhs = static_cast<Wide>(b.num_) * a.den_;
    return lhs <=> rhs;
  }

 private:
  Nat num_ = 0;
  Nat den_ = 1;
};

/// |x - y| as a rational.
Rational abs_diff(const Rational& x, const Rational& y);

enum class DensityMethod : std::uint8_t { Exact, Windowed };

struct DensityReport {
  Rational value;
  DensityMethod method = DensityMethod::Exact;
  std::optional<Nat> window;  // set when windowed
};

/// Exact for finite (0) and ultimately periodic (|pattern|/q) sets. For a
/// sampled set, the largest count/W over length-W intervals inside [0, H),
/// a lower bound for the true value. Throws std::invalid_argument on W = 0
/// for sampled input, HorizonError when W exceeds the horizon.
DensityReport upper_banach_density(const GroundSet& s, Nat window);

/// Windowed estimate over [0, limit) for any set, exact or sampled.
Rational windowed_density(const GroundSet& s, Nat window, Nat limit);

/// Contains arbitrarily long intervals. Never Yes for sampled input; the
/// witness is the longest run found (the sampled verdict is Unknown whether
/// or not that run reaches `threshold`).
TriVerdict is_thick(const GroundSet& s, Nat threshold = 1);

/// Gaps between consecutive members bounded. Yes carries the bound on the
/// distance from any point to the next member.
TriVerdict is_syndetic(const GroundSet& s);
/// Ultimately periodic sets collapse this to syndeticity; finite sets are
/// never piecewise syndetic.
TriVerdict is_piecewise_syndetic(const GroundSet& s);

struct ApWitness {
  Nat start = 0;
  Nat difference = 1;
  Nat length = 1;

  friend bool operator==(const ApWitness&, const ApWitness&) = default;
};

/// Longest progression inside s ∩ [0, W). Ties go to the smaller start, then
/// the smaller difference. nullopt when s has no members below W.
std::optional<ApWitness> longest_ap(const GroundSet& s, Nat window);

struct ApVerdict {
  Outcome outcome = Outcome::Unknown;
  std::optional<ApWitness> witness;
  std::string reason;
};

/// Infinite UP: Yes with difference q from the first tail member. Finite:
/// exhaustive. Sampled: searches [0, min(W, H)); absence is Unknown.
/// Throws std::invalid_argument on k = 0 or W = 0.
ApVerdict contains_k_ap(const GroundSet& s, Nat k, Nat window);

}  // namespace finembed
