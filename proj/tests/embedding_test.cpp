#include <gtest/gtest.h>

#include "finembed/embedding.hpp"
#include "support/oracles.hpp"

namespace finembed {
namespace {

using ref::materialize;

const GroundSet kEvens = UltimatelyPeriodic::evens();
const GroundSet kOdds = UltimatelyPeriodic::odds();
const GroundSet kNat = UltimatelyPeriodic::naturals();

// {1} ∪ {even x >= 10}
GroundSet one_and_evens_from_ten() {
  std::vector<bool> bits(10, false);
  bits[1] = true;
  return normalize(UltimatelyPeriodic(bits, 2, {0}));
}

bool embeds_with(const FiniteSet& f, const GroundSet& b, Nat k) {
  for (Nat x : f.elements()) {
    if (member(b, x + k) != Outcome::Yes) return false;
  }
  return true;
}

TEST(FeFiniteInto, Examples) {
  auto v = fe_finite_into({0, 2, 4}, kOdds);
  EXPECT_TRUE(v.is_yes());
  EXPECT_EQ(v.witness, 1u);
  v = fe_finite_into({0, 1}, kEvens);
  EXPECT_TRUE(v.is_no());
  EXPECT_EQ(v.certificate, (FiniteSet{0, 1}));
  v = fe_finite_into({}, FiniteSet{});
  EXPECT_TRUE(v.is_yes());
  EXPECT_EQ(v.witness, 0u);
  v = fe_finite_into({5}, kEvens);
  EXPECT_EQ(v.witness, 1u);
}

TEST(FeFiniteInto, LeastWitnessAgainstScan) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 600; ++i) {
    const FiniteSet f = ref::random_finite_set(rng, 4, 20);
    const GroundSet b = ref::random_exact(rng, 8, 10);
    const auto [pb, qb] = ref::shape(b);
    const Nat n = (f.empty() ? 0 : f.max()) + 1;
    const Nat kmax = pb + 3 * qb + 5;
    const auto expect = ref::naive_prefix_translate(materialize(f, n), materialize(b, n + kmax + 1), kmax);
    const TriVerdict v = fe_finite_into(f, b);
    ASSERT_FALSE(v.is_unknown());
    EXPECT_EQ(v.is_yes(), expect.has_value()) << to_string(f) << " into " << to_string(b);
    if (v.is_yes()) {
      EXPECT_EQ(v.witness, expect);
    } else {
      // The certificate is a subset of f with no translate of its own.
      for (Nat x : v.certificate->elements()) EXPECT_TRUE(f.contains(x));
      EXPECT_TRUE(fe_finite_into(*v.certificate, b).is_no());
    }
  }
}

TEST(FeFiniteInto, SampledTarget) {
  const SampledPrefix b({0, 3, 11, 32}, 40, 20);
  auto v = fe_finite_into({0, 8}, b);
  EXPECT_TRUE(v.is_yes());
  EXPECT_EQ(v.witness, 3u);
  // {0, 1}: no listed pair differs by 1 and the tail gap rules out the rest.
  v = fe_finite_into({0, 1}, b);
  EXPECT_TRUE(v.is_no());
  // Without a tail gap nothing past the horizon is excluded.
  v = fe_finite_into({0, 1}, SampledPrefix({0, 3, 11, 32}, 40));
  EXPECT_TRUE(v.is_unknown());
}

TEST(FeDecide, Examples) {
  auto v = fe_decide(kEvens, kOdds);
  EXPECT_TRUE(v.is_yes());
  EXPECT_EQ(v.witness, 1u);
  v = fe_decide(one_and_evens_from_ten(), kEvens);
  EXPECT_TRUE(v.is_no());
  EXPECT_EQ(v.certificate, (FiniteSet{1, 10}));
  v = fe_decide(kNat, kEvens);
  EXPECT_TRUE(v.is_no());
  EXPECT_EQ(v.certificate, (FiniteSet{0, 1}));
}

TEST(FeDecide, PreperiodOfTargetCanBeUsed) {
  // A ⊆ B with k = 0 even though no tail residue alone works.
  std::vector<bool> bits(10, false);
  bits[1] = true;
  const GroundSet a = normalize(UltimatelyPeriodic(bits, 2, {0}));
  const GroundSet b = normalize(UltimatelyPeriodic({false, true}, 2, {0}));
  const auto v = fe_decide(a, b);
  EXPECT_TRUE(v.is_yes());
  EXPECT_EQ(v.witness, 0u);
}

TEST(FeDecide, AgreesWithNaiveScan) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 1500; ++i) {
    const GroundSet a = ref::random_exact(rng, 8, 12);
    const GroundSet b = ref::random_exact(rng, 8, 12);
    const auto expect = ref::naive_fe_exact(a, b);
    const TriVerdict v = fe_decide(a, b);
    ASSERT_FALSE(v.is_unknown());
    ASSERT_EQ(v.is_yes(), expect.has_value()) << to_string(a) << " vs " << to_string(b);
    if (v.is_yes()) {
      EXPECT_EQ(v.witness, expect);
    } else {
      ASSERT_TRUE(v.certificate.has_value());
      for (Nat x : v.certificate->elements()) EXPECT_EQ(member(a, x), Outcome::Yes);
      EXPECT_TRUE(fe_finite_into(*v.certificate, b).is_no()) << to_string(*v.certificate);
    }
  }
}

TEST(FeDecide, ReflexiveWithZeroAndTranslateInvariant) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    const GroundSet a = ref::random_exact(rng, 8, 12);
    const auto v = fe_decide(a, a);
    EXPECT_TRUE(v.is_yes());
    EXPECT_EQ(v.witness, 0u);
    for (Nat k = 0; k <= 20; ++k) {
      const GroundSet shifted = translate(a, k);
      EXPECT_TRUE(fe_decide(a, shifted).is_yes());
      EXPECT_EQ(fe_decide(shifted, a).is_yes(), ref::naive_fe_exact(shifted, a).has_value());
    }
  }
}

TEST(FeDecide, PurelyPeriodicSetsAreTranslateEquivalent) {
  std::mt19937_64 rng(26);
  for (int i = 0; i < 200; ++i) {
    const GroundSet a = ref::random_raw(rng, 0, 12).build();
    for (Nat k = 0; k <= 20; ++k) EXPECT_EQ(fe_equiv(a, translate(a, k)).outcome, Outcome::Yes) << to_string(a);
  }
}

TEST(FeDecide, TranslateEquivalenceNeedsRoomToTheLeft) {
  // The preperiodic element 1 is the only partner at odd distance, and
  // nothing lies below it to receive 2.
  const GroundSet a = one_and_evens_from_ten();
  EXPECT_TRUE(fe_decide(a, translate(a, 1)).is_yes());
  const auto back = fe_decide(translate(a, 1), a);
  EXPECT_TRUE(back.is_no());
  EXPECT_FALSE(ref::naive_fe_exact(translate(a, 1), a).has_value());
  EXPECT_TRUE(fe_decide(FiniteSet{0, 1}, FiniteSet{5, 6}).is_yes());
  EXPECT_TRUE(fe_decide(FiniteSet{5, 6}, FiniteSet{0, 1}).is_no());
}

TEST(FeDecide, TransitiveAndMonotone) {
  std::mt19937_64 rng(24);
  int chains = 0;
  for (int i = 0; i < 3000; ++i) {
    const GroundSet a = ref::random_exact(rng, 5, 6);
    const GroundSet b = ref::random_exact(rng, 5, 6);
    const GroundSet c = ref::random_exact(rng, 5, 6);
    if (fe_decide(a, b).is_yes() && fe_decide(b, c).is_yes()) {
      ++chains;
      EXPECT_TRUE(fe_decide(a, c).is_yes()) << to_string(a) << " " << to_string(b) << " " << to_string(c);
    }
    // A subset of a (a ∩ c) inherits every embedding of a.
    if (fe_decide(a, b).is_yes()) EXPECT_TRUE(fe_decide(intersect(a, c), b).is_yes());
  }
  EXPECT_GT(chains, 100);
}

TEST(FeDecide, SampledOperands) {
  const SampledPrefix a({0, 3, 11, 32}, 40, 20);
  // Finite left side: decided by the finite search.
  EXPECT_TRUE(fe_decide(FiniteSet{0, 3}, a).is_yes());
  // Every set embeds in a thick exact set.
  auto v = fe_decide(a, kNat);
  EXPECT_TRUE(v.is_yes());
  EXPECT_EQ(v.witness, 0u);
  // A consecutive pair refutes embedding ℕ in the sparse prefix.
  v = fe_decide(kNat, a);
  EXPECT_TRUE(v.is_no());
  EXPECT_EQ(v.certificate, (FiniteSet{0, 1}));
  // Known elements embed, but the rest is open.
  EXPECT_TRUE(fe_decide(a, kEvens).is_no());
  EXPECT_TRUE(fe_decide(SampledPrefix({0, 4}, 10), kEvens).is_unknown());
}

TEST(FeEquiv, Examples) {
  EXPECT_EQ(fe_equiv(kEvens, kOdds).outcome, Outcome::Yes);
  EXPECT_EQ(fe_equiv(kEvens, kNat).outcome, Outcome::No);
  EXPECT_EQ(fe_equiv(FiniteSet{0}, FiniteSet{0}).outcome, Outcome::Yes);
}

TEST(StronglyNonFe, Examples) {
  const GroundSet a = FiniteSet{0, 3, 11, 32};
  const GroundSet b = FiniteSet{1, 6, 19, 53};
  EXPECT_TRUE(strongly_non_fe(a, b, 100).is_yes());
  EXPECT_TRUE(strongly_non_fe(b, a, 100).is_yes());
  EXPECT_TRUE(mutually_strongly_unembeddable(a, b, 100).is_yes());
  auto v = strongly_non_fe(kEvens, kEvens, 100);
  EXPECT_TRUE(v.is_no());
  EXPECT_EQ(v.certificate, (FiniteSet{0, 2}));
  v = strongly_non_fe(kEvens, kOdds, 100);
  EXPECT_TRUE(v.is_no());
  v = mutually_strongly_unembeddable(kEvens, kOdds, 100);
  EXPECT_TRUE(v.is_no());
  EXPECT_EQ(v.witness, 2u);
}

TEST(StronglyNonFe, OneWayRelationIsAsymmetric) {
  // Same difference 2 on both sides, but {5, 7} sits too far right.
  const GroundSet a = FiniteSet{5, 7};
  const GroundSet b = FiniteSet{0, 2};
  EXPECT_TRUE(strongly_non_fe(a, b, 100).is_yes());
  EXPECT_TRUE(strongly_non_fe(b, a, 100).is_no());
  EXPECT_TRUE(mutually_strongly_unembeddable(a, b, 100).is_no());
}

// Two-element subsets of a embedding in b, by direct enumeration on prefixes.
bool naive_some_pair_embeds(const GroundSet& a, const GroundSet& b) {
  const auto [pa, qa] = ref::shape(a);
  const auto [pb, qb] = ref::shape(b);
  const Nat span = std::max({pa, pb, Nat{1}}) + std::lcm(qa, qb) + 2 * (pa + qa + pb + qb) + 4;
  const auto ba = materialize(a, 2 * span);
  const auto bb = materialize(b, 4 * span);
  const auto xs = ref::members(ba);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size() && xs[j] - xs[i] < span; ++j) {
      for (Nat k = 0; xs[j] + k < bb.size(); ++k) {
        if (bb[xs[i] + k] && bb[xs[j] + k]) return true;
      }
    }
  }
  return false;
}

TEST(StronglyNonFe, AgreesWithPairEnumeration) {
  std::mt19937_64 rng(25);
  for (int i = 0; i < 400; ++i) {
    const GroundSet a = ref::random_exact(rng, 6, 8);
    const GroundSet b = ref::random_exact(rng, 6, 8);
    const TriVerdict v = strongly_non_fe(a, b, 1000);
    ASSERT_FALSE(v.is_unknown());
    EXPECT_EQ(v.is_no(), naive_some_pair_embeds(a, b)) << to_string(a) << " vs " << to_string(b);
    const TriVerdict m = mutually_strongly_unembeddable(a, b, 1000);
    EXPECT_EQ(m.outcome, mutually_strongly_unembeddable(b, a, 1000).outcome);
    EXPECT_EQ(m.is_yes(), strongly_non_fe(a, b, 1000).is_yes() && strongly_non_fe(b, a, 1000).is_yes());
  }
}

TEST(StronglyNonFe, SampledOperands) {
  const GroundSet a = SampledPrefix({0, 3, 11, 32}, 40, 20);
  const GroundSet b = SampledPrefix({1, 6, 19, 53}, 60, 30);
  EXPECT_TRUE(mutually_strongly_unembeddable(a, b, 1000).is_unknown());
  EXPECT_TRUE(mutually_strongly_unembeddable(a, translate(a, 1), 1000).is_no());
  EXPECT_TRUE(strongly_non_fe(FiniteSet{0, 1}, a, 1000).is_yes());
}

TEST(Oracle, Examples) {
  auto v = fe_oracle_bruteforce(kEvens, kOdds, 50, 50);
  EXPECT_TRUE(v.is_unknown());
  v = fe_oracle_bruteforce(kNat, kEvens, 10, 100);
  EXPECT_TRUE(v.is_no());
  EXPECT_EQ(v.certificate, (FiniteSet{0, 1}));
  v = fe_oracle_bruteforce(one_and_evens_from_ten(), kEvens, 20, 200);
  EXPECT_TRUE(v.is_no());
  ASSERT_TRUE(v.certificate.has_value());
  EXPECT_TRUE(v.certificate->contains(1));
  EXPECT_TRUE(v.certificate->contains(10));
  v = fe_oracle_bruteforce(FiniteSet{0, 2}, kOdds, 10, 5);
  EXPECT_TRUE(v.is_yes());
  EXPECT_EQ(v.witness, 1u);
  EXPECT_THROW(fe_oracle_bruteforce(kNat, kNat, 0, 1), std::invalid_argument);
}

TEST(Oracle, NoRequiresExhaustiveRange) {
  // kmax too small to cover the period of the target.
  const GroundSet b = normalize(UltimatelyPeriodic({}, 7, {6}));
  EXPECT_TRUE(fe_oracle_bruteforce(FiniteSet{0}, b, 5, 3).is_unknown());
  EXPECT_TRUE(fe_oracle_bruteforce(FiniteSet{0}, b, 5, 6).is_yes());
}

}  // namespace
}  // namespace finembed
