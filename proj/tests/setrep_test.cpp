#include <gtest/gtest.h>

#include "finembed/setrep.hpp"
#include "support/oracles.hpp"

namespace finembed {
namespace {

using ref::Bits;
using ref::materialize;

UltimatelyPeriodic up(std::vector<bool> bits, Nat q, std::vector<Nat> rs) { return {std::move(bits), q, rs}; }

TEST(FiniteSet, SortsAndDeduplicates) {
  const FiniteSet f(std::vector<Nat>{11, 0, 3, 3});
  EXPECT_EQ(std::vector<Nat>(f.elements().begin(), f.elements().end()), (std::vector<Nat>{0, 3, 11}));
  EXPECT_TRUE(f.contains(3));
  EXPECT_FALSE(f.contains(4));
  EXPECT_TRUE(FiniteSet{}.empty());
}

TEST(UltimatelyPeriodic, RejectsBadFields) {
  EXPECT_THROW(up({}, 0, {}), std::invalid_argument);
  EXPECT_THROW(up({}, 2, {2}), std::invalid_argument);
}

TEST(Normalize, ShrinksPeriod) {
  EXPECT_EQ(normalize(up({}, 4, {0, 2})), GroundSet(UltimatelyPeriodic::evens()));
}

TEST(Normalize, ShrinksPreperiod) {
  EXPECT_EQ(normalize(up({true, false}, 2, {0})), GroundSet(UltimatelyPeriodic::evens()));
}

TEST(Normalize, EmptyPatternIsFinite) {
  EXPECT_EQ(normalize(up({}, 3, {})), GroundSet(FiniteSet{}));
  EXPECT_EQ(normalize(up({false, true, true}, 5, {})), GroundSet(FiniteSet{1, 2}));
}

TEST(Normalize, IdempotentAndMembershipPreserving) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const GroundSet raw = ref::random_raw(rng, 10, 12, i % 5 != 0).build();
    const GroundSet n = normalize(raw);
    EXPECT_EQ(normalize(n), n);
    const auto [p, q] = ref::shape(raw);
    const Nat bound = 10 * (p + q);
    EXPECT_EQ(materialize(n, bound), materialize(raw, bound)) << to_string(raw);
    if (const auto* c = n.periodic()) {
      // No shorter period or preperiod describes the same tail.
      for (Nat d = 1; d < c->period(); ++d) {
        if (c->period() % d != 0) continue;
        bool same = true;
        for (Nat r = 0; r < c->period() && same; ++r) same = c->in_pattern(r) == c->in_pattern(r % d);
        EXPECT_FALSE(same) << to_string(n);
      }
      if (c->preperiod_length() > 0) {
        const Nat last = c->preperiod_length() - 1;
        EXPECT_NE(c->preperiod_bits()[last], c->in_pattern(last % c->period())) << to_string(n);
      }
    }
  }
}

TEST(Member, ThreeValued) {
  EXPECT_EQ(member(UltimatelyPeriodic::evens(), 4), Outcome::Yes);
  EXPECT_EQ(member(UltimatelyPeriodic::evens(), 5), Outcome::No);
  const SampledPrefix s({0, 3, 11}, 20);
  EXPECT_EQ(member(s, 32), Outcome::Unknown);
  EXPECT_EQ(member(s, 12), Outcome::No);
  EXPECT_EQ(member(s, 11), Outcome::Yes);
}

TEST(SampledPrefix, Validation) {
  EXPECT_THROW(SampledPrefix({3, 1}, 10), std::invalid_argument);
  // A listed member past the horizon must respect the tail gap.
  EXPECT_THROW(SampledPrefix({0, 10, 12}, 11, 5), std::invalid_argument);
  EXPECT_NO_THROW(SampledPrefix({0, 10, 16}, 11, 5));
}

TEST(SampledPrefix, TailGapRefutesClosePoints) {
  const SampledPrefix s({0, 3, 11}, 20, 10);
  EXPECT_EQ(s.contains(25), Outcome::Unknown);
  const std::vector<Nat> close{25, 27};
  EXPECT_EQ(s.contains_all(close), Outcome::No);
  const std::vector<Nat> far{25, 40};
  EXPECT_EQ(s.contains_all(far), Outcome::Unknown);
  // 11 is the last member below 20, so a member at 20 would be 9 above it.
  const std::vector<Nat> near_last{20};
  EXPECT_EQ(s.contains_all(near_last), Outcome::No);
}

TEST(Translate, Examples) {
  EXPECT_EQ(translate(FiniteSet{0, 3, 11}, 1), GroundSet(FiniteSet{1, 4, 12}));
  EXPECT_EQ(translate(UltimatelyPeriodic::evens(), 1), GroundSet(UltimatelyPeriodic::odds()));
  const GroundSet s = normalize(up({true, false, true}, 3, {1}));
  EXPECT_EQ(translate(s, 0), s);
  const auto t = translate(SampledPrefix({0, 3}, 5, 2), 4);
  ASSERT_NE(t.sampled(), nullptr);
  EXPECT_EQ(t.sampled()->horizon(), 9u);
  EXPECT_EQ(t.sampled()->tail_gap(), 2u);
}

TEST(Translate, ComposesAdditively) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 300; ++i) {
    const GroundSet s = ref::random_exact(rng, 8, 10);
    const Nat j = rng() % 15;
    const Nat k = rng() % 15;
    EXPECT_EQ(translate(translate(s, j), k), translate(s, j + k));
    const Bits base = materialize(s, 200);
    const Bits moved = materialize(translate(s, k), 200 + k);
    for (Nat x = 0; x < 200; ++x) EXPECT_EQ(moved[x + k], base[x]);
    for (Nat x = 0; x < k; ++x) EXPECT_FALSE(moved[x]);
  }
}

TEST(Algebra, Examples) {
  const GroundSet evens = UltimatelyPeriodic::evens();
  const GroundSet odds = UltimatelyPeriodic::odds();
  EXPECT_EQ(intersect(evens, up({}, 3, {0})), GroundSet(up({}, 6, {0})));
  EXPECT_EQ(unite(evens, odds), GroundSet(UltimatelyPeriodic::naturals()));
  EXPECT_EQ(intersect(evens, odds), GroundSet(FiniteSet{}));
}

TEST(Algebra, PointwiseAgainstOracle) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 400; ++i) {
    const GroundSet a = ref::random_exact(rng, 8, 12);
    const GroundSet b = ref::random_exact(rng, 8, 12);
    const auto [pa, qa] = ref::shape(a);
    const auto [pb, qb] = ref::shape(b);
    const Nat n = std::max(pa, pb) + 2 * std::lcm(qa, qb) + 10;
    const Bits ba = materialize(a, n);
    const Bits bb = materialize(b, n);
    const Bits bi = materialize(intersect(a, b), n);
    const Bits bu = materialize(unite(a, b), n);
    for (Nat x = 0; x < n; ++x) {
      EXPECT_EQ(bi[x], ba[x] && bb[x]);
      EXPECT_EQ(bu[x], ba[x] || bb[x]);
    }
  }
}

TEST(Algebra, SampledOperandKeepsHorizon) {
  const GroundSet s = SampledPrefix({0, 3, 11}, 20);
  const GroundSet i = intersect(s, UltimatelyPeriodic::odds());
  ASSERT_NE(i.sampled(), nullptr);
  EXPECT_EQ(i.sampled()->horizon(), 20u);
  EXPECT_EQ(member(i, 3), Outcome::Yes);
  EXPECT_EQ(member(i, 0), Outcome::No);
  EXPECT_EQ(member(i, 21), Outcome::Unknown);
}

TEST(ShiftDownIntersect, Examples) {
  const GroundSet evens = UltimatelyPeriodic::evens();
  EXPECT_EQ(shift_down_intersect(evens, {0, 2}), evens);
  EXPECT_EQ(shift_down_intersect(evens, {0, 1}), GroundSet(FiniteSet{}));
  EXPECT_EQ(shift_down_intersect(UltimatelyPeriodic::naturals(), {5}), GroundSet(UltimatelyPeriodic::naturals()));
  EXPECT_THROW(shift_down_intersect(evens, FiniteSet{}), std::invalid_argument);
  const auto sampled = shift_down_intersect(SampledPrefix({0, 3, 11}, 20), {0, 3});
  ASSERT_NE(sampled.sampled(), nullptr);
  EXPECT_EQ(sampled.sampled()->horizon(), 17u);
}

TEST(ShiftDownIntersect, PointwiseAgainstOracle) {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 300; ++i) {
    const GroundSet s = ref::random_exact(rng, 8, 10);
    const FiniteSet g = ref::random_finite_set(rng, 3, 6);
    if (g.empty()) continue;
    const Bits bs = materialize(s, 300);
    const Bits out = materialize(shift_down_intersect(s, g), 290);
    for (Nat x = 0; x < 290; ++x) {
      bool all = true;
      for (Nat t : g.elements()) all = all && bs[x + t];
      EXPECT_EQ(out[x], all) << to_string(s) << " G=" << to_string(g) << " x=" << x;
    }
    EXPECT_EQ(shift_down_intersect(s, {0}), normalize(s));
  }
}

TEST(DifferenceSet, Examples) {
  EXPECT_EQ(difference_set(FiniteSet{0, 3, 11}, 100), GroundSet(FiniteSet{3, 8, 11}));
  const GroundSet de = difference_set(UltimatelyPeriodic::evens(), 100);
  EXPECT_EQ(member(de, 0), Outcome::No);
  EXPECT_EQ(member(de, 2), Outcome::Yes);
  EXPECT_EQ(member(de, 3), Outcome::No);
  EXPECT_EQ(member(de, 1000), Outcome::Yes);
  const GroundSet ds = difference_set(SampledPrefix({0, 3, 11, 32}, 40), 100);
  ASSERT_NE(ds.sampled(), nullptr);
  const auto listed = ds.sampled()->known_members();
  EXPECT_EQ(std::vector<Nat>(listed.begin(), listed.end()), (std::vector<Nat>{3, 8, 11, 21, 29, 32}));
}

TEST(DifferenceSet, ExactAgainstPairEnumeration) {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 300; ++i) {
    const GroundSet s = ref::random_exact(rng, 8, 12);
    const auto [p, q] = ref::shape(s);
    const Nat d_limit = 60;
    // Any difference d has a witness pair starting below p + q.
    const auto naive = ref::naive_differences(materialize(s, p + q + d_limit + 1), d_limit);
    const Bits got = materialize(difference_set(s, 1000), d_limit);
    for (Nat d = 0; d < d_limit; ++d) EXPECT_EQ(got[d], naive.contains(d)) << to_string(s) << " d=" << d;
  }
}

TEST(DifferenceSet, SampledIsSound) {
  const SampledPrefix s({2, 5, 9, 30, 31}, 35, 0);
  const GroundSet d = difference_set(s, 1000);
  std::set<Nat> pairs;
  const auto xs = s.known_members();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) pairs.insert(xs[j] - xs[i]);
  }
  for (Nat x : d.sampled()->known_members()) EXPECT_TRUE(pairs.contains(x));
}

TEST(Enumerate, ExamplesAndHorizon) {
  EXPECT_EQ(enumerate(UltimatelyPeriodic::evens(), 7), (FiniteSet{0, 2, 4, 6}));
  EXPECT_EQ(min_element(UltimatelyPeriodic::odds()), std::optional<Nat>(1));
  EXPECT_EQ(min_element(FiniteSet{}), std::nullopt);
  EXPECT_THROW(enumerate(SampledPrefix({0, 3}, 5), 6), HorizonError);
  EXPECT_EQ(enumerate(SampledPrefix({0, 3}, 5), 5), (FiniteSet{0, 3}));
}

TEST(NextAfter, ExactAndSampled) {
  EXPECT_EQ(next_after(UltimatelyPeriodic::evens(), 4), std::optional<Nat>(6));
  EXPECT_EQ(next_after(FiniteSet{1, 5}, 5), std::nullopt);
  EXPECT_EQ(next_after(SampledPrefix({0, 3}, 10), 0), std::optional<Nat>(3));
  EXPECT_THROW(next_after(SampledPrefix({0, 3}, 10), 3), HorizonError);
}

TEST(FirstEscape, LeastEscapingElement) {
  const GroundSet a = FiniteSet{1, 4, 10};
  const GroundSet evens = UltimatelyPeriodic::evens();
  EXPECT_EQ(first_escape(a, evens, 0), std::optional<Nat>(1));
  EXPECT_EQ(first_escape(a, evens, 1), std::optional<Nat>(4));
  EXPECT_EQ(first_escape(evens, UltimatelyPeriodic::odds(), 1), std::nullopt);
}

TEST(ToString, DslSyntax) {
  EXPECT_EQ(to_string(UltimatelyPeriodic::evens()), "evens");
  EXPECT_EQ(to_string(UltimatelyPeriodic::naturals()), "nat");
  EXPECT_EQ(to_string(FiniteSet{0, 3}), "{0,3}");
  EXPECT_EQ(to_string(normalize(up({true, false, true}, 3, {1}))), "up(101;3;1)");
}

TEST(Lcm, Overflow) {
  EXPECT_EQ(checked_lcm(4, 6), 12u);
  EXPECT_THROW(checked_lcm(Nat{1} << 40, (Nat{1} << 40) - 1), std::overflow_error);
}

}  // namespace
}  // namespace finembed
