#include <gtest/gtest.h>

#include <json.hpp>

#include "finembed/laws.hpp"
#include "support/oracles.hpp"

namespace finembed {
namespace {

const GroundSet kEvens = UltimatelyPeriodic::evens();
const GroundSet kOdds = UltimatelyPeriodic::odds();
const GroundSet kNat = UltimatelyPeriodic::naturals();

TEST(Combine, Precedence) {
  EXPECT_EQ(combine(LawOutcome::Pass, LawOutcome::Fail), LawOutcome::Fail);
  EXPECT_EQ(combine(LawOutcome::Unknown, LawOutcome::Pass), LawOutcome::Pass);
  EXPECT_EQ(combine(LawOutcome::Vacuous, LawOutcome::Unknown), LawOutcome::Unknown);
  EXPECT_EQ(combine(LawOutcome::Vacuous, LawOutcome::Vacuous), LawOutcome::Vacuous);
}

TEST(UpwardInvariance, Examples) {
  InstanceConfig cfg;
  auto r = check_upward_invariance(kEvens, kOdds, cfg);
  EXPECT_EQ(r.outcome, LawOutcome::Pass);
  EXPECT_EQ(r.lookup("bd_a"), "1/2");
  EXPECT_EQ(r.lookup("bd_b"), "1/2");
  EXPECT_EQ(check_upward_invariance(kNat, kEvens, cfg).outcome, LawOutcome::Vacuous);
  r = check_upward_invariance(FiniteSet{0, 1}, kNat, cfg);
  EXPECT_EQ(r.outcome, LawOutcome::Pass);
  for (const char* clause : {"piecewise_syndetic", "progressions", "density", "differences", "shifts"}) {
    const auto v = r.lookup(clause);
    ASSERT_TRUE(v.has_value()) << clause;
    EXPECT_NE(*v, "fail") << clause;
  }
}

TEST(TranslateInclusion, Examples) {
  EXPECT_EQ(check_translate_inclusion(kEvens, kOdds).outcome, LawOutcome::Vacuous);
  EXPECT_EQ(check_translate_inclusion(FiniteSet{0, 2}, FiniteSet{1, 3}).outcome, LawOutcome::Pass);
}

TEST(Sandwich, Examples) {
  EXPECT_EQ(check_sandwich(kEvens, kOdds).outcome, LawOutcome::Pass);
  std::mt19937_64 rng(51);
  for (int i = 0; i < 50; ++i) {
    const GroundSet a = ref::random_exact(rng, 6, 10);
    EXPECT_EQ(check_sandwich(a, a).outcome, LawOutcome::Pass) << to_string(a);
  }
}

TEST(Preorder, ReflexivityAndTransitivity) {
  EXPECT_EQ(check_reflexivity(kEvens).outcome, LawOutcome::Pass);
  EXPECT_EQ(check_transitivity(FiniteSet{0, 2}, kEvens, kNat).outcome, LawOutcome::Pass);
  EXPECT_EQ(check_transitivity(kNat, kEvens, kNat).outcome, LawOutcome::Vacuous);
}

TEST(Laws, NeverFailOnRandomExactPairs) {
  std::mt19937_64 rng(52);
  InstanceConfig cfg;
  std::size_t live_inclusion = 0;
  for (int i = 0; i < 400; ++i) {
    const GroundSet a = ref::random_exact(rng, 6, 8);
    const GroundSet b = (i % 3 == 0) ? translate(a, 1 + rng() % 2) : ref::random_exact(rng, 6, 8);
    for (const LawReport& r : {check_upward_invariance(a, b, cfg), check_translate_inclusion(a, b), check_sandwich(a, b)}) {
      EXPECT_NE(r.outcome, LawOutcome::Fail) << r.law << " " << r.instance;
    }
    if (check_translate_inclusion(a, b).outcome == LawOutcome::Pass) ++live_inclusion;
  }
  EXPECT_GT(live_inclusion, 0u);
}

// Hand-made failing report: the counterexample must re-verify.
TEST(Laws, CounterexampleReverifies) {
  LawReport r;
  r.counterexample = FiniteSet{0, 1};
  r.refuted_target = kEvens;
  EXPECT_EQ(reverify_counterexample(r), Outcome::No);
  r.counterexample = FiniteSet{0, 2};
  EXPECT_EQ(reverify_counterexample(r), Outcome::Yes);
  EXPECT_FALSE(reverify_counterexample(LawReport{}).has_value());
}

TEST(Corpus, ShapeAndValidation) {
  InstanceConfig cfg;
  cfg.corpus_size = 10;
  const auto corpus = generate_corpus(cfg);
  ASSERT_EQ(corpus.size(), 10u);
  EXPECT_EQ(corpus[0], kNat);
  EXPECT_EQ(corpus[1], kEvens);
  EXPECT_EQ(corpus[2], kOdds);
  cfg.max_period = 0;
  EXPECT_THROW(validate(cfg), std::invalid_argument);
  cfg.max_period = 10;
  cfg.corpus_size = 0;
  EXPECT_TRUE(run_corpus(cfg, 1).empty());
}

TEST(Corpus, NaturalsOnly) {
  InstanceConfig cfg;
  cfg.corpus_size = 1;
  for (const auto& r : run_corpus(cfg, 1)) {
    EXPECT_TRUE(r.outcome == LawOutcome::Pass || r.outcome == LawOutcome::Vacuous) << r.law << " " << r.instance;
  }
}

TEST(Corpus, DeterministicAcrossThreadCounts) {
  InstanceConfig cfg;
  cfg.corpus_size = 12;
  cfg.seed = 7;
  const auto one = run_corpus(cfg, 1);
  const auto many = run_corpus(cfg, 3);
  ASSERT_EQ(one.size(), many.size());
  for (std::size_t i = 0; i < one.size(); ++i) EXPECT_EQ(to_json_line(one[i]), to_json_line(many[i]));
  for (const auto& [law, t] : tally(one)) EXPECT_EQ(t.fail, 0u) << law;
}

TEST(Corpus, JsonLinesParse) {
  InstanceConfig cfg;
  cfg.corpus_size = 5;
  for (const auto& r : run_corpus(cfg, 1)) {
    const std::string line = to_json_line(r);
    EXPECT_EQ(line.find('\n'), std::string::npos);
    const auto j = nlohmann::json::parse(line);
    EXPECT_EQ(j.at("law"), r.law);
    EXPECT_EQ(j.at("outcome"), std::string(to_string(r.outcome)));
    EXPECT_TRUE(j.at("witness").is_object());
  }
}

}  // namespace
}  // namespace finembed
