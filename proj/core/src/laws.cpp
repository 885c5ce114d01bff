#include "finembed/laws.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <functional>
#include <json.hpp>
#include <thread>

#include "finembed/combinatorics.hpp"
#include "finembed/constructions.hpp"

namespace finembed {

LawOutcome combine(LawOutcome a, LawOutcome b) noexcept {
  auto rank = [](LawOutcome o) {
    switch (o) {
      case LawOutcome::Fail: return 3;
      case LawOutcome::Pass: return 2;
      case LawOutcome::Unknown: return 1;
      case LawOutcome::Vacuous: return 0;
    }
    return 0;
  };
  return rank(a) >= rank(b) ? a : b;
}

std::optional<std::string> LawReport::lookup(std::string_view key) const {
  for (const auto& [k, v] : witness) {
    if (k == key) return v;
  }
  return std::nullopt;
}

void validate(const InstanceConfig& cfg) {
  if (cfg.max_preperiod < 1 || cfg.max_period < 1 || cfg.horizon < 1) {
    throw std::invalid_argument("instance bounds must be at least 1");
  }
}

namespace {

std::string pair_instance(const GroundSet& a, const GroundSet& b) { return "A=" + to_string(a) + " B=" + to_string(b); }

LawOutcome from_hypothesis(Outcome o) { return o == Outcome::No ? LawOutcome::Vacuous : LawOutcome::Unknown; }

FiniteSet with_element(const FiniteSet& f, Nat x) {
  std::vector<Nat> xs(f.elements().begin(), f.elements().end());
  xs.push_back(x);
  return FiniteSet(std::move(xs));
}

FiniteSet shifted_down(const FiniteSet& f) {
  std::vector<Nat> xs;
  for (Nat x : f.elements()) {
    if (x > 0) xs.push_back(x - 1);
  }
  return FiniteSet(std::move(xs));
}

FiniteSet sumset(const FiniteSet& f, const FiniteSet& g) {
  std::vector<Nat> xs;
  for (Nat x : f.elements()) {
    for (Nat y : g.elements()) xs.push_back(x + y);
  }
  return FiniteSet(std::move(xs));
}

// The first n elements of s (fewer if s has fewer).
FiniteSet first_elements(const GroundSet& s, std::size_t n) {
  std::vector<Nat> xs;
  std::optional<Nat> at;
  while (xs.size() < n) {
    at = next_after(s, at);
    if (!at) break;
    xs.push_back(*at);
  }
  return FiniteSet(std::move(xs));
}

std::size_t finite_size(const GroundSet& s) {
  if (const auto* f = s.finite()) return f->size();
  return enumerate(s, s.periodic()->preperiod_length()).size();
}

// Subset test. Exact operands are decided; otherwise only a refutation by
// a known member of `a` is definite.
std::pair<Outcome, std::optional<Nat>> subset_check(const GroundSet& a, const GroundSet& b, Nat window) {
  if (a.is_exact() && b.is_exact()) {
    auto esc = first_escape(a, b, 0);
    return {from_bool(!esc), esc};
  }
  std::vector<Nat> xs;
  if (const auto* sp = a.sampled()) {
    auto ms = sp->known_members();
    xs.assign(ms.begin(), std::lower_bound(ms.begin(), ms.end(), window));
  } else {
    const FiniteSet ms_set = enumerate(a, window);
    auto ms = ms_set.elements();
    xs.assign(ms.begin(), ms.end());
  }
  for (Nat x : xs) {
    if (member(b, x) == Outcome::No) return {Outcome::No, x};
  }
  return {Outcome::Unknown, std::nullopt};
}

void fail_with(LawReport& r, FiniteSet counterexample, GroundSet target) {
  r.outcome = LawOutcome::Fail;
  r.counterexample = std::move(counterexample);
  r.refuted_target = std::move(target);
}

// Subsets G of {0, ..., 4} with 0 in G and |G| <= 3.
std::vector<FiniteSet> small_shift_sets() {
  std::vector<FiniteSet> out{FiniteSet{0}};
  for (Nat x = 1; x <= 4; ++x) out.push_back(FiniteSet{0, x});
  for (Nat x = 1; x <= 4; ++x) {
    for (Nat y = x + 1; y <= 4; ++y) out.push_back(FiniteSet{0, x, y});
  }
  return out;
}

// Finite subset of an exact A that cannot embed into exact B when
// BD(A) > BD(B): a block of A's tail denser than any equally long block of B.
std::optional<FiniteSet> density_counterexample(const GroundSet& a, const GroundSet& b) {
  const PeriodicForm fa(a);
  const PeriodicForm fb(b);
  const Nat base = checked_lcm(fa.period(), fb.period());
  for (Nat j = 1; j <= 64; ++j) {
    const Nat len = base * j;
    std::vector<Nat> block;
    for (Nat x = fa.preperiod(); x < fa.preperiod() + len; ++x) {
      if (fa.contains(x)) block.push_back(x);
    }
    const Rational best_b = windowed_density(b, len, fb.preperiod() + fb.period() + len);
    if (Rational(block.size(), len) > best_b) return FiniteSet(std::move(block));
  }
  return std::nullopt;
}

LawOutcome invariance_thick(const GroundSet& a, const GroundSet& b, LawReport& r) {
  const TriVerdict ta = is_thick(a);
  if (!ta.is_yes()) return ta.is_no() ? LawOutcome::Vacuous : LawOutcome::Unknown;
  const TriVerdict tb = is_thick(b);
  if (tb.is_yes()) return LawOutcome::Pass;
  if (tb.is_unknown()) return LawOutcome::Unknown;
  // A has every x >= p_A; an interval one longer than B's longest run.
  const Nat run = tb.witness.value_or(0);
  const Nat start = a.periodic()->preperiod_length();
  std::vector<Nat> block;
  for (Nat x = start; x <= start + run; ++x) block.push_back(x);
  fail_with(r, FiniteSet(std::move(block)), b);
  return LawOutcome::Fail;
}

LawOutcome invariance_ps(const GroundSet& a, const GroundSet& b, LawReport& r) {
  const TriVerdict pa = is_piecewise_syndetic(a);
  if (!pa.is_yes()) return pa.is_no() ? LawOutcome::Vacuous : LawOutcome::Unknown;
  const TriVerdict pb = is_piecewise_syndetic(b);
  if (pb.is_yes()) return LawOutcome::Pass;
  if (pb.is_unknown() || !b.is_exact()) return LawOutcome::Unknown;
  // B is finite here; more elements than B has cannot embed.
  fail_with(r, first_elements(a, finite_size(b) + 1), b);
  return LawOutcome::Fail;
}

LawOutcome invariance_ap(const GroundSet& a, const GroundSet& b, Nat window, LawReport& r) {
  LawOutcome out = LawOutcome::Vacuous;
  for (Nat k = 2; k <= 8; ++k) {
    const ApVerdict va = contains_k_ap(a, k, window);
    if (va.outcome != Outcome::Yes) {
      out = combine(out, va.outcome == Outcome::No ? LawOutcome::Vacuous : LawOutcome::Unknown);
      break;
    }
    const ApVerdict vb = contains_k_ap(b, k, window);
    if (vb.outcome == Outcome::Yes) {
      out = combine(out, LawOutcome::Pass);
    } else if (vb.outcome == Outcome::Unknown) {
      out = combine(out, LawOutcome::Unknown);
    } else {
      std::vector<Nat> ap;
      for (Nat i = 0; i < k; ++i) ap.push_back(va.witness->start + i * va.witness->difference);
      r.note("ap_length", std::to_string(k));
      fail_with(r, FiniteSet(std::move(ap)), b);
      return LawOutcome::Fail;
    }
  }
  return out;
}

LawOutcome invariance_density(const GroundSet& a, const GroundSet& b, Nat window, LawReport& r) {
  if (!a.is_exact() || !b.is_exact()) return LawOutcome::Unknown;
  const Rational da = upper_banach_density(a, window).value;
  const Rational db = upper_banach_density(b, window).value;
  r.note("bd_a", da.to_string());
  r.note("bd_b", db.to_string());
  if (da <= db) return LawOutcome::Pass;
  r.outcome = LawOutcome::Fail;
  if (auto block = density_counterexample(a, b)) fail_with(r, std::move(*block), b);
  return LawOutcome::Fail;
}

LawOutcome invariance_differences(const GroundSet& a, const GroundSet& b, Nat window, LawReport& r) {
  const GroundSet da = difference_set(a, window);
  const GroundSet db = difference_set(b, window);
  std::vector<Nat> ds;
  if (da.is_exact() && db.is_exact()) {
    // Past both preperiods, membership repeats with the lcm of the periods.
    const PeriodicForm fa(da);
    const PeriodicForm fb(db);
    const Nat bound = std::max({fa.preperiod(), fb.preperiod(), Nat{1}}) + checked_lcm(fa.period(), fb.period());
    const FiniteSet xs_set = enumerate(da, bound);
    auto xs = xs_set.elements();
    ds.assign(xs.begin(), xs.end());
  } else if (const auto* sp = da.sampled()) {
    auto xs = sp->known_members();
    ds.assign(xs.begin(), std::lower_bound(xs.begin(), xs.end(), window));
  } else {
    const FiniteSet xs_set = enumerate(da, window);
    auto xs = xs_set.elements();
    ds.assign(xs.begin(), xs.end());
  }
  bool unknown = !da.is_exact() || !db.is_exact();
  for (Nat d : ds) {
    const Outcome m = member(db, d);
    if (m == Outcome::Unknown) {
      unknown = true;
      continue;
    }
    if (m == Outcome::Yes) continue;
    // Least c with c, c + d in A: the pair cannot embed in B.
    for (std::optional<Nat> c = min_element(a); c; c = next_after(a, c)) {
      if (member(a, *c + d) == Outcome::Yes) {
        r.note("missing_difference", std::to_string(d));
        fail_with(r, FiniteSet{*c, *c + d}, b);
        return LawOutcome::Fail;
      }
    }
  }
  return unknown ? LawOutcome::Unknown : LawOutcome::Pass;
}

LawOutcome invariance_shifts(const GroundSet& a, const GroundSet& b, Nat window, LawReport& r) {
  LawOutcome out = LawOutcome::Vacuous;
  for (const FiniteSet& g : small_shift_sets()) {
    const TriVerdict v = fe_decide(shift_down_intersect(a, g), shift_down_intersect(b, g), window);
    if (v.is_yes()) {
      out = combine(out, LawOutcome::Pass);
    } else if (v.is_unknown()) {
      out = combine(out, LawOutcome::Unknown);
    } else {
      // F' ⊆ A_G with no translate into B_G lifts to F' ⊕ G ⊆ A.
      r.note("shift_set", to_string(g));
      fail_with(r, sumset(*v.certificate, g), b);
      return LawOutcome::Fail;
    }
  }
  return out;
}

// Runs fn(i) for i in [0, n) on up to `threads` workers.
template <typename Fn>
void parallel_for(std::size_t n, unsigned threads, Fn fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) fn(i);
    });
  }
}

Nat exhaustive_kmax(const GroundSet& b) {
  if (const auto* f = b.finite()) return std::max<Nat>(f->empty() ? 1 : f->max(), 1);
  if (const auto* up = b.periodic()) return std::max<Nat>(up->preperiod_length() + up->period() - 1, 1);
  const auto& sp = *b.sampled();
  const Nat last = sp.known_members().empty() ? 0 : sp.known_members().back();
  return std::max({sp.horizon(), last, Nat{1}});
}

}  // namespace

LawReport check_upward_invariance(const GroundSet& a, const GroundSet& b, const InstanceConfig& cfg) {
  LawReport r;
  r.law = "upward_invariance";
  r.instance = pair_instance(a, b);
  const Nat window = cfg.horizon;
  const TriVerdict hyp = fe_decide(a, b, window);
  if (!hyp.is_yes()) {
    r.outcome = from_hypothesis(hyp.outcome);
    r.note("hypothesis", hyp.reason);
    return r;
  }
  r.note("k", std::to_string(*hyp.witness));

  const std::pair<const char*, std::function<LawOutcome()>> clauses[] = {
      {"thick", [&] { return invariance_thick(a, b, r); }},
      {"piecewise_syndetic", [&] { return invariance_ps(a, b, r); }},
      {"progressions", [&] { return invariance_ap(a, b, window, r); }},
      {"density", [&] { return invariance_density(a, b, window, r); }},
      {"differences", [&] { return invariance_differences(a, b, window, r); }},
      {"shifts", [&] { return invariance_shifts(a, b, window, r); }},
  };
  r.outcome = LawOutcome::Vacuous;
  for (const auto& [name, run] : clauses) {
    const LawOutcome o = run();
    r.note(name, std::string(to_string(o)));
    r.outcome = combine(r.outcome, o);
    if (o == LawOutcome::Fail) break;
  }
  return r;
}

LawReport check_translate_inclusion(const GroundSet& a, const GroundSet& b, Nat window) {
  LawReport r;
  r.law = "translate_inclusion";
  r.instance = pair_instance(a, b);
  const GroundSet a1 = translate(a, 1);

  LawOutcome first = LawOutcome::Vacuous;
  const TriVerdict b_in_a = fe_decide(b, a, window);
  const TriVerdict b_in_a1 = fe_decide(b, a1, window);
  if (b_in_a.is_no() && b_in_a1.is_yes()) {
    const auto [sub, escape] = subset_check(b, a1, window);
    first = sub == Outcome::Yes ? LawOutcome::Pass : sub == Outcome::Unknown ? LawOutcome::Unknown : LawOutcome::Fail;
    if (first == LawOutcome::Fail) fail_with(r, with_element(*b_in_a.certificate, *escape), a1);
  } else if (!b_in_a.is_yes() && !b_in_a1.is_no()) {
    first = LawOutcome::Unknown;
  }
  r.note("b_in_a_plus_1", std::string(to_string(first)));

  LawOutcome second = LawOutcome::Vacuous;
  if (first != LawOutcome::Fail) {
    const TriVerdict a_in_b = fe_decide(a, b, window);
    const TriVerdict a1_in_b = fe_decide(a1, b, window);
    if (a_in_b.is_yes() && a1_in_b.is_no()) {
      const auto [sub, escape] = subset_check(a, b, window);
      second = sub == Outcome::Yes ? LawOutcome::Pass : sub == Outcome::Unknown ? LawOutcome::Unknown : LawOutcome::Fail;
      if (second == LawOutcome::Fail) fail_with(r, with_element(shifted_down(*a1_in_b.certificate), *escape), b);
    } else if (!a_in_b.is_no() && !a1_in_b.is_yes()) {
      second = LawOutcome::Unknown;
    }
    r.note("a_in_b", std::string(to_string(second)));
  }
  r.outcome = combine(first, second);
  return r;
}

LawReport check_sandwich(const GroundSet& a, const GroundSet& b, Nat window) {
  LawReport r;
  r.law = "sandwich";
  r.instance = pair_instance(a, b);
  const GroundSet a1 = translate(a, 1);
  const TriVerdict lower = fe_decide(a, b, window);
  const TriVerdict upper = fe_decide(b, a1, window);
  const Outcome hyp = all_of(lower.outcome, upper.outcome);
  if (hyp != Outcome::Yes) {
    r.outcome = from_hypothesis(hyp);
    return r;
  }
  r.note("k_lower", std::to_string(*lower.witness));
  r.note("k_upper", std::to_string(*upper.witness));
  const EquivVerdict with_a = fe_equiv(a, b, window);
  const EquivVerdict with_a1 = fe_equiv(a1, b, window);
  if (with_a.outcome == Outcome::Yes || with_a1.outcome == Outcome::Yes) {
    r.outcome = LawOutcome::Pass;
    r.note("class", with_a.outcome == Outcome::Yes ? "[B]=[A]" : "[B]=[A+1]");
    return r;
  }
  if (with_a.outcome == Outcome::Unknown || with_a1.outcome == Outcome::Unknown) {
    r.outcome = LawOutcome::Unknown;
    return r;
  }
  // Both equivalences fail: B not <=_fe A and A+1 not <=_fe B. Then the
  // lemma forces A ⊆ B ⊆ A+1; whichever inclusion breaks yields a witness.
  r.outcome = LawOutcome::Fail;
  if (auto [sub, escape] = subset_check(a, b, window); sub == Outcome::No) {
    fail_with(r, with_element(shifted_down(*with_a1.forward.certificate), *escape), b);
  } else if (auto [sub1, escape1] = subset_check(b, a1, window); sub1 == Outcome::No) {
    fail_with(r, with_element(*with_a.backward.certificate, *escape1), a1);
  }
  return r;
}

LawReport check_reflexivity(const GroundSet& a, Nat window) {
  LawReport r;
  r.law = "reflexivity";
  r.instance = "A=" + to_string(a);
  const TriVerdict v = fe_decide(a, a, window);
  if (v.is_yes()) {
    r.outcome = LawOutcome::Pass;
    r.note("k", std::to_string(*v.witness));
  } else if (v.is_no()) {
    fail_with(r, *v.certificate, a);
  } else {
    r.outcome = LawOutcome::Unknown;
  }
  return r;
}

LawReport check_transitivity(const GroundSet& a, const GroundSet& b, const GroundSet& c, Nat window) {
  LawReport r;
  r.law = "transitivity";
  r.instance = pair_instance(a, b) + " C=" + to_string(c);
  const TriVerdict ab = fe_decide(a, b, window);
  const TriVerdict bc = fe_decide(b, c, window);
  const Outcome hyp = all_of(ab.outcome, bc.outcome);
  if (hyp != Outcome::Yes) {
    r.outcome = from_hypothesis(hyp);
    return r;
  }
  const TriVerdict ac = fe_decide(a, c, window);
  r.note("k_ab", std::to_string(*ab.witness));
  r.note("k_bc", std::to_string(*bc.witness));
  if (ac.is_yes()) {
    r.outcome = LawOutcome::Pass;
    r.note("k_ac", std::to_string(*ac.witness));
  } else if (ac.is_no()) {
    fail_with(r, *ac.certificate, c);
  } else {
    r.outcome = LawOutcome::Unknown;
  }
  return r;
}

GroundSet random_periodic(std::mt19937_64& rng, Nat max_preperiod, Nat max_period) {
  std::uniform_int_distribution<Nat> pre_len(0, max_preperiod);
  std::uniform_int_distribution<Nat> period(1, max_period);
  std::bernoulli_distribution coin(0.5);
  const double densities[] = {0.25, 0.5, 0.75};
  std::uniform_int_distribution<std::size_t> pick_density(0, 2);

  std::vector<bool> bits(pre_len(rng));
  for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = coin(rng);
  const Nat q = period(rng);
  std::bernoulli_distribution in_pattern(densities[pick_density(rng)]);
  std::vector<Nat> residues;
  for (Nat r = 0; r < q; ++r) {
    if (in_pattern(rng)) residues.push_back(r);
  }
  if (residues.empty()) residues.push_back(std::uniform_int_distribution<Nat>(0, q - 1)(rng));
  return normalize(UltimatelyPeriodic(std::move(bits), q, residues));
}

GroundSet random_finite(std::mt19937_64& rng, Nat bound) {
  std::uniform_int_distribution<std::size_t> size(1, 5);
  std::uniform_int_distribution<Nat> value(0, std::max<Nat>(bound, 1) - 1);
  std::vector<Nat> xs(size(rng));
  for (Nat& x : xs) x = value(rng);
  return FiniteSet(std::move(xs));
}

std::vector<GroundSet> generate_corpus(const InstanceConfig& cfg) {
  validate(cfg);
  std::vector<GroundSet> out{UltimatelyPeriodic::naturals(), UltimatelyPeriodic::evens(), UltimatelyPeriodic::odds()};
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<int> kind(0, 4);
  while (out.size() < cfg.corpus_size) {
    if (kind(rng) == 0) {
      out.push_back(random_finite(rng, cfg.max_preperiod + cfg.max_period));
    } else {
      out.push_back(random_periodic(rng, cfg.max_preperiod, cfg.max_period));
    }
  }
  out.resize(std::min(out.size(), cfg.corpus_size));
  return out;
}

std::vector<LawReport> run_corpus(const InstanceConfig& cfg, unsigned threads) {
  const auto corpus = generate_corpus(cfg);
  const std::size_t n = corpus.size();
  const Nat window = cfg.horizon;

  // fe relation over the corpus, reused to find transitivity chains.
  std::vector<Outcome> relation(n * n, Outcome::Unknown);
  parallel_for(n * n, threads, [&](std::size_t i) {
    relation[i] = fe_decide(corpus[i / n], corpus[i % n], window).outcome;
  });

  std::vector<std::function<LawReport()>> tasks;
  for (std::size_t i = 0; i < n; ++i) {
    tasks.emplace_back([&, i] { return check_reflexivity(corpus[i], window); });
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      tasks.emplace_back([&, i, j] { return check_upward_invariance(corpus[i], corpus[j], cfg); });
      tasks.emplace_back([&, i, j] { return check_translate_inclusion(corpus[i], corpus[j], window); });
      tasks.emplace_back([&, i, j] { return check_sandwich(corpus[i], corpus[j], window); });
    }
  }
  // Translates of A sit next to A in the preorder, which is where the
  // lemma and the sandwich have non-vacuous instances.
  for (std::size_t i = 0; i < n; ++i) {
    tasks.emplace_back([&, i] { return check_translate_inclusion(corpus[i], translate(corpus[i], 1), window); });
    for (Nat j = 1; j <= 3; ++j) {
      tasks.emplace_back([&, i, j] { return check_sandwich(corpus[i], translate(corpus[i], j), window); });
    }
  }

  std::vector<std::array<std::size_t, 3>> chains;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || relation[i * n + j] != Outcome::Yes) continue;
      for (std::size_t l = 0; l < n; ++l) {
        if (l != j && relation[j * n + l] == Outcome::Yes) chains.push_back({i, j, l});
      }
    }
  }
  std::mt19937_64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
  std::shuffle(chains.begin(), chains.end(), rng);
  chains.resize(std::min(chains.size(), 8 * n));
  std::sort(chains.begin(), chains.end());
  for (auto [i, j, l] : chains) {
    tasks.emplace_back([&, i, j, l] { return check_transitivity(corpus[i], corpus[j], corpus[l], window); });
  }

  std::size_t constructions = 0;
  for (std::size_t i = 0; i < n && constructions < 10; ++i) {
    if (is_infinite(corpus[i]) != Outcome::Yes) continue;
    ++constructions;
    tasks.emplace_back([&, i] { return verify_pair(unembeddable_pair(corpus[i], 8)); });
    if (constructions <= 3) {
      tasks.emplace_back([&, i] {
        LawReport r;
        r.law = "descending_chain";
        r.instance = "X=" + to_string(corpus[i]) + " depth=2 count=4";
        const ChainResult chain = descending_chain(corpus[i], 2, 4);
        r.outcome = chain.error ? LawOutcome::Unknown : LawOutcome::Pass;
        r.note("certified_steps", std::to_string(chain.certificates.size()));
        if (chain.error) r.note("error", *chain.error);
        return r;
      });
    }
  }

  std::vector<LawReport> reports(tasks.size());
  parallel_for(tasks.size(), threads, [&](std::size_t i) { reports[i] = tasks[i](); });
  return reports;
}

std::map<std::string, Tally> tally(const std::vector<LawReport>& reports) {
  std::map<std::string, Tally> out;
  for (const auto& r : reports) {
    Tally& t = out[r.law];
    switch (r.outcome) {
      case LawOutcome::Pass: ++t.pass; break;
      case LawOutcome::Fail: ++t.fail; break;
      case LawOutcome::Vacuous: ++t.vacuous; break;
      case LawOutcome::Unknown: ++t.unknown; break;
    }
  }
  return out;
}

std::string to_json_line(const LawReport& r) {
  nlohmann::ordered_json j;
  j["law"] = r.law;
  j["instance"] = r.instance;
  j["outcome"] = std::string(to_string(r.outcome));
  auto& w = j["witness"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.witness) w[k] = v;
  if (r.counterexample) {
    j["counterexample"] = std::vector<Nat>(r.counterexample->elements().begin(), r.counterexample->elements().end());
  }
  if (r.refuted_target) j["target"] = to_string(*r.refuted_target);
  return j.dump();
}

std::optional<Outcome> reverify_counterexample(const LawReport& r) {
  if (!r.counterexample || !r.refuted_target) return std::nullopt;
  const FiniteSet& f = *r.counterexample;
  const Nat window = f.empty() ? 1 : f.max() + 1;
  return fe_oracle_bruteforce(f, *r.refuted_target, window, exhaustive_kmax(*r.refuted_target)).outcome;
}

}  // namespace finembed
