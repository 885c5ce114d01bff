#include "finembed/constructions.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

namespace finembed {

namespace {

Nat add(Nat x, Nat y) {
  if (x > std::numeric_limits<Nat>::max() - y) throw std::overflow_error("pair recursion term overflow");
  return x + y;
}

Nat require_next(const GroundSet& s, std::optional<Nat> after, std::size_t index) {
  auto x = next_after(s, after);
  if (!x) {
    throw HorizonError("source exhausted: no element after " + (after ? std::to_string(*after) : std::string("the start")) +
                       " for term " + std::to_string(index));
  }
  return *x;
}

// Step cap for the chain builder; the recursion roughly multiplies terms by
// 2.6 per step, so Nat overflows long before this many terms are needed.
constexpr std::size_t kMaxChainTerms = 96;

Nat exhaustive_kmax(const SampledPrefix& b) {
  const Nat last = b.known_members().empty() ? 0 : b.known_members().back();
  return std::max({b.horizon(), last, Nat{1}});
}

Nat oracle_window(const GroundSet& a) {
  if (const auto* sp = a.sampled()) return std::max<Nat>(sp->horizon(), 1);
  return kDefaultWindow;
}

}  // namespace

std::pair<Nat, Nat> PairRecursion::next() {
  Nat a = 0;
  Nat b = 0;
  const std::size_t i = a_.size();
  if (i == 0) {
    a = require_next(source_, std::nullopt, 0);
    b = require_next(source_, a, 0);
  } else {
    a = require_next(source_, add(add(a_.back(), b_.back()), 1), i);
    b = require_next(source_, add(add(b_.back(), a), 1), i);
  }
  a_.push_back(a);
  b_.push_back(b);
  return {a, b};
}

SampledPrefix UnembeddablePair::as_sampled_a() const {
  if (a_elements.empty()) throw std::invalid_argument("empty pair has no sampled view");
  const Nat a = a_elements.back();
  const Nat b = b_elements.back();
  // a_n >= a + b + 2, and each later a-step exceeds b + 1.
  return SampledPrefix(a_elements, add(add(a, b), 2), add(b, 2));
}

SampledPrefix UnembeddablePair::as_sampled_b() const {
  if (b_elements.empty()) throw std::invalid_argument("empty pair has no sampled view");
  const Nat a = a_elements.back();
  const Nat b = b_elements.back();
  // b_n >= b + a_n + 2 >= 2b + a + 4, and each later b-step exceeds a_n + 1.
  return SampledPrefix(b_elements, add(add(add(b, b), a), 4), add(add(a, b), 4));
}

UnembeddablePair unembeddable_pair(const GroundSet& x, std::size_t n) {
  if (n == 0) throw std::invalid_argument("pair count must be positive");
  UnembeddablePair out;
  out.source = x;
  PairRecursion rec(x);
  for (std::size_t i = 0; i < n; ++i) {
    try {
      auto [a, b] = rec.next();
      out.a_elements.push_back(a);
      out.b_elements.push_back(b);
    } catch (const HorizonError& e) {
      throw HorizonError(std::string(e.what()) + "; produced " + std::to_string(i) + " of " + std::to_string(n) + " terms");
    }
  }
  out.horizon = out.b_elements.back() + 1;
  return out;
}

LawReport verify_pair(const UnembeddablePair& p) {
  LawReport r;
  r.law = "unembeddable_pair";
  r.instance = "A=" + to_string(FiniteSet(p.a_elements)) + " B=" + to_string(FiniteSet(p.b_elements)) +
               " X=" + to_string(p.source);
  r.outcome = LawOutcome::Pass;

  const FiniteSet a(p.a_elements);
  const FiniteSet b(p.b_elements);
  for (Nat x : a.elements()) {
    if (b.contains(x)) {
      r.outcome = LawOutcome::Fail;
      r.counterexample = FiniteSet{x};
      r.note("shared_element", std::to_string(x));
      return r;
    }
  }
  bool unknown = false;
  for (const FiniteSet* side : {&a, &b}) {
    for (Nat x : side->elements()) {
      const Outcome m = member(p.source, x);
      if (m == Outcome::No) {
        r.outcome = LawOutcome::Fail;
        r.counterexample = FiniteSet{x};
        r.note("outside_source", std::to_string(x));
        return r;
      }
      unknown = unknown || m == Outcome::Unknown;
    }
  }
  std::set<Nat> da;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) da.insert(a.elements()[j] - a.elements()[i]);
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      const Nat d = b.elements()[j] - b.elements()[i];
      if (da.contains(d)) {
        r.outcome = LawOutcome::Fail;
        r.counterexample = FiniteSet{b.elements()[i], b.elements()[j]};
        r.note("common_difference", std::to_string(d));
        return r;
      }
    }
  }
  r.note("differences_a", std::to_string(da.size()));
  if (unknown) r.outcome = LawOutcome::Unknown;
  return r;
}

ChainResult descending_chain(const GroundSet& x, std::size_t depth, std::size_t count) {
  if (depth == 0 || count == 0) throw std::invalid_argument("chain depth and count must be positive");

  // counts[i] = terms requested at level i + 1. Deeper levels consume the
  // level above; a horizon miss there widens the level above and restarts.
  std::vector<std::size_t> counts(depth, count);
  ChainResult out;
  for (;;) {
    out = ChainResult{};
    out.sets.push_back(x);
    std::optional<std::size_t> starved;
    for (std::size_t level = 0; level < depth; ++level) {
      UnembeddablePair pair;
      try {
        pair = unembeddable_pair(out.sets.back(), counts[level]);
      } catch (const HorizonError& e) {
        if (level == 0) {
          out.error = "depth 1: " + std::string(e.what());
          return out;
        }
        starved = level;
        break;
      } catch (const std::overflow_error& e) {
        out.error = "depth " + std::to_string(level + 1) + ": " + e.what();
        return out;
      }
      const GroundSet& prev = out.sets.back();
      const Nat window = oracle_window(prev);
      std::optional<GroundSet> chosen;
      for (bool a_side : {true, false}) {
        const SampledPrefix side = a_side ? pair.as_sampled_a() : pair.as_sampled_b();
        TriVerdict cert = fe_oracle_bruteforce(prev, side, window, exhaustive_kmax(side));
        if (cert.is_no()) {
          chosen = side;
          out.certificates.push_back(std::move(cert));
          out.used_a_side.push_back(a_side ? 1 : 0);
          break;
        }
      }
      if (!chosen) {
        out.error = "depth " + std::to_string(level + 1) + ": neither side certified";
        return out;
      }
      out.sets.push_back(std::move(*chosen));
    }
    if (!starved) return out;
    const std::size_t widen = *starved - 1;
    if (counts[widen] >= kMaxChainTerms) {
      out.error = "depth " + std::to_string(*starved + 1) + ": level above exhausted at " +
                  std::to_string(counts[widen]) + " terms";
      return out;
    }
    ++counts[widen];
  }
}

std::vector<FiniteSet> minimal_sets(std::size_t n, Nat m) {
  if (n == 0) throw std::invalid_argument("minimal sets need n >= 1");
  std::vector<FiniteSet> out;
  const std::size_t k = n - 1;
  if (m < k) return out;
  // Lexicographic k-combinations of {1, ..., m}.
  std::vector<Nat> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i + 1;
  for (;;) {
    std::vector<Nat> xs{0};
    xs.insert(xs.end(), pick.begin(), pick.end());
    out.emplace_back(std::move(xs));
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == m - (k - i)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

Nat binomial(Nat m, Nat k) {
  if (k > m) return 0;
  k = std::min(k, m - k);
  Nat r = 1;
  for (Nat i = 1; i <= k; ++i) {
    const Nat num = m - k + i;
    // r * num / i is exact at every step.
    const Nat g = std::gcd(r, i);
    const Nat r1 = r / g;
    const Nat num1 = num / (i / g);
    if (r1 != 0 && num1 > std::numeric_limits<Nat>::max() / r1) throw std::overflow_error("binomial overflow");
    r = r1 * num1;
  }
  return r;
}

}  // namespace finembed
