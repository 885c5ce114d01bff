#include "finembed/embedding.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

namespace finembed {

namespace {

constexpr Nat kMaxScan = Nat{1} << 26;

std::vector<Nat> shifted(std::span<const Nat> xs, Nat k) {
  std::vector<Nat> out;
  out.reserve(xs.size());
  for (Nat x : xs) {
    if (x > std::numeric_limits<Nat>::max() - k) throw std::overflow_error("translate overflow");
    out.push_back(x + k);
  }
  return out;
}

std::string k_text(Nat k) { return "k=" + std::to_string(k); }

// Translates beyond p + q repeat the residue class of one below it, so
// [0, p + q) is a complete search range for an ultimately periodic target.
Nat periodic_translate_bound(const UltimatelyPeriodic& up) {
  return up.preperiod_length() + up.period();
}

bool has_small_gap(std::span<const Nat> xs, Nat gap) {
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (xs[i] - xs[i - 1] < gap) return true;
  }
  return false;
}

// Least translate of `a` into exact `b`, or the union of per-translate
// escapes when none exists. `a` is exact; candidate translates come from b.
TriVerdict exact_embedding(const GroundSet& a, const GroundSet& b) {
  const auto least = min_element(a);
  if (!least) return TriVerdict::yes(0, "empty set embeds in every set");
  std::set<Nat> blockers;
  if (const auto* fb = b.finite()) {
    // Only translates carrying min(a) onto an element of b can work; every
    // other translate is blocked by min(a) itself.
    blockers.insert(*least);
    for (Nat target : fb->elements()) {
      if (target < *least) continue;
      const Nat k = target - *least;
      if (auto esc = first_escape(a, b, k)) {
        blockers.insert(*esc);
      } else {
        return TriVerdict::yes(k, k_text(k));
      }
    }
    return TriVerdict::no(FiniteSet(std::vector<Nat>(blockers.begin(), blockers.end())),
                          "no translate carries the certificate into a finite set");
  }
  const auto& up = *b.periodic();
  const Nat bound = periodic_translate_bound(up);
  for (Nat k = 0; k < bound; ++k) {
    if (auto esc = first_escape(a, b, k)) {
      blockers.insert(*esc);
    } else {
      std::string reason = k_text(k);
      if (k >= up.preperiod_length()) reason += " (residue " + std::to_string(k % up.period()) + " mod " + std::to_string(up.period()) + ")";
      return TriVerdict::yes(k, reason);
    }
  }
  return TriVerdict::no(FiniteSet(std::vector<Nat>(blockers.begin(), blockers.end())),
                        "every translate below " + std::to_string(bound) + " is blocked");
}

TriVerdict finite_into_sampled(const FiniteSet& f, const SampledPrefix& b) {
  const Nat m = f.min();
  bool undecided = false;
  for (Nat target : b.known_members()) {
    if (target < m) continue;
    const Nat k = target - m;
    const auto points = shifted(f.elements(), k);
    switch (b.contains_all(points)) {
      case Outcome::Yes: return TriVerdict::yes(k, k_text(k));
      case Outcome::Unknown: undecided = true; break;
      case Outcome::No: break;
    }
  }
  // Remaining translates put min(f) on an unlisted point: a non-member below
  // the horizon, or an unknown point past it. Past it, every point of f + k
  // is in the tail, where close neighbours are impossible.
  const bool tail_blocked = b.tail_gap() > 0 && has_small_gap(f.elements(), b.tail_gap());
  if (!undecided && tail_blocked) {
    return TriVerdict::no(f, "no placement below horizon " + std::to_string(b.horizon()) +
                                 "; tail gap " + std::to_string(b.tail_gap()) + " excludes the rest");
  }
  return TriVerdict::unknown("no translate confirmed below horizon " + std::to_string(b.horizon()));
}

// Certain members of `a` usable as a finite subset when b is sampled.
std::vector<Nat> known_subset(const GroundSet& a, Nat window) {
  if (const auto* sp = a.sampled()) {
    auto xs = sp->known_members();
    return {xs.begin(), std::lower_bound(xs.begin(), xs.end(), window)};
  }
  const FiniteSet xs_set = enumerate(a, window);
  auto xs = xs_set.elements();
  return {xs.begin(), xs.end()};
}

// Minimal-length prefix of xs that definitively fails to embed in b.
FiniteSet shortest_failing_prefix(const std::vector<Nat>& xs, const GroundSet& b) {
  std::size_t lo = 1;
  std::size_t hi = xs.size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    const FiniteSet prefix(std::vector<Nat>(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(mid)));
    if (fe_finite_into(prefix, b).is_no()) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return FiniteSet(std::vector<Nat>(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(lo)));
}

// Pair statistics for strong non-embeddability: for difference d, the
// least c with c, c+d in the set and the largest b with b, b+d in the set
// (nullopt as "unbounded").
struct PairExtent {
  std::optional<Nat> least_low;
  bool any_high = false;
  std::optional<Nat> greatest_low;  // meaningful when any_high && !unbounded
  bool unbounded = false;
};

PairExtent exact_pair_extent(const PeriodicForm& s, Nat d) {
  PairExtent e;
  for (Nat c = 0; c < s.preperiod() + s.period(); ++c) {
    if (s.contains(c) && s.contains(c + d)) {
      if (!e.least_low) e.least_low = c;
      e.any_high = true;
      if (c >= s.preperiod()) {
        e.unbounded = true;
      } else {
        e.greatest_low = c;
      }
    }
  }
  return e;
}

// Least b >= from with b, b + d in s; b may be taken below max(from, p) + q.
std::optional<Nat> exact_pair_at_or_after(const PeriodicForm& s, Nat d, Nat from) {
  const Nat stop = std::max(from, s.preperiod()) + s.period();
  for (Nat b = from; b < stop; ++b) {
    if (s.contains(b) && s.contains(b + d)) return b;
  }
  return std::nullopt;
}

TriVerdict strongly_non_fe_exact(const GroundSet& a, const GroundSet& b) {
  if (a.finite() && b.finite()) {
    std::map<Nat, Nat> least_low;     // d -> least c in a
    std::map<Nat, Nat> greatest_low;  // d -> greatest b' in b
    auto xs = a.finite()->elements();
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t j = i + 1; j < xs.size(); ++j) least_low.try_emplace(xs[j] - xs[i], xs[i]);
    }
    auto ys = b.finite()->elements();
    for (std::size_t i = 0; i < ys.size(); ++i) {
      for (std::size_t j = i + 1; j < ys.size(); ++j) greatest_low[ys[j] - ys[i]] = ys[i];
    }
    for (auto [d, c] : least_low) {
      auto it = greatest_low.find(d);
      if (it == greatest_low.end() || it->second < c) continue;
      // Least admissible b' >= c.
      Nat best = it->second;
      for (std::size_t i = 0; i < ys.size(); ++i) {
        if (ys[i] >= c && b.finite()->contains(ys[i] + d)) {
          best = ys[i];
          break;
        }
      }
      TriVerdict v = TriVerdict::no(FiniteSet{c, c + d}, "pair with difference " + std::to_string(d) + " embeds");
      v.witness = best - c;
      return v;
    }
    return TriVerdict::yes(std::nullopt, "no two-element subset embeds");
  }
  const PeriodicForm fa(a);
  const PeriodicForm fb(b);
  // Beyond max(p_a, p_b) both pair statistics depend on d modulo the lcm.
  const Nat limit = std::max({fa.preperiod(), fb.preperiod(), Nat{1}}) + checked_lcm(fa.period(), fb.period());
  for (Nat d = 1; d < limit; ++d) {
    const auto ea = exact_pair_extent(fa, d);
    if (!ea.least_low) continue;
    const Nat c = *ea.least_low;
    if (auto at = exact_pair_at_or_after(fb, d, c)) {
      TriVerdict v = TriVerdict::no(FiniteSet{c, c + d}, "pair with difference " + std::to_string(d) + " embeds");
      v.witness = *at - c;
      return v;
    }
  }
  return TriVerdict::yes(std::nullopt, "no two-element subset embeds");
}

struct KnownPairs {
  std::map<Nat, Nat> least_low;
  std::map<Nat, Nat> greatest_low;
};

KnownPairs known_pairs(std::span<const Nat> xs, Nat window) {
  KnownPairs out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size() && xs[j] - xs[i] < window; ++j) {
      const Nat d = xs[j] - xs[i];
      out.least_low.try_emplace(d, xs[i]);
      out.greatest_low[d] = xs[i];
    }
  }
  return out;
}

}  // namespace

TriVerdict fe_finite_into(const FiniteSet& f, const GroundSet& b) {
  if (f.empty()) return TriVerdict::yes(0, "empty set embeds in every set");
  if (const auto* sp = b.sampled()) return finite_into_sampled(f, *sp);
  return exact_embedding(f, b);
}

TriVerdict fe_decide(const GroundSet& a, const GroundSet& b, Nat window) {
  if (const auto* f = a.finite()) return fe_finite_into(*f, b);
  if (a.is_exact() && b.is_exact()) return exact_embedding(a, b);
  if (is_cofinite(b)) {
    const Nat k = b.periodic()->preperiod_length();
    return TriVerdict::yes(k, k_text(k) + ": the right side contains every number from " + std::to_string(k));
  }

  const auto xs = known_subset(a, window);
  if (xs.empty()) return TriVerdict::unknown("no known elements of the left side below window " + std::to_string(window));
  const FiniteSet known(xs);
  const TriVerdict v = fe_finite_into(known, b);
  if (v.is_no()) {
    FiniteSet cert = b.is_exact() ? *v.certificate : shortest_failing_prefix(xs, b);
    return TriVerdict::no(std::move(cert), "a finite subset of the left side refuses every translate");
  }
  if (v.is_yes()) {
    return TriVerdict::unknown("known elements below " + std::to_string(window) + " embed with " + k_text(*v.witness) +
                               "; the rest of the left side is not determined");
  }
  return TriVerdict::unknown(v.reason);
}

EquivVerdict fe_equiv(const GroundSet& a, const GroundSet& b, Nat window) {
  EquivVerdict out;
  out.forward = fe_decide(a, b, window);
  out.backward = fe_decide(b, a, window);
  out.outcome = all_of(out.forward.outcome, out.backward.outcome);
  return out;
}

TriVerdict strongly_non_fe(const GroundSet& a, const GroundSet& b, Nat window) {
  if (a.is_exact() && b.is_exact()) return strongly_non_fe_exact(a, b);

  const auto pa = known_pairs(known_subset(a, window), window);
  KnownPairs pb;
  if (const auto* sp = b.sampled()) {
    pb = known_pairs(sp->known_members(), window);
  } else {
    // An exact right side contributes its true pair statistics.
    const PeriodicForm fb(b);
    for (auto [d, c] : pa.least_low) {
      if (auto at = exact_pair_at_or_after(fb, d, c)) pb.greatest_low[d] = *at;
    }
  }
  for (auto [d, c] : pa.least_low) {
    auto it = pb.greatest_low.find(d);
    if (it != pb.greatest_low.end() && it->second >= c) {
      TriVerdict v = TriVerdict::no(FiniteSet{c, c + d}, "pair with difference " + std::to_string(d) + " embeds");
      v.witness = it->second - c;
      return v;
    }
  }
  // A finite left side is fully known; its pairs are settled when every
  // difference is below the right side's tail gap.
  if (const auto* fa = a.finite(); fa && b.sampled()) {
    const Nat gap = b.sampled()->tail_gap();
    const bool settled = gap > 0 && (fa->size() < 2 || fa->max() - fa->min() < gap) && fa->max() - fa->min() < window;
    if (settled) return TriVerdict::yes(std::nullopt, "no two-element subset embeds");
  }
  return TriVerdict::unknown("no embeddable pair with difference below " + std::to_string(window));
}

TriVerdict mutually_strongly_unembeddable(const GroundSet& a, const GroundSet& b, Nat window) {
  const GroundSet da = difference_set(a, window);
  const GroundSet db = difference_set(b, window);
  if (da.is_exact() && db.is_exact()) {
    const auto common = min_element(intersect(da, db));
    if (!common) return TriVerdict::yes(std::nullopt, "difference sets are disjoint");
    TriVerdict v = TriVerdict::no(std::nullopt, "common difference " + std::to_string(*common));
    v.witness = *common;
    return v;
  }
  std::set<Nat> candidates;
  for (const GroundSet* d : {&da, &db}) {
    if (const auto* sp = d->sampled()) {
      candidates.insert(sp->known_members().begin(), sp->known_members().end());
    } else {
      const FiniteSet listed = enumerate(*d, window);
      candidates.insert(listed.elements().begin(), listed.elements().end());
    }
  }
  for (Nat d : candidates) {
    if (d < window && member(da, d) == Outcome::Yes && member(db, d) == Outcome::Yes) {
      TriVerdict v = TriVerdict::no(std::nullopt, "common difference " + std::to_string(d));
      v.witness = d;
      return v;
    }
  }
  for (auto [exact, other] : {std::pair{&da, &db}, std::pair{&db, &da}}) {
    const auto* f = exact->finite();
    if (f == nullptr) continue;
    bool settled = true;
    for (Nat d : f->elements()) settled = settled && member(*other, d) == Outcome::No;
    if (settled) return TriVerdict::yes(std::nullopt, "difference sets are disjoint");
  }
  return TriVerdict::unknown("no common difference below " + std::to_string(window));
}

TriVerdict fe_oracle_bruteforce(const GroundSet& a, const GroundSet& b, Nat window, Nat kmax) {
  if (window == 0 || kmax == 0) throw std::invalid_argument("oracle window and kmax must be positive");

  std::vector<Nat> elems;
  bool a_complete = false;
  if (const auto* sp = a.sampled()) {
    auto xs = sp->known_members();
    const Nat stop = std::min(window, sp->horizon());
    elems.assign(xs.begin(), std::lower_bound(xs.begin(), xs.end(), stop));
  } else {
    const FiniteSet xs_set = enumerate(a, window);
    auto xs = xs_set.elements();
    elems.assign(xs.begin(), xs.end());
    a_complete = a.finite() != nullptr && (a.finite()->empty() || a.finite()->max() < window);
  }
  if (elems.empty()) {
    if (a_complete) return TriVerdict::yes(0, "empty set embeds in every set");
    return TriVerdict::unknown("left side has no known elements below " + std::to_string(window));
  }

  // Candidate translates: those placing the first element on a member.
  const Nat e0 = elems.front();
  std::vector<Nat> alive;
  bool block_alive = false;  // sampled b: translates placing e0 past the horizon
  bool exhaustive = false;
  const auto* bs = b.sampled();
  if (bs != nullptr) {
    for (Nat target : bs->known_members()) {
      if (target >= e0 && target - e0 <= kmax) alive.push_back(target - e0);
    }
    block_alive = bs->horizon() <= e0 || bs->horizon() - e0 <= kmax;
    const Nat last = bs->known_members().empty() ? 0 : bs->known_members().back();
    exhaustive = kmax >= std::max(bs->horizon(), last);
  } else if (const auto* fb = b.finite()) {
    for (Nat target : fb->elements()) {
      if (target >= e0 && target - e0 <= kmax) alive.push_back(target - e0);
    }
    exhaustive = fb->empty() || kmax >= fb->max();
  } else {
    const auto& up = *b.periodic();
    if (kmax > kMaxScan) throw std::length_error("oracle kmax too large for a periodic target");
    for (Nat k = 0; k <= kmax; ++k) {
      if (up.contains(e0 + k)) alive.push_back(k);
    }
    exhaustive = kmax + 1 >= periodic_translate_bound(up);
  }

  std::vector<Nat> prefix{e0};
  auto refuted = [&]() { return alive.empty() && !block_alive; };
  for (std::size_t j = 1; j < elems.size() && !refuted(); ++j) {
    const Nat x = elems[j];
    prefix.push_back(x);
    std::erase_if(alive, [&](Nat k) {
      if (bs == nullptr) return member(b, x + k) == Outcome::No;
      return bs->contains_all(shifted(prefix, k)) == Outcome::No;
    });
    if (block_alive && bs != nullptr && bs->tail_gap() > 0 && x - elems[j - 1] < bs->tail_gap()) {
      block_alive = false;
    }
  }
  if (refuted()) {
    if (exhaustive) {
      return TriVerdict::no(FiniteSet(prefix), "prefix has no translate; range 0.." + std::to_string(kmax) + " is exhaustive");
    }
    return TriVerdict::unknown("no translate <= " + std::to_string(kmax) + " but that range is not exhaustive");
  }
  if (a_complete) {
    for (Nat k : alive) {
      if (member_all(b, shifted(prefix, k)) == Outcome::Yes) return TriVerdict::yes(k, k_text(k));
    }
    return TriVerdict::unknown("surviving translates are not confirmed");
  }
  return TriVerdict::unknown("every prefix below " + std::to_string(window) + " has a surviving translate");
}

}  // namespace finembed
