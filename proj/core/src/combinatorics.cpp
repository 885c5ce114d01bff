#include "finembed/combinatorics.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <utility>

namespace finembed {

Rational::Rational(Nat num, Nat den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  const Nat g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::string Rational::to_string() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

namespace {

Wide wide_gcd(Wide a, Wide b) {
  while (b != 0) a = std::exchange(b, a % b);
  return a;
}

}  // namespace

Rational abs_diff(const Rational& x, const Rational& y) {
  const auto& hi = x < y ? y : x;
  const auto& lo = x < y ? x : y;
  const auto den = static_cast<Wide>(hi.den()) * lo.den();
  const auto num = static_cast<Wide>(hi.num()) * lo.den() - static_cast<Wide>(lo.num()) * hi.den();
  const auto g = wide_gcd(num, den);
  const auto n = num / g;
  const auto d = den / g;
  if (d > std::numeric_limits<Nat>::max()) throw std::overflow_error("rational difference overflow");
  return {static_cast<Nat>(n), static_cast<Nat>(d)};
}

namespace {

std::vector<Nat> certain_members_below(const GroundSet& s, Nat bound) {
  if (const auto* sp = s.sampled()) {
    auto xs = sp->known_members();
    return {xs.begin(), std::lower_bound(xs.begin(), xs.end(), bound)};
  }
  const FiniteSet xs_set = enumerate(s, bound);
  auto xs = xs_set.elements();
  return {xs.begin(), xs.end()};
}

// Largest number of members in [t, t + w) over 0 <= t <= limit - w. The
// maximum is attained with t at a member or at the right edge.
Nat max_window_count(const std::vector<Nat>& xs, Nat w, Nat limit) {
  const Nat last_start = limit - w;
  Nat best = 0;
  auto count_from = [&](Nat t) {
    auto lo = std::lower_bound(xs.begin(), xs.end(), t);
    auto hi = std::lower_bound(lo, xs.end(), t + w);
    return static_cast<Nat>(hi - lo);
  };
  for (Nat x : xs) {
    if (x > last_start) break;
    best = std::max(best, count_from(x));
  }
  return std::max(best, count_from(last_start));
}

struct Runs {
  Nat longest_member_run = 0;
  Nat longest_gap_run = 0;  // consecutive non-members
};

// Runs over [0, p + 2q): every non-cofinite tail breaks within one period,
// so no run longer than this span exists except the cofinite tail itself.
Runs exact_runs(const PeriodicForm& f) {
  Runs r;
  Nat cur_in = 0;
  Nat cur_out = 0;
  const Nat end = f.preperiod() + 2 * f.period();
  for (Nat x = 0; x < end; ++x) {
    if (f.contains(x)) {
      ++cur_in;
      cur_out = 0;
    } else {
      ++cur_out;
      cur_in = 0;
    }
    r.longest_member_run = std::max(r.longest_member_run, cur_in);
    r.longest_gap_run = std::max(r.longest_gap_run, cur_out);
  }
  return r;
}

bool tail_nonempty(const UltimatelyPeriodic& up) { return up.pattern_size() > 0; }

Nat longest_listed_run(std::span<const Nat> xs) {
  Nat best = xs.empty() ? 0 : 1;
  Nat cur = best;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    cur = xs[i] == xs[i - 1] + 1 ? cur + 1 : 1;
    best = std::max(best, cur);
  }
  return best;
}

Nat largest_listed_gap(std::span<const Nat> xs) {
  Nat best = 0;
  for (std::size_t i = 1; i < xs.size(); ++i) best = std::max(best, xs[i] - xs[i - 1]);
  return best;
}

// Least (start, difference) k-term progression inside the sorted list.
std::optional<ApWitness> find_ap(const std::vector<Nat>& xs, Nat k) {
  if (xs.empty()) return std::nullopt;
  if (k == 1) return ApWitness{xs.front(), 1, 1};
  auto has = [&](Nat x) { return std::binary_search(xs.begin(), xs.end(), x); };
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      const Nat d = xs[j] - xs[i];
      if ((xs.back() - xs[i]) / d < k - 1) break;
      bool ok = true;
      for (Nat t = 2; t < k && ok; ++t) ok = has(xs[i] + t * d);
      if (ok) return ApWitness{xs[i], d, k};
    }
  }
  return std::nullopt;
}

}  // namespace

Rational windowed_density(const GroundSet& s, Nat window, Nat limit) {
  if (window == 0 || window > limit) throw std::invalid_argument("density window must satisfy 1 <= W <= limit");
  if (const auto* sp = s.sampled(); sp && limit > sp->horizon()) {
    throw HorizonError("density window reaches past horizon " + std::to_string(sp->horizon()));
  }
  const FiniteSet xs_set = enumerate(s, limit);
  auto xs = xs_set.elements();
  return {max_window_count({xs.begin(), xs.end()}, window, limit), window};
}

DensityReport upper_banach_density(const GroundSet& s, Nat window) {
  if (s.finite()) return {Rational(0, 1), DensityMethod::Exact, std::nullopt};
  if (const auto* up = s.periodic()) {
    return {Rational(up->pattern_size(), up->period()), DensityMethod::Exact, std::nullopt};
  }
  if (window == 0) throw std::invalid_argument("density window must be positive");
  const Nat h = s.sampled()->horizon();
  if (window > h) throw HorizonError("density window " + std::to_string(window) + " exceeds horizon " + std::to_string(h));
  return {windowed_density(s, window, h), DensityMethod::Windowed, window};
}

TriVerdict is_thick(const GroundSet& s, Nat threshold) {
  if (const auto* f = s.finite()) {
    return TriVerdict::no(std::nullopt, f->empty() ? "empty set" : "finite set");
  }
  if (s.periodic()) {
    if (is_cofinite(s)) return TriVerdict::yes(std::nullopt, "contains every number from some point on");
    const auto runs = exact_runs(PeriodicForm(s));
    TriVerdict v = TriVerdict::no(std::nullopt, "longest run " + std::to_string(runs.longest_member_run));
    v.witness = runs.longest_member_run;
    return v;
  }
  const Nat run = longest_listed_run(s.sampled()->known_members());
  TriVerdict v = TriVerdict::unknown("longest known run " + std::to_string(run) +
                                     (run >= threshold ? " reaches" : " is below") + " threshold " +
                                     std::to_string(threshold));
  v.witness = run;
  return v;
}

TriVerdict is_syndetic(const GroundSet& s) {
  if (s.finite()) return TriVerdict::no(std::nullopt, "finite set");
  if (const auto* up = s.periodic()) {
    if (!tail_nonempty(*up)) return TriVerdict::no(std::nullopt, "empty tail pattern");
    const Nat bound = exact_runs(PeriodicForm(s)).longest_gap_run + 1;
    return TriVerdict::yes(bound, "every interval of length " + std::to_string(bound) + " meets the set");
  }
  const Nat gap = largest_listed_gap(s.sampled()->known_members());
  TriVerdict v = TriVerdict::unknown("largest known gap " + std::to_string(gap));
  v.witness = gap;
  return v;
}

TriVerdict is_piecewise_syndetic(const GroundSet& s) {
  TriVerdict v = is_syndetic(s);
  if (v.is_yes()) v.reason = "syndetic: " + v.reason;
  return v;
}

namespace {

// Sparse sets: every maximal progression is walked once from its first two
// terms, so the cost is quadratic in the member count.
ApWitness longest_ap_sparse(const std::vector<Nat>& xs) {
  auto has = [&](Nat v) { return std::binary_search(xs.begin(), xs.end(), v); };
  ApWitness best{xs.front(), 1, 1};
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      const Nat d = xs[j] - xs[i];
      if (xs[i] >= d && has(xs[i] - d)) continue;
      Nat len = 2;
      for (Nat v = xs[j]; xs.back() - v >= d && has(v + d); v += d) ++len;
      const bool better = len > best.length || (len == best.length && (xs[i] < best.start ||
                                                                        (xs[i] == best.start && d < best.difference)));
      if (better) best = {xs[i], d, len};
    }
  }
  return best;
}

}  // namespace

std::optional<ApWitness> longest_ap(const GroundSet& s, Nat window) {
  if (window == 0) throw std::invalid_argument("AP window must be positive");
  const auto xs = certain_members_below(s, window);
  if (xs.empty()) return std::nullopt;
  const Nat span = xs.back() + 1;
  const Nat n = xs.size();
  if (n * n <= 16 * span) return longest_ap_sparse(xs);
  std::vector<char> in(span, 0);
  for (Nat x : xs) in[x] = 1;

  ApWitness best{xs.front(), 1, 1};
  std::vector<std::uint32_t> run(span, 0);
  for (Nat d = 1; d < span; ++d) {
    // A progression of the current best length needs (len - 1) * d < span.
    if (best.length > 1 && (best.length - 1) * d >= span) break;
    for (Nat x = 0; x < span; ++x) {
      if (!in[x]) {
        run[x] = 0;
        continue;
      }
      run[x] = x >= d ? run[x - d] + 1 : 1;
      const Nat len = run[x];
      if (len < 2) continue;
      const Nat start = x - (len - 1) * d;
      const bool better = len > best.length || (len == best.length && (start < best.start ||
                                                                         (start == best.start && d < best.difference)));
      if (better) best = {start, d, len};
    }
  }
  return best;
}

ApVerdict contains_k_ap(const GroundSet& s, Nat k, Nat window) {
  if (k == 0 || window == 0) throw std::invalid_argument("contains_k_ap needs k >= 1 and W >= 1");
  if (const auto* up = s.periodic(); up && tail_nonempty(*up)) {
    Nat start = up->preperiod_length();
    while (!up->in_pattern(start % up->period())) ++start;
    return {Outcome::Yes, ApWitness{start, up->period(), k}, "tail progression with difference " + std::to_string(up->period())};
  }
  if (s.is_exact()) {
    const auto f = s.finite() ? *s.finite() : enumerate(s, s.periodic()->preperiod_length());
    std::vector<Nat> xs(f.elements().begin(), f.elements().end());
    if (auto w = find_ap(xs, k)) return {Outcome::Yes, w, "found"};
    return {Outcome::No, std::nullopt, "finite set, exhaustive search"};
  }
  const Nat bound = window;
  if (auto w = find_ap(certain_members_below(s, bound), k)) return {Outcome::Yes, w, "found among known members"};
  return {Outcome::Unknown, std::nullopt, "no " + std::to_string(k) + "-term progression among known members below " + std::to_string(bound)};
}

}  // namespace finembed
