#include "finembed/setrep.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace finembed {

namespace {

// Dense bit vectors (preperiods, expanded periods) are capped so a stray
// "+ 10^12" in an expression fails loudly instead of exhausting memory.
constexpr Nat kDenseLimit = Nat{1} << 26;

void require_dense(Nat n, const char* what) {
  if (n > kDenseLimit) {
    throw std::length_error(std::string(what) + " exceeds the dense representation limit");
  }
}

Nat saturating_add(Nat a, Nat b) {
  return a > std::numeric_limits<Nat>::max() - b ? std::numeric_limits<Nat>::max() : a + b;
}

constexpr Nat kInfinite = std::numeric_limits<Nat>::max();

Nat effective_horizon(const GroundSet& s) {
  if (const auto* sp = s.sampled()) return sp->horizon();
  return kInfinite;
}

GroundSet canonical(UltimatelyPeriodic up) {
  const Nat q = up.period();
  std::vector<bool> pattern(q);
  bool any = false;
  for (Nat r = 0; r < q; ++r) {
    pattern[r] = up.in_pattern(r);
    any = any || pattern[r];
  }
  const auto& bits = up.preperiod_bits();
  if (!any) {
    std::vector<Nat> xs;
    for (Nat x = 0; x < bits.size(); ++x) {
      if (bits[x]) xs.push_back(x);
    }
    return FiniteSet(std::move(xs));
  }

  Nat period = q;
  for (Nat d = 1; d < q; ++d) {
    if (q % d != 0) continue;
    bool ok = true;
    for (Nat r = d; r < q && ok; ++r) ok = pattern[r] == pattern[r % d];
    if (ok) {
      period = d;
      break;
    }
  }
  pattern.resize(period);

  Nat p = bits.size();
  while (p > 0 && bits[p - 1] == pattern[(p - 1) % period]) --p;
  std::vector<Nat> residues;
  for (Nat r = 0; r < period; ++r) {
    if (pattern[r]) residues.push_back(r);
  }
  return UltimatelyPeriodic(std::vector<bool>(bits.begin(), bits.begin() + static_cast<std::ptrdiff_t>(p)),
                            period, residues);
}

GroundSet from_form(Nat preperiod, Nat period, auto&& member_below, auto&& tail_residue) {
  require_dense(preperiod, "preperiod");
  require_dense(period, "period");
  std::vector<bool> bits(preperiod);
  for (Nat x = 0; x < preperiod; ++x) bits[x] = member_below(x);
  std::vector<Nat> residues;
  for (Nat r = 0; r < period; ++r) {
    if (tail_residue(r)) residues.push_back(r);
  }
  return canonical(UltimatelyPeriodic(std::move(bits), period, residues));
}

// Members of sampled operands (plus exact members below the joint horizon)
// filtered by the combined three-valued predicate.
template <typename Pred>
SampledPrefix combine_sampled(const GroundSet& a, const GroundSet& b, Nat horizon, Nat gap,
                              bool include_exact, Pred&& certain) {
  std::vector<Nat> candidates;
  for (const GroundSet* s : {&a, &b}) {
    if (const auto* sp = s->sampled()) {
      candidates.insert(candidates.end(), sp->known_members().begin(), sp->known_members().end());
    } else if (include_exact) {
      if (is_infinite(*s) == Outcome::Yes) horizon = std::min(horizon, kDenseLimit);
      auto xs = enumerate(*s, horizon);
      candidates.insert(candidates.end(), xs.elements().begin(), xs.elements().end());
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  std::vector<Nat> out;
  for (Nat x : candidates) {
    if (certain(x)) out.push_back(x);
  }
  // Listed members past the horizon must respect the gap guarantee.
  if (gap > 0) {
    std::optional<Nat> prev;
    std::vector<Nat> kept;
    for (Nat x : out) {
      if (x >= horizon && prev && x - *prev < gap) continue;
      kept.push_back(x);
      prev = x;
    }
    out = std::move(kept);
  }
  return SampledPrefix(std::move(out), horizon, gap);
}

}  // namespace

// ---------------------------------------------------------------- FiniteSet

FiniteSet::FiniteSet(std::initializer_list<Nat> xs) : FiniteSet(std::vector<Nat>(xs)) {}

FiniteSet::FiniteSet(std::vector<Nat> xs) : elements_(std::move(xs)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool FiniteSet::contains(Nat x) const noexcept {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

// ------------------------------------------------------- UltimatelyPeriodic

UltimatelyPeriodic::UltimatelyPeriodic(std::vector<bool> preperiod, Nat period,
                                       const std::vector<Nat>& residues)
    : preperiod_(std::move(preperiod)) {
  if (period == 0) throw std::invalid_argument("period must be at least 1");
  require_dense(period, "period");
  pattern_.assign(period, false);
  for (Nat r : residues) {
    if (r >= period) {
      throw std::invalid_argument("residue " + std::to_string(r) + " >= period " +
                                  std::to_string(period));
    }
    pattern_[r] = true;
  }
}

std::vector<Nat> UltimatelyPeriodic::residues() const {
  std::vector<Nat> out;
  for (Nat r = 0; r < pattern_.size(); ++r) {
    if (pattern_[r]) out.push_back(r);
  }
  return out;
}

std::size_t UltimatelyPeriodic::pattern_size() const noexcept {
  return static_cast<std::size_t>(std::count(pattern_.begin(), pattern_.end(), true));
}

bool UltimatelyPeriodic::contains(Nat x) const noexcept {
  return x < preperiod_.size() ? preperiod_[x] : pattern_[x % pattern_.size()];
}

// ------------------------------------------------------------ SampledPrefix

SampledPrefix::SampledPrefix(std::vector<Nat> known_members, Nat horizon, Nat tail_gap)
    : members_(std::move(known_members)), horizon_(horizon), tail_gap_(tail_gap) {
  for (std::size_t i = 1; i < members_.size(); ++i) {
    if (members_[i - 1] >= members_[i]) {
      throw std::invalid_argument("sampled members must be strictly increasing");
    }
    if (tail_gap_ > 0 && members_[i] >= horizon_ && members_[i] - members_[i - 1] < tail_gap_) {
      throw std::invalid_argument("sampled members violate the tail gap guarantee");
    }
  }
}

bool SampledPrefix::listed(Nat x) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), x);
}

std::optional<Nat> SampledPrefix::listed_before(Nat x) const noexcept {
  auto it = std::lower_bound(members_.begin(), members_.end(), x);
  if (it == members_.begin()) return std::nullopt;
  return *std::prev(it);
}

Outcome SampledPrefix::contains(Nat x) const noexcept {
  if (listed(x)) return Outcome::Yes;
  if (x < horizon_) return Outcome::No;
  if (tail_gap_ > 0) {
    if (auto before = listed_before(x); before && x - *before < tail_gap_) return Outcome::No;
    auto after = std::upper_bound(members_.begin(), members_.end(), x);
    if (after != members_.end() && *after - x < tail_gap_) return Outcome::No;
  }
  return Outcome::Unknown;
}

Outcome SampledPrefix::contains_all(std::span<const Nat> points) const {
  bool all_listed = true;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Nat y = points[i];
    const Outcome single = contains(y);
    if (single == Outcome::No) return Outcome::No;
    all_listed = all_listed && single == Outcome::Yes;
    if (tail_gap_ > 0 && y >= horizon_ && i > 0) {
      // If every point were a member, y's predecessor would be at least the
      // previous point.
      Nat pred = points[i - 1];
      if (auto before = listed_before(y)) pred = std::max(pred, *before);
      if (y - pred < tail_gap_) return Outcome::No;
    }
  }
  return all_listed ? Outcome::Yes : Outcome::Unknown;
}

// ------------------------------------------------------------- PeriodicForm

PeriodicForm::PeriodicForm(const GroundSet& exact) {
  if (const auto* f = exact.finite()) {
    preperiod_ = f->empty() ? 0 : f->max() + 1;
    require_dense(preperiod_, "finite set extent");
    period_ = 1;
    bits_.assign(preperiod_, false);
    for (Nat x : f->elements()) bits_[x] = true;
    pattern_.assign(1, false);
  } else if (const auto* up = exact.periodic()) {
    preperiod_ = up->preperiod_length();
    period_ = up->period();
    bits_ = up->preperiod_bits();
    pattern_.resize(period_);
    for (Nat r = 0; r < period_; ++r) pattern_[r] = up->in_pattern(r);
  } else {
    throw std::invalid_argument("periodic form requires an exact set");
  }
}

bool PeriodicForm::tail_empty() const noexcept {
  return std::none_of(pattern_.begin(), pattern_.end(), [](bool b) { return b; });
}

Nat checked_lcm(Nat a, Nat b) {
  const Nat g = std::gcd(a, b);
  const Nat a_over = a / g;
  if (b != 0 && a_over > std::numeric_limits<Nat>::max() / b) {
    throw std::overflow_error("lcm overflow");
  }
  return a_over * b;
}

// --------------------------------------------------------------- operations

GroundSet normalize(const GroundSet& s) {
  if (const auto* up = s.periodic()) return canonical(*up);
  return s;
}

Outcome member(const GroundSet& s, Nat x) {
  return std::visit(
      [x](const auto& rep) -> Outcome {
        using T = std::decay_t<decltype(rep)>;
        if constexpr (std::is_same_v<T, SampledPrefix>) {
          return rep.contains(x);
        } else {
          return from_bool(rep.contains(x));
        }
      },
      s.rep());
}

Outcome member_all(const GroundSet& s, std::span<const Nat> points) {
  if (const auto* sp = s.sampled()) return sp->contains_all(points);
  for (Nat x : points) {
    if (member(s, x) == Outcome::No) return Outcome::No;
  }
  return Outcome::Yes;
}

GroundSet translate(const GroundSet& s, Nat k) {
  if (k == 0) return s;
  if (const auto* f = s.finite()) {
    std::vector<Nat> xs(f->elements().begin(), f->elements().end());
    for (Nat& x : xs) {
      if (x > std::numeric_limits<Nat>::max() - k) throw std::overflow_error("translate overflow");
      x += k;
    }
    return FiniteSet(std::move(xs));
  }
  if (const auto* sp = s.sampled()) {
    std::vector<Nat> xs(sp->known_members().begin(), sp->known_members().end());
    for (Nat& x : xs) {
      if (x > std::numeric_limits<Nat>::max() - k) throw std::overflow_error("translate overflow");
      x += k;
    }
    return SampledPrefix(std::move(xs), saturating_add(sp->horizon(), k), sp->tail_gap());
  }
  const PeriodicForm form(s);
  const Nat q = form.period();
  return from_form(
      form.preperiod() + k, q, [&](Nat x) { return x >= k && form.contains(x - k); },
      [&](Nat r) { return form.tail_residue((r + q - k % q) % q); });
}

GroundSet intersect(const GroundSet& a, const GroundSet& b) {
  if (a.is_exact() && b.is_exact()) {
    if (const auto* f = a.finite()) {
      std::vector<Nat> xs;
      for (Nat x : f->elements()) {
        if (member(b, x) == Outcome::Yes) xs.push_back(x);
      }
      return FiniteSet(std::move(xs));
    }
    if (b.finite()) return intersect(b, a);
    const PeriodicForm fa(a);
    const PeriodicForm fb(b);
    return from_form(
        std::max(fa.preperiod(), fb.preperiod()), checked_lcm(fa.period(), fb.period()),
        [&](Nat x) { return fa.contains(x) && fb.contains(x); },
        [&](Nat r) { return fa.tail_residue(r % fa.period()) && fb.tail_residue(r % fb.period()); });
  }
  const Nat horizon = std::min(effective_horizon(a), effective_horizon(b));
  Nat gap = 0;
  for (const GroundSet* s : {&a, &b}) {
    if (const auto* sp = s->sampled(); sp && sp->horizon() == horizon) gap = std::max(gap, sp->tail_gap());
  }
  return combine_sampled(a, b, horizon, gap, false, [&](Nat x) {
    return all_of(member(a, x), member(b, x)) == Outcome::Yes;
  });
}

GroundSet unite(const GroundSet& a, const GroundSet& b) {
  if (a.is_exact() && b.is_exact()) {
    if (a.finite() && b.finite()) {
      std::vector<Nat> xs(a.finite()->elements().begin(), a.finite()->elements().end());
      xs.insert(xs.end(), b.finite()->elements().begin(), b.finite()->elements().end());
      return FiniteSet(std::move(xs));
    }
    const PeriodicForm fa(a);
    const PeriodicForm fb(b);
    return from_form(
        std::max(fa.preperiod(), fb.preperiod()), checked_lcm(fa.period(), fb.period()),
        [&](Nat x) { return fa.contains(x) || fb.contains(x); },
        [&](Nat r) { return fa.tail_residue(r % fa.period()) || fb.tail_residue(r % fb.period()); });
  }
  const Nat horizon = std::min(effective_horizon(a), effective_horizon(b));
  return combine_sampled(a, b, horizon, 0, true, [&](Nat x) {
    return any_of(member(a, x), member(b, x)) == Outcome::Yes;
  });
}

GroundSet shift_down_intersect(const GroundSet& s, const FiniteSet& g) {
  if (g.empty()) throw std::invalid_argument("shift set G must be non-empty");
  const Nat t0 = g.min();
  auto all_shifts = [&](Nat x) {
    Outcome acc = Outcome::Yes;
    for (Nat t : g.elements()) acc = all_of(acc, member(s, x + t));
    return acc;
  };
  if (const auto* f = s.finite()) {
    std::vector<Nat> xs;
    for (Nat e : f->elements()) {
      if (e >= t0 && all_shifts(e - t0) == Outcome::Yes) xs.push_back(e - t0);
    }
    return FiniteSet(std::move(xs));
  }
  if (const auto* sp = s.sampled()) {
    const Nat horizon = sp->horizon() > g.max() ? sp->horizon() - g.max() : 0;
    std::vector<Nat> xs;
    for (Nat e : sp->known_members()) {
      if (e >= t0 && all_shifts(e - t0) == Outcome::Yes) xs.push_back(e - t0);
    }
    return SampledPrefix(std::move(xs), horizon, g.size() == 1 ? sp->tail_gap() : 0);
  }
  const PeriodicForm form(s);
  const Nat q = form.period();
  return from_form(
      form.preperiod(), q,
      [&](Nat x) {
        for (Nat t : g.elements()) {
          if (!form.contains(x + t)) return false;
        }
        return true;
      },
      [&](Nat r) {
        for (Nat t : g.elements()) {
          if (!form.tail_residue((r + t) % q)) return false;
        }
        return true;
      });
}

GroundSet difference_set(const GroundSet& s, Nat window) {
  if (const auto* f = s.finite()) {
    std::vector<Nat> ds;
    const auto xs = f->elements();
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t j = i + 1; j < xs.size(); ++j) ds.push_back(xs[j] - xs[i]);
    }
    return FiniteSet(std::move(ds));
  }
  if (const auto* sp = s.sampled()) {
    std::vector<Nat> ds;
    const auto xs = sp->known_members();
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t j = i + 1; j < xs.size() && xs[j] - xs[i] < window; ++j) {
        ds.push_back(xs[j] - xs[i]);
      }
    }
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    // Pairs whose top member is past the horizon differ by at least the tail
    // gap, so differences below it are settled by the known members.
    const Nat horizon = std::max<Nat>(1, std::min(sp->tail_gap(), window));
    return SampledPrefix(std::move(ds), horizon);
  }
  // For a >= p, membership of a and a + d depends on a mod q, so witnesses
  // a < p + q suffice. For d >= p every a + d lies in the tail, so Δ is
  // periodic in d from max(p, 1) on.
  const PeriodicForm form(s);
  const Nat p = form.preperiod();
  const Nat q = form.period();
  const Nat scan = p + q;
  auto has_difference = [&](Nat d) {
    for (Nat a = 0; a < scan; ++a) {
      if (form.contains(a) && form.contains(a + d)) return true;
    }
    return false;
  };
  const Nat start = std::max<Nat>(p, 1);
  return from_form(
      start, q, [&](Nat d) { return d > 0 && has_difference(d); },
      [&](Nat r) { return has_difference(start + (r + q - start % q) % q); });
}

FiniteSet enumerate(const GroundSet& s, Nat bound) {
  if (const auto* f = s.finite()) {
    auto xs = f->elements();
    return FiniteSet(std::vector<Nat>(xs.begin(), std::lower_bound(xs.begin(), xs.end(), bound)));
  }
  if (const auto* sp = s.sampled()) {
    if (bound > sp->horizon()) {
      throw HorizonError("enumeration bound " + std::to_string(bound) + " exceeds horizon " +
                         std::to_string(sp->horizon()));
    }
    auto xs = sp->known_members();
    return FiniteSet(std::vector<Nat>(xs.begin(), std::lower_bound(xs.begin(), xs.end(), bound)));
  }
  const auto& up = *s.periodic();
  require_dense(bound, "enumeration bound");
  std::vector<Nat> xs;
  for (Nat x = 0; x < bound; ++x) {
    if (up.contains(x)) xs.push_back(x);
  }
  return FiniteSet(std::move(xs));
}

std::optional<Nat> min_element(const GroundSet& s) { return next_after(s, std::nullopt); }

std::optional<Nat> next_after(const GroundSet& s, std::optional<Nat> after) {
  if (after && *after == std::numeric_limits<Nat>::max()) return std::nullopt;
  const Nat start = after ? *after + 1 : 0;
  if (const auto* f = s.finite()) {
    auto xs = f->elements();
    auto it = std::lower_bound(xs.begin(), xs.end(), start);
    if (it == xs.end()) return std::nullopt;
    return *it;
  }
  if (const auto* up = s.periodic()) {
    const Nat p = up->preperiod_length();
    for (Nat x = start; x < p; ++x) {
      if (up->contains(x)) return x;
    }
    const Nat from = std::max(start, p);
    for (Nat i = 0; i < up->period(); ++i) {
      if (up->contains(from + i)) return from + i;
    }
    return std::nullopt;
  }
  const auto& sp = *s.sampled();
  auto xs = sp.known_members();
  auto it = std::lower_bound(xs.begin(), xs.end(), start);
  if (it != xs.end()) {
    const Nat e = *it;
    if (e <= sp.horizon() || e == start) return e;
    // Positions in [max(H, start), e) are unknown unless the tail gap rules
    // them out: a member x there would need x >= l + g and x <= e - g.
    if (const Nat g = sp.tail_gap(); g > 0) {
      Nat low = std::max(sp.horizon(), start);
      if (it != xs.begin()) low = std::max(low, saturating_add(*std::prev(it), g));
      if (e < g || low > e - g) return e;
    }
  }
  throw HorizonError("next element after " + (after ? std::to_string(*after) : std::string("start")) +
                     " lies beyond horizon " + std::to_string(sp.horizon()));
}

std::optional<Nat> first_escape(const GroundSet& a, const GroundSet& b, Nat shift) {
  if (!a.is_exact() || !b.is_exact()) throw std::invalid_argument("first_escape requires exact sets");
  auto in_b = [&](Nat x) {
    return x <= std::numeric_limits<Nat>::max() - shift && member(b, x + shift) == Outcome::Yes;
  };
  if (const auto* f = a.finite()) {
    for (Nat x : f->elements()) {
      if (!in_b(x)) return x;
    }
    return std::nullopt;
  }
  const auto& up = *a.periodic();
  if (b.finite()) {
    // a is infinite, so some element lands past max(b).
    for (auto x = next_after(a, std::nullopt); x; x = next_after(a, x)) {
      if (!in_b(*x)) return *x;
    }
    return std::nullopt;
  }
  const auto& bp = *b.periodic();
  const Nat bound = std::max(up.preperiod_length(), bp.preperiod_length()) +
                    checked_lcm(up.period(), bp.period());
  for (Nat x = 0; x < bound; ++x) {
    if (up.contains(x) && !in_b(x)) return x;
  }
  return std::nullopt;
}

Outcome is_infinite(const GroundSet& s) {
  if (s.finite()) return Outcome::No;
  if (const auto* up = s.periodic()) return from_bool(up->pattern_size() > 0);
  return Outcome::Unknown;
}

bool is_cofinite(const GroundSet& s) {
  const auto* up = s.periodic();
  return up != nullptr && up->pattern_size() == up->period();
}

SampledPrefix sample_prefix(const GroundSet& s, Nat horizon) {
  if (const auto* sp = s.sampled()) {
    if (horizon >= sp->horizon()) return *sp;
    auto xs = sp->known_members();
    return SampledPrefix(std::vector<Nat>(xs.begin(), std::lower_bound(xs.begin(), xs.end(), horizon)),
                         horizon);
  }
  const FiniteSet xs_set = enumerate(s, horizon);
  auto xs = xs_set.elements();
  return SampledPrefix(std::vector<Nat>(xs.begin(), xs.end()), horizon);
}

namespace {

void write_list(std::ostringstream& out, std::span<const Nat> xs, std::size_t max_items) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i == max_items) {
      out << ",...";
      break;
    }
    if (i > 0) out << ',';
    out << xs[i];
  }
}

}  // namespace

std::string to_string(const FiniteSet& s) {
  std::ostringstream out;
  out << '{';
  write_list(out, s.elements(), 64);
  out << '}';
  return out.str();
}

std::string to_string(const GroundSet& s) {
  if (const auto* f = s.finite()) return to_string(*f);
  std::ostringstream out;
  if (const auto* up = s.periodic()) {
    if (*up == UltimatelyPeriodic::naturals()) return "nat";
    if (*up == UltimatelyPeriodic::evens()) return "evens";
    if (*up == UltimatelyPeriodic::odds()) return "odds";
    out << "up(";
    for (bool b : up->preperiod_bits()) out << (b ? '1' : '0');
    out << ';' << up->period() << ';';
    const auto rs = up->residues();
    write_list(out, rs, rs.size());
    out << ')';
    return out.str();
  }
  const auto& sp = *s.sampled();
  out << "prefix{";
  write_list(out, sp.known_members(), 64);
  out << "; H=" << sp.horizon();
  if (sp.tail_gap() > 0) out << "; gap=" << sp.tail_gap();
  out << '}';
  return out.str();
}

}  // namespace finembed
