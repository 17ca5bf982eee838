#include "pretenders/events.hpp"

#include <algorithm>

namespace pretenders {

ResidueSet::ResidueSet(const PrimePower& pp) : pp_(pp), member_(pp.modulus(), 0) {}

ResidueSet ResidueSet::empty(const PrimePower& pp) { return ResidueSet(pp); }

ResidueSet ResidueSet::full(const PrimePower& pp) {
  ResidueSet s(pp);
  std::fill(s.member_.begin(), s.member_.end(), std::uint8_t{1});
  s.count_ = pp.modulus();
  return s;
}

void ResidueSet::insert(u64 r) {
  auto& flag = member_[r % pp_.modulus()];
  if (!flag) {
    flag = 1;
    ++count_;
  }
}

std::vector<u64> ResidueSet::elements() const {
  std::vector<u64> out;
  out.reserve(count_);
  for (u64 r = 0; r < member_.size(); ++r)
    if (member_[r]) out.push_back(r);
  return out;
}

void ResidueSet::require_same_modulus(const ResidueSet& o) const {
  if (!(pp_ == o.pp_))
    throw std::invalid_argument("ResidueSet: moduli differ (" + to_string(pp_) + " vs " +
                                to_string(o.pp_) + ")");
}

ResidueSet ResidueSet::intersect(const ResidueSet& o) const {
  require_same_modulus(o);
  ResidueSet s(pp_);
  for (u64 r = 0; r < member_.size(); ++r)
    if (member_[r] && o.member_[r]) s.insert(r);
  return s;
}

ResidueSet ResidueSet::unite(const ResidueSet& o) const {
  require_same_modulus(o);
  ResidueSet s(pp_);
  for (u64 r = 0; r < member_.size(); ++r)
    if (member_[r] || o.member_[r]) s.insert(r);
  return s;
}

ResidueSet ResidueSet::minus(const ResidueSet& o) const {
  require_same_modulus(o);
  ResidueSet s(pp_);
  for (u64 r = 0; r < member_.size(); ++r)
    if (member_[r] && !o.member_[r]) s.insert(r);
  return s;
}

ResidueSet ResidueSet::complement() const {
  ResidueSet s(pp_);
  for (u64 r = 0; r < member_.size(); ++r)
    if (!member_[r]) s.insert(r);
  return s;
}

bool ResidueSet::subset_of(const ResidueSet& o) const {
  require_same_modulus(o);
  for (u64 r = 0; r < member_.size(); ++r)
    if (member_[r] && !o.member_[r]) return false;
  return true;
}

Rational ResidueSet::density() const { return Rational(Natural(count_), Natural(pp_.modulus())); }

ResidueSet lift(const ResidueSet& s, u32 target_exponent) {
  const PrimePower& from = s.modulus();
  if (target_exponent < from.exponent())
    throw std::invalid_argument("lift: target exponent " + std::to_string(target_exponent) +
                                " below source exponent " + std::to_string(from.exponent()));
  const PrimePower to = PrimePower::make(from.prime(), target_exponent);
  return ResidueSet::where(to, [&](u64 r) { return s.contains(r % from.modulus()); });
}

PrimePowerEvent prime_power_event(u32 q, const PrimePower& pp) {
  const u64 m = pp.modulus();
  if (q % m != 0)
    throw std::invalid_argument("prime_power_event: " + to_string(pp) + " does not divide " +
                                std::to_string(q));
  if ((q / m) % pp.prime() == 0)
    throw std::invalid_argument("prime_power_event: " + to_string(pp) + " is not the maximal power in " +
                                std::to_string(q));
  return {q, pp, ResidueSet::where(pp, [&](u64 r) { return mod_pow(r, q, m) == r; })};
}

std::vector<PrimePowerEvent> composite_event(u32 q) {
  const Sieve& sieve = carmichael_sieve();
  if (q > sieve.limit() || !sieve.is_composite(q))
    throw std::invalid_argument("composite_event: " + std::to_string(q) +
                                " is not a composite <= " + std::to_string(sieve.limit()));
  std::vector<PrimePowerEvent> out;
  for (const PrimePower& pp : sieve.factor(q)) out.push_back(prime_power_event(q, pp));
  return out;
}

bool satisfies(std::span<const PrimePowerEvent> events, u64 b) {
  return std::all_of(events.begin(), events.end(),
                     [b](const PrimePowerEvent& e) { return e.residues.contains(b % e.pp.modulus()); });
}

PreemptionLedger::PreemptionLedger(const Sieve& sieve) {
  std::vector<u32> max_exp(sieve.limit() + 1, 0);
  for (u32 n : sieve.composites())
    for (const PrimePower& pp : sieve.factor(n))
      max_exp[pp.prime()] = std::max(max_exp[pp.prime()], pp.exponent());

  index_.assign(sieve.limit() + 1, -1);
  for (u32 p : sieve.primes()) {
    if (max_exp[p] == 0) continue;
    index_[p] = static_cast<int>(tracks_.size());
    PrimePower tracked = PrimePower::make(p, max_exp[p]);
    tracks_.push_back({tracked, ResidueSet::empty(tracked)});
  }
}

bool PreemptionLedger::tracks_prime(u32 p) const {
  return p < index_.size() && index_[p] >= 0;
}

std::size_t PreemptionLedger::slot(u32 p) const {
  if (!tracks_prime(p)) throw std::out_of_range("PreemptionLedger: prime " + std::to_string(p) + " untracked");
  return static_cast<std::size_t>(index_[p]);
}

const PreemptionLedger::Track& PreemptionLedger::track(u32 p) const { return tracks_[slot(p)]; }

void PreemptionLedger::ingest(u32 q, std::span<const PrimePowerEvent> components) {
  const PrimePowerEvent* nontrivial = nullptr;
  for (const PrimePowerEvent& e : components) {
    if (e.trivial()) continue;
    if (nontrivial) throw FormViolation(q, "more than one nontrivial prime component");
    nontrivial = &e;
  }
  if (!nontrivial) throw FormViolation(q, "no nontrivial component; event covers every base");
  Track& t = tracks_[slot(nontrivial->pp.prime())];
  t.blocked = t.blocked.unite(lift(nontrivial->residues, t.tracked.exponent()));
}

Residual residual(u32 q, const PreemptionLedger& ledger) {
  Residual out{q, {}, {}, Rational(1)};
  const std::vector<PrimePowerEvent> events = composite_event(q);
  for (const PrimePowerEvent& e : events)
    if (!e.trivial()) out.nontrivial_primes.push_back(e.pp.prime());

  out.allowed.reserve(ledger.tracks().size());
  for (const PreemptionLedger::Track& t : ledger.tracks()) {
    const u32 p = t.tracked.prime();
    auto hit = std::find_if(events.begin(), events.end(),
                            [p](const PrimePowerEvent& e) { return e.pp.prime() == p; });
    ResidueSet allowed = hit == events.end()
                             ? t.blocked.complement()
                             : lift(hit->residues, t.tracked.exponent()).minus(t.blocked);
    out.density *= allowed.density();
    out.allowed.push_back(std::move(allowed));
  }
  return out;
}

}  // namespace pretenders
