#include "pretenders/cascade.hpp"

#include <algorithm>
#include <climits>

namespace pretenders {

Cascade build_cascade() {
  Cascade c;
  PreemptionLedger& ledger = c.ledger_;

  for (u32 q : carmichael_sieve().composites()) {
    Residual res = residual(q, ledger);
    const bool winner = !res.preempted();
    c.candidates_.push_back({q, res.density, winner});
    if (!winner) continue;

    Characterization entry;
    entry.q = q;
    entry.density = res.density;

    if (res.nontrivial_primes.empty()) {
      if (q != kCarmichaelBound)
        throw FormViolation(q, "universal event below 561");
      c.entries_.push_back(std::move(entry));
      break;
    }
    if (res.nontrivial_primes.size() != 1)
      throw FormViolation(q, "winner with " + std::to_string(res.nontrivial_primes.size()) +
                                 " nontrivial prime components");

    const u32 p = res.nontrivial_primes.front();
    std::vector<PrimePowerEvent> events = composite_event(q);
    auto comp = std::find_if(events.begin(), events.end(),
                             [p](const PrimePowerEvent& e) { return e.pp.prime() == p; });
    const std::size_t slot = ledger.slot(p);

    entry.m = comp->pp.modulus();
    entry.k = static_cast<u32>(gcd(q - 1, comp->pp.totient()));
    entry.component = *comp;
    entry.new_residues = res.allowed[slot];
    entry.blocked_before = ledger.track(p).blocked;

    ledger.ingest(q, events);
    c.entries_.push_back(std::move(entry));
  }
  c.index_probes();
  return c;
}

const Cascade& default_cascade() {
  static const Cascade cascade = build_cascade();
  return cascade;
}

void Cascade::index_probes() {
  probes_.clear();
  flags_.clear();
  for (const Characterization& e : entries_) {
    probes_.push_back({static_cast<u32>(e.m), static_cast<u32>(flags_.size())});
    if (e.component) {
      auto f = e.component->residues.flags();
      flags_.insert(flags_.end(), f.begin(), f.end());
    } else {
      flags_.push_back(1);
    }
  }
}

const Characterization* Cascade::find(u32 q) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), q,
                             [](const Characterization& e, u32 v) { return e.q < v; });
  return it != entries_.end() && it->q == q ? &*it : nullptr;
}

std::size_t Cascade::classify_index(u64 b) const {
  const std::uint8_t* flags = flags_.data();
  if (b <= UINT32_MAX) {
    const auto b32 = static_cast<u32>(b);
    for (std::size_t i = 0; i < probes_.size(); ++i)
      if (flags[probes_[i].offset + b32 % probes_[i].m]) return i;
  } else {
    for (std::size_t i = 0; i < probes_.size(); ++i)
      if (flags[probes_[i].offset + b % probes_[i].m]) return i;
  }
  throw std::logic_error("Cascade::classify: no entry matched");
}

u32 Cascade::classify(const Natural& b) const {
  if (b.fits_u64()) return classify(b.to_u64());
  for (std::size_t i = 0; i < probes_.size(); ++i)
    if (flags_[probes_[i].offset + b.mod(probes_[i].m)]) return entries_[i].q;
  throw std::logic_error("Cascade::classify: no entry matched");
}

KmReport derive_k_m(const Characterization& entry) {
  if (!entry.component) {
    if (entry.q != kCarmichaelBound) throw KmDerivationError("entry without component is not 561");
    return {1, 1, {}};
  }
  const PrimePowerEvent& comp = *entry.component;
  const u64 m = comp.pp.modulus();
  const u32 k = static_cast<u32>(gcd(entry.q - 1, comp.pp.totient()));

  const ResidueSet roots = ResidueSet::where(comp.pp, [&](u64 r) {
    const u64 v = mod_pow(r, k, m);
    return v == 0 || v == 1 % m;
  });
  if (!comp.residues.subset_of(roots))
    throw KmDerivationError("event of " + std::to_string(entry.q) + " not inside the " +
                            std::to_string(k) + "-th roots of 0 or 1 mod " + std::to_string(m));

  const ResidueSet surplus = roots.minus(comp.residues);
  if (entry.blocked_before) {
    const ResidueSet lifted = lift(surplus, entry.blocked_before->modulus().exponent());
    if (!lifted.subset_of(*entry.blocked_before))
      throw KmDerivationError("surplus roots of " + std::to_string(entry.q) + " were not preempted");
  } else if (!surplus.is_empty()) {
    throw KmDerivationError("no ledger snapshot for " + std::to_string(entry.q));
  }
  return {k, m, surplus.elements()};
}

std::set<u32> pretender_family(std::vector<std::size_t>* sizes) {
  const auto primes = carmichael_sieve().primes();
  std::vector<std::vector<u32>> groups(8);
  for (u32 p : primes) {
    if (p <= 277) groups[0].push_back(2 * p);
    if (p >= 3 && p <= 181) groups[1].push_back(3 * p);
    if (p >= 5 && p <= 109 && p % 4 == 1) groups[2].push_back(5 * p);
    if (p >= 7 && p <= 79 && p % 3 == 1) groups[3].push_back(7 * p);
  }
  groups[4] = {11 * 11, 11 * 31, 11 * 41};
  groups[5] = {13 * 13, 13 * 37};
  groups[6] = {17 * 17, 19 * 19, 23 * 23};
  groups[7] = {kCarmichaelBound};

  std::set<u32> family;
  if (sizes) sizes->clear();
  for (const auto& g : groups) {
    family.insert(g.begin(), g.end());
    if (sizes) sizes->push_back(g.size());
  }
  return family;
}

FamilyReport family_check(const Cascade& cascade) {
  FamilyReport report;
  report.family = pretender_family(&report.family_sizes);
  std::set<u32> derived;
  for (const Characterization& e : cascade.entries()) derived.insert(e.q);
  std::set_difference(report.family.begin(), report.family.end(), derived.begin(), derived.end(),
                      std::back_inserter(report.missing));
  std::set_difference(derived.begin(), derived.end(), report.family.begin(), report.family.end(),
                      std::back_inserter(report.unexpected));
  return report;
}

}  // namespace pretenders
