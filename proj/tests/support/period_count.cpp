#include "support/period_count.hpp"

#include <algorithm>
#include <stdexcept>

namespace pretenders::testing {
namespace {

constexpr u64 kInnerCap = 4096;

}  // namespace

PeriodCount count_over_period(const Cascade& cascade, u32 max_q) {
  std::vector<const Characterization*> prefix;
  for (const Characterization& e : cascade.entries())
    if (e.q <= max_q && !e.is_universal()) prefix.push_back(&e);
  const std::size_t n = prefix.size();

  // Largest power of each prime among the prefix moduli.
  std::map<u32, u64> power;
  for (const Characterization* e : prefix) {
    u64& slot = power[e->component->pp.prime()];
    slot = std::max(slot, e->m);
  }
  std::vector<std::pair<u32, u64>> by_size(power.begin(), power.end());
  std::sort(by_size.begin(), by_size.end(), [](auto a, auto b) { return a.second > b.second; });

  u64 inner = 1;
  std::vector<u32> inner_primes;
  for (auto [p, pe] : by_size) {
    if (inner * pe > kInnerCap) break;
    inner *= pe;
    inner_primes.push_back(p);
  }
  u64 outer = 1;
  for (auto [p, pe] : by_size)
    if (std::find(inner_primes.begin(), inner_primes.end(), p) == inner_primes.end()) {
      if (outer > UINT64_MAX / pe / inner) throw std::overflow_error("period too large");
      outer *= pe;
    }

  std::vector<std::size_t> inner_idx, outer_idx;
  for (std::size_t i = 0; i < n; ++i) {
    const u32 p = prefix[i]->component->pp.prime();
    (std::find(inner_primes.begin(), inner_primes.end(), p) != inner_primes.end() ? inner_idx : outer_idx)
        .push_back(i);
  }

  // Tally, over inner residues, which inner entry (or none = n) claims first.
  std::vector<u64> inner_hist(n + 1, 0);
  for (u64 x = 0; x < inner; ++x) {
    std::size_t first = n;
    for (std::size_t i : inner_idx)
      if (prefix[i]->contains(x)) {
        first = i;
        break;
      }
    ++inner_hist[first];
  }
  std::vector<u64> inner_at_least(n + 2, 0);  // sum of inner_hist[j] for j >= i
  for (std::size_t i = n + 1; i-- > 0;) inner_at_least[i] = inner_at_least[i + 1] + inner_hist[i];

  // For every outer residue y the base with residues (y, x) first matches
  // min(outer_first(y), inner_first(x)).
  std::vector<u64> counts(n + 1, 0);
  for (u64 y = 0; y < outer; ++y) {
    std::size_t first = n;
    for (std::size_t i : outer_idx)
      if (prefix[i]->contains(y)) {
        first = i;
        break;
      }
    for (std::size_t i : inner_idx) {
      if (i >= first) break;
      counts[i] += inner_hist[i];
    }
    counts[first] += inner_at_least[first];
  }

  PeriodCount out;
  out.period = outer * inner;
  for (std::size_t i = 0; i < n; ++i) out.hits[prefix[i]->q] = counts[i];
  out.unmatched = counts[n];
  return out;
}

}  // namespace pretenders::testing
