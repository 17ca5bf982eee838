#include "pretenders/census.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

namespace pretenders {

std::map<u32, Rational> densities(const Cascade& cascade) {
  std::map<u32, Rational> out;
  for (const Characterization& e : cascade.entries()) out.emplace(e.q, e.density);
  return out;
}

FirstBaseScan first_bases(const Cascade& cascade, u64 limit, unsigned workers) {
  constexpr u64 kChunk = u64{1} << 18;
  constexpr u64 kUnseen = std::numeric_limits<u64>::max();
  const std::size_t n = cascade.size();
  const u64 chunks = (limit + kChunk - 1) / kChunk;

  std::vector<std::vector<u64>> minima(chunks, std::vector<u64>(n, kUnseen));
  std::atomic<u64> next{0};
  auto work = [&] {
    for (u64 c = next++; c < chunks; c = next++) {
      auto& local = minima[c];
      const u64 hi = std::min(limit, (c + 1) * kChunk);
      for (u64 b = c * kChunk; b < hi; ++b) {
        u64& slot = local[cascade.classify_index(b)];
        if (slot == kUnseen) slot = b;
      }
    }
  };

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<u64>(workers, std::max<u64>(chunks, 1)));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
  }

  FirstBaseScan scan;
  scan.limit = limit;
  for (std::size_t i = 0; i < n; ++i) {
    u64 best = kUnseen;
    for (const auto& local : minima) best = std::min(best, local[i]);
    const u32 q = cascade.entries()[i].q;
    if (best == kUnseen) scan.missing.push_back(q);
    else scan.first.emplace(q, best);
  }
  return scan;
}

const CensusRow* CensusReport::find(u32 q) const {
  auto it = std::find_if(rows.begin(), rows.end(), [q](const CensusRow& r) { return r.q == q; });
  return it == rows.end() ? nullptr : &*it;
}

CensusReport census(const Cascade& cascade, const FirstBaseScan* scan) {
  CensusReport report;
  for (const Characterization& e : cascade.entries()) {
    CensusRow row{e.q, e.k, e.m, e.density, e.rarity().render_decimal(2), std::nullopt};
    if (scan) {
      auto it = scan->first.find(e.q);
      if (it != scan->first.end()) row.first_base = it->second;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

Extremes extremes(const CensusReport& report) {
  Extremes x;
  bool any_rarity = false;
  for (const CensusRow& row : report.rows) {
    if (row.first_base) {
      if (x.max_first_base_holders.empty() || *row.first_base > x.max_first_base) {
        x.max_first_base = *row.first_base;
        x.max_first_base_holders = {row.q};
      } else if (*row.first_base == x.max_first_base) {
        x.max_first_base_holders.push_back(row.q);
      }
    }
    const Rational r = row.density.reciprocal();
    if (!any_rarity || r > x.max_rarity) {
      x.max_rarity = r;
      x.max_rarity_holders = {row.q};
    } else if (r == x.max_rarity) {
      x.max_rarity_holders.push_back(row.q);
    }
    if (!any_rarity || r < x.min_rarity) {
      x.min_rarity = r;
      x.min_rarity_holders = {row.q};
    } else if (r == x.min_rarity) {
      x.min_rarity_holders.push_back(row.q);
    }
    any_rarity = true;
  }
  return x;
}

std::vector<T3Mismatch> rarity_regression(const CensusReport& report, std::span<const GoldenT3Row> golden) {
  static const Rational kTolerance = Rational::make(1, 100);
  std::vector<T3Mismatch> out;
  for (const GoldenT3Row& g : golden) {
    const CensusRow* row = report.find(g.q);
    if (!row) {
      out.push_back({g.q, "q", std::to_string(g.q), "absent"});
      continue;
    }
    if (row->k != g.k) out.push_back({g.q, "k", std::to_string(g.k), std::to_string(row->k)});
    if (row->m != g.m) out.push_back({g.q, "m", std::to_string(g.m), std::to_string(row->m)});
    if (row->first_base && *row->first_base != g.first_base)
      out.push_back({g.q, "first_base", std::to_string(g.first_base), std::to_string(*row->first_base)});

    Rational diff = Rational::parse_decimal(row->rarity_display) - Rational::parse_decimal(g.rarity);
    if (diff.sign() < 0) diff = Rational(0) - diff;
    if (diff > kTolerance)
      out.push_back({g.q, "rarity", g.rarity,
                     row->rarity_display + " (exact " + row->density.reciprocal().to_string() + ")"});
  }
  for (const CensusRow& row : report.rows)
    if (std::none_of(golden.begin(), golden.end(), [&](const GoldenT3Row& g) { return g.q == row.q; }))
      out.push_back({row.q, "q", "absent", std::to_string(row.q)});
  return out;
}

}  // namespace pretenders
