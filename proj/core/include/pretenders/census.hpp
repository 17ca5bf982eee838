#pragma once

// Exact densities, rarities and first bases of the primary pretenders.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pretenders/cascade.hpp"
#include "pretenders/golden.hpp"
#include "pretenders/rational.hpp"

namespace pretenders {

/// Base range needed to see every first base (the largest is just above 10^7).
inline constexpr u64 kFirstBaseScanLimit = 11'000'000;

/// Insertion-time density of each entry.
std::map<u32, Rational> densities(const Cascade& cascade);

struct FirstBaseScan {
  u64 limit = 0;               // bases [0, limit) were scanned
  std::map<u32, u64> first;    // q -> least b with q_b = q
  std::vector<u32> missing;    // entries not seen below limit

  bool complete() const { return missing.empty(); }
};

/// Classifies every b < limit. The range is cut into fixed chunks handed out
/// to `workers` threads (0 = hardware concurrency); per-chunk minima are merged
/// so the result does not depend on scheduling.
FirstBaseScan first_bases(const Cascade& cascade, u64 limit, unsigned workers = 0);

struct CensusRow {
  u32 q;
  u32 k;
  u64 m;
  Rational density;
  std::string rarity_display;  // reciprocal density, 2 places, half-to-even
  std::optional<u64> first_base;
};

struct CensusReport {
  std::vector<CensusRow> rows;
  const CensusRow* find(u32 q) const;
};

CensusReport census(const Cascade& cascade, const FirstBaseScan* scan = nullptr);

struct Extremes {
  std::vector<u32> max_first_base_holders;  // more than one only on a tie
  u64 max_first_base = 0;
  std::vector<u32> max_rarity_holders;
  Rational max_rarity;
  std::vector<u32> min_rarity_holders;
  Rational min_rarity;
};

/// First-base extremes consider only rows that have a first base.
Extremes extremes(const CensusReport& report);

struct T3Mismatch {
  u32 q;
  std::string field;
  std::string expected;
  std::string derived;
};

/// Compares every golden row against the report: k, m and first base exactly,
/// rarity within +-0.01 after rendering. Rows without a first base in the
/// report skip that field.
std::vector<T3Mismatch> rarity_regression(const CensusReport& report, std::span<const GoldenT3Row> golden);

}  // namespace pretenders
