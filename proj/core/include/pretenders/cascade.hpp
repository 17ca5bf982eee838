#pragma once

// The ordered decision list b -> q_b: walk the composites 4..561 upward, keep
// those that still claim a positive density of bases after everything smaller
// has taken its share, and record each survivor's residue data.

#include <optional>
#include <set>
#include <span>
#include <vector>

#include "pretenders/arith.hpp"
#include "pretenders/events.hpp"
#include "pretenders/rational.hpp"

namespace pretenders {

struct Characterization {
  u32 q = 0;
  u32 k = 1;
  u64 m = 1;  // 1 only for the universal entry 561
  /// The single nontrivial component (absent for 561).
  std::optional<PrimePowerEvent> component;
  /// Residues the entry newly claims, at the ledger's tracked power of its prime.
  std::optional<ResidueSet> new_residues;
  /// The ledger's blocked set at that prime just before this entry was added.
  std::optional<ResidueSet> blocked_before;
  Rational density;

  Rational rarity() const { return density.reciprocal(); }
  bool is_universal() const { return m == 1; }
  /// Membership of b in the entry's full event.
  bool contains(u64 b) const { return !component || component->residues.contains(b % m); }
};

/// Residual density of every composite at the moment it was considered.
struct CandidateRecord {
  u32 q;
  Rational density;
  bool winner;
};

class Cascade {
 public:
  std::span<const Characterization> entries() const { return entries_; }
  std::span<const CandidateRecord> candidates() const { return candidates_; }
  const PreemptionLedger& ledger() const { return ledger_; }
  std::size_t size() const { return entries_.size(); }
  /// nullptr when q is not a primary pretender.
  const Characterization* find(u32 q) const;

  /// q_b: the first entry whose event contains b.
  u32 classify(u64 b) const { return entries_[classify_index(b)].q; }
  u32 classify(const Natural& b) const;
  std::size_t classify_index(u64 b) const;

 private:
  friend Cascade build_cascade();
  Cascade() = default;
  void index_probes();

  struct Probe {
    u32 m;
    u32 offset;  // into flags_
  };

  std::vector<Characterization> entries_;
  std::vector<CandidateRecord> candidates_;
  PreemptionLedger ledger_;
  std::vector<Probe> probes_;
  std::vector<std::uint8_t> flags_;
};

/// Throws FormViolation if some winner below 561 has other than exactly one
/// nontrivial prime component.
Cascade build_cascade();

/// Shared immutable cascade, built on first use.
const Cascade& default_cascade();

class KmDerivationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The "k-th roots of 0 or 1 (mod m)" reading of an entry. The exact event
/// sits inside that root set, and whatever the root set adds on top was
/// already blocked when the entry was inserted.
struct KmReport {
  u32 k;
  u64 m;
  std::vector<u64> surplus;  // roots mod m outside the exact event
};

/// Throws KmDerivationError when either containment fails.
KmReport derive_k_m(const Characterization& entry);

struct FamilyReport {
  std::set<u32> family;
  std::vector<u32> missing;     // in the family, not in the cascade
  std::vector<u32> unexpected;  // in the cascade, not in the family
  std::vector<std::size_t> family_sizes;  // 2p, 3p, 5p, 7p, 11x, 13x, squares, 561

  bool ok() const { return missing.empty() && unexpected.empty(); }
};

/// The closed-form family of all primary pretenders: 2p for p <= 277, 3p for
/// 3 <= p <= 181, 5p for p == 1 (mod 4) in [5, 109], 7p for p == 1 (mod 3)
/// in [7, 79], 11*{11,31,41}, 13*{13,37}, 17^2, 19^2, 23^2 and 561.
std::set<u32> pretender_family(std::vector<std::size_t>* sizes = nullptr);

FamilyReport family_check(const Cascade& cascade);

}  // namespace pretenders
