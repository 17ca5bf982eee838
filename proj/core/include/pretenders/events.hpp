#pragma once

// Per-prime-power analysis of the pretender congruence. For composite q with
// q = prod p^e, b^q == b (mod q) holds iff it holds modulo every p^e, and the
// residue r = b mod p^e alone decides each component. The preemption ledger
// accumulates, per prime, the residues already claimed by earlier winners.

#include <span>
#include <stdexcept>
#include <vector>

#include "pretenders/arith.hpp"
#include "pretenders/rational.hpp"

namespace pretenders {

/// A winner whose event touches more than one prime (or none) cannot be folded
/// into the per-prime ledger without breaking its product form.
class FormViolation : public std::logic_error {
 public:
  FormViolation(u32 q, const std::string& what)
      : std::logic_error("form violation at q=" + std::to_string(q) + ": " + what), q_(q) {}
  u32 q() const { return q_; }

 private:
  u32 q_;
};

/// A subset of the residues modulo a prime power.
class ResidueSet {
 public:
  static ResidueSet empty(const PrimePower& pp);
  static ResidueSet full(const PrimePower& pp);
  template <class Pred>
  static ResidueSet where(const PrimePower& pp, Pred&& pred) {
    ResidueSet s = empty(pp);
    for (u64 r = 0; r < pp.modulus(); ++r)
      if (pred(r)) s.insert(r);
    return s;
  }

  const PrimePower& modulus() const { return pp_; }
  bool contains(u64 r) const { return member_[r % pp_.modulus()] != 0; }
  std::size_t size() const { return count_; }
  bool is_empty() const { return count_ == 0; }
  bool is_full() const { return count_ == pp_.modulus(); }

  void insert(u64 r);
  std::vector<u64> elements() const;

  /// The operands must share a modulus; std::invalid_argument otherwise.
  ResidueSet intersect(const ResidueSet& o) const;
  ResidueSet unite(const ResidueSet& o) const;
  ResidueSet minus(const ResidueSet& o) const;
  ResidueSet complement() const;
  bool subset_of(const ResidueSet& o) const;

  /// |S| / p^e.
  Rational density() const;

  /// Raw membership flags indexed by residue.
  std::span<const std::uint8_t> flags() const { return member_; }

  friend bool operator==(const ResidueSet&, const ResidueSet&) = default;

 private:
  explicit ResidueSet(const PrimePower& pp);
  void require_same_modulus(const ResidueSet& o) const;

  PrimePower pp_;
  std::vector<std::uint8_t> member_;
  std::size_t count_ = 0;
};

/// {r mod p^E : (r mod p^e) in s}. Throws std::invalid_argument when E < e.
ResidueSet lift(const ResidueSet& s, u32 target_exponent);

/// The residues r mod p^e with r^q == r (mod p^e), p^e the maximal power of
/// p dividing q.
struct PrimePowerEvent {
  u32 q;
  PrimePower pp;
  ResidueSet residues;

  bool trivial() const { return residues.is_full(); }
};

/// Requires p^e | q and p^(e+1) not dividing q.
PrimePowerEvent prime_power_event(u32 q, const PrimePower& pp);

/// One event per prime-power component of a composite q <= 561.
std::vector<PrimePowerEvent> composite_event(u32 q);

/// True iff b satisfies every component of `events`, i.e. b is a pretender
/// base for their q.
bool satisfies(std::span<const PrimePowerEvent> events, u64 b);

class PreemptionLedger {
 public:
  struct Track {
    PrimePower tracked;  // p^E, E the largest exponent of p in any composite <= limit
    ResidueSet blocked;
  };

  /// Tracks every prime dividing a composite in the sieve's range, each at
  /// the largest exponent found there.
  explicit PreemptionLedger(const Sieve& sieve = carmichael_sieve());

  std::span<const Track> tracks() const { return tracks_; }
  bool tracks_prime(u32 p) const;
  const Track& track(u32 p) const;
  /// Position of p's track in tracks(); std::out_of_range when untracked.
  std::size_t slot(u32 p) const;
  u32 tracked_exponent(u32 p) const { return track(p).tracked.exponent(); }
  ResidueSet free(u32 p) const { return track(p).blocked.complement(); }

  /// Blocks a winner's event. The winner must have exactly one nontrivial
  /// component; otherwise FormViolation.
  void ingest(u32 q, std::span<const PrimePowerEvent> components);

 private:
  std::vector<Track> tracks_;
  std::vector<int> index_;  // prime -> slot in tracks_, -1 when untracked
};

/// What a candidate q can still claim given the ledger: per tracked prime,
/// lift(event_p) minus the blocked set (just the free set for primes not
/// dividing q). Because every blocked region is a single-prime cylinder, the
/// still-unclaimed bases form a product set and the density is exact.
struct Residual {
  u32 q;
  std::vector<ResidueSet> allowed;  // aligned with ledger.tracks()
  std::vector<u32> nontrivial_primes;
  Rational density;

  bool preempted() const { return density.is_zero(); }
};

Residual residual(u32 q, const PreemptionLedger& ledger);

}  // namespace pretenders
