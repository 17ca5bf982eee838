#pragma once

// The period of b -> q_b: N = p!_59 * p!_9, i.e. the squares of the primes up
// to 23 times the primes from 29 to 277.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pretenders/arith.hpp"
#include "pretenders/cascade.hpp"

namespace pretenders {

/// Product of the first k primes.
Natural primorial(u32 k);

struct PeriodConstant {
  Natural value;
  std::string decimal;
  std::vector<PrimePower> factorization;
};

PeriodConstant period_constant();

struct LcmReport {
  Natural lcm;
  Natural expected;
  /// "p: lcm^a vs N^b" for each prime whose exponents disagree.
  std::vector<std::string> delta;

  bool equal() const { return lcm == expected; }
};

/// lcm of every entry modulus, compared with the period constant.
LcmReport verify_lcm(const Cascade& cascade);

struct PeriodicityReport {
  std::size_t checked = 0;
  std::optional<Natural> counterexample;

  bool ok() const { return !counterexample; }
};

/// classify(b) == classify(b + N) on `samples` bases: half drawn below 10^6,
/// half random 150-digit numbers.
PeriodicityReport periodicity_check(const Cascade& cascade, std::size_t samples, u64 seed);

/// b and b + N/p agree modulo N/p yet have different primary pretenders.
struct MinimalityWitness {
  u32 p;
  Natural base;
  Natural shifted;
  u32 q_base;
  u32 q_shifted;
};

struct MinimalityReport {
  std::vector<MinimalityWitness> witnesses;
  std::vector<u32> failed_primes;

  bool ok() const { return failed_primes.empty(); }
};

/// One witness per prime dividing N, built by CRT from the entry owning the
/// full power of p in N and residues left free by every entry elsewhere.
MinimalityReport minimality_witnesses(const Cascade& cascade);

}  // namespace pretenders
