#include "pretenders/period.hpp"

#include <algorithm>
#include <random>

namespace pretenders {
namespace {

// x == residues[i] (mod moduli[i]) for pairwise coprime moduli.
Natural crt(const std::vector<u64>& residues, const std::vector<u64>& moduli) {
  mpz_class x = 0;
  mpz_class m = 1;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    const mpz_class mi = Natural(moduli[i]).mpz();
    const mpz_class ri = Natural(residues[i]).mpz();
    // x + m*t == ri (mod mi)  =>  t = (ri - x) * m^-1 (mod mi)
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), m.get_mpz_t(), mi.get_mpz_t());
    mpz_class t = (ri - x) * inv;
    mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), mi.get_mpz_t());
    x += m * t;
    m *= mi;
  }
  return Natural::from_mpz(x);
}

}  // namespace

Natural primorial(u32 k) {
  if (k == 0) throw std::invalid_argument("primorial: k must be >= 1");
  Natural acc(1);
  u32 found = 0;
  for (u64 n = 2; found < k; ++n) {
    if (!is_prime(n)) continue;
    acc *= Natural(n);
    ++found;
  }
  return acc;
}

PeriodConstant period_constant() {
  PeriodConstant pc;
  pc.value = primorial(59) * primorial(9);
  pc.decimal = pc.value.to_string();
  for (u32 i = 1; i <= 59; ++i) {
    const u32 p = nth_prime(i);
    pc.factorization.push_back(PrimePower::make(p, i <= 9 ? 2 : 1));
  }
  return pc;
}

LcmReport verify_lcm(const Cascade& cascade) {
  LcmReport report{Natural(1), period_constant().value, {}};
  for (const Characterization& e : cascade.entries()) report.lcm = lcm(report.lcm, Natural(e.m));

  for (u32 p : carmichael_sieve().primes()) {
    const u32 a = report.lcm.valuation(p);
    const u32 b = report.expected.valuation(p);
    if (a != b)
      report.delta.push_back(std::to_string(p) + ": lcm^" + std::to_string(a) + " vs N^" + std::to_string(b));
  }
  if (report.delta.empty() && !report.equal()) report.delta.push_back("prime factor above 561");
  return report;
}

PeriodicityReport periodicity_check(const Cascade& cascade, std::size_t samples, u64 seed) {
  const Natural period = period_constant().value;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<u64> small(0, 999'999);
  std::uniform_int_distribution<int> digit(0, 9);

  PeriodicityReport report;
  for (std::size_t i = 0; i < samples; ++i) {
    Natural b;
    if (i % 2 == 0) {
      b = Natural(small(rng));
    } else {
      std::string digits(150, '0');
      digits[0] = static_cast<char>('1' + digit(rng) % 9);
      for (std::size_t j = 1; j < digits.size(); ++j) digits[j] = static_cast<char>('0' + digit(rng));
      b = Natural::parse(digits);
    }
    ++report.checked;
    if (cascade.classify(b) != cascade.classify(b + period)) {
      report.counterexample = b;
      break;
    }
  }
  return report;
}

MinimalityReport minimality_witnesses(const Cascade& cascade) {
  const PeriodConstant pc = period_constant();
  const auto tracks = cascade.ledger().tracks();

  // A residue per tracked prime that no entry claims.
  std::vector<u64> moduli;
  std::vector<u64> free_residue;
  for (const auto& t : tracks) {
    moduli.push_back(t.tracked.modulus());
    const auto free = t.blocked.complement().elements();
    free_residue.push_back(free.empty() ? 0 : free.front());
  }

  MinimalityReport report;
  for (const PrimePower& full : pc.factorization) {
    const u32 p = full.prime();
    const Natural step = pc.value.divide_exact(Natural(p));

    // The entry whose modulus is the whole p-part of N.
    const Characterization* owner = nullptr;
    for (const Characterization& e : cascade.entries())
      if (e.component && e.component->pp == full) owner = &e;

    bool found = false;
    if (owner && owner->new_residues) {
      const std::size_t slot = cascade.ledger().slot(p);
      for (u64 r : owner->new_residues->elements()) {
        std::vector<u64> residues = free_residue;
        residues[slot] = r;
        const Natural b = crt(residues, moduli);
        const Natural shifted = b + step;
        const u32 qb = cascade.classify(b);
        const u32 qs = cascade.classify(shifted);
        if (qb == owner->q && qs != qb) {
          report.witnesses.push_back({p, b, shifted, qb, qs});
          found = true;
          break;
        }
      }
    }
    if (!found) report.failed_primes.push_back(p);
  }
  return report;
}

}  // namespace pretenders
