#include <gtest/gtest.h>

#include "pretenders/golden.hpp"
#include "pretenders/period.hpp"

namespace pretenders {
namespace {

const Cascade& cascade() { return default_cascade(); }

TEST(Primorial, SmallValues) {
  EXPECT_EQ(primorial(1), Natural(2));
  EXPECT_EQ(primorial(4), Natural(210));
  EXPECT_EQ(primorial(9), Natural(223092870));
  EXPECT_THROW(primorial(0), std::invalid_argument);
}

TEST(Primorial, Recurrence) {
  for (u32 k = 1; k < 59; ++k) EXPECT_EQ(primorial(k + 1), primorial(k) * Natural(nth_prime(k + 1))) << k;
}

TEST(PeriodConstant, DigitsMatchGolden) {
  const PeriodConstant pc = period_constant();
  EXPECT_EQ(pc.decimal.size(), 122u);
  EXPECT_EQ(pc.decimal.substr(0, 12), "195685843334");
  EXPECT_EQ(pc.decimal.substr(112), "2360439300");
  EXPECT_EQ(pc.decimal, load_golden_period(PRETENDERS_GOLDEN_DIR));
}

TEST(PeriodConstant, Factorization) {
  const PeriodConstant pc = period_constant();
  ASSERT_EQ(pc.factorization.size(), 59u);
  Natural product(1);
  for (const PrimePower& pp : pc.factorization) {
    EXPECT_EQ(pp.exponent(), pp.prime() <= 23 ? 2u : 1u);
    product *= Natural(pp.modulus());
  }
  EXPECT_EQ(product, pc.value);
}

TEST(PeriodConstant, DivisibleByEveryModulus) {
  const Natural n = period_constant().value;
  for (const auto& e : cascade().entries()) EXPECT_EQ(n.mod(e.m), 0u) << e.q;
}

TEST(VerifyLcm, EqualsPeriod) {
  const LcmReport r = verify_lcm(cascade());
  EXPECT_TRUE(r.equal());
  EXPECT_TRUE(r.delta.empty());
  EXPECT_EQ(r.lcm.valuation(23), 2u);
  EXPECT_EQ(r.lcm.valuation(277), 1u);
  EXPECT_EQ(cascade().find(554)->m, 277u);
  EXPECT_EQ(cascade().find(529)->m, 529u);
  for (u32 p = 278; p <= 561; ++p)
    if (is_prime(p)) EXPECT_EQ(r.lcm.valuation(p), 0u);
}

TEST(Periodicity, Examples) {
  const Natural n = period_constant().value;
  EXPECT_EQ(cascade().classify(Natural(2) + n), 341u);
  EXPECT_EQ(cascade().classify(n), 4u);
  EXPECT_EQ(cascade().classify(Natural(0)), 4u);
}

TEST(Periodicity, SampledBases) {
  const PeriodicityReport r = periodicity_check(cascade(), 1000, 2024);
  EXPECT_EQ(r.checked, 1000u);
  EXPECT_TRUE(r.ok());
}

TEST(Minimality, WitnessForEveryPrime) {
  const MinimalityReport r = minimality_witnesses(cascade());
  EXPECT_TRUE(r.ok());
  ASSERT_EQ(r.witnesses.size(), 59u);
  const Natural n = period_constant().value;
  for (const MinimalityWitness& w : r.witnesses) {
    const Natural step = n.divide_exact(Natural(w.p));
    EXPECT_EQ(w.shifted, w.base + step);
    EXPECT_NE(cascade().classify(w.base), cascade().classify(w.shifted)) << w.p;
    EXPECT_EQ(cascade().classify(w.base), w.q_base);
  }
  // p = 3: the witness sits in 8 mod 9 and lands on q_b = 9
  const auto w3 = std::find_if(r.witnesses.begin(), r.witnesses.end(), [](const auto& w) { return w.p == 3; });
  EXPECT_EQ(w3->q_base, 9u);
  EXPECT_EQ(w3->base.mod(9), 8u);
  const auto w277 = std::find_if(r.witnesses.begin(), r.witnesses.end(), [](const auto& w) { return w.p == 277; });
  EXPECT_EQ(w277->q_base, 554u);
  const auto w2 = std::find_if(r.witnesses.begin(), r.witnesses.end(), [](const auto& w) { return w.p == 2; });
  EXPECT_EQ(w2->q_base, 4u);
  EXPECT_EQ(w2->shifted.mod(4), (w2->base.mod(4) + 2) % 4);
}

}  // namespace
}  // namespace pretenders
