#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "specfactor/errors.hpp"
#include "specfactor/numtheory.hpp"

namespace specfactor {
namespace {

TEST(PrimeTable, FirstEightPrimes) {
  const auto t = PrimeTable::sieve(8);
  const std::vector<Integer> expected{2, 3, 5, 7, 11, 13, 17, 19};
  EXPECT_TRUE(std::ranges::equal(t.primes(), expected));
}

TEST(PrimeTable, SingleEntry) {
  const auto t = PrimeTable::sieve(1);
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t[0], 2u);
}

TEST(PrimeTable, ThirtyTwoPrimesContainSixtySeven) {
  const auto t = PrimeTable::sieve(32);
  EXPECT_EQ(t[30], 127u);
  EXPECT_EQ(t[31], 131u);
  EXPECT_TRUE(t.contains(67));
  EXPECT_EQ(t.index_of(67), std::optional<std::size_t>{18});
  EXPECT_FALSE(t.contains(69));
  EXPECT_FALSE(t.contains(137));
}

TEST(PrimeTable, RejectsEmptyAndOversizedRequests) {
  EXPECT_THROW(PrimeTable::sieve(0), PreconditionError);
  EXPECT_THROW(PrimeTable::sieve(1000, 100), ResourceLimitError);
}

TEST(PrimeTable, EveryEntryPassesTrialDivisionUpToTenToTheFive) {
  const auto t = PrimeTable::sieve(100000);
  ASSERT_EQ(t.size(), 100000u);
  Integer candidate = 1;
  for (std::size_t i = 0; i < t.size(); ++i) {
    // Next prime after the previous entry, found independently.
    do {
      ++candidate;
    } while (!is_prime_trial_division(candidate));
    ASSERT_EQ(t[i], candidate) << "index " << i;
  }
}

TEST(PrimeTable, PrimeNumberTheoremSanity) {
  const auto t = PrimeTable::sieve(10000);
  const double n = 10000.0;
  EXPECT_EQ(t.largest(), 104729u);
  EXPECT_LT(std::abs(static_cast<double>(t.largest()) / (n * std::log(n)) - 1.0), 0.2);
}

TEST(FactorOracle, Examples) {
  EXPECT_EQ(factor_oracle(231).factors, (std::map<Integer, unsigned>{{3, 1}, {7, 1}, {11, 1}}));
  EXPECT_EQ(factor_oracle(13).factors, (std::map<Integer, unsigned>{{13, 1}}));
  EXPECT_EQ(factor_oracle(360).factors, (std::map<Integer, unsigned>{{2, 3}, {3, 2}, {5, 1}}));
  EXPECT_EQ(factor_oracle(360).to_string(), "2^3 * 3^2 * 5");
  EXPECT_EQ(factor_oracle(360).total_multiplicity(), 6u);
  EXPECT_THROW(factor_oracle(1), PreconditionError);
}

TEST(FactorOracle, RoundTripOnSampledIntegers) {
  std::mt19937_64 gen(2024);
  std::uniform_int_distribution<Integer> dist(2, 1000000);
  for (int trial = 0; trial < 20000; ++trial) {
    const Integer n = dist(gen);
    const auto f = factor_oracle(n);
    ASSERT_EQ(f.product(), n);
    for (const auto& [p, alpha] : f.factors) {
      ASSERT_TRUE(is_prime_trial_division(p));
      ASSERT_GE(alpha, 1u);
    }
  }
}

TEST(Spectrum, Examples) {
  SpectrumSpec s;
  s.kind = SpectrumKind::LogPrimes;
  s.levels = 3;
  auto v = spectrum_values(s);
  ASSERT_EQ(v.size(), 3u);
  EXPECT_DOUBLE_EQ(v[0], std::log(2.0));
  EXPECT_DOUBLE_EQ(v[1], std::log(3.0));
  EXPECT_DOUBLE_EQ(v[2], std::log(5.0));

  s.kind = SpectrumKind::Integers;
  s.levels = 4;
  EXPECT_EQ(spectrum_values(s), (std::vector<double>{2, 3, 4, 5}));

  s.kind = SpectrumKind::LogIntegers;
  s.levels = 3;
  s.include_unity = true;
  v = spectrum_values(s);
  EXPECT_EQ(v[0], 0.0);
  EXPECT_DOUBLE_EQ(v[1], std::log(2.0));
  EXPECT_DOUBLE_EQ(v[2], std::log(3.0));
}

TEST(Spectrum, StrictlyIncreasingForEveryKind) {
  for (auto kind : {SpectrumKind::LogPrimes, SpectrumKind::LogIntegers, SpectrumKind::Primes,
                    SpectrumKind::Integers}) {
    for (bool unity : {false, true}) {
      SpectrumSpec s{kind, 500, unity, {}};
      const auto v = spectrum_values(s);
      ASSERT_EQ(v.size(), 500u);
      EXPECT_TRUE(std::ranges::adjacent_find(v, std::greater_equal<>{}) == v.end())
          << to_string(kind);
    }
  }
}

TEST(Spectrum, CustomListValidation) {
  SpectrumSpec s{SpectrumKind::Custom, 3, false, {0.0, 1.0, 3.0}};
  EXPECT_EQ(spectrum_values(s), (std::vector<double>{0.0, 1.0, 3.0}));
  s.custom = {0.0, 2.0, 1.0};
  EXPECT_THROW(spectrum_values(s), PreconditionError);
  s.custom = {0.0};
  EXPECT_THROW(spectrum_values(s), PreconditionError);
}

TEST(Spectrum, KindNamesRoundTrip) {
  for (auto kind : {SpectrumKind::LogPrimes, SpectrumKind::LogIntegers, SpectrumKind::Primes,
                    SpectrumKind::Integers, SpectrumKind::Custom}) {
    EXPECT_EQ(parse_spectrum_kind(to_string(kind)), kind);
  }
  EXPECT_FALSE(parse_spectrum_kind("squares").has_value());
}

TEST(Goldbach, SmallRanges) {
  auto r = goldbach_check(10, 4);
  EXPECT_TRUE(r.all_covered());
  ASSERT_EQ(r.evens.size(), 4u);
  r = goldbach_check(4, 1);
  ASSERT_EQ(r.evens.size(), 1u);
  EXPECT_EQ(r.evens[0].second, (std::pair<Integer, Integer>{2, 2}));
}

TEST(Goldbach, TableTooSmallLeavesGaps) {
  // Primes {2, 3}: 4 = 2+2 and 6 = 3+3 only.
  const auto r = goldbach_check(10, 1);
  EXPECT_EQ(r.uncovered(), (std::vector<Integer>{8, 10}));
}

TEST(Goldbach, TwoCopySpectrumAtDTwo) {
  const auto r = goldbach_check(10, 2);
  ASSERT_TRUE(r.two_copy_checked);
  // Pairs p <= q from {2, 3, 5, 7}.
  EXPECT_EQ(r.two_copy_levels, 10u);
  EXPECT_TRUE(r.two_copy_products_distinct);
  EXPECT_TRUE(r.two_copy_match);
}

TEST(Goldbach, RejectsOddOrTinyBounds) {
  EXPECT_THROW(goldbach_check(9, 3), PreconditionError);
  EXPECT_THROW(goldbach_check(2, 3), PreconditionError);
}

}  // namespace
}  // namespace specfactor
