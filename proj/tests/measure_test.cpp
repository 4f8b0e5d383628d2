#include <gtest/gtest.h>

#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <numeric>
#include <set>

#include "specfactor/errors.hpp"
#include "specfactor/measure.hpp"

namespace specfactor::measure {
namespace {

const PrimeTable& table() {
  static const PrimeTable t = PrimeTable::sieve(4096);
  return t;
}

double chi_square_p_value(std::span<const std::size_t> counts, std::span<const double> probs) {
  const double total = std::accumulate(counts.begin(), counts.end(), 0.0);
  double stat = 0.0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const double expected = total * probs[i];
    stat += (counts[i] - expected) * (counts[i] - expected) / expected;
  }
  boost::math::chi_squared dist(static_cast<double>(counts.size() - 1));
  return boost::math::cdf(boost::math::complement(dist, stat));
}

TEST(Manifold, Branches) {
  Rng rng(1);
  auto s = build_manifold(231, table(), rng);
  ASSERT_EQ(s.k(), 3u);
  EXPECT_EQ(s.branches[0].prime, 3u);
  EXPECT_EQ(s.branches[0].cofactor, 77u);
  EXPECT_EQ(s.branches[1].prime, 7u);
  EXPECT_EQ(s.branches[1].cofactor, 33u);
  EXPECT_EQ(s.branches[2].prime, 11u);
  EXPECT_EQ(s.branches[2].cofactor, 21u);
  EXPECT_NEAR(s.norm_squared(), 1.0, 1e-14);

  s = build_manifold(13, table(), rng);
  ASSERT_EQ(s.k(), 1u);
  EXPECT_EQ(s.branches[0].cofactor, 1u);
  EXPECT_NEAR(s.probability(0), 1.0, 1e-15);

  s = build_manifold(12, table(), rng);
  ASSERT_EQ(s.k(), 2u);
  EXPECT_EQ(s.branches[0].cofactor, 6u);
  EXPECT_EQ(s.branches[1].cofactor, 4u);
}

TEST(Manifold, EnergyIsDegenerate) {
  Rng rng(3);
  const auto s = build_manifold(2 * 3 * 5 * 7 * 11, table(), rng);
  for (const auto& b : s.branches) {
    EXPECT_NEAR(b.log_prime() + b.log_cofactor(), std::log(2310.0), 1e-12);
  }
}

TEST(Manifold, Preconditions) {
  Rng rng(1);
  EXPECT_THROW(build_manifold(1, table(), rng), PreconditionError);
  EXPECT_THROW(build_manifold(5000, table(), rng), PreconditionError);
  const std::vector<Amplitude> bad{{0.5, 0.0}, {0.5, 0.0}};
  EXPECT_THROW(build_manifold(21, table(), bad), PreconditionError);
  const std::vector<Amplitude> wrong_count{{1.0, 0.0}};
  EXPECT_THROW(build_manifold(21, table(), wrong_count), PreconditionError);
}

TEST(Measure, SingleBranchIsCertain) {
  Rng rng(5);
  const auto s = build_manifold(13, table(), rng);
  for (int i = 0; i < 10; ++i) {
    const auto o = measure_h1(s, rng);
    EXPECT_EQ(o.prime, 13u);
    EXPECT_NEAR(o.probability, 1.0, 1e-15);
  }
}

TEST(Measure, EqualSplitFrequency) {
  const double r = std::sqrt(0.5);
  const std::vector<Amplitude> amps{{r, 0.0}, {0.0, r}};
  const auto s = build_manifold(21, table(), amps);
  Rng rng(2718);
  std::size_t threes = 0;
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) threes += measure_h1(s, rng).prime == 3;
  EXPECT_NEAR(static_cast<double>(threes) / draws, 0.5, 0.01);
}

TEST(Measure, ChiSquareOnFixedAmplitudes) {
  const std::vector<Amplitude> amps{{0.1, 0.2}, {0.3, -0.4}, {0.0, 0.5}, {0.6, 0.0}};
  const double norm = std::sqrt(std::accumulate(
      amps.begin(), amps.end(), 0.0, [](double acc, Amplitude a) { return acc + std::norm(a); }));
  std::vector<Amplitude> unit;
  for (auto a : amps) unit.push_back(a / norm);
  const auto s = build_manifold(210, table(), unit);
  std::vector<double> probs;
  for (std::size_t a = 0; a < s.k(); ++a) probs.push_back(s.probability(a));
  std::vector<std::size_t> counts(4, 0);
  Rng rng(99);
  for (int i = 0; i < 100000; ++i) ++counts[measure_h1(s, rng).branch];
  EXPECT_GT(chi_square_p_value(counts, probs), 1e-3);
}

TEST(Measure, ZeroAmplitudeBranchNeverSeen) {
  const std::vector<Amplitude> amps{{0.0, 0.0}, {1.0, 0.0}};
  const auto s = build_manifold(15, table(), amps);
  Rng rng(8);
  for (int i = 0; i < 1000; ++i) EXPECT_EQ(measure_h1(s, rng).prime, 5u);
}

TEST(Measure, CollapseIsIdempotent) {
  Rng rng(17);
  const auto s = build_manifold(231, table(), rng);
  const auto first = measure_h1(s, rng);
  for (int i = 0; i < 20; ++i) {
    const auto again = measure_h1(first.collapsed, rng);
    EXPECT_EQ(again.prime, first.prime);
    EXPECT_NEAR(again.probability, 1.0, 1e-15);
  }
}

TEST(Measure, FirstStageOutcomesOf231) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    Rng rng(seed);
    const auto p = measure_h1(build_manifold(231, table(), rng), rng).prime;
    EXPECT_TRUE(p == 3 || p == 7 || p == 11) << p;
  }
}

TEST(Factorize, Examples) {
  auto run = factorize(231, Variant::B, table(), 7);
  EXPECT_EQ(run.result, factor_oracle(231));
  EXPECT_EQ(run.measurements, 3u);

  run = factorize(8, Variant::A, table(), 1);
  EXPECT_EQ(run.result, factor_oracle(8));
  EXPECT_EQ(run.measurements, 3u);
  run = factorize(8, Variant::B, table(), 1);
  EXPECT_EQ(run.measurements, 1u);
  EXPECT_EQ(run.divisions, 3u);

  run = factorize(13, Variant::A, table(), 1);
  EXPECT_EQ(run.measurements, 1u);
  EXPECT_EQ(run.result.factors, (std::map<Integer, unsigned>{{13, 1}}));
}

TEST(Factorize, TraceIsConsistent) {
  const auto run = factorize(360, Variant::A, table(), 123);
  Integer n = 360;
  for (const auto& rec : run.trace) {
    EXPECT_EQ(rec.before, n);
    EXPECT_EQ(rec.before % rec.prime, 0u);
    EXPECT_EQ(rec.after, rec.before / rec.prime);
    EXPECT_GT(rec.probability, 0.0);
    EXPECT_LE(rec.probability, 1.0 + 1e-15);
    n = rec.after;
  }
  EXPECT_EQ(n, 1u);
}

TEST(Factorize, ReplayIsBitExact) {
  const auto a = factorize(2 * 3 * 5 * 7 * 13, Variant::A, table(), 555);
  const auto b = factorize(2 * 3 * 5 * 7 * 13, Variant::A, table(), 555);
  ASSERT_EQ(a.trace.size(), b.trace.size());
  for (std::size_t i = 0; i < a.trace.size(); ++i) {
    EXPECT_EQ(a.trace[i].prime, b.trace[i].prime);
    EXPECT_EQ(a.trace[i].draw, b.trace[i].draw);
  }
}

TEST(Factorize, CorrectForEverySeedAndCountLawHolds) {
  const auto t = PrimeTable::sieve(2048);
  for (Integer n = 2; n <= 2048; ++n) {
    const auto oracle = factor_oracle(n);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const auto a = factorize(n, Variant::A, t, derive_seed(n, seed));
      const auto b = factorize(n, Variant::B, t, derive_seed(n, seed));
      ASSERT_EQ(a.result, oracle) << n;
      ASSERT_EQ(b.result, oracle) << n;
      ASSERT_EQ(a.measurements, oracle.total_multiplicity()) << n;
      ASSERT_EQ(b.measurements, oracle.distinct_primes()) << n;
      ASSERT_NEAR(b.trace.back().probability, 1.0, 1e-15) << n;
    }
  }
}

TEST(Factorize, RejectsOutOfDevice) {
  const auto t = PrimeTable::sieve(16);
  EXPECT_THROW(factorize(17, Variant::A, t, 1), PreconditionError);
  EXPECT_THROW(factorize(1, Variant::A, t, 1), PreconditionError);
}

TEST(Primality, Examples) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    EXPECT_TRUE(primality_test(13, table(), rng));
    EXPECT_FALSE(primality_test(15, table(), rng));
    EXPECT_FALSE(primality_test(231, table(), rng));
  }
}

TEST(Primality, AgreesWithTrialDivision) {
  Rng rng(4);
  for (Integer n = 2; n <= 4096; ++n) {
    ASSERT_EQ(primality_test(n, table(), rng), is_prime_trial_division(n)) << n;
  }
}

TEST(Paths, WorkedExample) {
  const auto tree = enumerate_paths(231, table());
  EXPECT_EQ(tree.leaf_count(), 6u);
  std::set<Integer> first;
  for (const auto& c : tree.root.children) first.insert(c.edge_prime);
  EXPECT_EQ(first, (std::set<Integer>{3, 7, 11}));
  for (const auto& leaf : tree.leaves()) EXPECT_EQ(leaf, factor_oracle(231));
}

TEST(Paths, SmallCases) {
  auto tree = enumerate_paths(13, table());
  ASSERT_EQ(tree.paths(), (std::vector<std::vector<Integer>>{{13}}));

  tree = enumerate_paths(12, table());
  EXPECT_EQ(tree.paths(), (std::vector<std::vector<Integer>>{{2, 3}, {3, 2}}));
  for (const auto& leaf : tree.leaves()) EXPECT_EQ(leaf, factor_oracle(12));

  EXPECT_EQ(enumerate_paths(4, table()).leaf_count(), 1u);
  EXPECT_EQ(enumerate_paths(30, table()).leaf_count(), 6u);
}

TEST(Paths, LeafCountIsFactorialOfDistinctPrimes) {
  for (Integer n = 2; n <= 4096; ++n) {
    const auto oracle = factor_oracle(n);
    std::size_t fact = 1;
    for (std::size_t i = 2; i <= oracle.distinct_primes(); ++i) fact *= i;
    const auto tree = enumerate_paths(n, table());
    ASSERT_EQ(tree.leaf_count(), fact) << n;
    for (const auto& leaf : tree.leaves()) ASSERT_EQ(leaf, oracle) << n;
  }
}

TEST(Window, ZeroWidthHaltsImmediately) {
  Rng rng(1);
  const std::vector<Amplitude> gamma{{1.0, 0.0}};
  for (int i = 0; i < 10; ++i) {
    EXPECT_EQ(prepare_from_window(30, 0, gamma, table(), rng).iterations, 1u);
  }
}

TEST(Window, PeakedWindowMean) {
  // |gamma_N|^2 = 0.9, the rest spread over four neighbours.
  std::vector<Amplitude> gamma(5, {std::sqrt(0.025), 0.0});
  gamma[2] = {std::sqrt(0.9), 0.0};
  Rng rng(77);
  double total = 0.0;
  const int runs = 10000;
  for (int i = 0; i < runs; ++i) {
    const auto w = prepare_from_window(100, 2, gamma, table(), rng);
    total += static_cast<double>(w.iterations);
    ASSERT_EQ(w.prepared.n, 100u);
  }
  EXPECT_NEAR(total / runs, 1.0 / 0.9, 0.02);
}

TEST(Window, Preconditions) {
  Rng rng(1);
  std::vector<Amplitude> gamma(5, {std::sqrt(0.25), 0.0});
  gamma[2] = {0.0, 0.0};
  EXPECT_THROW(prepare_from_window(100, 2, gamma, table(), rng), PreconditionError);
  const std::vector<Amplitude> unnormalized(5, {1.0, 0.0});
  EXPECT_THROW(prepare_from_window(100, 2, unnormalized, table(), rng), PreconditionError);
  const std::vector<Amplitude> uniform(5, {std::sqrt(0.2), 0.0});
  EXPECT_THROW(prepare_from_window(3, 2, uniform, table(), rng), PreconditionError);
}

TEST(Variant, Names) {
  EXPECT_EQ(parse_variant("A"), Variant::A);
  EXPECT_EQ(parse_variant("b"), Variant::B);
  EXPECT_FALSE(parse_variant("C").has_value());
}

}  // namespace
}  // namespace specfactor::measure
