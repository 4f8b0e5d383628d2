#include <gtest/gtest.h>

#include <cmath>

#include "specfactor/rng.hpp"

namespace specfactor {
namespace {

TEST(Rng, SameSeedSameStream) {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) {
    ASSERT_EQ(a.uniform(), b.uniform());
    ASSERT_EQ(a.normal(), b.normal());
  }
}

TEST(Rng, PinnedFirstWord) {
  // The standard fixes the 10000th output of a default-seeded mt19937_64.
  Rng r(5489u);
  std::uint64_t last = 0;
  for (int i = 0; i < 10000; ++i) last = r.next_u64();
  EXPECT_EQ(last, 9981545732273789042ull);
}

TEST(Rng, UniformInUnitInterval) {
  Rng r(7);
  double sum = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double u = r.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  EXPECT_NEAR(sum / 100000.0, 0.5, 0.005);
}

TEST(Rng, ComplexNormalHasUnitSecondMoment) {
  Rng r(11);
  double m2 = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) m2 += std::norm(r.complex_normal());
  EXPECT_NEAR(m2 / n, 1.0, 0.01);
}

TEST(Rng, DerivedSeedsDiffer) {
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
  EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
  EXPECT_EQ(derive_seed(9, 3), derive_seed(9, 3));
}

}  // namespace
}  // namespace specfactor
