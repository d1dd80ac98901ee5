#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "brute_force.hpp"
#include "sqfrob/error.hpp"
#include "sqfrob/power.hpp"

using namespace sqfrob;

TEST(PowerOracle, Examples) {
  const PowerResult r = power_frobenius_oracle(make_semigroup({13, 18}), 2);
  EXPECT_EQ(r.root, 10);
  EXPECT_EQ(r.value, 100);
  EXPECT_EQ(r.method, Method::Oracle);
  EXPECT_EQ(power_frobenius_oracle(make_semigroup({2, 3}), 2).value, 1);
  EXPECT_EQ(power_frobenius_oracle(make_semigroup({4, 7}), 2).value, 9);
  EXPECT_EQ(brute::largest_power_gap({4, 7}, 2), 9);
  EXPECT_EQ(power_frobenius_oracle(make_semigroup({4, 7}), 3).value, 1);
}

TEST(PowerOracle, Errors) {
  try {
    power_frobenius_oracle(make_semigroup({1}), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::FullSemigroup);
  }
  EXPECT_THROW(power_frobenius_oracle(make_semigroup({2, 3}), 1), Error);
  EXPECT_THROW(power_min_oracle(make_semigroup({2, 3}), 0), Error);
}

TEST(PowerMin, Examples) {
  EXPECT_EQ(power_min_oracle(make_semigroup({4, 9}), 2).value, 4);
  EXPECT_EQ(power_min_oracle(make_semigroup({5, 7, 9}), 2).value, 9);
  EXPECT_EQ(power_min_oracle(make_semigroup({2, 3}), 2).value, 4);
  EXPECT_EQ(power_min_oracle(ApSemigroup(7, 2, 1), 2).value, 9);
  EXPECT_EQ(power_min_oracle(make_semigroup({1}), 3).value, 1);
}

TEST(PowerMin, SquaresOfSquares) {
  for (Integer a = 1; a <= 12; ++a) {
    for (Integer b = a + 1; b <= 13; ++b) {
      if (std::gcd(a, b) != 1) continue;
      ASSERT_EQ(power_min_oracle(make_semigroup({a * a, b * b}), 2).value, a * a);
    }
  }
}

TEST(PowerOracle, WitnessCertifiesGap) {
  const NumericalSemigroup g = make_semigroup({7, 11, 13});
  const PowerResult r = power_frobenius_oracle(g, 2);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->kind, Witness::Kind::AperyFloor);
  EXPECT_EQ(r.witness->second, 7);
  EXPECT_EQ(r.witness->first % 7, r.value % 7);
  EXPECT_LT(r.value, r.witness->first);

  const ApSemigroup s(13, 5, 1);
  const PowerResult p = power_frobenius_oracle(s, 2);
  ASSERT_TRUE(p.witness.has_value());
  EXPECT_EQ(p.witness->kind, Witness::Kind::ProgressionSplit);
  EXPECT_EQ(13 * p.witness->first + 5 * p.witness->second, 100);
  EXPECT_TRUE(p.witness->first < 0 || p.witness->second > p.witness->first);
}

TEST(PowerOracle, ApAndGenericAgree) {
  for (Integer a = 2; a <= 40; ++a) {
    for (Integer d = 1; d <= 9; ++d) {
      if (std::gcd(a, d) != 1) continue;
      for (Integer k = 1; k <= 3; ++k) {
        const ApSemigroup s(a, d, k);
        const NumericalSemigroup g = s.expand();
        for (int e = 2; e <= 3; ++e) {
          ASSERT_EQ(power_frobenius_oracle(s, e).value, power_frobenius_oracle(g, e).value);
          ASSERT_EQ(power_min_oracle(s, e).value, power_min_oracle(g, e).value);
        }
      }
    }
  }
}

TEST(PowerOracle, RandomSemigroupsAgainstSieve) {
  std::mt19937_64 rng(20240917);
  for (int trial = 0; trial < 300; ++trial) {
    std::uniform_int_distribution<int> count(2, 4);
    std::uniform_int_distribution<brute::Int> gen(2, 40);
    std::vector<brute::Int> gens;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) gens.push_back(gen(rng));
    brute::Int g = 0;
    for (auto x : gens) g = std::gcd(g, x);
    if (g != 1) continue;
    const NumericalSemigroup s = make_semigroup(gens);
    const Integer mult = s.multiplicity();
    for (int k = 2; k <= 4; ++k) {
      const PowerResult top = power_frobenius_oracle(s, k);
      ASSERT_EQ(top.value, brute::largest_power_gap(gens, k));
      ASSERT_EQ(top.value, ipow(top.root, k));
      ASSERT_LT(top.value, ipow(kth_root_floor(s.frobenius(), k) + 1, k));
      ASSERT_FALSE(s.contains(top.value));
      for (Integer m = top.root + 1; ipow(m, k) <= s.frobenius() + ipow(mult, k); ++m) {
        ASSERT_TRUE(s.contains(ipow(m, k)));
      }
      const PowerResult low = power_min_oracle(s, k);
      ASSERT_EQ(low.value, brute::smallest_power_member(gens, k));
      ASSERT_LE(mult, low.value);
      ASSERT_LE(low.value, ipow(mult, k));
    }
  }
}

TEST(PowerOracle, SmallestSquareUnderStepBound) {
  for (Integer a = 2; a <= 120; ++a) {
    for (Integer k = 1; k <= 4; ++k) {
      for (Integer d = 1; d * (1 + 2 * k) <= a * k; ++d) {
        if (std::gcd(a, d) != 1) continue;
        const ApSemigroup s(a, d, k);
        ASSERT_LE(power_min_oracle(s, 2).value, (a - d) * (a - d)) << a << " " << d << " " << k;
      }
    }
  }
}
