#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "brute_force.hpp"
#include "sqfrob/error.hpp"
#include "sqfrob/semigroup.hpp"

using namespace sqfrob;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::Overflow;
}

// Random generator sets with entries <= max_gen and gcd 1.
std::vector<std::vector<Integer>> random_sets(std::size_t count, Integer max_gen, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<std::vector<Integer>> out;
  while (out.size() < count) {
    const int n = 2 + static_cast<int>(rng() % 3);
    std::vector<Integer> gens;
    for (int i = 0; i < n; ++i) gens.push_back(2 + static_cast<Integer>(rng() % (max_gen - 1)));
    Integer g = 0;
    for (Integer x : gens) g = std::gcd(g, x);
    if (g == 1) out.push_back(gens);
  }
  return out;
}

}  // namespace

TEST(Semigroup, Construction) {
  EXPECT_EQ(make_semigroup({4, 7}).generators(), (std::vector<Integer>{4, 7}));
  EXPECT_EQ(make_semigroup({6, 10, 15}).generators(), (std::vector<Integer>{6, 10, 15}));
  EXPECT_EQ(make_semigroup({15, 6, 10, 6}).generators(), (std::vector<Integer>{6, 10, 15}));
  EXPECT_EQ(make_semigroup({4, 7, 8, 11, 15}).generators(), (std::vector<Integer>{4, 7}));
  EXPECT_EQ(make_semigroup({3, 1, 5}).generators(), (std::vector<Integer>{1}));
  EXPECT_EQ(make_semigroup({7, 4}), make_semigroup({4, 7, 18}));
}

TEST(Semigroup, ConstructionErrors) {
  EXPECT_EQ(kind_of([] { make_semigroup({4, 6}); }), ErrorKind::NonCoprime);
  EXPECT_EQ(kind_of([] { make_semigroup(std::span<const Integer>{}); }),
            ErrorKind::EmptyGenerators);
  EXPECT_EQ(kind_of([] { make_semigroup({0, 3}); }), ErrorKind::ZeroGenerator);
  EXPECT_EQ(kind_of([] { make_semigroup({-2, 3}); }), ErrorKind::NegativeInput);
}

TEST(Semigroup, MinimalityMatchesBruteForce) {
  for (const auto& gens : random_sets(300, 30, 7)) {
    const NumericalSemigroup s(gens);
    // Minimal generators: positive elements not a sum of two positive elements.
    std::vector<Integer> sorted(gens);
    std::sort(sorted.begin(), sorted.end());
    const Integer limit = sorted.back();
    const auto reach = brute::sieve(gens, limit);
    std::vector<Integer> expected;
    for (Integer x = 1; x <= limit; ++x) {
      if (!reach[x]) continue;
      bool decomposable = false;
      for (Integer y = 1; y < x && !decomposable; ++y) decomposable = reach[y] && reach[x - y];
      if (!decomposable) expected.push_back(x);
    }
    ASSERT_EQ(s.generators(), expected);
  }
}

TEST(Semigroup, AperyExamples) {
  const auto s47 = make_semigroup({4, 7});
  EXPECT_EQ(apery_set(s47, 4).entries, (std::vector<Integer>{0, 21, 14, 7}));
  EXPECT_EQ(brute::apery({4, 7}, 4), (std::vector<Integer>{0, 21, 14, 7}));
  EXPECT_EQ(apery_set(s47, 7).entries, brute::apery({4, 7}, 7));
  EXPECT_EQ(apery_set(make_semigroup({2, 3})).entries, (std::vector<Integer>{0, 3}));
  EXPECT_EQ(apery_set(make_semigroup({1})).entries, (std::vector<Integer>{0}));
  EXPECT_THROW(apery_set(s47, 5), Error);
  // 8 is redundant, hence not a minimal generator.
  EXPECT_EQ(kind_of([] { apery_set(make_semigroup({4, 7, 8}), 8); }), ErrorKind::NotAGenerator);
}

TEST(Semigroup, MembershipExamples) {
  const auto s = make_semigroup({4, 7});
  EXPECT_FALSE(s.contains(10));
  EXPECT_TRUE(s.contains(11));
  EXPECT_TRUE(s.contains(0));
  EXPECT_TRUE(make_semigroup({1}).contains(0));
  EXPECT_EQ(kind_of([&] { s.contains(-1); }), ErrorKind::NegativeInput);
}

TEST(Semigroup, FrobeniusExamples) {
  EXPECT_EQ(frobenius(make_semigroup({5, 6})), 19);
  EXPECT_EQ(frobenius(make_semigroup({4, 7})), 17);
  EXPECT_EQ(brute::frobenius({4, 7}), 17);
  EXPECT_EQ(kind_of([] { frobenius(make_semigroup({1})); }), ErrorKind::FullSemigroup);
}

TEST(Semigroup, GapsAndGenus) {
  EXPECT_EQ(gaps(make_semigroup({2, 3})), (std::vector<Integer>{1}));
  EXPECT_EQ(genus(make_semigroup({2, 3})), 1);
  const auto s47 = make_semigroup({4, 7});
  EXPECT_EQ(gaps(s47), (std::vector<Integer>{1, 2, 3, 5, 6, 9, 10, 13, 17}));
  EXPECT_EQ(genus(s47), 9);
  EXPECT_TRUE(gaps(make_semigroup({1})).empty());
  EXPECT_EQ(genus(make_semigroup({1})), 0);
}

TEST(Semigroup, TwoGeneratorFrobeniusBothRoutes) {
  for (Integer s1 = 2; s1 < 60; ++s1) {
    for (Integer s2 = s1 + 1; s2 <= 60; ++s2) {
      if (std::gcd(s1, s2) != 1) continue;
      const auto s = make_semigroup({s1, s2});
      ASSERT_EQ(s.frobenius(), two_generator_frobenius(s1, s2)) << s1 << "," << s2;
      ASSERT_EQ(apery_set(s, s2).frobenius(), two_generator_frobenius(s1, s2));
    }
  }
}

TEST(Semigroup, RandomSetsAgreeWithSieve) {
  for (const auto& gens : random_sets(400, 30, 11)) {
    const NumericalSemigroup s(gens);
    const Integer f = s.frobenius();
    ASSERT_EQ(f, brute::frobenius(gens));

    const Integer top = f + s.generators().back();
    const auto reach = brute::sieve(gens, top);
    for (Integer m = 0; m <= top; ++m) ASSERT_EQ(s.contains(m), reach[m]) << m;

    const AperyTable& t = s.apery();
    ASSERT_EQ(t.entries[0], 0);
    for (Integer r = 0; r < t.modulus; ++r) ASSERT_EQ(t.entries[r] % t.modulus, r);
    ASSERT_EQ(t.frobenius(), f);
    for (Integer g : s.generators()) {
      ASSERT_EQ(apery_set(s, g).entries, brute::apery(s.generators(), g));
    }

    const auto g = gaps(s);
    ASSERT_EQ(static_cast<Integer>(g.size()), genus(s));
    auto expected_gaps = brute::gaps(gens);
    ASSERT_EQ(g, expected_gaps);
  }
}

TEST(Semigroup, EverythingAboveFrobeniusIsMember) {
  std::mt19937_64 rng(5);
  for (const auto& gens : random_sets(100, 200, 3)) {
    const NumericalSemigroup s(gens);
    const Integer f = s.frobenius();
    EXPECT_FALSE(s.contains(f));
    for (int i = 0; i < 200; ++i) {
      ASSERT_TRUE(s.contains(f + 1 + static_cast<Integer>(rng() % 1000000)));
    }
  }
}
