#include <gtest/gtest.h>

#include <random>

#include "mton/cumulants.hpp"

using namespace mton;

TEST(Monord, Examples) {
  EXPECT_EQ(monord(one_partition(5)), 1);
  EXPECT_EQ(monord(zero_partition(5)), 120);
  const auto nested = validate_noncrossing({{1, 2}, {3, 4, 7, 9}, {5, 6}, {8}}, 9);
  EXPECT_EQ(monord(nested), 8);
  EXPECT_EQ(monord_bruteforce(nested), 8);
}

TEST(Monord, HookLengthMatchesFilter) {
  for (int n = 1; n <= 7; ++n) {
    BigInteger total = 0;
    for_each_noncrossing(n, [&](const NcPartition& p) {
      ASSERT_EQ(monord(p), monord_bruteforce(p));
      total += monord(p);
    });
    EXPECT_EQ(total, factorial(static_cast<unsigned>(n + 1)) / 2);
  }
}

TEST(Cumulants, LowOrderFormulas) {
  const BigRational c1 = rational(2, 3), c2 = rational(-1, 5), c3 = rational(7, 2);
  const auto m = moments_from_cumulants({c1, c2, c3}, 3);
  EXPECT_EQ(m[0], c1);
  EXPECT_EQ(m[1], c2 + c1 * c1);
  EXPECT_EQ(m[2], c3 + rational(5, 2) * c1 * c2 + c1 * c1 * c1);
  const auto c = cumulants_from_moments({1, 2, 5}, 3);
  EXPECT_EQ(c[0], 1);
  EXPECT_EQ(c[1], 1);
  EXPECT_EQ(c[2], rational(3, 2));
}

TEST(Cumulants, RoundTrip) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
  for (int trial = 0; trial < 25; ++trial) {
    CumulantSequence c;
    for (int i = 0; i < 8; ++i) c.push_back(rational(num(rng), den(rng)));
    EXPECT_EQ(cumulants_from_moments(moments_from_cumulants(c, 8), 8), c);
  }
}

TEST(Cumulants, Errors) {
  try {
    moments_from_cumulants({1, 2}, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InsufficientCumulants);
  }
  try {
    cumulants_from_moments({1}, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InsufficientMoments);
  }
}

TEST(Stirling, TableRows) {
  const std::vector<std::vector<BigInteger>> rows{
      {1}, {1, 2}, {1, 5, 6}, {1, 9, 26, 24}, {1, 14, 71, 154, 120}, {1, 20, 155, 580, 1044, 720}};
  const StirlingTable want(rows);
  EXPECT_EQ(stirling_by_recursion(6), want);
  EXPECT_EQ(stirling_by_closed_form(6), want);
  EXPECT_EQ(stirling_by_tree_count(6), want);
  EXPECT_EQ(want.at(4, 3), want.at(3, 3) + 4 * want.at(3, 2));
  EXPECT_THROW(want.at(3, 4), Error);
}

TEST(Stirling, BuildersAgree) {
  EXPECT_EQ(stirling_by_recursion(20), stirling_by_closed_form(20));
  EXPECT_EQ(stirling_by_recursion(9), stirling_by_tree_count(9));
  EXPECT_EQ(stirling_by_recursion(20).prefix(9), stirling_by_recursion(9));
  EXPECT_THROW(stirling_by_tree_count(11), Error);
}

TEST(Poisson, Moments) {
  const auto zero = poisson_moments(0, 6);
  for (const auto& m : zero) EXPECT_EQ(m, 0);
  EXPECT_EQ(poisson_moments(1, 3)[2], rational(9, 2));
  for (const BigRational& a : {rational(1), rational(2), rational(1, 2), rational(-1)}) {
    EXPECT_EQ(poisson_moments(a, 8), moments_from_cumulants(CumulantSequence(8, a), 8));
  }
  const BigRational a = rational(3, 7);
  EXPECT_EQ(poisson_moments(a, 3)[2], a + rational(5, 2) * a * a + a * a * a);
}
