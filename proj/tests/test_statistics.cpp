#include <gtest/gtest.h>

#include <random>

#include "mton/laplace.hpp"
#include "mton/statistics.hpp"

using namespace mton;

namespace {

OrderedNcPartition nested_example() {
  return OrderedNcPartition::from_blocks_by_label({{1, 2}, {3, 4, 7, 9}, {5, 6}, {8}}, 9);
}

// Outer blocks first, then their children left to right.
OrderedNcPartition wide_example() {
  return OrderedNcPartition::from_blocks_by_label(
      {{1, 6}, {7, 8}, {9, 14}, {2, 3}, {4, 5}, {10, 13}, {11, 12}}, 14);
}

long value(const char* stat, const OrderedNcPartition& op) { return stat_value(parse_statistic(stat), op.view()); }

}  // namespace

TEST(Statistics, NamesRoundTrip) {
  for (const char* s : {"Y", "Y1", "Y2", "Y12", "Yge3", "Out", "Int", "Area"}) {
    EXPECT_EQ(parse_statistic(s).name(), s);
  }
  EXPECT_THROW(parse_statistic("Q"), Error);
  EXPECT_THROW(parse_statistic("Y0"), Error);
  EXPECT_THROW(parse_statistic("Yx"), Error);
}

TEST(Statistics, WorkedExamples) {
  EXPECT_EQ(value("Y", nested_example()), 4);
  EXPECT_EQ(value("Y2", nested_example()), 2);
  EXPECT_EQ(value("Out", wide_example()), 3);
  EXPECT_EQ(value("Int", wide_example()), 4);
  EXPECT_EQ(value("Area", wide_example()), 17);
  EXPECT_EQ(evaluate(parse_statistic("Area"), wide_example()), 17);
}

TEST(Statistics, AreaNeedsPairs) {
  try {
    value("Area", nested_example());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::AreaRequiresPairPartition);
  }
}

TEST(Statistics, DyckPath) {
  EXPECT_EQ(dyck_path(validate_noncrossing({{1, 2}}, 2)), (std::vector<int>{1, -1}));
  EXPECT_EQ(dyck_path(wide_example().partition()), (std::vector<int>{1, 1, -1, 1, -1, -1, 1, -1, 1, 1, 1, -1, -1, -1}));
  EXPECT_THROW(dyck_path(nested_example().partition()), Error);
  EXPECT_EQ(area(validate_noncrossing({{1, 2}}, 2)), 1);
  EXPECT_EQ(area(validate_noncrossing({{1, 4}, {2, 3}}, 4)), 4);
  EXPECT_EQ(area(validate_noncrossing({{1, 2}, {3, 4}}, 4)), 2);
  EXPECT_EQ(path_area(dyck_path(wide_example().partition())), 17);
}

TEST(Statistics, TrapezoidAreaEqualsSpanSum) {
  for (int n = 1; n <= 6; ++n) {
    enumerate(n, TreeKind::Pair, [](const OrderedNcPartition& op) {
      const NcPartition p = op.partition();
      ASSERT_EQ(path_area(dyck_path(p)), BigRational(area(p)));
    });
  }
}

TEST(Statistics, OuterAndIntervalAgreeWithPartitionQueries) {
  for (int n = 1; n <= 7; ++n) {
    enumerate(n, TreeKind::Full, [](const OrderedNcPartition& op) {
      const NcPartition p = op.partition();
      ASSERT_EQ(value("Out", op), static_cast<long>(outer_blocks(p).size()));
      ASSERT_EQ(value("Int", op), static_cast<long>(interval_pairs(p).size()));
    });
  }
}

TEST(Statistics, CertifyFirstKind) {
  using R = std::vector<BigRational>;
  EXPECT_EQ(certify_first_kind(StatisticId::block_count(), 7).r, R{1});
  EXPECT_EQ(certify_first_kind(StatisticId::blocks_of_size(1), 7).r, (R{1, -1}));
  EXPECT_EQ(certify_first_kind(StatisticId::blocks_of_size(2), 7).r, (R{0, 1, -1}));
  EXPECT_EQ(certify_first_kind(StatisticId::blocks_at_least3(), 7).r, (R{0, 0, 1}));
  EXPECT_THROW(certify_first_kind(StatisticId::outer_blocks()), Error);
}

TEST(Statistics, CertifySecondKind) {
  EXPECT_EQ(certify_second_kind(StatisticId::outer_blocks(), TreeKind::Full, 7), (SecondKindInput{1, 0, 1}));
  EXPECT_EQ(certify_second_kind(StatisticId::interval_pairs(), TreeKind::Pair, 5), (SecondKindInput{0, 1, 0}));
  EXPECT_EQ(certify_second_kind(StatisticId::outer_blocks(), TreeKind::Pair, 5), (SecondKindInput{1, 0, 1}));
  try {
    certify_second_kind(StatisticId::block_count(), TreeKind::Full);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSecondKind);
  }
  EXPECT_THROW(certify_second_kind(StatisticId::interval_pairs(), TreeKind::Full), Error);
}

// Property: every statistic changes by the amount the first-kind law predicts
// when we move from a child to its parent.
TEST(Statistics, FirstKindLawOnRandomNodes) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 12);
    const BigInteger r = to_big(rng() % node_count_u64(TreeKind::Full, std::min(n, 12)));
    const TreeNode c = TreeNode::from(unrank(r, std::min(n, 12), TreeKind::Full));
    TreeNode p;
    apply_parent(TreeKind::Full, c, p);
    for (int ell = 1; ell <= 4; ++ell) {
      const StatisticId s = StatisticId::blocks_of_size(ell);
      const long diff = stat_value(s, c.view()) - stat_value(s, p.view());
      const long want = c.j.length() == ell ? 1 : (c.j.length() == ell + 1 ? -1 : 0);
      ASSERT_EQ(diff, want);
    }
  }
}
