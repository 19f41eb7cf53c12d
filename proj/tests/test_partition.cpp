#include <gtest/gtest.h>

#include <set>

#include "mton/partition.hpp"

using namespace mton;

namespace {

NcPartition wide_example() {
  return validate_noncrossing({{1, 6}, {2, 3}, {4, 5}, {7, 8}, {9, 14}, {10, 13}, {11, 12}}, 14);
}

std::vector<Block> blocks_of(const NcPartition& p, const std::vector<BlockRef>& refs) {
  std::vector<Block> out;
  for (auto r : refs) out.push_back(p.block(r));
  return out;
}

// O(n^4) definition check, used as an oracle for the stack scan.
bool crosses_naive(const std::vector<Block>& blocks, int n) {
  std::vector<int> owner(static_cast<std::size_t>(n) + 1);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (int p : blocks[b]) owner[static_cast<std::size_t>(p)] = static_cast<int>(b);
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        for (int d = c + 1; d <= n; ++d)
          if (owner[a] == owner[c] && owner[b] == owner[d] && owner[a] != owner[b]) return true;
  return false;
}

}  // namespace

TEST(Validate, AcceptsSmallExample) {
  auto p = validate_noncrossing({{4, 5}, {3}, {6, 2, 1}}, 6);
  EXPECT_EQ(p.block_count(), 3u);
  EXPECT_EQ(p.block(BlockRef{0}), (Block{1, 2, 6}));
  EXPECT_EQ(p.block(BlockRef{2}), (Block{4, 5}));
}

TEST(Validate, Singleton) { EXPECT_EQ(validate_noncrossing({{1}}, 1).block_count(), 1u); }

TEST(Validate, CrossingWitness) {
  try {
    validate_noncrossing({{1, 3}, {2, 4}}, 4);
    FAIL() << "expected a crossing";
  } catch (const CrossingError& e) {
    EXPECT_EQ(e.code(), ErrorCode::Crossing);
    EXPECT_EQ(e.witness(), (std::array<int, 4>{1, 2, 3, 4}));
  }
}

TEST(Validate, CoverErrors) {
  auto code = [](std::vector<Block> b, int n) {
    try {
      validate_noncrossing(std::move(b), n);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ParseError;
  };
  EXPECT_EQ(code({{1}, {1, 2}}, 2), ErrorCode::NotAPartition);
  EXPECT_EQ(code({{1}}, 2), ErrorCode::NotAPartition);
  EXPECT_EQ(code({{1, 3}}, 2), ErrorCode::NotAPartition);
  EXPECT_EQ(code({{}, {1}}, 1), ErrorCode::NotAPartition);
}

TEST(Validate, StackScanMatchesDefinitionOnAllSetPartitions) {
  // Every set partition of {1..7} via restricted growth strings.
  const int n = 7;
  std::vector<int> rgs(n, 0);
  int checked = 0;
  while (true) {
    int k = *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<Block> blocks(static_cast<std::size_t>(k));
    for (int i = 0; i < n; ++i) blocks[static_cast<std::size_t>(rgs[i])].push_back(i + 1);
    bool threw = false;
    try {
      validate_noncrossing(blocks, n);
    } catch (const CrossingError& e) {
      threw = true;
      const auto w = e.witness();
      EXPECT_TRUE(w[0] < w[1] && w[1] < w[2] && w[2] < w[3]);
      EXPECT_EQ(rgs[w[0] - 1], rgs[w[2] - 1]);
      EXPECT_EQ(rgs[w[1] - 1], rgs[w[3] - 1]);
      EXPECT_NE(rgs[w[0] - 1], rgs[w[1] - 1]);
    }
    EXPECT_EQ(threw, crosses_naive(blocks, n));
    ++checked;
    int i = n - 1;
    while (i > 0) {
      int m = *std::max_element(rgs.begin(), rgs.begin() + i);
      if (rgs[i] <= m) break;
      rgs[i] = 0;
      --i;
    }
    if (i == 0) break;
    ++rgs[i];
  }
  EXPECT_EQ(checked, 877);  // Bell(7)
}

TEST(Nesting, Examples) {
  auto p = validate_noncrossing({{1, 2, 6}, {3}, {4, 5}}, 6);
  EXPECT_TRUE(is_nested(p, BlockRef{2}, BlockRef{0}));
  auto q = validate_noncrossing({{1, 2}, {3, 4}}, 4);
  EXPECT_FALSE(is_nested(q, BlockRef{0}, BlockRef{1}));
  auto nested_example = validate_noncrossing({{1, 2}, {3, 4, 7, 9}, {5, 6}, {8}}, 9);
  EXPECT_TRUE(is_nested(nested_example, BlockRef{3}, BlockRef{1}));
  EXPECT_THROW(is_nested(nested_example, BlockRef{1}, BlockRef{1}), Error);
  EXPECT_THROW(is_nested(nested_example, BlockRef{9}, BlockRef{1}), Error);
}

TEST(Outer, Examples) {
  auto p = wide_example();
  EXPECT_EQ(blocks_of(p, outer_blocks(p)), (std::vector<Block>{{1, 6}, {7, 8}, {9, 14}}));
  EXPECT_EQ(outer_blocks(zero_partition(5)).size(), 5u);
  EXPECT_EQ(outer_blocks(one_partition(5)).size(), 1u);
}

TEST(IntervalPairs, Examples) {
  auto p = wide_example();
  EXPECT_EQ(blocks_of(p, interval_pairs(p)),
            (std::vector<Block>{{2, 3}, {4, 5}, {7, 8}, {11, 12}}));
  EXPECT_EQ(interval_pairs(one_partition(2)).size(), 1u);
  EXPECT_TRUE(interval_pairs(zero_partition(3)).empty());
}

TEST(Restrict, SmallExample) {
  auto p = validate_noncrossing({{1, 2, 6}, {3}, {4, 5}}, 6);
  std::vector<int> k1{1, 2, 3, 4, 6};
  EXPECT_EQ(restrict_relabel(p, k1), validate_noncrossing({{1, 2, 5}, {3}, {4}}, 5));
  std::vector<int> k2{1, 2, 4, 5, 6};
  EXPECT_EQ(restrict_relabel(p, k2), validate_noncrossing({{1, 2, 5}, {3, 4}}, 5));
  std::vector<int> all{1, 2, 3, 4, 5, 6};
  EXPECT_EQ(restrict_relabel(p, all), p);
  try {
    restrict_relabel(p, std::span<const int>{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyKeep);
  }
}

TEST(Enumeration, CatalanCounts) {
  const std::vector<std::size_t> catalan{1, 2, 5, 14, 42, 132, 429, 1430};
  for (int n = 1; n <= 8; ++n) {
    auto all = noncrossing_partitions(n);
    EXPECT_EQ(all.size(), catalan[static_cast<std::size_t>(n - 1)]);
    std::set<NcPartition> uniq(all.begin(), all.end());
    EXPECT_EQ(uniq.size(), all.size());
  }
}

TEST(Properties, RestrictionClosureAndOuterChain) {
  for (int n = 1; n <= 8; ++n) {
    for_each_noncrossing(n, [&](const NcPartition& p) {
      std::vector<Block> copy(p.blocks().begin(), p.blocks().end());
      EXPECT_EQ(validate_noncrossing(copy, n), p);
      auto outer = outer_blocks(p);
      ASSERT_FALSE(outer.empty());
      EXPECT_EQ(p.block(outer.front()).front(), 1);
      EXPECT_EQ(p.block(outer.back()).back(), n);
      for (std::size_t i = 0; i + 1 < outer.size(); ++i)
        EXPECT_EQ(p.block(outer[i + 1]).front(), p.block(outer[i]).back() + 1);
      for (std::size_t b = 0; b < p.block_count(); ++b) {
        int hosts = 0;
        bool is_outer = std::find(outer.begin(), outer.end(), BlockRef{b}) != outer.end();
        for (auto o : outer)
          if (o.index != b && is_nested(p, BlockRef{b}, o)) ++hosts;
        EXPECT_EQ(hosts, is_outer ? 0 : 1);
      }
      if (n <= 7) {
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
          std::vector<int> keep;
          for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) keep.push_back(i + 1);
          auto r = restrict_relabel(p, keep);
          std::vector<Block> rb(r.blocks().begin(), r.blocks().end());
          EXPECT_NO_THROW(validate_noncrossing(rb, r.size()));
        }
      }
    });
  }
}
