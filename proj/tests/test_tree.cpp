#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "mton/tree.hpp"

using namespace mton;

namespace {

OrderedNcPartition by_label(std::vector<Block> blocks, int n) {
  return OrderedNcPartition::from_blocks_by_label(std::move(blocks), n);
}

// Direct construction: NC(n) by recursion, every block ordering filtered by
// the monotonicity condition. Shares nothing with the tree walk.
std::set<std::vector<Label>> generate_and_filter(int n) {
  std::set<std::vector<Label>> out;
  for_each_noncrossing(n, [&](const NcPartition& p) {
    const auto blocks = p.blocks();
    std::vector<int> perm(blocks.size());
    std::iota(perm.begin(), perm.end(), 1);
    do {
      bool ok = true;
      for (std::size_t a = 0; a < blocks.size() && ok; ++a)
        for (std::size_t b = 0; b < blocks.size() && ok; ++b)
          if (a != b && is_nested(p, BlockRef{a}, BlockRef{b}) && perm[a] < perm[b]) ok = false;
      if (!ok) continue;
      std::vector<Label> word(static_cast<std::size_t>(n));
      for (std::size_t b = 0; b < blocks.size(); ++b)
        for (int x : blocks[b]) word[static_cast<std::size_t>(x - 1)] = static_cast<Label>(perm[b]);
      out.insert(word);
    } while (std::next_permutation(perm.begin(), perm.end()));
  });
  return out;
}

Block block_at(const OrderedNcPartition& op, BlockRef ref) { return op.partition().block(ref); }

}  // namespace

TEST(Ordered, ParentsOfSmallExample) {
  auto pu = by_label({{1, 2, 6}, {3}, {4, 5}}, 6);
  auto pu2 = by_label({{1, 2, 6}, {4, 5}, {3}}, 6);
  EXPECT_EQ(block_at(pu, max_label_block(pu)), (Block{4, 5}));
  EXPECT_EQ(block_at(pu2, max_label_block(pu2)), (Block{3}));
  EXPECT_EQ(parent(pu), by_label({{1, 2, 5}, {3}, {4}}, 5));
  EXPECT_EQ(parent(pu2), by_label({{1, 2, 5}, {3, 4}}, 5));
  EXPECT_EQ(parent(by_label({{1}, {2}}, 2)), OrderedNcPartition::root(TreeKind::Full));
  EXPECT_EQ(max_label_block(OrderedNcPartition::root(TreeKind::Full)), BlockRef{0});
  try {
    parent(OrderedNcPartition::root(TreeKind::Full));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RootHasNoParent);
  }
}

TEST(Ordered, RejectsNonMonotonic) {
  EXPECT_THROW(by_label({{2, 3}, {1, 4}}, 4), Error);
  EXPECT_THROW(by_label({{1, 3}, {2, 4}}, 4), CrossingError);
  std::vector<Label> gap{1, 3};
  EXPECT_THROW(OrderedNcPartition::from_labels(gap), Error);
}

TEST(Ordered, LabelOrderOfNestedExample) {
  auto f = by_label({{3, 4, 7, 9}, {8}, {5, 6}, {1, 2}}, 9);
  EXPECT_EQ(f.label_order(), (std::vector<int>{4, 1, 3, 2}));
  EXPECT_EQ(f.blocks_by_label(), (std::vector<Block>{{3, 4, 7, 9}, {8}, {5, 6}, {1, 2}}));
  // The point-insertion history has nine nodes and each step is a tree edge.
  auto code = encode(f, TreeKind::Full);
  EXPECT_EQ(code.digits.size(), 8u);
  auto step7 = parent(parent(f));
  auto kids = children(parent(step7));
  EXPECT_NE(std::find(kids.begin(), kids.end(), step7), kids.end());
}

TEST(Children, CountsAndParents) {
  auto root = OrderedNcPartition::root(TreeKind::Full);
  EXPECT_EQ(children(root).size(), 3u);
  enumerate(3, TreeKind::Full, [](const OrderedNcPartition& x) {
    auto kids = children(x);
    EXPECT_EQ(kids.size(), 5u);
    for (const auto& c : kids) EXPECT_EQ(parent(c), x);
    EXPECT_EQ(kids.back().block_count(), x.block_count());  // elongation last
  });
}

TEST(Decode, Examples) {
  EXPECT_EQ(decode(TreeCode{TreeKind::Full, 1, {}}), OrderedNcPartition::root(TreeKind::Full));
  EXPECT_EQ(decode(TreeCode{TreeKind::Full, 3, {2, 3}}), by_label({{1, 2, 3}}, 3));
  EXPECT_EQ(node_count(TreeKind::Pair, 3), 15);
  try {
    decode(TreeCode{TreeKind::Full, 3, {3, 0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DigitOutOfRange);
  }
}

TEST(Rank, RoundTrip) {
  for (auto kind : {TreeKind::Full, TreeKind::Pair}) {
    for (int n = 1; n <= (kind == TreeKind::Full ? 6 : 5); ++n) {
      const BigInteger total = node_count(kind, n);
      std::set<OrderedNcPartition> seen;
      for (BigInteger k = 0; k < total; ++k) {
        auto x = unrank(k, n, kind);
        EXPECT_EQ(rank(x, kind), k);
        EXPECT_EQ(decode(encode(x, kind)), x);
        seen.insert(x);
      }
      EXPECT_EQ(BigInteger(seen.size()), total);
    }
  }
  EXPECT_EQ(unrank(0, 4, TreeKind::Full), by_label({{4}, {3}, {2}, {1}}, 4));  // leftmost path
  try {
    unrank(60, 4, TreeKind::Full);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RankOutOfRange);
  }
}

TEST(Enumerate, CountsAndOrder) {
  for (int n = 1; n <= 8; ++n) {
    std::uint64_t c = 0;
    for_each_node(TreeKind::Full, n, [&](const TreeNode&) { ++c; });
    EXPECT_EQ(to_big(c), node_count(TreeKind::Full, n));
  }
  EXPECT_EQ(node_count(TreeKind::Full, 3), 12);
  EXPECT_EQ(node_count(TreeKind::Full, 9), 1814400);
  EXPECT_EQ(node_count(TreeKind::Pair, 2), 3);
  BigInteger r = 0;
  enumerate(5, TreeKind::Full, [&](const OrderedNcPartition& x) {
    EXPECT_EQ(rank(x), r);
    r += 1;
  });
}

TEST(Enumerate, MatchesGenerateAndFilter) {
  for (int n = 1; n <= 7; ++n) {
    std::set<std::vector<Label>> walked;
    for_each_node(TreeKind::Full, n, [&](const TreeNode& t) {
      walked.emplace(t.labels.begin(), t.labels.begin() + t.points);
    });
    EXPECT_EQ(walked, generate_and_filter(n)) << "n=" << n;
  }
}

TEST(Enumerate, MaxLabelBlockIsInterval) {
  for (int n = 1; n <= 8; ++n) {
    for_each_node(TreeKind::Full, n, [&](const TreeNode& t) {
      int count = 0;
      for (int i = 0; i < t.points; ++i) count += t.labels[static_cast<std::size_t>(i)] == t.k;
      EXPECT_EQ(count, t.j.length());
      for (int p = t.j.lo; p <= t.j.hi; ++p) EXPECT_EQ(t.labels[static_cast<std::size_t>(p - 1)], t.k);
    });
  }
}

TEST(Enumerate, ShardedReduceIsDeterministic) {
  auto count_blocks = [](unsigned threads) {
    return reduce_nodes(
        TreeKind::Full, 7, threads, std::vector<std::uint64_t>(8, 0),
        [](std::vector<std::uint64_t>& acc, const TreeNode& t) { ++acc[static_cast<std::size_t>(t.k)]; },
        [](std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
          for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
        });
  };
  EXPECT_EQ(count_blocks(1), count_blocks(5));
  EXPECT_EQ(count_blocks(1)[7], 5040u);
}

TEST(PairTree, PairParentOfFourteenPoints) {
  std::vector<Label> w{2, 6, 6, 3, 3, 2, 1, 1, 4, 5, 7, 7, 5, 4};
  auto pu = OrderedNcPartition::from_labels(w);
  EXPECT_EQ(block_at(pu, max_label_block(pu)), (Block{11, 12}));
  std::vector<Label> expect{2, 6, 6, 3, 3, 2, 1, 1, 4, 5, 5, 4};
  EXPECT_EQ(pair_parent(pu), OrderedNcPartition::from_labels(expect));
  EXPECT_EQ(pair_parent(by_label({{1, 2}, {3, 4}}, 4)), OrderedNcPartition::root(TreeKind::Pair));
  EXPECT_THROW(pair_parent(by_label({{1}, {2}}, 2)), Error);
}

TEST(PairTree, ChildrenAndGrandparent) {
  EXPECT_EQ(pair_children(OrderedNcPartition::root(TreeKind::Pair)).size(), 3u);
  for (int n = 1; n <= 4; ++n) {
    enumerate(n, TreeKind::Pair, [&](const OrderedNcPartition& x) {
      auto kids = pair_children(x);
      EXPECT_EQ(kids.size(), static_cast<std::size_t>(2 * n + 1));
      std::set<OrderedNcPartition> uniq(kids.begin(), kids.end());
      EXPECT_EQ(uniq.size(), kids.size());
      for (std::size_t m = 0; m < kids.size(); ++m) {
        EXPECT_EQ(pair_parent(kids[m]), x);
        EXPECT_EQ(parent(parent(kids[m])), x);
        const Block j = block_at(kids[m], max_label_block(kids[m]));
        EXPECT_EQ(j, (Block{static_cast<int>(m) + 1, static_cast<int>(m) + 2}));
      }
    });
  }
  std::uint64_t c = 0;
  for_each_node(TreeKind::Pair, 7, [&](const TreeNode&) { ++c; });
  EXPECT_EQ(c, 135135u);
}
