// Walks the generating tree of ordered non-crossing partitions: prints the
// level-3 nodes with their tree codes, climbs from one node back to the root,
// and round-trips a rank through unrank/rank at a larger size.

#include <iostream>

#include "mton/mton.hpp"

int main() {
  using namespace mton;

  std::cout << "NC^(mton)(3) in rank order:\n";
  enumerate(3, TreeKind::Full, [](const OrderedNcPartition& op) {
    std::cout << "  " << rank(op).get_str() << "  " << op << "  code " << encode(op, TreeKind::Full) << "\n";
  });

  auto op = OrderedNcPartition::from_blocks_by_label({{1, 6}, {2, 3}, {4, 5}, {7}}, 7);
  std::cout << "\nancestors of " << op << ":\n";
  while (op.size() > 1) {
    op = parent(op);
    std::cout << "  " << op << "\n";
  }

  const BigInteger r("123456");
  const auto x = unrank(r, 9, TreeKind::Full);
  std::cout << "\nunrank(123456, 9) = " << x << ", rank back = " << rank(x).get_str() << "\n";

  std::cout << "\npair-partitions of 6 points:\n";
  enumerate(3, TreeKind::Pair, [](const OrderedNcPartition& p) { std::cout << "  " << p << "\n"; });
}
