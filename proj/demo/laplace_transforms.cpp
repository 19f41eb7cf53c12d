// Laplace transforms of block statistics by enumeration and by recursion,
// with the expectations they imply next to the closed forms.

#include <iostream>

#include "mton/mton.hpp"

int main() {
  using namespace mton;

  for (const auto* name : {"Y", "Y1", "Y2", "Yge3", "Out"}) {
    const StatisticId s = parse_statistic(name);
    for (int n = 1; n <= 5; ++n) {
      const auto brute = laplace_bruteforce(s, n);
      const auto rec = laplace_recursion(s, n);
      std::cout << name << "  n=" << n << "  " << brute << (brute == rec ? "" : "  (recursion disagrees!)")
                << "\n";
    }
  }

  std::cout << "\nE[Y_n] enumeration vs closed form:\n";
  for (int n = 2; n <= 8; ++n) {
    std::cout << "  n=" << n << "  " << expectation_from_laplace(laplace_bruteforce(StatisticId::block_count(), n))
              << "  " << expected_Y(n) << "\n";
  }

  std::cout << "\nDyck area on pair-partitions, n=4: "
            << laplace_bruteforce(StatisticId::area(), 4, TreeKind::Pair) << "\n"
            << "  mean " << expected_area(4) << "\n";
}
