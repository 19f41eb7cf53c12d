#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <vector>

#include "mton/error.hpp"
#include "mton/laplace.hpp"
#include "mton/partition.hpp"
#include "mton/rational.hpp"

namespace mton {

/// Innermost enclosing block of every block, or -1 for outer blocks.
inline std::vector<int> nesting_parents(const NcPartition& p) {
  const auto blocks = p.blocks();
  std::vector<int> parent(blocks.size(), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (std::size_t w = 0; w < b; ++w) {  // enclosing blocks open earlier
      if (blocks[w].front() < blocks[b].front() && blocks[w].back() > blocks[b].back()) {
        parent[b] = static_cast<int>(w);  // later openers are further in
      }
    }
  }
  return parent;
}

/// Number of monotonic orderings: linear extensions of the nesting forest,
/// k! / prod(subtree sizes).
inline BigInteger monord(const NcPartition& p) {
  const std::vector<int> parent = nesting_parents(p);
  std::vector<long> subtree(parent.size(), 1);
  // Children always come after their parent in min order, so a reverse
  // sweep finishes every subtree before it is added to its parent.
  for (std::size_t b = parent.size(); b-- > 0;) {
    if (parent[b] >= 0) subtree[static_cast<std::size_t>(parent[b])] += subtree[b];
  }
  BigInteger out = factorial(static_cast<unsigned>(parent.size()));
  for (long s : subtree) out /= s;
  return out;
}

/// Counts monotonic orderings by trying all k! labelings.
inline BigInteger monord_bruteforce(const NcPartition& p) {
  const std::size_t k = p.block_count();
  std::vector<int> label(k);
  std::iota(label.begin(), label.end(), 1);
  BigInteger count = 0;
  do {
    bool ok = true;
    for (std::size_t a = 0; a < k && ok; ++a) {
      for (std::size_t b = 0; b < k && ok; ++b) {
        if (a != b && is_nested(p, BlockRef{a}, BlockRef{b}) && label[a] < label[b]) ok = false;
      }
    }
    if (ok) ++count;
  } while (std::next_permutation(label.begin(), label.end()));
  return count;
}

using MomentSequence = std::vector<BigRational>;    // index 0 holds the first moment
using CumulantSequence = std::vector<BigRational>;  // index 0 holds c_1

namespace detail {

// Block-size profile (sorted descending) -> summed monord(pi)/|pi|! over NC(n).
using ProfileWeights = std::map<std::vector<int>, BigRational>;

inline const ProfileWeights& profile_weights(int n) {
  static std::mutex mu;
  static std::map<int, ProfileWeights> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  ProfileWeights w;
  for_each_noncrossing(n, [&](const NcPartition& p) {
    std::vector<int> profile;
    for (const Block& b : p.blocks()) profile.push_back(static_cast<int>(b.size()));
    std::sort(profile.rbegin(), profile.rend());
    w[profile] += rational(monord(p), factorial(static_cast<unsigned>(p.block_count())));
  });
  return cache.emplace(n, std::move(w)).first->second;
}

inline BigRational profile_product(const std::vector<int>& profile, const CumulantSequence& c) {
  BigRational prod = 1;
  for (int s : profile) prod *= c[static_cast<std::size_t>(s - 1)];
  return prod;
}

}  // namespace detail

/// mu(X^n) = sum over NC(n) of monord(pi)/|pi|! times the product of c_{|V|}.
inline MomentSequence moments_from_cumulants(const CumulantSequence& c, int upto) {
  if (static_cast<int>(c.size()) < upto) {
    throw Error(ErrorCode::InsufficientCumulants, "need c_1..c_" + std::to_string(upto) + ", got " +
                                                      std::to_string(c.size()));
  }
  MomentSequence m;
  for (int n = 1; n <= upto; ++n) {
    BigRational mu = 0;
    for (const auto& [profile, w] : detail::profile_weights(n)) mu += w * detail::profile_product(profile, c);
    m.push_back(mu);
  }
  return m;
}

/// Inverts moments_from_cumulants order by order; the one-block term has weight 1.
inline CumulantSequence cumulants_from_moments(const MomentSequence& m, int upto) {
  if (static_cast<int>(m.size()) < upto) {
    throw Error(ErrorCode::InsufficientMoments, "need moments of order 1.." + std::to_string(upto) +
                                                    ", got " + std::to_string(m.size()));
  }
  CumulantSequence c;
  for (int n = 1; n <= upto; ++n) {
    c.push_back(0);
    BigRational rest = 0;
    for (const auto& [profile, w] : detail::profile_weights(n)) {
      if (profile.size() > 1) rest += w * detail::profile_product(profile, c);
    }
    c.back() = m[static_cast<std::size_t>(n - 1)] - rest;
  }
  return c;
}

/// Triangle J_k^(n), 1 <= k <= n <= n_max: ordered partitions with k blocks.
class StirlingTable {
 public:
  StirlingTable() = default;
  explicit StirlingTable(std::vector<std::vector<BigInteger>> rows) : rows_(std::move(rows)) {}

  int n_max() const noexcept { return static_cast<int>(rows_.size()); }
  const BigInteger& at(int n, int k) const {
    if (n < 1 || n > n_max() || k < 1 || k > n) {
      throw Error(ErrorCode::OutOfValidity, "J_" + std::to_string(k) + "^(" + std::to_string(n) + ")");
    }
    return rows_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)];
  }
  const std::vector<BigInteger>& row(int n) const { return rows_.at(static_cast<std::size_t>(n - 1)); }

  /// Rows 1..n of this table.
  StirlingTable prefix(int n) const {
    return StirlingTable({rows_.begin(), rows_.begin() + std::min(n, n_max())});
  }

  friend bool operator==(const StirlingTable&, const StirlingTable&) = default;

 private:
  std::vector<std::vector<BigInteger>> rows_;
};

/// Counts block numbers over the enumerated tree.
inline StirlingTable stirling_by_tree_count(int n_max, const BruteForceOptions& opts = {}) {
  std::vector<std::vector<BigInteger>> rows;
  for (int n = 1; n <= n_max; ++n) {
    const Histogram h = cached_histogram(StatisticId::block_count(), n, TreeKind::Full, opts);
    std::vector<BigInteger> row(static_cast<std::size_t>(n), 0);
    for (int k = 1; k <= n && k < static_cast<int>(h.size()); ++k) row[static_cast<std::size_t>(k - 1)] = to_big(h[static_cast<std::size_t>(k)]);
    rows.push_back(std::move(row));
  }
  return StirlingTable(std::move(rows));
}

/// J_k^(n) = J_k^(n-1) + n J_{k-1}^(n-1).
inline StirlingTable stirling_by_recursion(int n_max) {
  std::vector<std::vector<BigInteger>> rows;
  for (int n = 1; n <= n_max; ++n) {
    std::vector<BigInteger> row(static_cast<std::size_t>(n), 0);
    if (n == 1) {
      row[0] = 1;
    } else {
      const auto& prev = rows.back();
      for (int k = 1; k <= n; ++k) {
        BigInteger v = k <= n - 1 ? prev[static_cast<std::size_t>(k - 1)] : BigInteger(0);
        if (k >= 2) v += n * prev[static_cast<std::size_t>(k - 2)];
        row[static_cast<std::size_t>(k - 1)] = v;
      }
    }
    rows.push_back(std::move(row));
  }
  return StirlingTable(std::move(rows));
}

/// J_k^(n) = sum over 2 <= j_1 < ... < j_{k-1} <= n of j_1 ... j_{k-1},
/// by explicit enumeration of the index subsets.
inline StirlingTable stirling_by_closed_form(int n_max) {
  if (n_max > 25) throw Error(ErrorCode::SizeBoundExceeded, "subset enumeration is limited to n <= 25");
  std::vector<std::vector<BigInteger>> rows;
  for (int n = 1; n <= n_max; ++n) {
    std::vector<unsigned __int128> acc(static_cast<std::size_t>(n), 0);
    const unsigned width = static_cast<unsigned>(n - 1);  // bit i stands for the index i+2
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << width); ++mask) {
      unsigned __int128 prod = 1;
      for (unsigned i = 0; i < width; ++i) {
        if (mask & (std::uint64_t{1} << i)) prod *= i + 2;
      }
      acc[static_cast<std::size_t>(__builtin_popcountll(mask))] += prod;
    }
    std::vector<BigInteger> row;
    for (auto v : acc) {
      const auto hi = static_cast<std::uint64_t>(v >> 64);
      const auto lo = static_cast<std::uint64_t>(v);
      row.push_back(to_big(hi) * BigInteger("18446744073709551616") + to_big(lo));
    }
    rows.push_back(std::move(row));
  }
  return StirlingTable(std::move(rows));
}

/// Moments of the monotonic Poisson law: sum_k J_k^(n) alpha^k / k!.
inline MomentSequence poisson_moments(const BigRational& alpha, int upto) {
  if (upto < 1) throw Error(ErrorCode::OutOfValidity, "upto must be >= 1");
  const StirlingTable J = stirling_by_recursion(upto);
  MomentSequence m;
  for (int n = 1; n <= upto; ++n) {
    BigRational s = 0;
    for (int k = 1; k <= n; ++k) {
      s += BigRational(J.at(n, k)) * pow(alpha, static_cast<unsigned>(k)) /
           BigRational(factorial(static_cast<unsigned>(k)));
    }
    m.push_back(s);
  }
  return m;
}

}  // namespace mton
