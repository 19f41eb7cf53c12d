#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "mton/error.hpp"

namespace mton {

using Block = std::vector<int>;

/// Position of a block inside a partition's canonical (min-sorted) block list.
struct BlockRef {
  std::size_t index = 0;
  auto operator<=>(const BlockRef&) const = default;
};

/// Thrown by validate_noncrossing; carries a crossing quadruple a1<a2<a3<a4
/// with a1,a3 in one block and a2,a4 in another.
class CrossingError : public Error {
 public:
  explicit CrossingError(std::array<int, 4> witness)
      : Error(ErrorCode::Crossing, describe(witness)), witness_(witness) {}

  const std::array<int, 4>& witness() const noexcept { return witness_; }

 private:
  static std::string describe(const std::array<int, 4>& w) {
    return "crossing quadruple (" + std::to_string(w[0]) + "," + std::to_string(w[1]) + "," +
           std::to_string(w[2]) + "," + std::to_string(w[3]) + ")";
  }
  std::array<int, 4> witness_;
};

/// A non-crossing partition of {1..n}; blocks are increasing and listed by
/// their minimum. Only validate_noncrossing and the module's own operations
/// construct values, so every instance satisfies the invariants.
class NcPartition {
 public:
  int size() const noexcept { return n_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  std::span<const Block> blocks() const noexcept { return blocks_; }

  const Block& block(BlockRef ref) const {
    if (ref.index >= blocks_.size()) {
      throw Error(ErrorCode::InvalidBlockRef,
                  "block index " + std::to_string(ref.index) + " out of range");
    }
    return blocks_[ref.index];
  }

  bool is_pair_partition() const {
    return std::all_of(blocks_.begin(), blocks_.end(),
                       [](const Block& b) { return b.size() == 2; });
  }

  /// Block index of every point, indexed 1..n (slot 0 unused).
  std::vector<std::size_t> block_of_points() const {
    std::vector<std::size_t> owner(static_cast<std::size_t>(n_) + 1, 0);
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      for (int p : blocks_[b]) owner[static_cast<std::size_t>(p)] = b;
    }
    return owner;
  }

  friend bool operator==(const NcPartition&, const NcPartition&) = default;
  friend auto operator<=>(const NcPartition& a, const NcPartition& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.blocks_ <=> b.blocks_;
  }

  static NcPartition trusted(int n, std::vector<Block> canonical_blocks) {
    return NcPartition(n, std::move(canonical_blocks));
  }

 private:
  NcPartition(int n, std::vector<Block> blocks) : n_(n), blocks_(std::move(blocks)) {}

  int n_ = 0;
  std::vector<Block> blocks_;
};

namespace detail {

inline void canonicalize(std::vector<Block>& blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const Block& x, const Block& y) { return x.front() < y.front(); });
}

/// Single left-to-right pass with a stack of open blocks. A block that
/// continues while another block sits above it on the stack is crossed by it.
inline void check_noncrossing(const std::vector<Block>& blocks, int n) {
  std::vector<std::size_t> owner(static_cast<std::size_t>(n) + 1);
  std::vector<std::size_t> seen(blocks.size(), 0);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (int p : blocks[b]) owner[static_cast<std::size_t>(p)] = b;
  }
  std::vector<std::size_t> open;
  for (int p = 1; p <= n; ++p) {
    const std::size_t b = owner[static_cast<std::size_t>(p)];
    const Block& blk = blocks[b];
    if (seen[b] > 0) {
      if (open.back() != b) {
        const std::size_t c = open.back();
        const int a1 = blk[seen[b] - 1];
        const int a2 = blocks[c][seen[c] - 1];
        const int a4 = blocks[c][seen[c]];
        throw CrossingError({a1, a2, p, a4});
      }
    } else {
      open.push_back(b);
    }
    ++seen[b];
    if (seen[b] == blk.size()) open.pop_back();
  }
}

}  // namespace detail

/// Checks cover, disjointness and the non-crossing condition, and returns the
/// canonical form. Throws Error(NotAPartition) or CrossingError.
inline NcPartition validate_noncrossing(std::vector<Block> blocks, int n) {
  if (n < 1) throw Error(ErrorCode::NotAPartition, "ground set must be non-empty");
  std::vector<int> hits(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& b : blocks) {
    if (b.empty()) throw Error(ErrorCode::NotAPartition, "empty block");
    for (int p : b) {
      if (p < 1 || p > n) {
        throw Error(ErrorCode::NotAPartition, "point " + std::to_string(p) + " outside 1.." +
                                                  std::to_string(n));
      }
      if (++hits[static_cast<std::size_t>(p)] > 1) {
        throw Error(ErrorCode::NotAPartition, "point " + std::to_string(p) + " repeated");
      }
    }
  }
  for (int p = 1; p <= n; ++p) {
    if (hits[static_cast<std::size_t>(p)] == 0) {
      throw Error(ErrorCode::NotAPartition, "point " + std::to_string(p) + " not covered");
    }
  }
  detail::canonicalize(blocks);
  detail::check_noncrossing(blocks, n);
  return NcPartition::trusted(n, std::move(blocks));
}

/// min(inner) > min(outer) and max(inner) < max(outer).
inline bool is_nested(const NcPartition& p, BlockRef inner, BlockRef outer) {
  const Block& a = p.block(inner);
  const Block& b = p.block(outer);
  if (inner == outer) throw Error(ErrorCode::InvalidBlockRef, "refs must be distinct");
  return a.front() > b.front() && a.back() < b.back();
}

/// Blocks not nested inside any other block, in min order.
inline std::vector<BlockRef> outer_blocks(const NcPartition& p) {
  std::vector<BlockRef> out;
  int reach = 0;
  const auto blocks = p.blocks();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].front() > reach) out.push_back(BlockRef{i});
    reach = std::max(reach, blocks[i].back());
  }
  return out;
}

/// Blocks of the form {m, m+1}.
inline std::vector<BlockRef> interval_pairs(const NcPartition& p) {
  std::vector<BlockRef> out;
  const auto blocks = p.blocks();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].size() == 2 && blocks[i][1] == blocks[i][0] + 1) out.push_back(BlockRef{i});
  }
  return out;
}

/// Restricts to `keep` (increasing) and renames its elements 1..|keep|.
inline NcPartition restrict_relabel(const NcPartition& p, std::span<const int> keep) {
  if (keep.empty()) throw Error(ErrorCode::EmptyKeep, "keep set is empty");
  std::vector<int> rank(static_cast<std::size_t>(p.size()) + 1, 0);
  int prev = 0;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] <= prev || keep[i] > p.size()) {
      throw Error(ErrorCode::NotAPartition, "keep must be increasing within 1..n");
    }
    prev = keep[i];
    rank[static_cast<std::size_t>(keep[i])] = static_cast<int>(i) + 1;
  }
  std::vector<Block> blocks;
  for (const Block& b : p.blocks()) {
    Block img;
    for (int x : b) {
      if (rank[static_cast<std::size_t>(x)] != 0) img.push_back(rank[static_cast<std::size_t>(x)]);
    }
    if (!img.empty()) blocks.push_back(std::move(img));
  }
  // Images of min-sorted blocks under an increasing map stay min-sorted.
  return NcPartition::trusted(static_cast<int>(keep.size()), std::move(blocks));
}

/// 0_n: all singletons.
inline NcPartition zero_partition(int n) {
  std::vector<Block> blocks;
  for (int i = 1; i <= n; ++i) blocks.push_back({i});
  return NcPartition::trusted(n, std::move(blocks));
}

/// 1_n: a single block.
inline NcPartition one_partition(int n) {
  Block b(static_cast<std::size_t>(n));
  std::iota(b.begin(), b.end(), 1);
  return NcPartition::trusted(n, {std::move(b)});
}

namespace detail {

// Non-crossing partitions of the interval [lo, hi]: pick the block V of lo,
// then partition each gap between consecutive elements of V (and the tail
// after max V) independently.
inline void nc_interval(int lo, int hi, std::vector<Block>& acc,
                        const std::function<void(std::vector<Block>&)>& emit);

inline void nc_gaps(const Block& v, std::size_t gap, int hi, std::vector<Block>& acc,
                    const std::function<void(std::vector<Block>&)>& emit) {
  if (gap == v.size()) {
    emit(acc);
    return;
  }
  const int lo = v[gap] + 1;
  const int up = gap + 1 < v.size() ? v[gap + 1] - 1 : hi;
  nc_interval(lo, up, acc,
              [&](std::vector<Block>& a) { nc_gaps(v, gap + 1, hi, a, emit); });
}

inline void nc_interval(int lo, int hi, std::vector<Block>& acc,
                        const std::function<void(std::vector<Block>&)>& emit) {
  if (lo > hi) {
    emit(acc);
    return;
  }
  const int span = hi - lo;
  for (unsigned mask = 0; mask < (1u << span); ++mask) {
    Block v{lo};
    for (int i = 0; i < span; ++i) {
      if (mask & (1u << i)) v.push_back(lo + 1 + i);
    }
    acc.push_back(v);
    nc_gaps(v, 0, hi, acc, emit);
    acc.pop_back();
  }
}

}  // namespace detail

/// Calls f for every element of NC(n) (Catalan many), via the interval
/// decomposition recursion. Independent of the ordered-tree machinery.
template <typename F>
void for_each_noncrossing(int n, F&& f) {
  std::vector<Block> acc;
  detail::nc_interval(1, n, acc, [&](std::vector<Block>& blocks) {
    std::vector<Block> copy = blocks;
    detail::canonicalize(copy);
    f(NcPartition::trusted(n, std::move(copy)));
  });
}

inline std::vector<NcPartition> noncrossing_partitions(int n) {
  std::vector<NcPartition> out;
  for_each_noncrossing(n, [&](NcPartition p) { out.push_back(std::move(p)); });
  return out;
}

}  // namespace mton
