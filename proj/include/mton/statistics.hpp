#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mton/error.hpp"
#include "mton/partition.hpp"
#include "mton/rational.hpp"
#include "mton/tree.hpp"

namespace mton {

enum class StatKind { BlockCount, BlocksOfSize, BlocksAtLeast3, OuterBlocks, IntervalPairs, Area };

/// A statistic of ordered (pair-)partitions; `ell` is used by BlocksOfSize only.
struct StatisticId {
  StatKind kind = StatKind::BlockCount;
  int ell = 0;

  static StatisticId block_count() { return {StatKind::BlockCount, 0}; }
  static StatisticId blocks_of_size(int ell) {
    if (ell < 1) throw Error(ErrorCode::ParseError, "block size must be >= 1");
    return {StatKind::BlocksOfSize, ell};
  }
  static StatisticId blocks_at_least3() { return {StatKind::BlocksAtLeast3, 0}; }
  static StatisticId outer_blocks() { return {StatKind::OuterBlocks, 0}; }
  static StatisticId interval_pairs() { return {StatKind::IntervalPairs, 0}; }
  static StatisticId area() { return {StatKind::Area, 0}; }

  /// Short name used on the command line and in CSV headers.
  std::string name() const {
    switch (kind) {
      case StatKind::BlockCount: return "Y";
      case StatKind::BlocksOfSize: return "Y" + std::to_string(ell);
      case StatKind::BlocksAtLeast3: return "Yge3";
      case StatKind::OuterBlocks: return "Out";
      case StatKind::IntervalPairs: return "Int";
      case StatKind::Area: return "Area";
    }
    return "?";
  }

  friend auto operator<=>(const StatisticId&, const StatisticId&) = default;
};

inline StatisticId parse_statistic(std::string_view s) {
  if (s == "Y") return StatisticId::block_count();
  if (s == "Yge3") return StatisticId::blocks_at_least3();
  if (s == "Out") return StatisticId::outer_blocks();
  if (s == "Int") return StatisticId::interval_pairs();
  if (s == "Area") return StatisticId::area();
  if (s.size() > 1 && s[0] == 'Y' &&
      std::all_of(s.begin() + 1, s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    return StatisticId::blocks_of_size(std::stoi(std::string(s.substr(1))));
  }
  throw Error(ErrorCode::ParseError, "unknown statistic '" + std::string(s) + "'");
}

/// Input vector r = (r_1, ..., r_k) of a recursion of the first kind.
struct FirstKindInput {
  std::vector<BigRational> r;
  std::size_t k() const noexcept { return r.size(); }
  friend bool operator==(const FirstKindInput&, const FirstKindInput&) = default;
};

/// Input (alpha, beta; q) of a recursion of the second kind.
struct SecondKindInput {
  int alpha = 0;
  int beta = 0;
  int q = 0;
  friend bool operator==(const SecondKindInput&, const SecondKindInput&) = default;
};

namespace detail {

// Per-label first point, last point and size for a label word.
struct BlockSpans {
  std::array<int, kMaxPoints + 1> first{};
  std::array<int, kMaxPoints + 1> last{};
  std::array<int, kMaxPoints + 1> size{};

  explicit BlockSpans(LabelView v) {
    if (v.points() > kMaxPoints) {
      throw Error(ErrorCode::SizeBoundExceeded, "statistics support at most " +
                                                    std::to_string(kMaxPoints) + " points");
    }
    for (int i = 1; i <= v.points(); ++i) {
      const Label l = v.labels[static_cast<std::size_t>(i - 1)];
      if (size[l]++ == 0) first[l] = i;
      last[l] = i;
    }
  }
};

inline std::string word_string(LabelView v) {
  std::string s = "[";
  for (int i = 0; i < v.points(); ++i) {
    if (i) s += ',';
    s += std::to_string(v.labels[static_cast<std::size_t>(i)]);
  }
  return s + "]";
}

}  // namespace detail

/// Integer value of a statistic on a label word. This is the hot path used
/// by enumeration; evaluate() wraps it for materialized values.
inline long stat_value(const StatisticId& stat, LabelView v) {
  switch (stat.kind) {
    case StatKind::BlockCount: return v.k;
    default: break;
  }
  const detail::BlockSpans s(v);
  long out = 0;
  switch (stat.kind) {
    case StatKind::BlocksOfSize:
      for (int l = 1; l <= v.k; ++l) out += s.size[static_cast<std::size_t>(l)] == stat.ell;
      return out;
    case StatKind::BlocksAtLeast3:
      for (int l = 1; l <= v.k; ++l) out += s.size[static_cast<std::size_t>(l)] >= 3;
      return out;
    case StatKind::OuterBlocks: {
      // A block is outer iff it opens to the right of everything opened before it.
      int reach = 0;
      for (int i = 1; i <= v.points(); ++i) {
        const Label l = v.labels[static_cast<std::size_t>(i - 1)];
        if (s.first[l] != i) continue;
        if (i > reach) ++out;
        reach = std::max(reach, s.last[l]);
      }
      return out;
    }
    case StatKind::IntervalPairs:
      for (int l = 1; l <= v.k; ++l) {
        out += s.size[static_cast<std::size_t>(l)] == 2 &&
               s.last[static_cast<std::size_t>(l)] == s.first[static_cast<std::size_t>(l)] + 1;
      }
      return out;
    case StatKind::Area:
      for (int l = 1; l <= v.k; ++l) {
        if (s.size[static_cast<std::size_t>(l)] != 2) {
          throw Error(ErrorCode::AreaRequiresPairPartition,
                      "area is defined on pair-partitions only, got " + detail::word_string(v));
        }
        out += s.last[static_cast<std::size_t>(l)] - s.first[static_cast<std::size_t>(l)];
      }
      return out;
    case StatKind::BlockCount: break;
  }
  return v.k;
}

inline BigRational evaluate(const StatisticId& stat, const OrderedNcPartition& op) {
  return BigRational(stat_value(stat, op.view()));
}

/// Slope word of the Dyck path: +1 where a pair opens, -1 where it closes.
inline std::vector<int> dyck_path(const NcPartition& p) {
  if (!p.is_pair_partition()) {
    throw Error(ErrorCode::NotPairPartition, "Dyck path needs a pair-partition");
  }
  std::vector<int> steps(static_cast<std::size_t>(p.size()), 0);
  for (const Block& b : p.blocks()) {
    steps[static_cast<std::size_t>(b[0] - 1)] = 1;
    steps[static_cast<std::size_t>(b[1] - 1)] = -1;
  }
  return steps;
}

/// Area under a piecewise linear path with the given slopes, starting at 0.
/// Each unit step contributes the trapezoid (h_{i-1} + h_i) / 2.
inline BigRational path_area(const std::vector<int>& steps) {
  BigRational a = 0;
  long h = 0;
  for (int s : steps) {
    a += rational(2 * h + s, 2);
    h += s;
  }
  a.canonicalize();
  return a;
}

/// Area of a pair-partition's Dyck path, via the sum of block spans.
inline long area(const NcPartition& p) {
  if (!p.is_pair_partition()) {
    throw Error(ErrorCode::NotPairPartition, "area needs a pair-partition");
  }
  long a = 0;
  for (const Block& b : p.blocks()) a += b.back() - b.front();
  return a;
}

/// The input vector a first-kind statistic is claimed to follow, unverified.
inline FirstKindInput first_kind_input(const StatisticId& stat) {
  switch (stat.kind) {
    case StatKind::BlockCount: return {{1}};
    case StatKind::BlocksOfSize: {
      // A new singleton adds a block of size 1; elongating a size-l block to
      // size l+1 removes one. For l = 1 this gives (1, -1).
      std::vector<BigRational> r(static_cast<std::size_t>(stat.ell) + 1, 0);
      r[static_cast<std::size_t>(stat.ell) - 1] += 1;
      r[static_cast<std::size_t>(stat.ell)] -= 1;
      return {r};
    }
    case StatKind::BlocksAtLeast3: return {{0, 0, 1}};
    default:
      throw Error(ErrorCode::NotFirstKind, stat.name() + " is not recursive of the first kind");
  }
}

/// Returns the input vector of `stat` after checking the first-kind
/// transition law on every parent/child edge of the full tree up to size `bound`.
inline FirstKindInput certify_first_kind(const StatisticId& stat, int bound = 8) {
  const FirstKindInput in = first_kind_input(stat);
  for_each_edge(TreeKind::Full, bound, [&](const TreeNode& p, const TreeNode& c, int) {
    const long diff = stat_value(stat, c.view()) - stat_value(stat, p.view());
    const auto j = static_cast<std::size_t>(c.j.length());
    const BigRational want = j <= in.k() ? in.r[j - 1] : BigRational(0);
    if (BigRational(diff) != want) {
      throw Error(ErrorCode::VerificationFailed,
                  stat.name() + " breaks the first-kind law at " + detail::word_string(c.view()) +
                      ": change " + std::to_string(diff) + ", expected " + want.get_str());
    }
  });
  return in;
}

inline SecondKindInput second_kind_input(const StatisticId& stat, TreeKind kind) {
  if (stat.kind == StatKind::OuterBlocks) return {1, 0, 1};
  if (stat.kind == StatKind::IntervalPairs && kind == TreeKind::Pair) return {0, 1, 0};
  throw Error(ErrorCode::NotSecondKind, stat.name() + " is not recursive of the second kind on the " +
                                            std::string(to_string(kind)) + " tree");
}

/// Child digits forming the distinguished subset C_o of a parent's children,
/// built from the outer-block and interval-pair structure of the parent.
inline std::vector<int> distinguished_children(const StatisticId& stat, TreeKind kind,
                                               const TreeNode& parent) {
  const LabelView v = parent.view();
  const detail::BlockSpans s(v);
  std::vector<int> digits;
  if (stat.kind == StatKind::OuterBlocks) {
    // Insert just before each outer block, or at the very end.
    int reach = 0;
    for (int i = 1; i <= v.points(); ++i) {
      const Label l = v.labels[static_cast<std::size_t>(i - 1)];
      if (s.first[l] != i) continue;
      if (i > reach) digits.push_back(i - 1);
      reach = std::max(reach, s.last[l]);
    }
    digits.push_back(v.points());
  } else if (stat.kind == StatKind::IntervalPairs && kind == TreeKind::Pair) {
    // Insert between the two points of an interval pair, breaking it.
    for (int l = 1; l <= v.k; ++l) {
      const auto u = static_cast<std::size_t>(l);
      if (s.size[u] == 2 && s.last[u] == s.first[u] + 1) digits.push_back(s.first[u]);
    }
    std::sort(digits.begin(), digits.end());
  } else {
    second_kind_input(stat, kind);
  }
  return digits;
}

/// Returns (alpha, beta; q) after checking, for every parent below `bound`,
/// that the explicit C_o has Z + q elements, that its children change Z by
/// alpha and that all other children change Z by beta.
inline SecondKindInput certify_second_kind(const StatisticId& stat, TreeKind kind, int bound = 0) {
  const SecondKindInput in = second_kind_input(stat, kind);
  if (bound <= 0) bound = kind == TreeKind::Full ? 8 : 6;
  TreeNode child;
  for_each_node_upto(kind, bound - 1, [&](const TreeNode& p) {
    const long z = stat_value(stat, p.view());
    const std::vector<int> co = distinguished_children(stat, kind, p);
    auto fail = [&](const std::string& why) {
      throw Error(ErrorCode::VerificationFailed,
                  stat.name() + " second-kind check failed at parent " +
                      detail::word_string(p.view()) + ": " + why);
    };
    if (static_cast<long>(co.size()) != z + in.q) {
      fail("|C_o| = " + std::to_string(co.size()) + ", expected " + std::to_string(z + in.q));
    }
    for (int d = 0; d < child_count(kind, node_size(kind, p)); ++d) {
      apply_child(kind, p, d, child);
      const long diff = stat_value(stat, child.view()) - z;
      const bool in_co = std::binary_search(co.begin(), co.end(), d);
      if (diff != (in_co ? in.alpha : in.beta)) {
        fail("child " + std::to_string(d) + " changes the value by " + std::to_string(diff));
      }
    }
  });
  return in;
}

}  // namespace mton
