#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <exception>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "mton/error.hpp"
#include "mton/partition.hpp"
#include "mton/rational.hpp"

namespace mton {

/// Which rooted tree: NC^(mton) over all partitions, or NC^(mton)_2 over
/// pair-partitions. For Pair, sizes count pairs (a node of size n has 2n points).
enum class TreeKind { Full, Pair };

inline std::string_view to_string(TreeKind kind) {
  return kind == TreeKind::Full ? "full" : "pair";
}

inline TreeKind parse_kind(std::string_view s) {
  if (s == "full") return TreeKind::Full;
  if (s == "pair") return TreeKind::Pair;
  throw Error(ErrorCode::ParseError, "unknown tree kind '" + std::string(s) + "'");
}

/// Hard cap on the number of points in a tree node handled by the walkers.
inline constexpr int kMaxPoints = 64;

using Label = std::uint16_t;

/// Borrowed view of an ordered partition as its point-label word:
/// labels[i] is the label of the block containing point i+1.
struct LabelView {
  std::span<const Label> labels;
  int k = 0;

  int points() const noexcept { return static_cast<int>(labels.size()); }
};

/// A non-crossing partition together with a monotonic ordering of its blocks.
class OrderedNcPartition {
 public:
  /// Blocks listed in label order (label 1 first).
  static OrderedNcPartition from_blocks_by_label(std::vector<Block> blocks_by_label, int n) {
    std::vector<Label> labels(static_cast<std::size_t>(std::max(n, 0)), 0);
    for (std::size_t i = 0; i < blocks_by_label.size(); ++i) {
      for (int p : blocks_by_label[i]) {
        if (p >= 1 && p <= n) labels[static_cast<std::size_t>(p - 1)] = static_cast<Label>(i + 1);
      }
    }
    validate_noncrossing(blocks_by_label, n);  // cover/disjoint/crossing
    return from_labels(labels);
  }

  /// Validates that the word encodes a monotonically ordered NC partition.
  static OrderedNcPartition from_labels(std::span<const Label> labels) {
    const int n = static_cast<int>(labels.size());
    if (n < 1) throw Error(ErrorCode::NotAPartition, "empty ground set");
    int k = 0;
    for (Label l : labels) k = std::max<int>(k, l);
    std::vector<Block> by_label(static_cast<std::size_t>(k));
    for (int p = 1; p <= n; ++p) {
      const Label l = labels[static_cast<std::size_t>(p - 1)];
      if (l == 0) throw Error(ErrorCode::NotAPartition, "label 0 is not allowed");
      by_label[l - 1u].push_back(p);
    }
    for (int l = 1; l <= k; ++l) {
      if (by_label[static_cast<std::size_t>(l - 1)].empty()) {
        throw Error(ErrorCode::NotAPartition, "labels are not onto 1..k (missing " +
                                                  std::to_string(l) + ")");
      }
    }
    validate_noncrossing(by_label, n);
    for (std::size_t a = 0; a < by_label.size(); ++a) {
      for (std::size_t b = 0; b < by_label.size(); ++b) {
        const Block& in = by_label[a];
        const Block& out = by_label[b];
        if (in.front() > out.front() && in.back() < out.back() && a < b) {
          throw Error(ErrorCode::NotAPartition,
                      "ordering is not monotonic: label " + std::to_string(a + 1) +
                          " nested inside label " + std::to_string(b + 1));
        }
      }
    }
    return OrderedNcPartition(std::vector<Label>(labels.begin(), labels.end()), k);
  }

  static OrderedNcPartition trusted(std::vector<Label> labels, int k) {
    return OrderedNcPartition(std::move(labels), k);
  }

  /// The unique element of NC^(mton)(1), or the root pairing of the pair tree.
  static OrderedNcPartition root(TreeKind kind) {
    return kind == TreeKind::Full ? trusted({1}, 1) : trusted({1, 1}, 1);
  }

  int size() const noexcept { return static_cast<int>(labels_.size()); }
  int block_count() const noexcept { return k_; }
  std::span<const Label> labels() const noexcept { return labels_; }
  LabelView view() const noexcept { return {labels_, k_}; }

  std::vector<Block> blocks_by_label() const {
    std::vector<Block> out(static_cast<std::size_t>(k_));
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      out[labels_[i] - 1u].push_back(static_cast<int>(i) + 1);
    }
    return out;
  }

  NcPartition partition() const {
    auto blocks = blocks_by_label();
    detail::canonicalize(blocks);
    return NcPartition::trusted(size(), std::move(blocks));
  }

  /// Label of each block of partition(), in canonical block order.
  std::vector<int> label_order() const {
    std::vector<std::pair<int, int>> firsts;  // (min point, label)
    std::vector<bool> seen(static_cast<std::size_t>(k_) + 1, false);
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (!seen[labels_[i]]) {
        seen[labels_[i]] = true;
        firsts.emplace_back(static_cast<int>(i) + 1, labels_[i]);
      }
    }
    std::vector<int> out;
    for (const auto& f : firsts) out.push_back(f.second);
    return out;
  }

  bool is_pair_partition() const { return partition().is_pair_partition(); }

  friend bool operator==(const OrderedNcPartition&, const OrderedNcPartition&) = default;
  friend auto operator<=>(const OrderedNcPartition& a, const OrderedNcPartition& b) {
    return a.labels_ <=> b.labels_;
  }

 private:
  OrderedNcPartition(std::vector<Label> labels, int k) : labels_(std::move(labels)), k_(k) {}

  std::vector<Label> labels_;
  int k_ = 0;
};

/// J(π,u): the block carrying the maximal label; always an interval [lo, hi].
struct MaxBlock {
  int lo = 0;
  int hi = 0;
  int length() const noexcept { return hi - lo + 1; }
};

inline MaxBlock max_label_interval(LabelView v) {
  MaxBlock j{0, 0};
  for (int i = 0; i < v.points(); ++i) {
    if (v.labels[static_cast<std::size_t>(i)] == v.k) {
      if (j.lo == 0) j.lo = i + 1;
      j.hi = i + 1;
    }
  }
  return j;
}

/// J(π,u) as a reference into partition().
inline BlockRef max_label_block(const OrderedNcPartition& op) {
  const MaxBlock j = max_label_interval(op.view());
  const NcPartition part = op.partition();
  const auto blocks = part.blocks();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].front() == j.lo) return BlockRef{i};
  }
  throw Error(ErrorCode::NotAPartition, "no max-labeled block");
}

/// Mutable fixed-capacity node used by the walkers; J is cached.
struct TreeNode {
  int points = 0;
  int k = 0;
  MaxBlock j;
  std::array<Label, kMaxPoints> labels{};

  LabelView view() const noexcept {
    return {std::span<const Label>(labels.data(), static_cast<std::size_t>(points)), k};
  }

  static TreeNode from(const OrderedNcPartition& op) {
    if (op.size() > kMaxPoints) {
      throw Error(ErrorCode::SizeBoundExceeded,
                  "node has more than " + std::to_string(kMaxPoints) + " points");
    }
    TreeNode t;
    t.points = op.size();
    t.k = op.block_count();
    std::copy(op.labels().begin(), op.labels().end(), t.labels.begin());
    t.j = max_label_interval(t.view());
    return t;
  }

  OrderedNcPartition materialize() const {
    return OrderedNcPartition::trusted(std::vector<Label>(labels.begin(), labels.begin() + points),
                                       k);
  }
};

/// Number of children of a node of the given size (points for Full, pairs for Pair).
inline int child_count(TreeKind kind, int size) {
  return kind == TreeKind::Full ? size + 2 : 2 * size + 1;
}

inline int node_size(TreeKind kind, const TreeNode& t) {
  return kind == TreeKind::Full ? t.points : t.points / 2;
}

/// Writes child number `digit` of `parent` into `out`.
/// Full: digits 0..n-1 insert a singleton at position digit+1, digit n elongates J.
/// Pair: digit d inserts the pair {d+1, d+2}.
inline void apply_child(TreeKind kind, const TreeNode& parent, int digit, TreeNode& out) {
  const int n = parent.points;
  const bool elongate = kind == TreeKind::Full && digit == n + 1;
  const int width = kind == TreeKind::Full ? 1 : 2;
  const int pos = elongate ? parent.j.hi + 1 : digit + 1;  // first inserted point
  const Label label = static_cast<Label>(elongate ? parent.k : parent.k + 1);
  if (n + width > kMaxPoints) {
    throw Error(ErrorCode::SizeBoundExceeded, "tree node exceeds point capacity");
  }
  const auto p0 = static_cast<std::size_t>(pos - 1);
  std::copy(parent.labels.begin(), parent.labels.begin() + static_cast<std::ptrdiff_t>(p0),
            out.labels.begin());
  for (int w = 0; w < width; ++w) out.labels[p0 + static_cast<std::size_t>(w)] = label;
  std::copy(parent.labels.begin() + static_cast<std::ptrdiff_t>(p0),
            parent.labels.begin() + n,
            out.labels.begin() + static_cast<std::ptrdiff_t>(p0) + width);
  out.points = n + width;
  out.k = label;
  out.j = elongate ? MaxBlock{parent.j.lo, parent.j.hi + 1} : MaxBlock{pos, pos + width - 1};
}

/// Digit that leads from the parent to this node (inverse of apply_child).
inline int digit_of(TreeKind kind, const TreeNode& t) {
  if (kind == TreeKind::Full && t.j.length() > 1) return t.points;
  return t.j.lo - 1;
}

inline void apply_parent(TreeKind kind, const TreeNode& child, TreeNode& out) {
  const bool drop_block = kind == TreeKind::Pair || child.j.length() == 1;
  const int width = kind == TreeKind::Full ? 1 : 2;
  const int first = child.j.hi - width + 1;  // first deleted point
  const auto f0 = static_cast<std::size_t>(first - 1);
  std::copy(child.labels.begin(), child.labels.begin() + static_cast<std::ptrdiff_t>(f0),
            out.labels.begin());
  std::copy(child.labels.begin() + static_cast<std::ptrdiff_t>(f0) + width,
            child.labels.begin() + child.points,
            out.labels.begin() + static_cast<std::ptrdiff_t>(f0));
  out.points = child.points - width;
  out.k = drop_block ? child.k - 1 : child.k;
  out.j = drop_block ? max_label_interval(out.view()) : MaxBlock{child.j.lo, child.j.hi - 1};
}

namespace detail {

inline void require_pair(const OrderedNcPartition& op) {
  if (op.size() % 2 != 0 || !op.is_pair_partition()) {
    throw Error(ErrorCode::NotPairPartition, "pair-tree operation on a non-pair partition");
  }
}

}  // namespace detail

/// Parent in the NC^(mton) tree: delete max J and renumber.
inline OrderedNcPartition parent(const OrderedNcPartition& op) {
  if (op.size() < 2) throw Error(ErrorCode::RootHasNoParent, "n = 1 is the root");
  TreeNode out;
  apply_parent(TreeKind::Full, TreeNode::from(op), out);
  return out.materialize();
}

/// The n+1 children of a node of size n-1: singleton insertions at m = 1..n, then elongation.
inline std::vector<OrderedNcPartition> children(const OrderedNcPartition& op) {
  const TreeNode t = TreeNode::from(op);
  std::vector<OrderedNcPartition> out;
  TreeNode c;
  for (int d = 0; d < child_count(TreeKind::Full, t.points); ++d) {
    apply_child(TreeKind::Full, t, d, c);
    out.push_back(c.materialize());
  }
  return out;
}

/// Pair-parent: delete both points of J = {m, m+1}.
inline OrderedNcPartition pair_parent(const OrderedNcPartition& op) {
  detail::require_pair(op);
  if (op.size() < 4) throw Error(ErrorCode::RootHasNoParent, "the single pairing is the root");
  TreeNode out;
  apply_parent(TreeKind::Pair, TreeNode::from(op), out);
  return out.materialize();
}

/// The 2n-1 pair-children of a node in NC^(mton)_2(2n-2); child m has J = {m, m+1}.
inline std::vector<OrderedNcPartition> pair_children(const OrderedNcPartition& op) {
  detail::require_pair(op);
  const TreeNode t = TreeNode::from(op);
  std::vector<OrderedNcPartition> out;
  TreeNode c;
  for (int d = 0; d < child_count(TreeKind::Pair, t.points / 2); ++d) {
    apply_child(TreeKind::Pair, t, d, c);
    out.push_back(c.materialize());
  }
  return out;
}

/// Mixed-radix root-to-node path. digits[i-1] is the choice made at depth i,
/// with radix i+2 (Full) or 2i+1 (Pair).
struct TreeCode {
  TreeKind kind = TreeKind::Full;
  int n = 1;
  std::vector<int> digits;

  friend bool operator==(const TreeCode&, const TreeCode&) = default;
};

inline int radix(TreeKind kind, int depth) {
  return kind == TreeKind::Full ? depth + 2 : 2 * depth + 1;
}

/// (n+1)!/2 for Full, (2n-1)!! for Pair.
inline BigInteger node_count(TreeKind kind, int n) {
  if (n < 1) return 0;
  BigInteger c = 1;
  for (int i = 1; i < n; ++i) c *= radix(kind, i);
  return c;
}

inline std::uint64_t node_count_u64(TreeKind kind, int n) {
  const BigInteger c = node_count(kind, n);
  if (!c.fits_ulong_p()) throw Error(ErrorCode::SizeBoundExceeded, "count exceeds 64 bits");
  return c.get_ui();
}

namespace detail {

inline void check_size(TreeKind kind, int n) {
  if (n < 1) throw Error(ErrorCode::RankOutOfRange, "size must be >= 1");
  const int pts = kind == TreeKind::Full ? n : 2 * n;
  if (pts > kMaxPoints) {
    throw Error(ErrorCode::SizeBoundExceeded, "size " + std::to_string(n) + " exceeds capacity");
  }
}

inline TreeNode root_node(TreeKind kind) { return TreeNode::from(OrderedNcPartition::root(kind)); }

}  // namespace detail

inline OrderedNcPartition decode(const TreeCode& code) {
  detail::check_size(code.kind, code.n);
  if (static_cast<int>(code.digits.size()) != code.n - 1) {
    throw Error(ErrorCode::DigitOutOfRange, "code length must be n-1");
  }
  TreeNode cur = detail::root_node(code.kind);
  TreeNode next;
  for (int depth = 1; depth < code.n; ++depth) {
    const int d = code.digits[static_cast<std::size_t>(depth - 1)];
    if (d < 0 || d >= radix(code.kind, depth)) {
      throw Error(ErrorCode::DigitOutOfRange, "digit " + std::to_string(d) + " at depth " +
                                                  std::to_string(depth));
    }
    apply_child(code.kind, cur, d, next);
    std::swap(cur, next);
  }
  return cur.materialize();
}

inline TreeCode encode(const OrderedNcPartition& op, TreeKind kind) {
  if (kind == TreeKind::Pair) detail::require_pair(op);
  TreeNode cur = TreeNode::from(op);
  TreeCode code{kind, node_size(kind, cur), {}};
  TreeNode up;
  while (node_size(kind, cur) > 1) {
    code.digits.push_back(digit_of(kind, cur));
    apply_parent(kind, cur, up);
    std::swap(cur, up);
  }
  std::reverse(code.digits.begin(), code.digits.end());
  return code;
}

inline BigInteger rank(const TreeCode& code) {
  BigInteger r = 0;
  for (int depth = 1; depth < code.n; ++depth) {
    r = r * radix(code.kind, depth) + code.digits[static_cast<std::size_t>(depth - 1)];
  }
  return r;
}

inline BigInteger rank(const OrderedNcPartition& op, TreeKind kind = TreeKind::Full) {
  return rank(encode(op, kind));
}

inline TreeCode code_of_rank(const BigInteger& k, int n, TreeKind kind) {
  detail::check_size(kind, n);
  if (k < 0 || k >= node_count(kind, n)) {
    throw Error(ErrorCode::RankOutOfRange, "rank " + k.get_str() + " out of range");
  }
  TreeCode code{kind, n, std::vector<int>(static_cast<std::size_t>(n - 1))};
  BigInteger rest = k;
  for (int depth = n - 1; depth >= 1; --depth) {
    const BigInteger r = radix(kind, depth);
    code.digits[static_cast<std::size_t>(depth - 1)] = static_cast<int>(BigInteger(rest % r).get_si());
    rest /= r;
  }
  return code;
}

inline OrderedNcPartition unrank(const BigInteger& k, int n, TreeKind kind) {
  return decode(code_of_rank(k, n, kind));
}

/// Rank of a walker node within its level, without materializing it.
inline std::uint64_t rank_of(TreeKind kind, const TreeNode& node) {
  std::vector<int> digits;
  TreeNode cur = node;
  TreeNode up;
  while (node_size(kind, cur) > 1) {
    digits.push_back(digit_of(kind, cur));
    apply_parent(kind, cur, up);
    std::swap(cur, up);
  }
  std::uint64_t r = 0;
  for (int depth = 1; depth <= static_cast<int>(digits.size()); ++depth) {
    r = r * static_cast<std::uint64_t>(radix(kind, depth)) +
        static_cast<std::uint64_t>(digits[digits.size() - static_cast<std::size_t>(depth)]);
  }
  return r;
}

/// Iterates the level-n nodes of a tree in rank order, starting at `begin`.
/// Keeps one node per depth; each step re-derives only the suffix that changed.
class TreeWalker {
 public:
  TreeWalker(TreeKind kind, int n, std::uint64_t begin = 0)
      : kind_(kind), n_(n), levels_(static_cast<std::size_t>(n)), digits_(static_cast<std::size_t>(n), 0) {
    detail::check_size(kind, n);
    const TreeCode code = code_of_rank(to_big(begin), n, kind);
    levels_[0] = detail::root_node(kind);
    for (int depth = 1; depth < n; ++depth) {
      digits_[static_cast<std::size_t>(depth)] = code.digits[static_cast<std::size_t>(depth - 1)];
      apply_child(kind, levels_[static_cast<std::size_t>(depth - 1)],
                  digits_[static_cast<std::size_t>(depth)], levels_[static_cast<std::size_t>(depth)]);
    }
  }

  const TreeNode& current() const noexcept { return levels_.back(); }

  /// Moves to the next node; false once the level is exhausted.
  bool advance() {
    int depth = n_ - 1;
    while (depth >= 1 && digits_[static_cast<std::size_t>(depth)] + 1 >= radix(kind_, depth)) --depth;
    if (depth < 1) return false;
    ++digits_[static_cast<std::size_t>(depth)];
    for (int d = depth; d < n_; ++d) {
      if (d > depth) digits_[static_cast<std::size_t>(d)] = 0;
      apply_child(kind_, levels_[static_cast<std::size_t>(d - 1)], digits_[static_cast<std::size_t>(d)],
                  levels_[static_cast<std::size_t>(d)]);
    }
    return true;
  }

 private:
  TreeKind kind_;
  int n_;
  std::vector<TreeNode> levels_;
  std::vector<int> digits_;  // digits_[depth], depth 1..n-1
};

/// Calls f(node) for level-n nodes with rank in [begin, end).
template <typename F>
void for_each_node_in_range(TreeKind kind, int n, std::uint64_t begin, std::uint64_t end, F&& f) {
  if (begin >= end) return;
  TreeWalker w(kind, n, begin);
  for (std::uint64_t r = begin; r < end; ++r) {
    f(w.current());
    if (r + 1 < end) w.advance();
  }
}

template <typename F>
void for_each_node(TreeKind kind, int n, F&& f) {
  for_each_node_in_range(kind, n, 0, node_count_u64(kind, n), std::forward<F>(f));
}

/// Streams NC^(mton)(n) (or NC^(mton)_2(2n)) in rank order as materialized values.
template <typename F>
void enumerate(int n, TreeKind kind, F&& f) {
  for_each_node(kind, n, [&](const TreeNode& t) { f(t.materialize()); });
}

inline unsigned default_threads() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Shards [0, count) into contiguous rank ranges, folds each shard with
/// visit(acc, node), and merges shard results in shard order.
template <typename Acc, typename Visit, typename Merge>
Acc reduce_nodes(TreeKind kind, int n, unsigned threads, Acc init, Visit visit, Merge merge) {
  const std::uint64_t total = node_count_u64(kind, n);
  const unsigned shards = static_cast<unsigned>(
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(std::max(threads, 1u), total)));
  std::vector<Acc> parts(shards, init);
  std::vector<std::exception_ptr> errors(shards);
  auto run = [&](unsigned s) {
    const std::uint64_t lo = total * s / shards;
    const std::uint64_t hi = total * (s + 1) / shards;
    Acc& acc = parts[s];
    try {
      for_each_node_in_range(kind, n, lo, hi, [&](const TreeNode& t) { visit(acc, t); });
    } catch (...) {
      errors[s] = std::current_exception();
    }
  };
  if (shards == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned s = 0; s < shards; ++s) pool.emplace_back(run, s);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  Acc out = std::move(init);
  for (auto& p : parts) merge(out, p);
  return out;
}

/// Depth-first walk over every parent/child edge of a tree down to size max_n.
/// f(parent, child, digit) is called with parent of size s and child of size s+1.
template <typename F>
void for_each_edge(TreeKind kind, int max_n, F&& f) {
  std::vector<TreeNode> stack(static_cast<std::size_t>(std::max(max_n, 1)));
  stack[0] = detail::root_node(kind);
  auto rec = [&](auto& self, int size) -> void {
    if (size >= max_n) return;
    const TreeNode& p = stack[static_cast<std::size_t>(size - 1)];
    TreeNode& c = stack[static_cast<std::size_t>(size)];
    for (int d = 0; d < child_count(kind, size); ++d) {
      apply_child(kind, p, d, c);
      f(p, c, d);
      self(self, size + 1);
    }
  };
  rec(rec, 1);
}

/// Visits every node of size <= max_n in depth-first pre-order (parents before children).
template <typename F>
void for_each_node_upto(TreeKind kind, int max_n, F&& f) {
  const TreeNode root = detail::root_node(kind);
  f(root);
  for_each_edge(kind, max_n, [&](const TreeNode&, const TreeNode& c, int) { f(c); });
}

}  // namespace mton
