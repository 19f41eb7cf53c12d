#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include "mton/error.hpp"
#include "mton/polynomial.hpp"
#include "mton/statistics.hpp"
#include "mton/tree.hpp"

namespace mton {

/// Exact distribution of an integer statistic: counts[v] nodes take value v.
using Histogram = std::vector<std::uint64_t>;

struct BruteForceOptions {
  unsigned threads = default_threads();
  int max_full = 10;  // largest n accepted on the full tree
  int max_pair = 8;   // largest n accepted on the pair tree
};

namespace detail {

inline std::vector<StatisticId> standard_statistics(TreeKind kind) {
  std::vector<StatisticId> s{StatisticId::block_count(),      StatisticId::blocks_of_size(1),
                             StatisticId::blocks_of_size(2),  StatisticId::blocks_of_size(3),
                             StatisticId::blocks_of_size(4),  StatisticId::blocks_at_least3(),
                             StatisticId::outer_blocks(),     StatisticId::interval_pairs()};
  if (kind == TreeKind::Pair) s.push_back(StatisticId::area());
  return s;
}

struct HistogramCache {
  std::mutex mu;
  std::map<std::tuple<TreeKind, int, StatisticId>, Histogram> entries;

  static HistogramCache& instance() {
    static HistogramCache c;
    return c;
  }
};

}  // namespace detail

/// One enumeration pass over level n, histogramming several statistics at once.
inline std::vector<Histogram> histograms(TreeKind kind, int n, const std::vector<StatisticId>& stats,
                                         unsigned threads = default_threads()) {
  for (const auto& s : stats) {
    if (s.kind == StatKind::Area && kind == TreeKind::Full) {
      throw Error(ErrorCode::AreaRequiresPairPartition, "Area is only defined on the pair tree");
    }
  }
  using Acc = std::vector<Histogram>;
  auto visit = [&](Acc& acc, const TreeNode& t) {
    const LabelView v = t.view();
    for (std::size_t i = 0; i < stats.size(); ++i) {
      const auto value = static_cast<std::size_t>(stat_value(stats[i], v));
      if (value >= acc[i].size()) acc[i].resize(value + 1, 0);
      ++acc[i][value];
    }
  };
  auto merge = [](Acc& into, const Acc& from) {
    for (std::size_t i = 0; i < into.size(); ++i) {
      if (from[i].size() > into[i].size()) into[i].resize(from[i].size(), 0);
      for (std::size_t v = 0; v < from[i].size(); ++v) into[i][v] += from[i][v];
    }
  };
  return reduce_nodes(kind, n, threads, Acc(stats.size()), visit, merge);
}

inline ExactPolynomial from_histogram(const Histogram& h) {
  ExactPolynomial p;
  for (std::size_t v = 0; v < h.size(); ++v) {
    if (h[v] != 0) p.add_term(static_cast<int>(v), BigRational(to_big(h[v])));
  }
  return p;
}

/// Histogram of one statistic at level n, memoized per (kind, n). The first
/// request at a level computes every standard statistic in the same pass.
inline Histogram cached_histogram(const StatisticId& stat, int n, TreeKind kind,
                                  const BruteForceOptions& opts = {}) {
  const int bound = kind == TreeKind::Full ? opts.max_full : opts.max_pair;
  if (n > bound) {
    throw Error(ErrorCode::SizeBoundExceeded, "brute force at n = " + std::to_string(n) +
                                                  " exceeds the bound " + std::to_string(bound));
  }
  if (n < 1) throw Error(ErrorCode::RankOutOfRange, "n must be >= 1");
  auto& cache = detail::HistogramCache::instance();
  {
    std::lock_guard lock(cache.mu);
    auto it = cache.entries.find({kind, n, stat});
    if (it != cache.entries.end()) return it->second;
  }
  std::vector<StatisticId> stats = detail::standard_statistics(kind);
  if (std::find(stats.begin(), stats.end(), stat) == stats.end()) {
    if (stat.kind == StatKind::Area && kind == TreeKind::Full) {
      throw Error(ErrorCode::AreaRequiresPairPartition, "Area is only defined on the pair tree");
    }
    stats.push_back(stat);
  }
  auto hs = histograms(kind, n, stats, opts.threads);
  std::lock_guard lock(cache.mu);
  for (std::size_t i = 0; i < stats.size(); ++i) cache.entries[{kind, n, stats[i]}] = hs[i];
  return cache.entries[{kind, n, stat}];
}

/// L_n(t) = sum over the level-n nodes of t^{Z(node)}, by enumeration.
inline ExactPolynomial laplace_bruteforce(const StatisticId& stat, int n, TreeKind kind = TreeKind::Full,
                                          const BruteForceOptions& opts = {}) {
  return from_histogram(cached_histogram(stat, n, kind, opts));
}

namespace detail {

inline int integer_exponent(const BigRational& r) {
  if (r.get_den() != 1 || !r.get_num().fits_sint_p()) {
    throw Error(ErrorCode::NotFirstKind, "input entry " + r.get_str() + " is not a usable exponent");
  }
  return static_cast<int>(r.get_num().get_si());
}

inline void require_nonnegative(const ExactPolynomial& p, int n) {
  if (p.min_exponent() < 0) {
    throw Error(ErrorCode::NegativeExponent,
                "L_" + std::to_string(n) + " has a term t^" + std::to_string(p.min_exponent()));
  }
}

}  // namespace detail

/// Iterates the first-kind recursion from seeds L_1..L_k and returns L_1..L_n.
/// An input of length 1 is treated as (r_1, 0), which describes the same statistic.
inline std::vector<ExactPolynomial> first_kind_sequence(const FirstKindInput& input,
                                                        const std::vector<ExactPolynomial>& seed, int n) {
  if (input.r.empty()) throw Error(ErrorCode::NotFirstKind, "empty input vector");
  std::vector<int> r;
  for (const auto& x : input.r) r.push_back(detail::integer_exponent(x));
  if (r.size() == 1) r.push_back(0);
  const int k = static_cast<int>(r.size());
  if (static_cast<int>(seed.size()) < std::min(k, n)) {
    throw Error(ErrorCode::InsufficientSeed, "need L_1..L_" + std::to_string(std::min(k, n)) +
                                                 ", got " + std::to_string(seed.size()));
  }
  std::vector<ExactPolynomial> L(seed.begin(), seed.begin() + std::min<std::ptrdiff_t>(
                                                                   static_cast<std::ptrdiff_t>(seed.size()), n));
  for (int m = static_cast<int>(L.size()) + 1; m <= n; ++m) {
    // L_m = (1 + m t^{r_1}) L_{m-1} + sum_j (m-j+1)(t^{r_j} - 1) t^{r_1+...+r_{j-1}} L_{m-j}
    ExactPolynomial next = (ExactPolynomial(1) + ExactPolynomial::monomial(r[0], m)) * L[static_cast<std::size_t>(m - 2)];
    int prefix = r[0];
    for (int j = 2; j <= k; ++j) {
      const ExactPolynomial factor =
          (ExactPolynomial::t(r[static_cast<std::size_t>(j - 1)]) - ExactPolynomial(1)) *
          ExactPolynomial::monomial(prefix, m - j + 1);
      next += factor * L[static_cast<std::size_t>(m - j - 1)];
      prefix += r[static_cast<std::size_t>(j - 1)];
    }
    detail::require_nonnegative(next, m);
    L.push_back(std::move(next));
  }
  return L;
}

inline ExactPolynomial recurse_first_kind(const FirstKindInput& input,
                                          const std::vector<ExactPolynomial>& seed, int n) {
  return first_kind_sequence(input, seed, n).back();
}

/// Number of children of a level-(m-1) node: m+1 (full) or 2m-1 (pair).
inline int children_per_parent(TreeKind kind, int m) { return kind == TreeKind::Full ? m + 1 : 2 * m - 1; }

/// Iterates the second-kind recursion from L_1 and returns L_1..L_n.
inline std::vector<ExactPolynomial> second_kind_sequence(const SecondKindInput& in,
                                                         const ExactPolynomial& seed, int n,
                                                         TreeKind kind = TreeKind::Full) {
  if (n < 1) throw Error(ErrorCode::InsufficientSeed, "n must be >= 1");
  std::vector<ExactPolynomial> L{seed};
  const ExactPolynomial shift = ExactPolynomial::t(in.alpha + 1) - ExactPolynomial::t(in.beta + 1);
  for (int m = 2; m <= n; ++m) {
    const int c = children_per_parent(kind, m);
    const ExactPolynomial mult =
        ExactPolynomial::monomial(in.alpha, in.q) + ExactPolynomial::monomial(in.beta, c - in.q);
    const ExactPolynomial& prev = L.back();
    ExactPolynomial next = mult * prev + shift * prev.derivative();
    detail::require_nonnegative(next, m);
    L.push_back(std::move(next));
  }
  return L;
}

inline ExactPolynomial recurse_second_kind(const SecondKindInput& in, const ExactPolynomial& seed, int n,
                                           TreeKind kind = TreeKind::Full) {
  return second_kind_sequence(in, seed, n, kind).back();
}

/// E = L'(1) / L(1).
inline BigRational expectation_from_laplace(const ExactPolynomial& L) {
  const BigRational total = L.evaluate(1);
  if (L.is_zero() || total == 0) throw Error(ErrorCode::ZeroPolynomial, "L(1) = 0");
  return L.derivative().evaluate(1) / total;
}

/// Var = (L''(1) + L'(1)) / L(1) - E^2.
inline BigRational variance_from_laplace(const ExactPolynomial& L) {
  const BigRational e = expectation_from_laplace(L);
  const ExactPolynomial d1 = L.derivative();
  return (d1.derivative().evaluate(1) + d1.evaluate(1)) / L.evaluate(1) - e * e;
}

/// Transform by the statistic's own recursion, seeded by brute force.
inline ExactPolynomial laplace_recursion(const StatisticId& stat, int n, TreeKind kind = TreeKind::Full,
                                         const BruteForceOptions& opts = {}) {
  if (kind == TreeKind::Full && stat.kind != StatKind::OuterBlocks) {
    const FirstKindInput in = first_kind_input(stat);
    const int k = std::max<int>(2, static_cast<int>(in.k()));
    std::vector<ExactPolynomial> seed;
    for (int m = 1; m <= std::min(k, n); ++m) seed.push_back(laplace_bruteforce(stat, m, kind, opts));
    return recurse_first_kind(in, seed, n);
  }
  const SecondKindInput in = second_kind_input(stat, kind);
  return recurse_second_kind(in, laplace_bruteforce(stat, 1, kind, opts), n, kind);
}

}  // namespace mton
