#pragma once

#include <algorithm>
#include <memory>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mton/closed_forms.hpp"
#include "mton/cumulants.hpp"
#include "mton/harness.hpp"
#include "mton/laplace.hpp"
#include "mton/statistics.hpp"
#include "mton/tree.hpp"

namespace mton {

/// Knobs shared by every suite. `corrupt` swaps one formula per suite for a
/// deliberately wrong one so the harness can be shown to catch it.
struct SuiteOptions {
  bool deep = false;
  unsigned threads = default_threads();
  bool corrupt = false;

  int full_bound() const { return deep ? 10 : 9; }
  int pair_bound() const { return deep ? 8 : 7; }
  BruteForceOptions brute() const { return {threads, full_bound(), pair_bound()}; }
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"cardinality", "oracle", "thm16",    "thm17",
                                              "laplace",     "lemmas", "thm110",   "thm111",
                                              "stirling",    "cumulants", "asymptotic"};
  return names;
}

namespace suites {

using Stat = StatisticId;

inline Probe compare(const std::string& label, const BigRational& got, const BigRational& want) {
  if (got == want) return Probe::pass(label + " = " + got.get_str());
  return Probe::fail(label + " = " + got.get_str() + ", expected " + want.get_str());
}

inline Probe compare(const std::string& label, const ExactPolynomial& got, const ExactPolynomial& want) {
  if (got == want) return Probe::pass(label + " = " + got.str());
  int e = 0;
  for (int d = std::max(got.degree(), want.degree()); d >= std::min(got.min_exponent(), want.min_exponent()); --d) {
    if (got.coeff(d) != want.coeff(d)) e = d;
  }
  return Probe::fail(label + " = " + got.str() + ", expected " + want.str() + " (first difference at t^" +
                     std::to_string(e) + ")");
}

inline Probe all_of(std::vector<Probe> probes) {
  std::string detail;
  for (auto& p : probes) {
    if (!p.ok) return p;
    if (!detail.empty()) detail += "; ";
    detail += p.detail;
  }
  return Probe::pass(detail);
}

inline std::string at(const std::string& what, int n) { return what + "(" + std::to_string(n) + ")"; }

inline BigRational brute_mean(const Stat& s, int n, TreeKind kind, const SuiteOptions& o) {
  return expectation_from_laplace(laplace_bruteforce(s, n, kind, o.brute()));
}

inline BigRational brute_variance(const Stat& s, int n, TreeKind kind, const SuiteOptions& o) {
  return variance_from_laplace(laplace_bruteforce(s, n, kind, o.brute()));
}

inline std::vector<Stat> first_kind_stats() {
  return {Stat::block_count(),     Stat::blocks_of_size(1), Stat::blocks_of_size(2),
          Stat::blocks_of_size(3), Stat::blocks_of_size(4), Stat::blocks_at_least3()};
}

// ---------------------------------------------------------------- cardinality

inline std::vector<CheckSpec> cardinality(const SuiteOptions& o) {
  std::vector<CheckSpec> v;
  v.push_back({"card-full", "streamed |NC^(mton)(n)| equals (n+1)!/2", 1, o.full_bound(), CheckMode::Exact, 0,
               o.threads, [o](int n) {
                 std::uint64_t c = 0;
                 for (auto x : cached_histogram(Stat::block_count(), n, TreeKind::Full, o.brute())) c += x;
                 BigInteger want = factorial(static_cast<unsigned>(n + 1)) / 2;
                 if (o.corrupt && n >= 3) want += 1;
                 return compare(at("count", n), BigRational(to_big(c)), BigRational(want));
               }});
  v.push_back({"card-pair", "streamed |NC^(mton)_2(2n)| equals (2n-1)!!", 1, o.pair_bound(), CheckMode::Exact, 0,
               o.threads, [o](int n) {
                 std::uint64_t c = 0;
                 for (auto x : cached_histogram(Stat::block_count(), n, TreeKind::Pair, o.brute())) c += x;
                 return compare(at("count2", n), BigRational(to_big(c)),
                                BigRational(double_factorial_odd(static_cast<unsigned>(n))));
               }});
  return v;
}

// ---------------------------------------------------------------- oracle

/// NC(n) by the interval recursion, every block ordering filtered directly.
inline std::set<std::vector<Label>> generate_and_filter(int n, bool corrupt = false) {
  std::set<std::vector<Label>> out;
  for_each_noncrossing(n, [&](const NcPartition& p) {
    const auto blocks = p.blocks();
    std::vector<int> perm(blocks.size());
    std::iota(perm.begin(), perm.end(), 1);
    do {
      bool ok = true;
      for (std::size_t a = 0; a < blocks.size() && ok; ++a) {
        for (std::size_t b = 0; b < blocks.size() && ok; ++b) {
          if (a == b || !is_nested(p, BlockRef{a}, BlockRef{b})) continue;
          if (corrupt ? perm[a] > perm[b] : perm[a] < perm[b]) ok = false;
        }
      }
      if (!ok) continue;
      std::vector<Label> word(static_cast<std::size_t>(n));
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        for (int x : blocks[b]) word[static_cast<std::size_t>(x - 1)] = static_cast<Label>(perm[b]);
      }
      out.insert(word);
    } while (std::next_permutation(perm.begin(), perm.end()));
  });
  return out;
}

inline std::vector<CheckSpec> oracle(const SuiteOptions& o) {
  return {{"oracle-enumeration", "tree walk equals generate-and-filter as sets", 1, 7, CheckMode::Exact, 0, 1,
           [o](int n) {
             const auto want = generate_and_filter(n, o.corrupt);
             std::set<std::vector<Label>> got;
             std::optional<BigInteger> first_bad;
             std::uint64_t r = 0;
             for_each_node(TreeKind::Full, n, [&](const TreeNode& t) {
               std::vector<Label> w(t.labels.begin(), t.labels.begin() + t.points);
               if (!first_bad && !want.count(w)) first_bad = to_big(r);
               got.insert(std::move(w));
               ++r;
             });
             if (got == want) return Probe::pass(at("|set|", n) + " = " + std::to_string(got.size()));
             return Probe::fail("sets differ: walk has " + std::to_string(got.size()) + " elements, oracle has " +
                                    std::to_string(want.size()) + "; rank is the first walk element the oracle lacks",
                                first_bad);
           }}};
}

// ---------------------------------------------------------------- block count

inline std::vector<CheckSpec> thm16(const SuiteOptions& o) {
  std::vector<CheckSpec> v;
  v.push_back({"Y-mean", "brute-force E[Y_n] equals n - H_n + 3/2 - 1/(n+1)", 2, o.full_bound(),
               CheckMode::Exact, 0, o.threads, [o](int n) {
                 BigRational want = expected_Y(n);
                 if (o.corrupt) want += HarmonicCache::shared().H(n) - HarmonicCache::shared().H(n + 1);
                 return compare(at("E[Y]", n), brute_mean(Stat::block_count(), n, TreeKind::Full, o), want);
               }});
  v.push_back({"Y-variance", "brute-force Var[Y_n] equals H_n - H2_n - (n-1)^2/(4(n+1)^2)", 2, o.full_bound(),
               CheckMode::Exact, 0, o.threads, [o](int n) {
                 return compare(at("Var[Y]", n), brute_variance(Stat::block_count(), n, TreeKind::Full, o),
                                variance_Y(n));
               }});
  v.push_back({"Y-spot-values", "E[Y_3] = 29/12 and Var[Y_3] = 59/144 by enumeration", 3, 3, CheckMode::Exact, 0, 1,
               [o](int n) {
                 return all_of({compare("E[Y](3)", brute_mean(Stat::block_count(), n, TreeKind::Full, o), rational(29, 12)),
                                compare("Var[Y](3)", brute_variance(Stat::block_count(), n, TreeKind::Full, o),
                                        rational(59, 144))});
               }});
  // Streams H_n and H2_n so the long scan needs no table.
  struct Stream {
    int n = 1;
    BigRational h = 1, h2 = 1;
    void reset() { n = 1, h = 1, h2 = 1; }
    void advance() {
      ++n;
      h += rational(1, n);
      h2 += rational(1, static_cast<long>(n) * n);
    }
  };
  auto stream = std::make_shared<Stream>();
  v.push_back({"Y-variance-forms", "both variance forms agree exactly for 2 <= n <= 10^4", 2, 10000,
               CheckMode::Exact, 0, 1, [stream](int n) {
                 if (stream->n > n) stream->reset();
                 while (stream->n < n) stream->advance();
                 const BigRational a = variance_Y_from(n, stream->h, stream->h2);
                 const BigRational h_next = stream->h + rational(1, n + 1);
                 const BigRational h2_next = stream->h2 + rational(1, static_cast<long>(n + 1) * (n + 1));
                 const BigRational b = variance_Y_alt_from(h_next, h2_next);
                 if (a != b) return Probe::fail(at("Var forms differ", n));
                 return n == 10000 ? Probe::pass("forms agree through n = 10000") : Probe::pass();
               }});
  v.push_back({"Y-variance-sum", "Var[Y_n] equals sum_{k=2}^n k/(k+1)^2", 2, 200, CheckMode::Exact, 0, 1,
               [](int n) {
                 if (variance_Y(n) != variance_Y_sum(n)) return compare(at("Var[Y]", n), variance_Y_sum(n), variance_Y(n));
                 return n == 3 ? Probe::pass("Var[Y](3) = " + variance_Y_sum(3).get_str()) : Probe::pass();
               }});
  return v;
}

// ---------------------------------------------------------------- block sizes

inline std::vector<CheckSpec> thm17(const SuiteOptions& o) {
  std::vector<CheckSpec> v;
  v.push_back({"Y1-mean", "E[Y_n^(1)] equals n - 2H_n + 10/3 - 3/(n+1)", 3, o.full_bound(), CheckMode::Exact, 0,
               o.threads, [o](int n) {
                 BigRational want = expected_Y1(n);
                 if (o.corrupt) want -= 1;  // 10/3 misread as 7/3
                 return compare(at("E[Y1]", n), brute_mean(Stat::blocks_of_size(1), n, TreeKind::Full, o), want);
               }});
  v.push_back({"Y2-mean", "E[Y_n^(2)] equals H_n - 51/24 + (6n-1)/(2n(n+1))", 4, o.full_bound(), CheckMode::Exact, 0,
               o.threads, [o](int n) {
                 return compare(at("E[Y2]", n), brute_mean(Stat::blocks_of_size(2), n, TreeKind::Full, o),
                                expected_Y2(n));
               }});
  v.push_back({"Yge3-mean", "E[Y_n^(>=3)] equals 7/24 - (2n-1)/(2n(n+1))", 4, o.full_bound(), CheckMode::Exact, 0,
               o.threads, [o](int n) {
                 return compare(at("E[Yge3]", n), brute_mean(Stat::blocks_at_least3(), n, TreeKind::Full, o),
                                expected_Yge3(n));
               }});
  v.push_back({"Y-mean-decomposition", "E[Y] = E[Y1] + E[Y2] + E[Yge3] for 4 <= n <= 1000", 4, 1000, CheckMode::Exact,
               0, 1, [](int n) {
                 const BigRational sum = expected_Y1(n) + expected_Y2(n) + expected_Yge3(n);
                 if (sum != expected_Y(n)) return compare(at("sum", n), sum, expected_Y(n));
                 return Probe::pass();
               }});
  v.push_back({"Yge3-limit", "7/24 - E[Yge3] = (2n-1)/(2n(n+1)), decreasing for n >= 4", 4, 1000,
               CheckMode::Exact, 0, 1, [](int n) {
                 const long m = n;
                 const BigRational gap = rational(7, 24) - expected_Yge3(n);
                 if (gap != rational(2 * m - 1, 2 * m * (m + 1))) return Probe::fail(at("gap", n) + " = " + gap.get_str());
                 if (n > 4 && !(gap < rational(7, 24) - expected_Yge3(n - 1))) return Probe::fail(at("gap not decreasing", n));
                 return Probe::pass();
               }});
  v.push_back({"Y3-telescoping", "E[Y_n^(3)] by telescoping from E[Y_4^(3)] equals enumeration", 4,
               o.full_bound(), CheckMode::Exact, 0, o.threads, [o](int n) {
                 const BigRational seed = brute_mean(Stat::blocks_of_size(3), 4, TreeKind::Full, o);
                 if (n == 4) return compare("E[Y3](4)", seed, rational(1, 10));
                 return compare(at("E[Y3]", n), telescoped_blocks_of_size(3, seed, n),
                                brute_mean(Stat::blocks_of_size(3), n, TreeKind::Full, o));
               }});
  return v;
}

// ---------------------------------------------------------------- laplace

inline ExactPolynomial stirling_product(int n, int shift = 0) {
  ExactPolynomial p = ExactPolynomial::t(1);
  for (int j = 2; j <= n; ++j) p = p * (ExactPolynomial(1) + ExactPolynomial::monomial(1, j + shift));
  return p;
}

inline std::vector<CheckSpec> laplace(const SuiteOptions& o) {
  std::vector<CheckSpec> v;
  for (const Stat& s : first_kind_stats()) {
    v.push_back({"first-kind-" + s.name(), "first-kind recursion for " + s.name() + " equals enumeration", 1,
                 o.full_bound(), CheckMode::Exact, 0, o.threads, [o, s](int n) {
                   return compare(at("L[" + s.name() + "]", n), laplace_recursion(s, n, TreeKind::Full, o.brute()),
                                  laplace_bruteforce(s, n, TreeKind::Full, o.brute()));
                 }});
  }
  v.push_back({"second-kind-Out-full", "second-kind recursion for Out equals enumeration", 1, o.full_bound() - 1,
               CheckMode::Exact, 0, o.threads, [o](int n) {
                 return compare(at("L[Out]", n), laplace_recursion(Stat::outer_blocks(), n, TreeKind::Full, o.brute()),
                                laplace_bruteforce(Stat::outer_blocks(), n, TreeKind::Full, o.brute()));
               }});
  for (const Stat& s : {Stat::interval_pairs(), Stat::outer_blocks()}) {
    v.push_back({"second-kind-" + s.name() + "-pair", "pair recursion for " + s.name() + " equals enumeration", 1,
                 o.pair_bound(), CheckMode::Exact, 0, o.threads, [o, s](int n) {
                   return compare(at("L2[" + s.name() + "]", n), laplace_recursion(s, n, TreeKind::Pair, o.brute()),
                                  laplace_bruteforce(s, n, TreeKind::Pair, o.brute()));
                 }});
  }
  v.push_back({"product-Bn", "B_n(t) = t(1+2t)...(1+nt)", 1, o.full_bound(), CheckMode::Exact, 0, o.threads,
               [o](int n) {
                 return compare(at("B", n), laplace_bruteforce(Stat::block_count(), n, TreeKind::Full, o.brute()),
                                stirling_product(n, o.corrupt ? 1 : 0));
               }});
  v.push_back({"B3-Y1", "B_3^(1) by enumeration satisfies the Y1 recursion and E[Y_3^(1)] = 23/12", 3, 3,
               CheckMode::Exact, 0, 1, [o](int) {
                 const Stat y1 = Stat::blocks_of_size(1);
                 const auto b1 = laplace_bruteforce(y1, 1, TreeKind::Full, o.brute());
                 const auto b2 = laplace_bruteforce(y1, 2, TreeKind::Full, o.brute());
                 const auto b3 = laplace_bruteforce(y1, 3, TreeKind::Full, o.brute());
                 const ExactPolynomial t = ExactPolynomial::t();
                 const ExactPolynomial by_rec = (3 * t + ExactPolynomial(1)) * b2 + 2 * (ExactPolynomial(1) - t) * b1;
                 const ExactPolynomial expected = ExactPolynomial::monomial(3, 6) + ExactPolynomial::monomial(1, 5) + ExactPolynomial(1);
                 return all_of({compare("B3^(1)", b3, expected), compare("recursion B3^(1)", by_rec, b3),
                                compare("E[Y1](3)", expectation_from_laplace(b3), expected_Y1(3))});
               }});
  v.push_back({"normalization", "L_n(1) equals the level size for every statistic", 1, o.full_bound(),
               CheckMode::Exact, 0, o.threads, [o](int n) {
                 std::vector<Probe> ps;
                 for (const Stat& s : detail::standard_statistics(TreeKind::Full)) {
                   ps.push_back(compare(at("L[" + s.name() + "](1)", n),
                                        laplace_bruteforce(s, n, TreeKind::Full, o.brute()).evaluate(1),
                                        BigRational(node_count(TreeKind::Full, n))));
                 }
                 if (n <= o.pair_bound()) {
                   for (const Stat& s : detail::standard_statistics(TreeKind::Pair)) {
                     ps.push_back(compare(at("L2[" + s.name() + "](1)", n),
                                          laplace_bruteforce(s, n, TreeKind::Pair, o.brute()).evaluate(1),
                                          BigRational(node_count(TreeKind::Pair, n))));
                   }
                 }
                 Probe p = all_of(std::move(ps));
                 if (p.ok) p.detail.clear();
                 return p;
               }});
  v.push_back({"degree", "deg B_n = n and deg B_n^(1) = n", 1, o.full_bound(), CheckMode::Exact, 0, o.threads,
               [o](int n) {
                 const int d0 = laplace_bruteforce(Stat::block_count(), n, TreeKind::Full, o.brute()).degree();
                 const int d1 = laplace_bruteforce(Stat::blocks_of_size(1), n, TreeKind::Full, o.brute()).degree();
                 if (d0 != n || d1 != n) return Probe::fail(at("degrees", n) + " = " + std::to_string(d0) + ", " + std::to_string(d1));
                 return Probe::pass();
               }});
  v.push_back({"certify-first-kind", "first-kind transition law on every edge up to n = 8", 8, 8, CheckMode::Exact, 0,
               1, [](int n) {
                 std::string d;
                 for (const Stat& s : first_kind_stats()) {
                   const auto in = certify_first_kind(s, n);
                   d += s.name() + ":(";
                   for (std::size_t i = 0; i < in.r.size(); ++i) d += (i ? "," : "") + in.r[i].get_str();
                   d += ") ";
                 }
                 return Probe::pass(d);
               }});
  return v;
}

// ---------------------------------------------------------------- lemmas

inline std::vector<CheckSpec> lemmas(const SuiteOptions& o) {
  std::vector<CheckSpec> v;
  v.push_back({"parent-shift-bijection", "p^(l-1) maps {|J|=l} bijectively onto {|J|=1}, shifting Z by r_2+...+r_l", 2, 8,
               CheckMode::Exact, 0, 1, [](int m) {
                 const auto stats = first_kind_stats();
                 std::vector<std::vector<int>> r;
                 for (const Stat& s : stats) {
                   std::vector<int> ri;
                   for (const auto& x : first_kind_input(s).r) ri.push_back(static_cast<int>(x.get_num().get_si()));
                   if (ri.size() == 1) ri.push_back(0);
                   r.push_back(ri);
                 }
                 std::string detail;
                 for (int ell = 2; ell <= std::min(4, m); ++ell) {
                   const int target = m - ell + 1;
                   std::vector<char> hit(static_cast<std::size_t>(node_count_u64(TreeKind::Full, target)), 0);
                   std::uint64_t sources = 0;
                   std::optional<Probe> bad;
                   std::uint64_t rank = 0;
                   TreeNode a, b;
                   for_each_node(TreeKind::Full, m, [&](const TreeNode& t) {
                     const std::uint64_t this_rank = rank++;
                     if (bad || t.j.length() != ell) return;
                     ++sources;
                     a = t;
                     for (int i = 0; i < ell - 1; ++i) {
                       apply_parent(TreeKind::Full, a, b);
                       std::swap(a, b);
                     }
                     if (a.j.length() != 1) {
                       bad = Probe::fail("image has |J| = " + std::to_string(a.j.length()), to_big(this_rank));
                       return;
                     }
                     auto& h = hit[static_cast<std::size_t>(rank_of(TreeKind::Full, a))];
                     if (h) {
                       bad = Probe::fail("image hit twice", to_big(this_rank));
                       return;
                     }
                     h = 1;
                     for (std::size_t si = 0; si < stats.size(); ++si) {
                       if (static_cast<int>(r[si].size()) < ell) continue;
                       int shift = 0;
                       for (int j = 2; j <= ell; ++j) shift += r[si][static_cast<std::size_t>(j - 1)];
                       const long diff = stat_value(stats[si], t.view()) - stat_value(stats[si], a.view());
                       if (diff != shift) {
                         bad = Probe::fail(stats[si].name() + " shift " + std::to_string(diff) + ", expected " +
                                               std::to_string(shift) + " (l = " + std::to_string(ell) + ")",
                                           to_big(this_rank));
                         return;
                       }
                     }
                   });
                   if (bad) return *bad;
                   std::uint64_t singles = 0;
                   for_each_node(TreeKind::Full, target, [&](const TreeNode& t) { singles += t.j.length() == 1; });
                   if (singles != sources) {
                     return Probe::fail("l = " + std::to_string(ell) + ": " + std::to_string(sources) +
                                        " sources but " + std::to_string(singles) + " targets");
                   }
                   detail += "l=" + std::to_string(ell) + ":" + std::to_string(sources) + " ";
                 }
                 return Probe::pass(at("m", m) + " " + detail);
               }});
  v.push_back({"single-J-identity", "sum over {|J|=1} of t^Z equals m t^{r_1} L_{m-1}", 2, 8, CheckMode::Exact, 0, 1,
               [o](int m) {
                 const auto stats = first_kind_stats();
                 std::vector<Histogram> hs(stats.size());
                 for_each_node(TreeKind::Full, m, [&](const TreeNode& t) {
                   if (t.j.length() != 1) return;
                   for (std::size_t i = 0; i < stats.size(); ++i) {
                     const auto z = static_cast<std::size_t>(stat_value(stats[i], t.view()));
                     if (z >= hs[i].size()) hs[i].resize(z + 1, 0);
                     ++hs[i][z];
                   }
                 });
                 std::vector<Probe> ps;
                 for (std::size_t i = 0; i < stats.size(); ++i) {
                   const int r1 = static_cast<int>(first_kind_input(stats[i]).r[0].get_num().get_si());
                   const ExactPolynomial want =
                       ExactPolynomial::monomial(r1, m) * laplace_bruteforce(stats[i], m - 1, TreeKind::Full, o.brute());
                   ps.push_back(compare(at(stats[i].name() + " |J|=1 sum", m), from_histogram(hs[i]), want));
                 }
                 Probe p = all_of(std::move(ps));
                 if (p.ok) p.detail.clear();
                 return p;
               }});
  v.push_back({"child-area-sum", "sum of A_n over pair-children equals (2n-1) + (2n+1) A_{n-1}", 2, o.pair_bound(),
               CheckMode::Exact, 0, 1, [o](int n) {
                 const Stat a = Stat::area();
                 std::optional<Probe> bad;
                 std::uint64_t parents = 0;
                 TreeNode child;
                 std::uint64_t r = 0;
                 for_each_node(TreeKind::Pair, n - 1, [&](const TreeNode& p) {
                   const std::uint64_t pr = r++;
                   if (bad) return;
                   ++parents;
                   long sum = 0;
                   for (int d = 0; d < 2 * n - 1; ++d) {
                     apply_child(TreeKind::Pair, p, d, child);
                     sum += stat_value(a, child.view());
                   }
                   long want = (2L * n - 1) + (2L * n + 1) * stat_value(a, p.view());
                   if (o.corrupt) want += 1;
                   if (sum != want) {
                     bad = Probe::fail("child area sum " + std::to_string(sum) + ", expected " + std::to_string(want) +
                                           " at parent " + detail::word_string(p.view()),
                                       to_big(pr));
                   }
                 });
                 if (bad) return *bad;
                 return Probe::pass(at("parents checked", n) + " = " + std::to_string(parents));
               }});
  v.push_back({"area-dyck", "trapezoid area of the Dyck path equals sum of block spans; path stays >= 0", 1, 6,
               CheckMode::Exact, 0, 1, [](int n) {
                 std::optional<Probe> bad;
                 enumerate(n, TreeKind::Pair, [&](const OrderedNcPartition& x) {
                   if (bad) return;
                   const NcPartition p = x.partition();
                   const auto path = dyck_path(p);
                   long h = 0;
                   for (int s : path) {
                     h += s;
                     if (h < 0) bad = Probe::fail("path dips below zero", rank(x, TreeKind::Pair));
                   }
                   if (h != 0) bad = Probe::fail("path does not return to zero", rank(x, TreeKind::Pair));
                   if (path_area(path) != BigRational(area(p)) || area(p) != stat_value(Stat::area(), x.view())) {
                     bad = Probe::fail("area mismatch", rank(x, TreeKind::Pair));
                   }
                 });
                 if (bad) return *bad;
                 return Probe::pass();
               }});
  v.push_back({"Y-decomposition", "Y = sum_l Y^(l) and Yge3 = Y - Y1 - Y2 pointwise", 1, 8, CheckMode::Exact, 0, 1,
               [](int n) {
                 std::optional<Probe> bad;
                 std::uint64_t r = 0;
                 for_each_node(TreeKind::Full, n, [&](const TreeNode& t) {
                   const std::uint64_t tr = r++;
                   if (bad) return;
                   const LabelView v = t.view();
                   long sum = 0;
                   for (int l = 1; l <= n; ++l) sum += stat_value(Stat::blocks_of_size(l), v);
                   const long y = stat_value(Stat::block_count(), v);
                   const long rest = y - stat_value(Stat::blocks_of_size(1), v) - stat_value(Stat::blocks_of_size(2), v);
                   if (sum != y || rest != stat_value(Stat::blocks_at_least3(), v)) {
                     bad = Probe::fail("decomposition fails at " + detail::word_string(v), to_big(tr));
                   }
                 });
                 if (bad) return *bad;
                 return Probe::pass();
               }});
  return v;
}

// ---------------------------------------------------------------- outer blocks and interval pairs

inline std::vector<CheckSpec> thm110(const SuiteOptions& o) {
  std::vector<CheckSpec> v;
  v.push_back({"Out-full-mean", "E[Out_n] = (2n+1)/3 on the full tree", 1, o.full_bound() - 1, CheckMode::Exact, 0,
               o.threads, [o](int n) {
                 return compare(at("E[Out]", n), brute_mean(Stat::outer_blocks(), n, TreeKind::Full, o),
                                expected_outer_full(n));
               }});
  v.push_back({"Int-pair-mean", "E[Int_n] = (2n+1)/3 on the pair tree", 1, o.pair_bound(), CheckMode::Exact, 0,
               o.threads, [o](int n) {
                 BigRational want = expected_interval_pairs(n);
                 if (o.corrupt) want += rational(1, 3);
                 return compare(at("E[Int]", n), brute_mean(Stat::interval_pairs(), n, TreeKind::Pair, o), want);
               }});
  v.push_back({"Out-pair-mean", "E[Out_n] = 2^n n!/(2n-1)!! - 1 on the pair tree", 1, o.pair_bound(),
               CheckMode::Exact, 0, o.threads, [o](int n) {
                 return compare(at("E[Out2]", n), brute_mean(Stat::outer_blocks(), n, TreeKind::Pair, o),
                                expected_outer_pairs(n));
               }});
  v.push_back({"expectation-recursion", "iterated expectation recursions reproduce the closed forms", 1, 200,
               CheckMode::Exact, 0, 1, [](int n) {
                 const auto a = iterate_expectation({1, 0, 1}, 1, n, TreeKind::Full);
                 const auto b = iterate_expectation({0, 1, 0}, 1, n, TreeKind::Pair);
                 const auto c = iterate_expectation({1, 0, 1}, 1, n, TreeKind::Pair);
                 if (a != expected_outer_full(n)) return compare(at("Out", n), a, expected_outer_full(n));
                 if (b != expected_interval_pairs(n)) return compare(at("Int", n), b, expected_interval_pairs(n));
                 if (c != expected_outer_pairs(n)) return compare(at("Out2", n), c, expected_outer_pairs(n));
                 return Probe::pass();
               }});
  v.push_back({"second-kind-clause3", "explicit C_o has Z + q elements and the right increments at every parent", 1,
               1, CheckMode::Exact, 0, 1, [o](int) {
                 const auto a = certify_second_kind(Stat::outer_blocks(), TreeKind::Full, o.full_bound() - 1);
                 const auto b = certify_second_kind(Stat::interval_pairs(), TreeKind::Pair, o.pair_bound());
                 const auto c = certify_second_kind(Stat::outer_blocks(), TreeKind::Pair, o.pair_bound());
                 auto f = [](const SecondKindInput& i) {
                   return "(" + std::to_string(i.alpha) + "," + std::to_string(i.beta) + ";" + std::to_string(i.q) + ")";
                 };
                 return Probe::pass("Out full " + f(a) + ", Int pair " + f(b) + ", Out pair " + f(c));
               }});
  return v;
}

// ---------------------------------------------------------------- area

inline std::vector<CheckSpec> thm111(const SuiteOptions& o) {
  std::vector<CheckSpec> v;
  v.push_back({"area-mean-total", "E[A_n] and S_n closed forms equal enumeration", 1, o.pair_bound(), CheckMode::Exact, 0,
               o.threads, [o](int n) {
                 const auto L = laplace_bruteforce(Stat::area(), n, TreeKind::Pair, o.brute());
                 BigRational want = expected_area(n);
                 if (o.corrupt) want -= rational(2L * n + 1, 2L * n + 1);  // harmonic-odd sum stopped at n-1
                 return all_of({compare(at("E[A]", n), expectation_from_laplace(L), want),
                                compare(at("S", n), L.derivative().evaluate(1), total_area(n))});
               }});
  v.push_back({"area-spot-values", "E[A_2] = 8/3 and S_2 = 8", 2, 2, CheckMode::Exact, 0, 1, [o](int n) {
                 const auto L = laplace_bruteforce(Stat::area(), n, TreeKind::Pair, o.brute());
                 return all_of({compare("E[A](2)", expectation_from_laplace(L), rational(8, 3)),
                                compare("S(2)", L.derivative().evaluate(1), 8)});
               }});
  return v;
}

// ---------------------------------------------------------------- stirling

inline std::vector<CheckSpec> stirling(const SuiteOptions& o) {
  std::vector<CheckSpec> v;
  // Rows of the published table J_k^(n), n <= 6.
  static const std::vector<std::vector<long>> table_rows{
      {1}, {1, 2}, {1, 5, 6}, {1, 9, 26, 24}, {1, 14, 71, 154, 120}, {1, 20, 155, 580, 1044, 720}};
  v.push_back({"stirling-table", "three builders reproduce the J_k^(n) table for n <= 6", 1, 6, CheckMode::Exact, 0, 1,
               [o](int n) {
                 const auto row_of = [n](const StirlingTable& t) { return t.row(n); };
                 const auto tree = row_of(stirling_by_tree_count(n, o.brute()));
                 const auto rec = row_of(stirling_by_recursion(n));
                 const auto closed = row_of(stirling_by_closed_form(n));
                 std::string s;
                 for (std::size_t k = 0; k < table_rows[static_cast<std::size_t>(n - 1)].size(); ++k) {
                   const BigInteger want = table_rows[static_cast<std::size_t>(n - 1)][k];
                   if (tree[k] != want || rec[k] != want || closed[k] != want) {
                     return Probe::fail("J_" + std::to_string(k + 1) + "^(" + std::to_string(n) + "): tree " +
                                        tree[k].get_str() + ", recursion " + rec[k].get_str() + ", closed " +
                                        closed[k].get_str() + ", table " + want.get_str());
                   }
                   s += (k ? "," : "") + want.get_str();
                 }
                 return Probe::pass(at("row", n) + " = " + s);
               }});
  v.push_back({"stirling-tree-vs-recursion", "tree counts equal the recursion", 1, o.full_bound(), CheckMode::Exact,
               0, o.threads, [o](int n) {
                 StirlingTable rec = stirling_by_recursion(n);
                 if (o.corrupt) {
                   // Multiplier n-1 in place of n.
                   std::vector<std::vector<BigInteger>> rows{{1}};
                   for (int m = 2; m <= n; ++m) {
                     std::vector<BigInteger> row(static_cast<std::size_t>(m), 0);
                     for (int k = 1; k <= m; ++k) {
                       BigInteger x = k <= m - 1 ? rows.back()[static_cast<std::size_t>(k - 1)] : BigInteger(0);
                       if (k >= 2) x += (m - 1) * rows.back()[static_cast<std::size_t>(k - 2)];
                       row[static_cast<std::size_t>(k - 1)] = x;
                     }
                     rows.push_back(row);
                   }
                   rec = StirlingTable(rows);
                 }
                 if (stirling_by_tree_count(n, o.brute()) != rec) return Probe::fail(at("tables differ", n));
                 return Probe::pass();
               }});
  v.push_back({"stirling-recursion-vs-closed", "recursion equals the subset-product formula", 1, 20,
               CheckMode::Exact, 0, 1, [](int n) {
                 if (stirling_by_recursion(n).row(n) != stirling_by_closed_form(n).row(n)) {
                   return Probe::fail(at("rows differ", n));
                 }
                 return Probe::pass();
               }});
  v.push_back({"stirling-generating-function", "sum_k J_k^(n) t^k = t(1+2t)...(1+nt)", 1, 20, CheckMode::Exact, 0, 1,
               [](int n) {
                 ExactPolynomial p;
                 const auto t = stirling_by_recursion(n);
                 for (int k = 1; k <= n; ++k) p.add_term(k, BigRational(t.at(n, k)));
                 return compare(at("row polynomial", n), p, stirling_product(n));
               }});
  v.push_back({"stirling-J34", "J_3^(4) = J_3^(3) + 4 J_2^(3) = 26", 4, 4, CheckMode::Exact, 0, 1, [](int) {
                 const auto t = stirling_by_recursion(4);
                 return compare("J_3^(4)", BigRational(t.at(4, 3)), BigRational(t.at(3, 3) + 4 * t.at(3, 2)));
               }});
  return v;
}

// ---------------------------------------------------------------- cumulants

inline bool is_interval_partition(const NcPartition& p) {
  return std::all_of(p.blocks().begin(), p.blocks().end(),
                     [](const Block& b) { return b.back() - b.front() + 1 == static_cast<int>(b.size()); });
}

inline BigInteger corrupted_monord(const NcPartition& p) {
  // Forgets to divide by the subtree sizes of the outer blocks.
  const auto parent = nesting_parents(p);
  std::vector<long> subtree(parent.size(), 1);
  for (std::size_t b = parent.size(); b-- > 0;) {
    if (parent[b] >= 0) subtree[static_cast<std::size_t>(parent[b])] += subtree[b];
  }
  BigInteger out = factorial(static_cast<unsigned>(parent.size()));
  for (std::size_t b = 0; b < parent.size(); ++b) {
    if (parent[b] >= 0) out /= subtree[b];
  }
  return out;
}

inline std::vector<BigRational> random_rationals(std::mt19937_64& rng, int count) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
  std::vector<BigRational> v;
  for (int i = 0; i < count; ++i) v.push_back(rational(num(rng), den(rng)));
  return v;
}

inline std::vector<CheckSpec> cumulants(const SuiteOptions& o) {
  std::vector<CheckSpec> v;
  v.push_back({"monord-hook", "hook-length monord equals the brute-force ordering count", 1, 8, CheckMode::Exact, 0, 1,
               [o](int n) {
                 std::optional<Probe> bad;
                 for_each_noncrossing(n, [&](const NcPartition& p) {
                   if (bad) return;
                   const BigInteger fast = o.corrupt ? corrupted_monord(p) : monord(p);
                   if (fast != monord_bruteforce(p)) {
                     bad = Probe::fail("monord mismatch on " + to_json(p).dump() + ": " + fast.get_str() + " vs " +
                                       monord_bruteforce(p).get_str());
                   }
                 });
                 if (bad) return *bad;
                 return Probe::pass();
               }});
  v.push_back({"monord-sum", "sum of monord over NC(n) is (n+1)!/2; monord/k! <= 1 with equality iff interval", 1, 8,
               CheckMode::Exact, 0, 1, [](int n) {
                 BigInteger total = 0;
                 std::optional<Probe> bad;
                 for_each_noncrossing(n, [&](const NcPartition& p) {
                   const BigInteger m = monord(p);
                   total += m;
                   const BigRational ratio = rational(m, factorial(static_cast<unsigned>(p.block_count())));
                   if (ratio > 1 || (ratio == 1) != is_interval_partition(p)) {
                     bad = Probe::fail("ratio " + ratio.get_str() + " on " + to_json(p).dump());
                   }
                 });
                 if (bad) return *bad;
                 return compare(at("sum monord", n), BigRational(total),
                                BigRational(factorial(static_cast<unsigned>(n + 1)) / 2));
               }});
  v.push_back({"moment-formulas", "mu(X^3) = c3 + 5/2 c1 c2 + c1^3 and c2 = mu(X^2) - mu(X)^2", 3, 3,
               CheckMode::Exact, 0, 1, [](int) {
                 std::mt19937_64 rng(7);
                 for (int trial = 0; trial < 20; ++trial) {
                   const auto c = random_rationals(rng, 3);
                   const auto m = moments_from_cumulants(c, 3);
                   if (m[0] != c[0] || m[2] != c[2] + rational(5, 2) * c[0] * c[1] + c[0] * c[0] * c[0] ||
                       c[1] != m[1] - m[0] * m[0]) {
                     return Probe::fail("low-order formulas fail on trial " + std::to_string(trial));
                   }
                 }
                 const auto c3 = cumulants_from_moments({1, 2, 5}, 3);
                 return compare("c_3 of (1,2,5)", c3[2], rational(3, 2));
               }});
  v.push_back({"moment-cumulant-roundtrip", "100 random rational sequences survive both directions through order 8",
               8, 8, CheckMode::Exact, 0, 1, [](int n) {
                 std::mt19937_64 rng(20240601);
                 for (int trial = 0; trial < 100; ++trial) {
                   const auto c = random_rationals(rng, n);
                   if (cumulants_from_moments(moments_from_cumulants(c, n), n) != c) {
                     return Probe::fail("cumulants -> moments -> cumulants fails on trial " + std::to_string(trial));
                   }
                   const auto m = random_rationals(rng, n);
                   if (moments_from_cumulants(cumulants_from_moments(m, n), n) != m) {
                     return Probe::fail("moments -> cumulants -> moments fails on trial " + std::to_string(trial));
                   }
                 }
                 return Probe::pass("100 sequences, order 8");
               }});
  v.push_back({"poisson", "Poisson moments equal constant-cumulant moments through order 8", 8, 8, CheckMode::Exact, 0,
               1, [](int n) {
                 for (const BigRational& a : {rational(1), rational(2), rational(1, 2), rational(-1)}) {
                   const auto want = moments_from_cumulants(CumulantSequence(static_cast<std::size_t>(n), a), n);
                   if (poisson_moments(a, n) != want) return Probe::fail("alpha = " + a.get_str());
                 }
                 const auto zero = poisson_moments(0, n);
                 if (std::any_of(zero.begin(), zero.end(), [](const BigRational& x) { return x != 0; })) {
                   return Probe::fail("alpha = 0 has nonzero moments");
                 }
                 return compare("nu_1(X^3)", poisson_moments(1, 3)[2], rational(9, 2));
               }});
  return v;
}

// ---------------------------------------------------------------- asymptotic

inline std::vector<CheckSpec> asymptotic(const SuiteOptions& o) {
  auto fmt = [](double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return std::string(buf);
  };
  auto gap_check = [fmt](std::string id, AsymptoticId which, double limit, bool corrupt) {
    return CheckSpec{std::move(id), std::string(to_string(which)) + ", |gap| < " + fmt(limit), 10000, 10000,
                     CheckMode::Float, limit, 1, [=](int n) {
                       auto r = asymptotic_report(which, n);
                       if (corrupt) r.difference += 0.01;  // as if gamma were off by 0.01
                       const std::string d = "float: gap at n=" + std::to_string(n) + " is " + fmt(r.difference);
                       return std::abs(r.difference) < limit ? Probe::pass(d) : Probe::fail(d);
                     }};
  };
  std::vector<CheckSpec> v;
  v.push_back(gap_check("asym-EY", AsymptoticId::ExpectedY, 1e-3, o.corrupt));
  v.push_back(gap_check("asym-VarY", AsymptoticId::VarianceY, 1e-3, false));
  v.push_back(gap_check("asym-EY1", AsymptoticId::ExpectedY1, 1e-3, false));
  v.push_back(gap_check("asym-EY2", AsymptoticId::ExpectedY2, 1e-3, false));
  v.push_back({"asym-out-pairs", "E[Out_n]/sqrt(pi n) within [0.99, 1.01] at n = 10^4", 10000, 10000, CheckMode::Float,
               0.01, 1, [fmt](int n) {
                 const auto r = asymptotic_report(AsymptoticId::OuterPairs, n);
                 const std::string d = "float: ratio " + fmt(r.ratio);
                 return r.ratio >= 0.99 && r.ratio <= 1.01 ? Probe::pass(d) : Probe::fail(d);
               }});
  v.push_back({"asym-area", "E[A_n]/(n ln n) within [0.9, 1.1] at n = 10^6, closer than at 10^5", 1000000, 1000000,
               CheckMode::Float, 0.1, 1, [fmt](int n) {
                 const auto big = asymptotic_report(AsymptoticId::Area, n);
                 const auto small = asymptotic_report(AsymptoticId::Area, n / 10);
                 const std::string d = "float: ratio " + fmt(small.ratio) + " at n/10, " + fmt(big.ratio) + " at n";
                 const bool ok = big.ratio >= 0.9 && big.ratio <= 1.1 &&
                                 std::abs(big.ratio - 1) < std::abs(small.ratio - 1);
                 return ok ? Probe::pass(d) : Probe::fail(d);
               }});
  v.push_back({"asym-Y3", "telescoped E[Y_n^(3)] within 1e-2 of 23/90 at n = 1000, increasing in the tail", 1000, 1000,
               CheckMode::Float, 1e-2, 1, [fmt](int n) {
                 for (int m = 5; m <= n; ++m) {
                   if (blocks_of_size_increment(3, m) <= 0) return Probe::fail(at("non-increasing step", m));
                 }
                 const auto r = asymptotic_report(AsymptoticId::Y3Limit, n);
                 const std::string d = "float: E[Y3](" + std::to_string(n) + ") = " + fmt(r.exact) + ", gap " +
                                       fmt(r.difference);
                 return std::abs(r.difference) < 1e-2 ? Probe::pass(d) : Probe::fail(d);
               }});
  return v;
}

}  // namespace suites

/// The checks of one named suite, or of every suite for "all".
inline std::vector<CheckSpec> make_suite(std::string_view name, const SuiteOptions& o = {}) {
  if (name == "all") {
    std::vector<CheckSpec> out;
    for (const auto& s : suite_names()) {
      auto part = make_suite(s, o);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  if (name == "cardinality") return suites::cardinality(o);
  if (name == "oracle") return suites::oracle(o);
  if (name == "thm16") return suites::thm16(o);
  if (name == "thm17") return suites::thm17(o);
  if (name == "laplace") return suites::laplace(o);
  if (name == "lemmas") return suites::lemmas(o);
  if (name == "thm110") return suites::thm110(o);
  if (name == "thm111") return suites::thm111(o);
  if (name == "stirling") return suites::stirling(o);
  if (name == "cumulants") return suites::cumulants(o);
  if (name == "asymptotic") return suites::asymptotic(o);
  throw Error(ErrorCode::ParseError, "unknown suite '" + std::string(name) + "'");
}

}  // namespace mton
