// Command-line front end for the mton library.
//
// Exit codes: 0 on success, 1 when a verification or equality check fails,
// 2 on usage errors (bad flags, unknown names, size guard refusals).

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mton/mton.hpp"

namespace {

using namespace mton;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Global {
  unsigned threads = default_threads();
  bool force = false;
};

std::vector<std::string> split(const std::string& s, char sep = ',') {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, sep);) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// Largest n that may be enumerated without --force. MTON_MAX_N replaces the
// per-kind defaults when set.
int guard_limit(TreeKind kind) {
  if (const char* env = std::getenv("MTON_MAX_N")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "MTON_MAX_N must be an integer, got '" + std::string(env) + "'");
    }
  }
  return kind == TreeKind::Full ? 10 : 8;
}

void check_guard(const Global& g, TreeKind kind, int n) {
  if (n < 1) throw Error(ErrorCode::OutOfValidity, "--n must be >= 1");
  if (!g.force && n > guard_limit(kind)) {
    throw Error(ErrorCode::SizeBoundExceeded,
                "n = " + std::to_string(n) + " on the " + std::string(to_string(kind)) + " tree exceeds the guard " +
                    std::to_string(guard_limit(kind)) + "; pass --force or set MTON_MAX_N");
  }
}

BruteForceOptions brute_options(const Global& g) {
  BruteForceOptions o{g.threads, guard_limit(TreeKind::Full), guard_limit(TreeKind::Pair)};
  if (g.force) o.max_full = o.max_pair = kMaxPoints;
  return o;
}

std::vector<BigRational> parse_rationals(const std::string& s) {
  std::vector<BigRational> out;
  for (const auto& item : split(s)) out.push_back(parse_rational(item));
  return out;
}

Json rational_array(const std::vector<BigRational>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

// ---------------------------------------------------------------- enumerate

struct EnumerateArgs {
  int n = 1;
  std::string kind = "full";
  std::string format = "json";
  long long limit = -1;
};

int run_enumerate(const Global& g, const EnumerateArgs& a) {
  const TreeKind kind = parse_kind(a.kind);
  check_guard(g, kind, a.n);
  if (a.format == "count") {
    std::cout << node_count(kind, a.n).get_str() << "\n";
    return kOk;
  }
  const std::uint64_t total = node_count_u64(kind, a.n);
  const std::uint64_t end = a.limit >= 0 ? std::min<std::uint64_t>(total, static_cast<std::uint64_t>(a.limit)) : total;
  std::uint64_t r = 0;
  for_each_node_in_range(kind, a.n, 0, end, [&](const TreeNode& t) {
    Json j = {{"rank", r++}};
    j.update(to_json(t.materialize()));
    std::cout << j.dump() << "\n";
  });
  return kOk;
}

// ---------------------------------------------------------------- stats

struct StatsArgs {
  int n = 1;
  std::string kind = "full";
  std::string stats = "Y";
  std::string format = "csv";
};

int run_stats(const Global& g, const StatsArgs& a) {
  const TreeKind kind = parse_kind(a.kind);
  check_guard(g, kind, a.n);
  std::vector<StatisticId> stats;
  for (const auto& s : split(a.stats)) {
    stats.push_back(parse_statistic(s));
    if (stats.back().kind == StatKind::Area && kind == TreeKind::Full) {
      throw Error(ErrorCode::AreaRequiresPairPartition, "Area needs --kind pair");
    }
  }
  if (stats.empty()) throw Error(ErrorCode::ParseError, "--stats is empty");

  std::cout << "rank";
  for (const auto& s : stats) std::cout << "," << s.name();
  std::cout << "\n";
  std::vector<long long> sums(stats.size(), 0);
  std::uint64_t r = 0;
  for_each_node(kind, a.n, [&](const TreeNode& t) {
    std::cout << r++;
    for (std::size_t i = 0; i < stats.size(); ++i) {
      const long v = stat_value(stats[i], t.view());
      sums[i] += v;
      std::cout << "," << v;
    }
    std::cout << "\n";
  });
  std::cout << "mean";
  for (long long s : sums) std::cout << "," << rational(BigInteger(std::to_string(s)), to_big(r)).get_str();
  std::cout << "\n";
  return kOk;
}

// ---------------------------------------------------------------- laplace

struct LaplaceArgs {
  std::string stat = "Y";
  int n = 1;
  std::string method = "brute";
  std::string kind = "full";
};

int run_laplace(const Global& g, const LaplaceArgs& a) {
  const TreeKind kind = parse_kind(a.kind);
  const StatisticId stat = parse_statistic(a.stat);
  if (a.method != "brute" && a.method != "recursion" && a.method != "both") {
    throw Error(ErrorCode::ParseError, "--method must be brute, recursion or both");
  }
  const auto opts = brute_options(g);
  if (a.method != "recursion") check_guard(g, kind, a.n);
  if (a.method == "brute") {
    std::cout << to_json(laplace_bruteforce(stat, a.n, kind, opts)).dump() << "\n";
    return kOk;
  }
  const ExactPolynomial rec = laplace_recursion(stat, a.n, kind, opts);
  if (a.method == "recursion") {
    std::cout << to_json(rec).dump() << "\n";
    return kOk;
  }
  const ExactPolynomial brute = laplace_bruteforce(stat, a.n, kind, opts);
  std::cout << Json({{"brute", to_json(brute)}, {"recursion", to_json(rec)}}).dump() << "\n";
  const bool same = brute == rec;
  std::cout << (same ? "EQUAL" : "DIFFERENT") << "\n";
  return same ? kOk : kFailed;
}

// ---------------------------------------------------------------- closed-form

struct ClosedFormArgs {
  std::string quantity = "EY";
  int n = 1;
};

const std::vector<std::pair<std::string, BigRational (*)(int)>>& closed_forms() {
  static const std::vector<std::pair<std::string, BigRational (*)(int)>> table{
      {"EY", expected_Y},
      {"VarY", variance_Y},
      {"EY1", expected_Y1},
      {"EY2", expected_Y2},
      {"EYge3", expected_Yge3},
      {"EOut", expected_outer_full},
      {"EInt", expected_interval_pairs},
      {"EOutPair", expected_outer_pairs},
      {"EA", expected_area},
      {"S", total_area},
      {"EY3", [](int n) { return telescoped_blocks_of_size(3, rational(1, 10), n); }},
  };
  return table;
}

std::optional<AsymptoticId> parse_asymptotic(const std::string& s) {
  for (auto id : {AsymptoticId::ExpectedY, AsymptoticId::VarianceY, AsymptoticId::ExpectedY1,
                  AsymptoticId::ExpectedY2, AsymptoticId::OuterPairs, AsymptoticId::Area, AsymptoticId::Y3Limit}) {
    if (s == to_string(id)) return id;
  }
  return std::nullopt;
}

int run_closed_form(const ClosedFormArgs& a, bool asymptotic) {
  if (asymptotic) {
    const auto id = parse_asymptotic(a.quantity);
    if (!id) throw Error(ErrorCode::ParseError, "unknown asymptotic diagnostic '" + a.quantity + "'");
    const auto r = asymptotic_report(*id, a.n);
    std::cout << Json({{"id", std::string(to_string(r.id))},
                       {"n", r.n},
                       {"mode", "float"},
                       {"exact", r.exact},
                       {"asymptotic", r.asymptotic},
                       {"difference", r.difference},
                       {"ratio", r.ratio}})
                     .dump()
              << "\n";
    return kOk;
  }
  for (const auto& [name, f] : closed_forms()) {
    if (name == a.quantity) {
      std::cout << f(a.n).get_str() << "\n";
      return kOk;
    }
  }
  std::string names;
  for (const auto& entry : closed_forms()) names += " " + entry.first;
  throw Error(ErrorCode::ParseError, "unknown quantity '" + a.quantity + "'; known:" + names);
}

// ---------------------------------------------------------------- cumulants

struct CumulantArgs {
  std::string moments;
  std::string cumulants;
  int upto = 0;
};

int run_cumulants(const CumulantArgs& a) {
  if (a.moments.empty() == a.cumulants.empty()) {
    throw Error(ErrorCode::ParseError, "give exactly one of --moments and --cumulants");
  }
  const bool from_moments = !a.moments.empty();
  const auto in = parse_rationals(from_moments ? a.moments : a.cumulants);
  const int upto = a.upto > 0 ? a.upto : static_cast<int>(in.size());
  const auto out = from_moments ? cumulants_from_moments(in, upto) : moments_from_cumulants(in, upto);
  std::cout << rational_array(out).dump() << "\n";
  return kOk;
}

// ---------------------------------------------------------------- stirling

int run_stirling(const Global& g, int n, bool check) {
  if (n < 1) throw Error(ErrorCode::OutOfValidity, "--n must be >= 1");
  const StirlingTable rec = stirling_by_recursion(n);
  for (int m = 1; m <= n; ++m) {
    const auto& row = rec.row(m);
    for (std::size_t k = 0; k < row.size(); ++k) std::cout << (k ? " " : "") << row[k].get_str();
    std::cout << "\n";
  }
  if (!check) return kOk;
  check_guard(g, TreeKind::Full, n);
  const bool tree_ok = stirling_by_tree_count(n, brute_options(g)) == rec;
  const bool closed_ok = stirling_by_closed_form(n) == rec;
  std::cout << "tree " << (tree_ok ? "EQUAL" : "DIFFERENT") << "\n";
  std::cout << "closed-form " << (closed_ok ? "EQUAL" : "DIFFERENT") << "\n";
  return tree_ok && closed_ok ? kOk : kFailed;
}

// ---------------------------------------------------------------- verify

int run_verify(const Global& g, const std::string& suite, bool deep) {
  SuiteOptions o;
  o.deep = deep;
  o.threads = g.threads;
  const auto specs = make_suite(suite, o);
  bool all_pass = true;
  std::vector<CheckReport> reports;
  for (const auto& spec : specs) {
    CheckReport r = run_check(spec);
    if (!r.passed) {
      r = counterexample_minimize(spec, r);
      all_pass = false;
    }
    std::cout << to_json(r).dump() << std::endl;
    reports.push_back(std::move(r));
  }
  std::cerr << "\n" << std::left << std::setw(30) << "check" << std::setw(8) << "status" << "witness\n";
  for (const auto& r : reports) {
    std::cerr << std::setw(30) << r.id << std::setw(8) << (r.passed ? "PASS" : "FAIL");
    if (r.witness) std::cerr << "n=" << r.witness->n << " " << r.witness->detail;
    std::cerr << "\n";
  }
  std::cerr << (all_pass ? "all checks passed" : "some checks FAILED") << "\n";
  return all_pass ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact combinatorics of monotonically ordered non-crossing partitions"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--threads", g.threads, "worker threads for enumeration")->check(CLI::PositiveNumber);
  app.add_flag("--force", g.force, "ignore the enumeration size guard");

  EnumerateArgs ea;
  auto* en = app.add_subcommand("enumerate", "stream ordered partitions in rank order");
  en->add_option("--n", ea.n, "size")->required();
  en->add_option("--kind", ea.kind, "full or pair")->check(CLI::IsMember({"full", "pair"}));
  en->add_option("--format", ea.format, "json or count")->check(CLI::IsMember({"json", "count"}));
  en->add_option("--limit", ea.limit, "stop after this many lines");
  en->add_flag("--force", g.force, "ignore the enumeration size guard");

  StatsArgs sa;
  auto* st = app.add_subcommand("stats", "per-partition statistic table with exact means");
  st->add_option("--n", sa.n, "size")->required();
  st->add_option("--kind", sa.kind, "full or pair")->check(CLI::IsMember({"full", "pair"}));
  st->add_option("--stats", sa.stats, "comma list of Y, Y<l>, Yge3, Out, Int, Area");
  st->add_option("--format", sa.format, "csv")->check(CLI::IsMember({"csv"}));
  st->add_flag("--force", g.force, "ignore the enumeration size guard");

  LaplaceArgs la;
  auto* lp = app.add_subcommand("laplace", "Laplace transform of a statistic");
  lp->add_option("--stat", la.stat, "statistic name")->required();
  lp->add_option("--n", la.n, "size")->required();
  lp->add_option("--method", la.method, "brute, recursion or both");
  lp->add_option("--kind", la.kind, "full or pair")->check(CLI::IsMember({"full", "pair"}));
  lp->add_flag("--force", g.force, "ignore the enumeration size guard");

  ClosedFormArgs ca;
  bool asymptotic = false;
  auto* cf = app.add_subcommand("closed-form", "evaluate a closed-form expectation exactly");
  cf->add_option("--quantity", ca.quantity, "EY, VarY, EY1, EY2, EYge3, EOut, EInt, EOutPair, EA, S, EY3")
      ->required();
  cf->add_option("--n", ca.n, "size")->required();
  cf->add_flag("--asymptotic", asymptotic, "float diagnostic against the limit (quantity is a diagnostic id)");

  CumulantArgs ka;
  auto* cu = app.add_subcommand("cumulants", "moment and monotone cumulant conversion");
  cu->add_option("--moments", ka.moments, "comma list of moments, order 1 first");
  cu->add_option("--cumulants", ka.cumulants, "comma list of cumulants, order 1 first");
  cu->add_option("--upto", ka.upto, "highest order");

  int sn = 6;
  bool scheck = false;
  auto* sti = app.add_subcommand("stirling", "the triangle J_k^(n)");
  sti->add_option("--n", sn, "rows");
  sti->add_flag("--check", scheck, "compare against tree counts and the subset formula");
  sti->add_flag("--force", g.force, "ignore the enumeration size guard");

  std::string alpha = "1";
  int upto = 8;
  auto* po = app.add_subcommand("poisson", "moments of the monotone Poisson law");
  po->add_option("--alpha", alpha, "rate, an exact rational");
  po->add_option("--upto", upto, "highest order");

  std::string suite = "all";
  bool deep = false;
  auto* ve = app.add_subcommand("verify", "run identity verification suites");
  ve->add_option("--suite", suite, "suite name or all");
  ve->add_flag("--deep", deep, "raise bounds to n <= 10 full and n <= 8 pair");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*en) return run_enumerate(g, ea);
    if (*st) return run_stats(g, sa);
    if (*lp) return run_laplace(g, la);
    if (*cf) return run_closed_form(ca, asymptotic);
    if (*cu) return run_cumulants(ka);
    if (*sti) return run_stirling(g, sn, scheck);
    if (*po) {
      std::cout << rational_array(poisson_moments(parse_rational(alpha), upto)).dump() << "\n";
      return kOk;
    }
    if (*ve) return run_verify(g, suite, deep);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::VerificationFailed ? kFailed : kUsage;
  }
  return kUsage;
}
