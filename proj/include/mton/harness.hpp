#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mton/error.hpp"
#include "mton/io.hpp"
#include "mton/rational.hpp"

namespace mton {

enum class CheckMode { Exact, Float };

/// Where a check failed: the size parameter, optionally a rank at that size,
/// and a free-form description of the offending values.
struct Witness {
  int n = 0;
  std::optional<BigInteger> rank;
  std::string detail;
};

/// Outcome of probing a check at one size.
struct Probe {
  bool ok = true;
  std::string detail;  // exact values, echoed in reports
  std::optional<BigInteger> rank;

  static Probe pass(std::string detail = {}) { return {true, std::move(detail), std::nullopt}; }
  static Probe fail(std::string detail, std::optional<BigInteger> rank = std::nullopt) {
    return {false, std::move(detail), std::move(rank)};
  }
};

/// A verification check parameterized by a size n ranging over [from, bound].
struct CheckSpec {
  std::string id;
  std::string description;
  int from = 1;
  int bound = 1;
  CheckMode mode = CheckMode::Exact;
  double tolerance = 0;  // float mode only
  unsigned shards = 1;
  std::function<Probe(int n)> probe;
};

struct CheckReport {
  std::string id;
  std::string description;
  bool passed = true;
  std::optional<Witness> witness;
  std::vector<std::string> values;
  CheckMode mode = CheckMode::Exact;
  double elapsed_ms = 0;
};

inline Json to_json(const CheckReport& r) {
  Json j = {{"id", r.id},
            {"status", r.passed ? "pass" : "fail"},
            {"mode", r.mode == CheckMode::Exact ? "exact" : "float"},
            {"description", r.description},
            {"values", r.values}};
  if (r.witness) {
    Json w = {{"n", r.witness->n}, {"detail", r.witness->detail}};
    if (r.witness->rank) w["rank"] = r.witness->rank->get_str();
    j["witness"] = w;
  }
  j["elapsed_ms"] = r.elapsed_ms;  // the only non-deterministic field
  return j;
}

/// Probes n = from..bound in order and stops at the first failure.
inline CheckReport run_check(const CheckSpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  CheckReport rep{spec.id, spec.description, true, std::nullopt, {}, spec.mode, 0};
  for (int n = spec.from; n <= spec.bound; ++n) {
    Probe p;
    try {
      p = spec.probe(n);
    } catch (const Error& e) {
      p = Probe::fail(e.what());
    }
    if (!p.ok) {
      rep.passed = false;
      rep.witness = Witness{n, p.rank, p.detail};
      break;
    }
    if (!p.detail.empty()) rep.values.push_back(p.detail);
  }
  rep.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

inline std::vector<CheckReport> run_suite(const std::vector<CheckSpec>& specs) {
  std::vector<CheckReport> out;
  out.reserve(specs.size());
  for (const auto& s : specs) out.push_back(run_check(s));
  return out;
}

/// Shrinks a failing report to the smallest failing n, by linear descent
/// from the recorded witness. The rank at that n is whatever the probe
/// reports first, which for rank-ordered scans is the smallest.
inline CheckReport counterexample_minimize(const CheckSpec& spec, const CheckReport& report) {
  if (report.passed || !report.witness) {
    throw Error(ErrorCode::NotMinimizable, "report '" + report.id + "' has no failing witness");
  }
  CheckReport best = report;
  for (int n = report.witness->n - 1; n >= spec.from; --n) {
    Probe p;
    try {
      p = spec.probe(n);
    } catch (const Error& e) {
      p = Probe::fail(e.what());
    }
    if (p.ok) continue;
    best.witness = Witness{n, p.rank, p.detail};
  }
  return best;
}

}  // namespace mton
