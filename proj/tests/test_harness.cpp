#include <gtest/gtest.h>

#include "mton/suites.hpp"

using namespace mton;

namespace {

CheckSpec threshold_check(int fails_from, int bound) {
  return {"threshold", "fails for n >= fails_from", 1, bound, CheckMode::Exact, 0, 1, [fails_from](int n) {
            return n >= fails_from ? Probe::fail("n too large", to_big(static_cast<std::uint64_t>(n) * 10))
                                   : Probe::pass("ok " + std::to_string(n));
          }};
}

}  // namespace

TEST(Harness, PassingReport) {
  const auto r = run_check(threshold_check(100, 5));
  EXPECT_TRUE(r.passed);
  EXPECT_FALSE(r.witness);
  EXPECT_EQ(r.values.size(), 5u);
  try {
    counterexample_minimize(threshold_check(100, 5), r);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotMinimizable);
  }
}

TEST(Harness, FailureStopsAndMinimizes) {
  const auto spec = threshold_check(3, 8);
  auto r = run_check(spec);
  ASSERT_FALSE(r.passed);
  EXPECT_EQ(r.witness->n, 3);
  // Pretend the failure was first seen at n = 6; descent finds n = 3 again.
  r.witness->n = 6;
  const auto m = counterexample_minimize(spec, r);
  EXPECT_EQ(m.witness->n, 3);
  EXPECT_EQ(*m.witness->rank, 30);
}

TEST(Harness, ErrorsBecomeFailures) {
  CheckSpec s{"throws", "", 1, 3, CheckMode::Exact, 0, 1,
              [](int) -> Probe { throw Error(ErrorCode::OutOfValidity, "boom"); }};
  const auto r = run_check(s);
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.witness->n, 1);
  EXPECT_NE(r.witness->detail.find("boom"), std::string::npos);
}

TEST(Harness, ReportJson) {
  const auto r = run_check(threshold_check(2, 4));
  const Json j = to_json(r);
  EXPECT_EQ(j["status"], "fail");
  EXPECT_EQ(j["witness"]["n"], 2);
  EXPECT_EQ(j["witness"]["rank"], "20");
  EXPECT_EQ(j["mode"], "exact");
  EXPECT_TRUE(j.contains("elapsed_ms"));
}

TEST(Suites, UnknownSuite) { EXPECT_THROW(make_suite("nope"), Error); }

TEST(Suites, BlockCountPassesAndCorruptionIsCaughtAtTwo) {
  SuiteOptions o;
  o.threads = 2;
  for (const auto& spec : make_suite("thm16", o)) {
    if (spec.id == "Y-variance-forms") continue;  // long scan, covered by acceptance
    EXPECT_TRUE(run_check(spec).passed) << spec.id;
  }
  o.corrupt = true;
  const auto spec = make_suite("thm16", o).front();
  const auto r = run_check(spec);
  ASSERT_FALSE(r.passed);
  EXPECT_EQ(counterexample_minimize(spec, r).witness->n, 2);
}

TEST(Suites, CorruptedProductReportsExponent) {
  SuiteOptions o;
  o.corrupt = true;
  for (const auto& spec : make_suite("laplace", o)) {
    if (spec.id != "product-Bn") continue;
    const auto r = run_check(spec);
    ASSERT_FALSE(r.passed);
    EXPECT_EQ(r.witness->n, 2);
    EXPECT_NE(r.witness->detail.find("t^2"), std::string::npos);
  }
}

TEST(Suites, ReportsIndependentOfThreadCount) {
  auto values = [](unsigned threads) {
    SuiteOptions o;
    o.threads = threads;
    std::vector<std::vector<std::string>> out;
    for (const auto& r : run_suite(make_suite("cardinality", o))) out.push_back(r.values);
    return out;
  };
  EXPECT_EQ(values(1), values(3));
}

TEST(Suites, OracleFilterAgreesWithWalk) {
  EXPECT_EQ(suites::generate_and_filter(4).size(), 60u);
  EXPECT_NE(suites::generate_and_filter(4, true), suites::generate_and_filter(4));
}
