#include "runyon/verify.hpp"

#include <gtest/gtest.h>

namespace {

runyon::VerifyOptions small() {
  runyon::VerifyOptions o;
  o.max_n = 6;
  o.order = 6;
  o.numeric_order = 12;
  o.narayana_numeric_order = 30;
  o.trials = 3;
  o.c_max = 5;
  return o;
}

}  // namespace

TEST(Suites, NamesAreKnown) {
  for (const auto& s : runyon::suite_names()) EXPECT_TRUE(runyon::is_suite_name(s));
  EXPECT_FALSE(runyon::is_suite_name("nope"));
  EXPECT_THROW(runyon::run_suite("nope", small()), std::invalid_argument);
}

TEST(Suites, AllPassAtSmallSize) {
  for (const auto& s : runyon::suite_names()) {
    const auto r = runyon::run_suite(s, small());
    EXPECT_TRUE(r.passed()) << s << "\n" << r.to_text();
    EXPECT_GT(r.summary().total, 0U) << s;
  }
}

TEST(InnerSum, OneCasePerJ) {
  const auto one = runyon::inner_sum_check(7);
  EXPECT_EQ(one.summary().total, 7U);
  EXPECT_TRUE(one.passed());
}

TEST(InnerSum, SuiteUpToTwenty) {
  runyon::VerifyOptions o;
  o.max_n = 20;
  const auto r = runyon::run_suite("inner-sum", o);
  EXPECT_EQ(r.summary().total, 210U);
  EXPECT_EQ(r.summary().pass, 210U);
}

TEST(CCompare, ReportOnlyWithFinding) {
  const auto r = runyon::c_compare(8, 8);
  EXPECT_FALSE(r.asserted);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.summary().total, 64U);
  EXPECT_GT(r.summary().mismatch, 0U);
  EXPECT_FALSE(r.findings.empty());
  bool saw = false;
  for (const auto& c : r.cases) {
    if (c.params["r"] == 2 && c.params["n"] == 3) {
      saw = true;
      EXPECT_EQ(c.status, runyon::CaseStatus::Mismatch);
    }
  }
  EXPECT_TRUE(saw);
}

TEST(CCompare, Deterministic) {
  EXPECT_EQ(runyon::c_compare(6, 6).to_json().dump(), runyon::c_compare(6, 6).to_json().dump());
}

TEST(Y, PrintedFormIsReportOnly) {
  const auto r = runyon::verify_y(6);
  EXPECT_TRUE(r.passed());
  EXPECT_GT(r.summary().mismatch, 0U);
}

TEST(Kernel, PassesAtOrderTwelve) { EXPECT_TRUE(runyon::verify_kernel(12).passed()); }
TEST(Reversion, PassesAtOrderTen) { EXPECT_TRUE(runyon::verify_reversion(10).passed()); }

TEST(FaultInjection, FlipsEverySuite) {
  for (const auto& s : runyon::suite_names()) {
    if (s == "c-compare") continue;
    auto o = small();
    o.inject_fault = s;
    const auto r = runyon::run_suite(s, o);
    EXPECT_FALSE(r.passed()) << s;
  }
}

TEST(Report, SeededRunsAreByteIdentical) {
  for (const std::string s : {"morrison", "gf-match", "narayana"}) {
    const auto a = runyon::run_suite(s, small()).to_json().dump();
    const auto b = runyon::run_suite(s, small()).to_json().dump();
    EXPECT_EQ(a, b) << s;
  }
  auto o = small();
  o.seed = 7;
  EXPECT_NE(runyon::run_suite("morrison", o).to_json().dump(), runyon::run_suite("morrison", small()).to_json().dump());
}
