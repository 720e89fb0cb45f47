#include "runyon/errors.hpp"
#include "runyon/generating.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace testing_support;
using runyon::alg::PointAssignment;
using runyon::alg::ratfunc_eq;
namespace sr = runyon::series;

namespace {

const RatFunc RA{A};
const RatFunc RB{B};
const RatFunc RX{X};

}  // namespace

TEST(NarayanaGf, LowCoefficients) {
  const auto s = runyon::narayana_gf(5, A, B);
  EXPECT_EQ(s.var(), "T");
  EXPECT_EQ(s[0], MultiPoly(1));
  EXPECT_EQ(s[1], B);
  EXPECT_EQ(s[2], B * B + A * B);
}

TEST(NarayanaGf, MatchesClosedSumSymbolically) {
  const auto s = runyon::narayana_gf(12, A, B);
  for (std::size_t n = 0; n <= 12; ++n) EXPECT_EQ(s[n], runyon::g_alpha_closed(n)) << n;
}

TEST(NarayanaGf, NumericHighOrder) {
  const Rational a(3, 5), b(-7, 4);
  const auto s = runyon::narayana_gf(60, a, b);
  for (std::size_t n = 0; n <= 60; n += 7) EXPECT_EQ(s[n], runyon::g_alpha_value(n, a, b)) << n;
}

TEST(KernelRoot, ConstantTermIsAlpha) {
  const auto r = runyon::kernel_root(4, A, B);
  EXPECT_EQ(r[0], A);
  EXPECT_EQ(r[1], -(A * (A - B) * (A - B)));
}

TEST(Kernel, SidesAgreeSymbolically) {
  const auto [lhs, rhs] = runyon::kernel_sides(10, RA, RB);
  for (std::size_t k = 1; k <= 10; ++k) EXPECT_TRUE(ratfunc_eq(lhs[k], rhs[k])) << k;
}

TEST(TForward, LinearTerm) {
  const auto t = runyon::T_forward(5, A, B);
  EXPECT_TRUE(t[0].is_zero());
  EXPECT_EQ(t[1], A - B);
}

TEST(TOfT, LinearTermAndReversion) {
  const auto closed = runyon::t_of_T_closed(8, RA, RB);
  EXPECT_TRUE(closed[0].is_zero());
  EXPECT_TRUE(ratfunc_eq(closed[1], RatFunc(MultiPoly(1), A - B)));
  const auto reverted = sr::series_revert(runyon::T_forward(8, RA, RB), std::string("T"));
  for (std::size_t k = 0; k <= 8; ++k) EXPECT_TRUE(ratfunc_eq(reverted[k], closed[k])) << k;
}

TEST(GClosed, LowCoefficients) {
  const auto g = runyon::G_closed(4, runyon::symbolic_ratfunc());
  EXPECT_TRUE(ratfunc_eq(g[0], RatFunc(MultiPoly(1), A - B)));
  EXPECT_TRUE(ratfunc_eq(g[1], RB));
}

TEST(GClosed, MatchesRecurrenceSymbolically) {
  const auto closed = runyon::G_closed(8, runyon::symbolic_ratfunc());
  const auto rec = runyon::G_from_recurrence(8);
  EXPECT_FALSE(first_mismatch(closed, rec).has_value());
}

TEST(GClosed, MatchesRecurrenceAtPoints) {
  const PointAssignment pt(Rational(5, 2), Rational(-1, 3), Rational(2));
  const auto closed = runyon::G_closed(30, runyon::numeric_symbols(pt));
  const auto rec = runyon::G_from_recurrence_at(30, pt);
  for (std::size_t k = 0; k <= 30; ++k) EXPECT_EQ(closed[k], rec[k]) << k;
}

TEST(YClosed, LowCoefficients) {
  const auto y = runyon::y_closed(4, runyon::symbolic_ratfunc());
  EXPECT_TRUE(y[0].is_zero());
  EXPECT_TRUE(ratfunc_eq(y[1], RB));
}

TEST(YClosed, OtherBranchRejected) {
  const auto s = runyon::symbolic_ratfunc();
  EXPECT_THROW(runyon::y_closed(4, s, std::optional<RatFunc>(RB - RA)), runyon::BadRootHint);
}

TEST(YClosed, SolvesFunctionalEquationAndGivesG) {
  const auto s = runyon::symbolic_ratfunc();
  const std::size_t order = 8;
  const auto y = runyon::y_closed(order, s);
  const auto phi = runyon::runyon_phi(runyon::w_value(s), s.alpha, s.beta);
  const auto fixed = sr::solve_functional(phi, order);
  EXPECT_FALSE(first_mismatch(y, fixed).has_value());
  const auto gf = runyon::one_over_one_minus(y);
  runyon::GRecurrence memo;
  for (std::size_t n = 0; n <= order; ++n) EXPECT_TRUE(ratfunc_eq(gf[n], memo(n).ratfunc())) << n;
}

TEST(YClosed, PrintedSignDiffersAtFirstOrder) {
  const auto s = runyon::symbolic_ratfunc();
  const auto printed = runyon::y_closed_as_printed(3, s);
  EXPECT_TRUE(ratfunc_eq(printed[1], RA));
  EXPECT_FALSE(ratfunc_eq(printed[1], RB));
}

TEST(YClosed, NumericSeriesMatchesDenseOracle) {
  const Rational a(4, 3), b(1, 2), x(-3, 5);
  const auto y = runyon::y_closed(20, runyon::numeric_symbols(PointAssignment(x, a, b)));
  const auto gf = runyon::one_over_one_minus(y);
  const auto dense = oracle::g_dense(20, a, b);
  for (std::size_t n = 0; n <= 20; ++n) EXPECT_EQ(gf[n], oracle::eval(dense[n], x)) << n;
}
