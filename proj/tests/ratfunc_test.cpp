#include "runyon/errors.hpp"
#include "runyon/gpoly.hpp"
#include "runyon/ratfunc.hpp"
#include "runyon/wbasis.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace testing_support;
using runyon::alg::eval_at_point;
using runyon::alg::Factor;
using runyon::alg::PointAssignment;
using runyon::alg::poly_subst;
using runyon::alg::ratfunc_eq;

namespace {

RatFunc g2() { return RatFunc(B * (A * X - B * B), A - B); }

}  // namespace

TEST(RatFuncEq, DistributedNumerator) {
  EXPECT_TRUE(ratfunc_eq(g2(), RatFunc(A * B * X - B * B * B, A - B)));
}

TEST(RatFuncEq, CancelsCommonLinearFactor) {
  EXPECT_TRUE(ratfunc_eq(RatFunc(X * X - A * A, X - A), RatFunc(X + A)));
  const RatFunc r(X * X - A * A, X - A);
  EXPECT_TRUE(r.is_polynomial());
}

TEST(RatFuncEq, SignMatters) { EXPECT_FALSE(ratfunc_eq(RatFunc(B, A - B), RatFunc(B, B - A))); }

TEST(RatFunc, DenominatorFactoredOverTrackedForms) {
  const RatFunc r(X, (A - B) * (A - B) * (X - A) * B);
  EXPECT_EQ(r.factor_exponent(Factor::AlphaMinusBeta), 2U);
  EXPECT_EQ(r.factor_exponent(Factor::XMinusAlpha), 1U);
  EXPECT_EQ(r.factor_exponent(Factor::Beta), 1U);
  EXPECT_EQ(r.residual_den(), MultiPoly(1));
  // β - α folds into α - β with the sign moved to the numerator.
  const RatFunc s(B, B - A);
  EXPECT_EQ(s.num(), -B);
  EXPECT_EQ(s.den(), A - B);
}

TEST(RatFunc, ResidualDenominatorIsMonic) {
  const RatFunc r(X, 2 * X * X + 4 * A * B + 2);
  EXPECT_EQ(r.residual_den(), X * X + 2 * A * B + 1);
  EXPECT_EQ(r.num(), Rational(1, 2) * X);
}

TEST(RatFunc, ZeroDenominatorRejected) { EXPECT_THROW(RatFunc(X, MultiPoly()), runyon::DenominatorVanishes); }

TEST(EvalAtPoint, G2AtHandPoint) {
  EXPECT_EQ(eval_at_point(g2(), PointAssignment(Rational(3), Rational(2), Rational(1))), Rational(5));
}

TEST(EvalAtPoint, VanishingDenominator) {
  const RatFunc r(X - B, A - B);
  EXPECT_THROW(eval_at_point(r, PointAssignment(Rational(2), Rational(2), Rational(2))), runyon::DenominatorVanishes);
}

TEST(EvalAtPoint, Constant) {
  EXPECT_EQ(eval_at_point(RatFunc(Rational(7, 3)), PointAssignment(Rational(1), Rational(5), Rational(-2))), Rational(7, 3));
}

TEST(PolySubst, ChangeOfBasis) {
  const RatFunc value(runyon::alg::x_in_w());
  EXPECT_TRUE(ratfunc_eq(poly_subst(X - B, Var::X, value), RatFunc(W * (A - B))));
}

TEST(PolySubst, IdentityOnSubstitutedVariable) {
  const RatFunc value(A, 1 + W * (A - B) * (A - B));
  EXPECT_TRUE(ratfunc_eq(poly_subst(X, Var::X, value), value));
}

TEST(PolySubst, DenominatorIsPowerOfValueDenominator) {
  const RatFunc value(A, X - B);
  const RatFunc r = poly_subst(W * W * W + W, Var::W, value);
  EXPECT_EQ(r.factor_exponent(Factor::XMinusBeta), 3U);
}

TEST(PolySubstProperty, Homomorphism) {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 60; ++trial) {
    const MultiPoly p = random_poly(rng, 4, 3);
    const MultiPoly q = random_poly(rng, 4, 3);
    const RatFunc value(random_poly(rng, 3, 2, {Var::X, Var::Alpha, Var::Beta}),
                        (A - B).pow(static_cast<std::uint32_t>(draw(rng, 0, 2))) * (X - A));
    ASSERT_TRUE(ratfunc_eq(poly_subst(p * q, Var::W, value), poly_subst(p, Var::W, value) * poly_subst(q, Var::W, value)));
    ASSERT_TRUE(ratfunc_eq(poly_subst(p + q, Var::W, value), poly_subst(p, Var::W, value) + poly_subst(q, Var::W, value)));
  }
}

TEST(RatFuncProperty, EqualityIsAnEquivalence) {
  std::mt19937_64 rng(4242);
  const std::vector<MultiPoly> dens{A - B, X - A, (A - B) * (X - B), B * X, X * X + A + 1};
  for (int trial = 0; trial < 100; ++trial) {
    const MultiPoly n = random_poly(rng, 4, 3, {Var::X, Var::Alpha, Var::Beta});
    const MultiPoly d = dens[static_cast<std::size_t>(draw(rng, 0, 4))];
    const MultiPoly k1 = dens[static_cast<std::size_t>(draw(rng, 0, 4))];
    const MultiPoly k2 = random_nonzero_poly(rng, 2, 2, {Var::X, Var::Alpha, Var::Beta});
    const RatFunc a(n, d);
    const RatFunc b(n * k1, d * k1);  // same value, different representative
    const RatFunc c(n * k2, d * k2);
    ASSERT_TRUE(ratfunc_eq(a, a));
    ASSERT_EQ(ratfunc_eq(a, b), ratfunc_eq(b, a));
    ASSERT_TRUE(ratfunc_eq(a, b));
    ASSERT_TRUE(ratfunc_eq(b, c));
    ASSERT_TRUE(ratfunc_eq(a, c));
    const RatFunc other(n + 1, d);
    ASSERT_FALSE(ratfunc_eq(a, other));
  }
}

TEST(RatFuncProperty, FieldOperations) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    const RatFunc a(random_poly(rng, 3, 3, {Var::X, Var::Alpha, Var::Beta}), (A - B) * (X - A));
    const RatFunc b(random_nonzero_poly(rng, 3, 3, {Var::X, Var::Alpha, Var::Beta}), X - B);
    ASSERT_TRUE(ratfunc_eq((a + b) - b, a));
    ASSERT_TRUE(ratfunc_eq((a * b) / b, a));
    const PointAssignment pt(Rational(7, 3), Rational(-2, 5), Rational(3));
    ASSERT_EQ((a * b).eval(pt), a.eval(pt) * b.eval(pt));
    ASSERT_EQ((a + b).eval(pt), a.eval(pt) + b.eval(pt));
  }
}

TEST(WBasis, G2) {
  const auto coeffs = runyon::alg::to_w_basis(g2(), 2);
  ASSERT_EQ(coeffs.size(), 2U);
  EXPECT_EQ(coeffs[0], B * B);
  EXPECT_EQ(coeffs[1], A * B);
}

TEST(WBasis, G1) {
  const auto coeffs = runyon::alg::to_w_basis(RatFunc(B), 1);
  ASSERT_EQ(coeffs.size(), 1U);
  EXPECT_EQ(coeffs[0], B);
}

TEST(WBasis, G0IsEmpty) {
  EXPECT_TRUE(runyon::alg::to_w_basis(RatFunc(1), 0).empty());
  EXPECT_TRUE(ratfunc_eq(runyon::alg::from_w_basis({}), RatFunc(1)));
  EXPECT_THROW(runyon::alg::to_w_basis(RatFunc(B), 0), runyon::BasisOverflow);
}

TEST(WBasis, G3FromRiordanCoefficients) {
  const std::vector<MultiPoly> a3{B * B * B, 2 * A * B * B, A * B * B + A * A * B};
  const RatFunc g3 = runyon::alg::from_w_basis(a3);
  EXPECT_EQ(runyon::alg::to_w_basis(g3, 3), a3);
  // x = α is w = 1: β³ + 3αβ² + α²β
  EXPECT_TRUE(ratfunc_eq(runyon::alg::ratfunc_subst(g3, Var::X, RatFunc(A)), RatFunc(B * B * B + 3 * A * B * B + A * A * B)));
}

TEST(WBasis, OverflowOnWrongDegreeOrDenominator) {
  EXPECT_THROW(runyon::alg::to_w_basis(g2(), 1), runyon::BasisOverflow);
  EXPECT_THROW(runyon::alg::to_w_basis(RatFunc(X, X - A), 3), runyon::BasisOverflow);
  EXPECT_THROW(runyon::alg::to_w_basis(RatFunc(W), 3), runyon::BasisOverflow);
}

TEST(WBasisProperty, RoundTripThroughRecurrence) {
  runyon::GRecurrence memo;
  for (std::size_t n = 0; n <= 12; ++n) {
    const RatFunc g = memo(n).ratfunc();
    ASSERT_TRUE(ratfunc_eq(runyon::alg::from_w_basis(runyon::alg::to_w_basis(g, n)), g)) << "n = " << n;
  }
}
