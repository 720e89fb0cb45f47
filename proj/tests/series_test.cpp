#include "runyon/errors.hpp"
#include "runyon/series.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace testing_support;
using runyon::series::lagrange_coeff;
using runyon::series::series_compose;
using runyon::series::series_inverse;
using runyon::series::series_revert;
using runyon::series::series_sqrt;
using runyon::series::solve_functional;
using runyon::series::TruncSeries;
using runyon::series::YFraction;

using QS = TruncSeries<Rational>;
using PS = TruncSeries<MultiPoly>;

namespace {

QS qs(std::vector<long> c, std::size_t order, std::string var = "t") {
  std::vector<Rational> r;
  for (long v : c) r.emplace_back(v);
  return QS(std::move(var), order, std::move(r));
}

QS random_series(std::mt19937_64& rng, std::size_t order, long c0, long c1 = -1000) {
  QS s("t", order);
  for (std::size_t k = 0; k <= order; ++k) s.set(k, random_rational(rng));
  s.set(0, Rational(c0));
  if (c1 != -1000) s.set(1, Rational(c1));
  return s;
}

YFraction<Rational> yfrac(std::vector<long> num, std::vector<long> den) {
  YFraction<Rational> f;
  f.num.clear();
  f.den.clear();
  for (long v : num) f.num.emplace_back(v);
  for (long v : den) f.den.emplace_back(v);
  return f;
}

}  // namespace

TEST(SeriesArith, Product) { EXPECT_EQ(qs({1, 1}, 3) * qs({1, -1}, 3), qs({1, 0, -1}, 3)); }

TEST(SeriesArith, Sum) { EXPECT_EQ(qs({1, 1, 1}, 3) + qs({0, -1}, 3), qs({1, 0, 1}, 3)); }

TEST(SeriesArith, TruncatesToSmallerOrder) {
  const QS p = qs({1, 2, 3, 4}, 3) * qs({1, 1}, 1);
  EXPECT_EQ(p.order(), 1U);
  EXPECT_EQ(p[1], Rational(3));
}

TEST(SeriesArith, VariableMismatch) {
  EXPECT_THROW(qs({1}, 2, "t") + qs({1}, 2, "T"), runyon::VariableMismatch);
  EXPECT_THROW(qs({1}, 2, "t") * qs({1}, 2, "z"), runyon::VariableMismatch);
}

TEST(SeriesArithProperty, ProductCommutesOverPolynomials) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    PS a("t", 5);
    PS b("t", 5);
    for (std::size_t k = 0; k <= 5; ++k) {
      a.set(k, random_poly(rng, 3, 2, {Var::Alpha, Var::Beta}));
      b.set(k, random_poly(rng, 3, 2, {Var::Alpha, Var::Beta}));
    }
    ASSERT_EQ(a * b, b * a);
  }
}

TEST(SeriesInverse, GeometricSeries) { EXPECT_EQ(series_inverse(qs({1, -1}, 4)), qs({1, 1, 1, 1, 1}, 4)); }

TEST(SeriesInverse, One) { EXPECT_EQ(series_inverse(qs({1}, 4)), qs({1}, 4)); }

TEST(SeriesInverse, ZeroConstantTerm) {
  const QS t = qs({1, 1}, 4) - qs({1}, 4);
  EXPECT_THROW(series_inverse(t), runyon::NotInvertibleConstantTerm);
  // Over Q[α, β] a non-constant c_0 is not a unit either.
  EXPECT_THROW(series_inverse(PS::constant("t", 3, A)), runyon::NotInvertibleConstantTerm);
}

TEST(SeriesInverseProperty, ProductIsOne) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    long c0 = 0;
    while (c0 == 0) c0 = draw(rng, -5, 5);
    const QS s = random_series(rng, 12, c0);
    ASSERT_EQ(s * series_inverse(s), QS::constant("t", 12, Rational(1)));
  }
}

TEST(SeriesSqrt, PerfectSquare) { EXPECT_EQ(series_sqrt(qs({1, -2, 1}, 5), Rational(1)), qs({1, -1}, 5)); }

TEST(SeriesSqrt, OneMinusFourT) {
  const QS r = series_sqrt(qs({1, -4}, 3), Rational(1));
  EXPECT_EQ(r, qs({1, -2, -2, -4}, 3));
  // Oracle: square it back with the dense product.
  EXPECT_EQ(oracle::series_mul(r.coeffs(), r.coeffs(), 3), qs({1, -4}, 3).coeffs());
}

TEST(SeriesSqrt, BranchIsExplicit) {
  EXPECT_EQ(series_sqrt(qs({1, -4}, 3), Rational(-1)), qs({-1, 2, 2, 4}, 3));
  EXPECT_THROW(series_sqrt(qs({1, -4}, 3), Rational(2)), runyon::BadRootHint);
}

TEST(SeriesSqrt, BranchWithConstantAlphaMinusBeta) {
  // (β-α)^2 - 2(β-α)(α+β)(β-x)t + (β-α)^2(β-x)^2 t^2 over Q(α, β, x), root α-β.
  using RS = TruncSeries<RatFunc>;
  const RatFunc a(A), b(B), x(X);
  RS disc("t", 4);
  disc.set(0, (b - a) * (b - a));
  disc.set(1, RatFunc(-2) * (b - a) * (a + b) * (b - x));
  disc.set(2, (b - a) * (b - a) * (b - x) * (b - x));
  const RS r = series_sqrt(disc, a - b);
  EXPECT_EQ(r[0], a - b);
  EXPECT_EQ(r * r, disc);
  // α - β - r has zero constant term, so the resulting y has valuation >= 1.
  EXPECT_TRUE((RS::constant("t", 4, a - b) - r)[0].is_zero());
}

TEST(SeriesSqrtProperty, SquaresBack) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const long root = draw(rng, 1, 4) * (draw(rng, 0, 1) ? 1 : -1);
    const QS s = random_series(rng, 10, root * root);
    const QS r = series_sqrt(s, Rational(root));
    ASSERT_EQ(r * r, s);
    ASSERT_EQ(r[0], Rational(root));
  }
}

TEST(SeriesCompose, GeometricInTSquared) {
  const QS geometric = series_inverse(qs({1, -1}, 5, "T"));
  EXPECT_EQ(series_compose(geometric, qs({0, 0, 1}, 5)), qs({1, 0, 1, 0, 1, 0}, 5));
}

TEST(SeriesCompose, IdentityInner) {
  const QS f = qs({3, -1, 4, 1, -5}, 4);
  EXPECT_EQ(series_compose(f, QS::variable("t", 4)), f);
}

TEST(SeriesCompose, InnerMustVanishAtZero) {
  EXPECT_THROW(series_compose(qs({1, 1}, 3), qs({1, 1}, 3)), runyon::NonzeroInnerConstant);
}

TEST(SeriesRevert, Identity) { EXPECT_EQ(series_revert(QS::variable("t", 6)), QS::variable("t", 6)); }

TEST(SeriesRevert, CatalanFromTMinusTSquared) {
  const QS r = series_revert(qs({0, 1, -1}, 4));
  EXPECT_EQ(r, qs({0, 1, 1, 2, 5}, 4));
  EXPECT_EQ(series_compose(qs({0, 1, -1}, 4), r), QS::variable("t", 4));
}

TEST(SeriesRevert, Preconditions) {
  EXPECT_THROW(series_revert(qs({1, 1}, 4)), runyon::ValuationMismatch);
  EXPECT_THROW(series_revert(qs({0, 0, 1}, 4)), runyon::ValuationMismatch);
  EXPECT_THROW(series_revert(PS::variable("t", 3).scaled(A - B)), runyon::ValuationMismatch);
}

TEST(SeriesRevertProperty, ComposesToIdentityAndIsInvolutive) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    long c1 = 0;
    while (c1 == 0) c1 = draw(rng, -4, 4);
    const QS s = random_series(rng, 10, 0, c1);
    const QS r = series_revert(s);
    ASSERT_EQ(series_compose(s, r), QS::variable("t", 10));
    ASSERT_EQ(series_compose(r, s), QS::variable("t", 10));
    ASSERT_EQ(series_revert(r), s);
  }
}

TEST(SolveFunctional, CatalanShift) {
  EXPECT_EQ(solve_functional(yfrac({1}, {1, -1}), 4), qs({0, 1, 1, 2, 5}, 4));
}

TEST(SolveFunctional, ConstantPhi) { EXPECT_EQ(solve_functional(yfrac({1}, {1}), 5), QS::variable("t", 5)); }

TEST(SolveFunctional, OnePlusY) {
  // y = t(1 + y) has y = t/(1 - t).
  EXPECT_EQ(solve_functional(yfrac({1, 1}, {1}), 5), qs({0, 1, 1, 1, 1, 1}, 5));
}

TEST(SolveFunctional, PoleAtOrigin) {
  EXPECT_THROW(solve_functional(yfrac({1}, {0, 1}), 4), runyon::PoleAtOrigin);
  EXPECT_THROW(lagrange_coeff(yfrac({1}, {1}), yfrac({1}, {0, 1}), 2), runyon::PoleAtOrigin);
}

TEST(LagrangeCoeff, CatalanThree) {
  const auto f = yfrac({1}, {1, -1});
  EXPECT_EQ(lagrange_coeff(f, f, 3), Rational(5));
  const QS y = solve_functional(f, 3);
  EXPECT_EQ(series_inverse(QS::constant("t", 3, Rational(1)) - y)[3], Rational(5));
}

TEST(LagrangeCoeff, NEqualsOne) {
  // F'(0) * Φ(0)
  const auto f = yfrac({2, 3, 7}, {1, 1});  // F'(0) = 3 - 2 = 1
  const auto phi = yfrac({4, 1}, {2});      // Φ(0) = 2
  EXPECT_EQ(lagrange_coeff(f, phi, 1), Rational(2));
}

TEST(LagrangeCoeff, RunyonPhiAtTwo) {
  YFraction<MultiPoly> f{{MultiPoly(1)}, {MultiPoly(1), MultiPoly(-1)}};
  YFraction<MultiPoly> phi{{B, (A - B) * W}, {MultiPoly(1), -W}};
  EXPECT_EQ(lagrange_coeff(f, phi, 2), B * B + A * B * W);
}

TEST(LagrangeCoeffProperty, MatchesFixedPointSolution) {
  std::mt19937_64 rng(17);
  const auto f = yfrac({1}, {1, -1});
  for (int trial = 0; trial < 50; ++trial) {
    YFraction<Rational> phi;
    phi.num = {Rational(1)};
    const long deg = draw(rng, 1, 3);
    for (long i = 1; i <= deg; ++i) phi.num.push_back(Rational(draw(rng, -3, 3)));
    const std::size_t n = static_cast<std::size_t>(draw(rng, 1, 20));
    const QS y = solve_functional(phi, n);
    const QS via_fixed_point = series_inverse(QS::constant("t", n, Rational(1)) - y);
    ASSERT_EQ(lagrange_coeff(f, phi, n), via_fixed_point[n]) << "n = " << n;
  }
}

TEST(LagrangeCoeffProperty, AllNUpToTwenty) {
  const auto f = yfrac({1}, {1, -1});
  const auto phi = yfrac({1, 2, -1}, {1});
  const QS y = solve_functional(phi, 20);
  const QS gf = series_inverse(QS::constant("t", 20, Rational(1)) - y);
  for (std::size_t n = 1; n <= 20; ++n) {
    ASSERT_EQ(lagrange_coeff(f, phi, n), gf[n]) << "n = " << n;
  }
}

TEST(SeriesProperty, TruncationConsistency) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 30; ++trial) {
    const QS s = random_series(rng, 14, 4);
    const QS lo = s.resized(7);
    ASSERT_EQ(series_inverse(s).resized(7), series_inverse(lo));
    ASSERT_EQ(series_sqrt(s, Rational(2)).resized(7), series_sqrt(lo, Rational(-2)).scaled(Rational(-1)));
    const QS v = random_series(rng, 14, 0, 3);
    ASSERT_EQ(series_revert(v).resized(7), series_revert(v.resized(7)));
  }
}

TEST(Series, ShiftDownRequiresValuation) {
  EXPECT_EQ(qs({0, 0, 3, 4}, 3).shifted_down(2), qs({3, 4}, 1));
  EXPECT_THROW(qs({0, 1, 3}, 2).shifted_down(2), runyon::ValuationMismatch);
}
