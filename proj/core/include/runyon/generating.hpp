#pragma once

#include "runyon/formulas.hpp"
#include "runyon/gpoly.hpp"
#include "runyon/series.hpp"

#include <optional>

namespace runyon {

template <CoefficientRing R>
using Series = series::TruncSeries<R>;

// Series with polynomial coefficients c0 + c1 v + c2 v^2.
template <CoefficientRing R>
Series<R> quadratic(const std::string& var, std::size_t order, R c0, R c1, R c2) {
  Series<R> s(var, order);
  s.set(0, std::move(c0));
  if (order >= 1) s.set(1, std::move(c1));
  if (order >= 2) s.set(2, std::move(c2));
  return s;
}

/// sum_{n>=0} T^n g_n(α) from (1 + T(α-β) - sqrt(1 - 2T(α+β) + T^2(α-β)^2)) / (2Tα).
template <CoefficientRing R>
Series<R> narayana_gf(std::size_t order, const R& alpha, const R& beta) {
  using T = RingTraits<R>;
  const R one = T::one();
  const R amb = alpha - beta;
  const auto disc = quadratic<R>("T", order + 1, one, -(alpha + beta) - (alpha + beta), amb * amb);
  const auto root = series::series_sqrt(disc, one);
  const auto num = quadratic<R>("T", order + 1, one, amb, T::zero()) - root;
  const R two_alpha = alpha + alpha;
  auto out = num.shifted_down(1);
  for (std::size_t k = 0; k <= order; ++k) {
    out.set(k, T::divide(out[k], two_alpha));
  }
  return out;
}

/// x̄ = α / (1 + t(α-β)^2), the root of the kernel x - α + x t (α-β)^2.
template <CoefficientRing R>
Series<R> kernel_root(std::size_t order, const R& alpha, const R& beta) {
  using T = RingTraits<R>;
  const R amb = alpha - beta;
  const auto denom = quadratic<R>("t", order, T::one(), amb * amb, T::zero());
  return series::series_inverse(denom).scaled(alpha);
}

/// Both sides of the kernel identity
///   sum_{n>=1} (x̄-β)^n t^n g_{n-1}(α) = (x̄-α) / ((β-α)α).
template <CoefficientRing R>
std::pair<Series<R>, Series<R>> kernel_sides(std::size_t order, const R& alpha, const R& beta) {
  using T = RingTraits<R>;
  const auto xbar = kernel_root(order, alpha, beta);
  const auto u = (xbar - Series<R>::constant("t", order, beta)).shifted_up(1);
  Series<R> g_alpha("T", order);
  for (std::size_t m = 0; m <= order; ++m) {
    g_alpha.set(m, g_alpha_value(m, alpha, beta));
  }
  const auto lhs = u * series::series_compose(g_alpha, u);
  const R scale = T::divide(T::one(), (beta - alpha) * alpha);
  const auto rhs = (xbar - Series<R>::constant("t", order, alpha)).scaled(scale);
  return {lhs, rhs};
}

/// T = (x̄ - β) t as a series in t.
template <CoefficientRing R>
Series<R> T_forward(std::size_t order, const R& alpha, const R& beta) {
  const auto xbar = kernel_root(order, alpha, beta);
  return (xbar - Series<R>::constant("t", order, beta)).shifted_up(1);
}

/// t = (1 - T(α-β) - sqrt(1 - 2T(α+β) + T^2(α-β)^2)) / (2β(α-β)) as a series in T.
template <CoefficientRing R>
Series<R> t_of_T_closed(std::size_t order, const R& alpha, const R& beta) {
  using T = RingTraits<R>;
  const R one = T::one();
  const R amb = alpha - beta;
  const auto disc = quadratic<R>("T", order, one, -(alpha + beta) - (alpha + beta), amb * amb);
  const auto num = quadratic<R>("T", order, one, -amb, T::zero()) - series::series_sqrt(disc, one);
  return num.scaled(T::divide(one, (beta + beta) * amb));
}

/// G(t) = sum_n (α-β)^{n-1} g_n(x) t^n from its closed form
///   [1 + t(x-β)(α-β) - sqrt(1 - 2t(x-β)(α+β) + t^2(x-β)^2(α-β)^2) + 2(x-α)/(α-β)]
///   / (2(x - α + x t (α-β)^2)).
template <CoefficientRing R>
Series<R> G_closed(std::size_t order, const Symbols<R>& s) {
  using T = RingTraits<R>;
  const R one = T::one();
  const R amb = s.alpha - s.beta;
  const R xmb = s.x - s.beta;
  const R xma = s.x - s.alpha;
  const R lin = xmb * (s.alpha + s.beta);
  const auto disc = quadratic<R>("t", order, one, -(lin + lin), xmb * xmb * amb * amb);
  const R shift = T::divide(xma + xma, amb);
  const auto num = quadratic<R>("t", order, one + shift, xmb * amb, T::zero()) - series::series_sqrt(disc, one);
  const auto den = quadratic<R>("t", order, xma + xma, (s.x + s.x) * amb * amb, T::zero());
  return series::series_divide(num, den);
}

/// Φ(y) = ((α-β) y w + β) / (1 - y w) with w = (x-β)/(α-β) in the ring.
template <CoefficientRing R>
series::YFraction<R> runyon_phi(const R& w, const R& alpha, const R& beta) {
  using T = RingTraits<R>;
  return series::YFraction<R>{{beta, (alpha - beta) * w}, {T::one(), -w}};
}

template <CoefficientRing R>
R w_value(const Symbols<R>& s) {
  return RingTraits<R>::divide(s.x - s.beta, s.alpha - s.beta);
}

/// Closed form of the solution of y = tΦ(y):
///   y = [α-β - t(α-β)(x-β) - sqrt((α-β)^2 - 2(α-β)(α+β)(x-β)t + (α-β)^2(x-β)^2 t^2)] / (2(x-β)).
/// `root` picks the square-root branch (constant term); the default α-β is
/// the one with y(0) = 0. Any root giving y(0) != 0 throws BadRootHint.
template <CoefficientRing R>
Series<R> y_closed(std::size_t order, const Symbols<R>& s, std::optional<R> root = std::nullopt) {
  using T = RingTraits<R>;
  const R amb = s.alpha - s.beta;
  const R xmb = s.x - s.beta;
  const R lin = amb * (s.alpha + s.beta) * xmb;
  const auto disc = quadratic<R>("t", order, amb * amb, -(lin + lin), amb * amb * xmb * xmb);
  const auto num = quadratic<R>("t", order, amb, -(amb * xmb), T::zero()) - series::series_sqrt(disc, root.value_or(amb));
  if (!T::is_zero(num[0])) {
    throw BadRootHint("square-root branch gives y(0) != 0");
  }
  return num.scaled(T::divide(T::one(), xmb + xmb));
}

/// The same closed form with the opposite sign on the linear term. Its
/// [t^1] is α rather than β; only used for a report-only comparison.
template <CoefficientRing R>
Series<R> y_closed_as_printed(std::size_t order, const Symbols<R>& s) {
  using T = RingTraits<R>;
  const R amb = s.alpha - s.beta;
  const R xmb = s.x - s.beta;
  const R lin = amb * (s.alpha + s.beta) * xmb;
  const auto disc = quadratic<R>("t", order, amb * amb, -(lin + lin), amb * amb * xmb * xmb);
  const auto num = quadratic<R>("t", order, amb, amb * xmb, T::zero()) - series::series_sqrt(disc, amb);
  return num.scaled(T::divide(T::one(), xmb + xmb));
}

/// 1/(1 - y).
template <CoefficientRing R>
Series<R> one_over_one_minus(const Series<R>& y) {
  return series::series_inverse(Series<R>::constant(y.var(), y.order(), RingTraits<R>::one()) - y);
}

/// G(t) assembled from the recurrence: coefficient n is (α-β)^{n-1} g_n(x),
/// so the constant term is 1/(α-β).
Series<RatFunc> G_from_recurrence(std::size_t order, GRecurrence& memo);
Series<RatFunc> G_from_recurrence(std::size_t order);
/// The same series with x, α, β fixed at `pt`, from a recurrence run with
/// α and β specialized first (x stays symbolic until the end).
Series<Rational> G_from_recurrence_at(std::size_t order, const PointAssignment& pt);

}  // namespace runyon
