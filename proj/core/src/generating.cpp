#include "runyon/generating.hpp"

namespace runyon {

Series<RatFunc> G_from_recurrence(std::size_t order, GRecurrence& memo) {
  Series<RatFunc> out("t", order);
  out.set(0, RatFunc(MultiPoly(1), alg::factor_poly(alg::Factor::AlphaMinusBeta)));
  for (std::size_t n = 1; n <= order; ++n) {
    out.set(n, RatFunc(memo.scaled_numerator(n)));
  }
  return out;
}

Series<RatFunc> G_from_recurrence(std::size_t order) {
  GRecurrence memo;
  return G_from_recurrence(order, memo);
}

Series<Rational> G_from_recurrence_at(std::size_t order, const PointAssignment& pt) {
  const Rational alpha = pt.at(Var::Alpha);
  const Rational beta = pt.at(Var::Beta);
  const auto numerators = recurrence_numerators(order, MultiPoly(alpha), MultiPoly(beta));
  Series<Rational> out("t", order);
  out.set(0, Rational(1) / (alpha - beta));
  for (std::size_t n = 1; n <= order; ++n) {
    out.set(n, numerators[n].eval(pt));
  }
  return out;
}

}  // namespace runyon
