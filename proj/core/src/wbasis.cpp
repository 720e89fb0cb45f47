#include "runyon/wbasis.hpp"

#include "runyon/errors.hpp"

namespace runyon::alg {

MultiPoly x_in_w() {
  const MultiPoly a = MultiPoly::var(Var::Alpha);
  const MultiPoly b = MultiPoly::var(Var::Beta);
  return b + MultiPoly::var(Var::W) * (a - b);
}

RatFunc w_in_x() {
  return RatFunc(factor_poly(Factor::XMinusBeta), factor_poly(Factor::AlphaMinusBeta));
}

std::vector<MultiPoly> to_w_basis(const RatFunc& g, std::size_t n) {
  if (n == 0) {
    if (!(g == RatFunc(1))) {
      throw BasisOverflow("g_0 must be 1, got " + g.to_string(true));
    }
    return {};
  }
  if (g.num().mentions(Var::W) || g.den().mentions(Var::W)) {
    throw BasisOverflow("input already depends on w");
  }
  const RatFunc in_w = RatFunc(g.num().subst(Var::X, x_in_w()), g.den().subst(Var::X, x_in_w()));
  if (!in_w.is_polynomial()) {
    throw BasisOverflow("denominator does not cancel in the w-basis: " + in_w.to_string(true));
  }
  const MultiPoly p = in_w.as_polynomial();
  if (p.mentions(Var::X)) {
    throw BasisOverflow("residual x-dependence");
  }
  auto coeffs = p.coefficients_in(Var::W);
  if (coeffs.size() > n) {
    throw BasisOverflow("w-degree " + std::to_string(coeffs.size() - 1) + " exceeds " + std::to_string(n - 1));
  }
  coeffs.resize(n);
  return coeffs;
}

RatFunc from_w_basis(std::span<const MultiPoly> coeffs) {
  if (coeffs.empty()) {
    return RatFunc(1);
  }
  const std::uint32_t top = static_cast<std::uint32_t>(coeffs.size() - 1);
  const MultiPoly& amb = factor_poly(Factor::AlphaMinusBeta);
  const MultiPoly& xmb = factor_poly(Factor::XMinusBeta);
  // Horner in (x - β); coefficient k carries (α - β)^(top - k).
  MultiPoly num;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    num = num * xmb + coeffs[k] * amb.pow(top - static_cast<std::uint32_t>(k));
  }
  return RatFunc(std::move(num), amb.pow(top));
}

}  // namespace runyon::alg
