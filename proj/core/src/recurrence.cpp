#include "runyon/gpoly.hpp"

#include "runyon/errors.hpp"
#include "runyon/formulas.hpp"
#include "runyon/series.hpp"

namespace runyon {

using alg::Var;

MultiPoly GPoly::w_polynomial() const {
  if (w_basis.empty()) {
    return MultiPoly(1);
  }
  const MultiPoly w = MultiPoly::var(Var::W);
  MultiPoly out;
  for (std::size_t k = w_basis.size(); k-- > 0;) {
    out = out * w + w_basis[k];
  }
  return out;
}

std::vector<MultiPoly> recurrence_numerators(std::size_t nmax, const MultiPoly& alpha, const MultiPoly& beta) {
  const MultiPoly x = MultiPoly::var(Var::X);
  const MultiPoly amb = alpha - beta;
  const MultiPoly xma = x - alpha;
  const MultiPoly xmb = x - beta;
  const MultiPoly amb2 = amb * amb;

  std::vector<MultiPoly> out{MultiPoly(1)};
  if (nmax == 0) {
    return out;
  }
  out.push_back(alg::exact_div(alpha * xmb - x * amb, xma));
  MultiPoly xmb_pow = xmb;
  MultiPoly amb_pow(1);  // (α-β)^{n-2}
  for (std::size_t n = 2; n <= nmax; ++n) {
    xmb_pow *= xmb;
    const MultiPoly& prev = out[n - 1];
    const MultiPoly g_prev_at_alpha = alg::exact_div(prev.subst(Var::X, alpha), amb_pow);
    const MultiPoly rhs = alpha * xmb_pow * g_prev_at_alpha - x * amb2 * prev;
    out.push_back(alg::exact_div(rhs, xma));
    amb_pow *= amb;
  }
  return out;
}

void GRecurrence::extend(std::size_t n) {
  if (numerators_.size() > n) {
    return;
  }
  numerators_ = recurrence_numerators(n, MultiPoly::var(Var::Alpha), MultiPoly::var(Var::Beta));
  const MultiPoly amb = alg::factor_poly(alg::Factor::AlphaMinusBeta);
  for (std::size_t k = g_.size(); k <= n; ++k) {
    if (k == 0) {
      g_.push_back(GPoly{0, {}});
      continue;
    }
    const RatFunc g(numerators_[k], amb.pow(static_cast<std::uint32_t>(k - 1)));
    g_.push_back(GPoly{k, alg::to_w_basis(g, k)});
  }
}

const GPoly& GRecurrence::operator()(std::size_t n) {
  extend(n);
  return g_[n];
}

const MultiPoly& GRecurrence::scaled_numerator(std::size_t n) {
  extend(n);
  return numerators_[n];
}

GPoly g_recurrence(std::size_t n) {
  GRecurrence memo;
  return memo(n);
}

GPoly g_lagrange(std::size_t n) {
  if (n == 0) {
    return GPoly{0, {}};
  }
  const MultiPoly a = MultiPoly::var(Var::Alpha);
  const MultiPoly b = MultiPoly::var(Var::Beta);
  const MultiPoly w = MultiPoly::var(Var::W);
  const series::YFraction<MultiPoly> f{{MultiPoly(1)}, {MultiPoly(1), MultiPoly(-1)}};
  const series::YFraction<MultiPoly> phi_y{{b, (a - b) * w}, {MultiPoly(1), -w}};
  const MultiPoly in_w = series::lagrange_coeff(f, phi_y, n);
  const RatFunc in_x = alg::poly_subst(in_w, Var::W, alg::w_in_x());
  return GPoly{n, alg::to_w_basis(in_x, n)};
}

GPoly g_riordan(std::size_t n) {
  GPoly g{n, {}};
  for (std::size_t k = 0; k < n; ++k) {
    g.w_basis.push_back(riordan_A(static_cast<long>(k), static_cast<long>(n)));
  }
  return g;
}

}  // namespace runyon
