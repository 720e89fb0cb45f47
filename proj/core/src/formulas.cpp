#include "runyon/formulas.hpp"

#include "runyon/errors.hpp"

#include <algorithm>
#include <string>

namespace runyon {

namespace {

MultiPoly ab_monomial(const Rational& c, long alpha_exp, long beta_exp) {
  std::array<std::uint32_t, alg::kNumVars> e{};
  e[static_cast<std::size_t>(Var::Alpha)] = static_cast<std::uint32_t>(alpha_exp);
  e[static_cast<std::size_t>(Var::Beta)] = static_cast<std::uint32_t>(beta_exp);
  return MultiPoly(alg::Monomial(e), c);
}

std::string rn(long r, long n) { return "(" + std::to_string(r) + ", " + std::to_string(n) + ")"; }

}  // namespace

Symbols<RatFunc> symbolic_ratfunc() {
  return {RatFunc(MultiPoly::var(Var::X)), RatFunc(MultiPoly::var(Var::Alpha)), RatFunc(MultiPoly::var(Var::Beta))};
}

Symbols<MultiPoly> symbolic_poly() {
  return {MultiPoly::var(Var::X), MultiPoly::var(Var::Alpha), MultiPoly::var(Var::Beta)};
}

Symbols<Rational> numeric_symbols(const PointAssignment& pt) {
  return {pt.at(Var::X), pt.at(Var::Alpha), pt.at(Var::Beta)};
}

MultiPoly phi(long r, long k) {
  if (r < 0) {
    throw IndexOutOfRange("phi needs r >= 0, got r = " + std::to_string(r));
  }
  if (k < 0) {
    return {};
  }
  std::vector<alg::Term> terms;
  for (long j = 0; j <= std::min(r, k); ++j) {
    terms.push_back(ab_monomial(Rational(binomial(r, j) * binomial(k, j)), j, k - j).terms().front());
  }
  return MultiPoly::from_terms(std::move(terms));
}

MultiPoly g_alpha_closed(std::size_t n) {
  if (n == 0) {
    return MultiPoly(1);
  }
  const long nn = static_cast<long>(n);
  MultiPoly out;
  for (long k = 0; k < nn; ++k) {
    out += ab_monomial(Rational(binomial(nn, k) * binomial(nn, k + 1)) / Rational(nn), k, nn - k);
  }
  return out;
}

MultiPoly c_direct(long r, long n) {
  if (r < 1 || n < 1) {
    throw IndexOutOfRange("C_{r,n} needs r, n >= 1, got " + rn(r, n));
  }
  MultiPoly sum;
  for (long s = 1; s <= r - 1; ++s) {
    sum += g_alpha_closed(static_cast<std::size_t>(r - s)) * phi(s - 1, n - r + s - 1);
  }
  return sum;
}

MultiPoly c_translated(long r, long n) {
  if (r < 1 || n < 1) {
    throw IndexOutOfRange("C_{r,n} needs r, n >= 1, got " + rn(r, n));
  }
  const long lo = std::min(r, n);
  const long hi = std::max(r, n);
  MultiPoly sum;
  for (long j = 1; j <= lo; ++j) {
    sum += ab_monomial(Rational(binomial(lo, j) * binomial(hi - 1, j - 1)), j - 1, n - j);
  }
  return sum;
}

MultiPoly carlitz_A(long r, long n) {
  if (r < 1 || r > n - 1) {
    throw IndexOutOfRange("Carlitz's A_r^{(n)} needs 1 <= r <= n-1, got " + rn(r, n));
  }
  const MultiPoly a = MultiPoly::var(Var::Alpha);
  const MultiPoly b = MultiPoly::var(Var::Beta);
  return b * phi(r, n - 1) - a * c_direct(r, n) - b * phi(r - 1, n - 1);
}

MultiPoly riordan_A(long k, long n) {
  if (n < 1 || k < 0 || k > n - 1) {
    throw IndexOutOfRange("Riordan's A_k^{(n)} needs 0 <= k <= n-1, got " + rn(k, n));
  }
  if (k == 0) {
    return ab_monomial(Rational(1), 0, n);
  }
  MultiPoly sum;
  for (long j = 1; j <= k; ++j) {
    const Rational c = Rational(n - k) * Rational(binomial(n - 1, j - 1) * binomial(k - 1, j - 1)) / Rational(j);
    sum += ab_monomial(c, j, n - j);
  }
  return sum;
}

Rational morrison_g(std::size_t n, const PointAssignment& pt) {
  if (n < 1) {
    throw IndexOutOfRange("Morrison's formula is stated for n >= 1");
  }
  const auto s = numeric_symbols(pt);
  if (s.x == s.alpha || s.alpha == s.beta) {
    throw DenominatorVanishes("Morrison's formula needs x != α and α != β, point " + pt.to_string());
  }
  return morrison_value(n, s);
}

RatFunc morrison_symbolic(std::size_t n) {
  if (n < 1) {
    throw IndexOutOfRange("Morrison's formula is stated for n >= 1");
  }
  return morrison_value(n, symbolic_ratfunc());
}

mpz_class catalan(std::size_t n) {
  const long nn = static_cast<long>(n);
  return binomial(2 * nn, nn) / (nn + 1);
}

}  // namespace runyon
