#pragma once

#include "runyon/ratfunc.hpp"
#include "runyon/ring.hpp"

#include <cstddef>
#include <vector>

namespace runyon {

using alg::MultiPoly;
using alg::PointAssignment;
using alg::RatFunc;
using alg::Var;

/// Values substituted for x, α, β when a construction is run over a
/// concrete coefficient ring: the symbols themselves (RatFunc, MultiPoly)
/// or the coordinates of a sample point (Rational).
template <CoefficientRing R>
struct Symbols {
  R x;
  R alpha;
  R beta;
};

Symbols<RatFunc> symbolic_ratfunc();
Symbols<MultiPoly> symbolic_poly();
Symbols<Rational> numeric_symbols(const PointAssignment& pt);

/// sum_{j} C(r,j) C(k,j) α^j β^{k-j}; zero for k < 0.
MultiPoly phi(long r, long k);

/// g_n(α) = (1/n) sum_{k=0}^{n-1} C(n,k) C(n,k+1) β^{n-k} α^k, and g_0(α) = 1.
MultiPoly g_alpha_closed(std::size_t n);

/// Same sum, evaluated in an arbitrary ring.
template <CoefficientRing R>
R g_alpha_value(std::size_t n, const R& alpha, const R& beta);

/// Sum defining Carlitz's C_{r,n}, with g_{r-s}(α) from g_alpha_closed.
MultiPoly c_direct(long r, long n);
/// The min/max closed expression offered as the simplification of C_{r,n},
/// evaluated exactly as printed.
MultiPoly c_translated(long r, long n);

/// A_r^{(n)} = β φ_{r,n-1} - α C_{r,n} - β φ_{r-1,n-1}, 1 <= r <= n-1.
MultiPoly carlitz_A(long r, long n);
/// A_0^{(n)} = β^n; A_k^{(n)} = (n-k) sum_j (1/j) C(n-1,j-1) C(k-1,j-1) α^j β^{n-j}.
MultiPoly riordan_A(long k, long n);

/// Morrison's expression for g_n(x), x != α.
template <CoefficientRing R>
R morrison_value(std::size_t n, const Symbols<R>& s);
/// Exact value at a point. Throws DenominatorVanishes if x = α or α = β.
Rational morrison_g(std::size_t n, const PointAssignment& pt);
RatFunc morrison_symbolic(std::size_t n);

/// (1/(n+1)) C(2n, n).
mpz_class catalan(std::size_t n);

// ---------------------------------------------------------------------------

template <CoefficientRing R>
R g_alpha_value(std::size_t n, const R& alpha, const R& beta) {
  using T = RingTraits<R>;
  if (n == 0) {
    return T::one();
  }
  const long nn = static_cast<long>(n);
  std::vector<R> beta_pows{T::one()};
  for (long i = 1; i <= nn; ++i) beta_pows.push_back(beta_pows.back() * beta);
  R sum = T::zero();
  R alpha_pow = T::one();
  for (long k = 0; k < nn; ++k) {
    const Rational c = Rational(binomial(nn, k) * binomial(nn, k + 1)) / Rational(nn);
    sum = sum + T::from_rational(c) * beta_pows[static_cast<std::size_t>(nn - k)] * alpha_pow;
    alpha_pow = alpha_pow * alpha;
  }
  return sum;
}

template <CoefficientRing R>
R morrison_value(std::size_t n, const Symbols<R>& s) {
  using T = RingTraits<R>;
  const R amb = s.alpha - s.beta;
  const R amx = s.alpha - s.x;
  const R xmb = s.x - s.beta;
  auto ipow = [](const R& base, long e) {
    R out = T::one();
    for (long i = 0; i < (e < 0 ? -e : e); ++i) out = out * base;
    return e < 0 ? T::divide(T::one(), out) : out;
  };
  if (!T::is_invertible(amx) || !T::is_invertible(amb)) {
    throw DenominatorVanishes("Morrison's formula needs x != α and α != β");
  }
  const long nn = static_cast<long>(n);
  R value = ipow(amb, nn) * ipow(s.x, nn) * ipow(amx, -nn);
  R sum = T::zero();
  for (long k = 1; k <= nn; ++k) {
    sum = sum + ipow(s.x, nn - k) * ipow(amx, k - 1 - nn) * ipow(amb, nn + 1 - 2 * k) * ipow(xmb, k) *
                    g_alpha_value(static_cast<std::size_t>(k - 1), s.alpha, s.beta);
  }
  return value - s.alpha * sum;
}

}  // namespace runyon
