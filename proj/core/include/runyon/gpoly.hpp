#pragma once

#include "runyon/ratfunc.hpp"
#include "runyon/wbasis.hpp"

#include <cstddef>
#include <vector>

namespace runyon {

using alg::MultiPoly;
using alg::PointAssignment;
using alg::RatFunc;

/// g_n held in the w-basis: g_n = sum_{k<n} A_k w^k, w = (x-β)/(α-β).
/// n = 0 has the empty basis and means g_0 = 1.
struct GPoly {
  std::size_t n = 0;
  std::vector<MultiPoly> w_basis;

  /// View over (x, α, β); denominator (α-β)^{n-1}.
  RatFunc ratfunc() const { return alg::from_w_basis(w_basis); }
  /// sum A_k w^k as one polynomial in (α, β, w).
  MultiPoly w_polynomial() const;
  Rational eval(const PointAssignment& pt) const { return ratfunc().eval(pt); }

  friend bool operator==(const GPoly&, const GPoly&) = default;
};

/// Numerators of the recurrence with α and β bound to `alpha` and `beta`
/// (the symbols, or constants for a numeric run). Entry 0 is g_0 = 1;
/// entry n >= 1 is (α-β)^{n-1} g_n(x), a polynomial. Each step divides
/// the right-hand side exactly by (x - α); DivisionNotExact would mean the
/// recurrence was transcribed wrongly.
std::vector<MultiPoly> recurrence_numerators(std::size_t nmax, const MultiPoly& alpha, const MultiPoly& beta);

/// Memo of g_0..g_n from the recurrence. Not thread-safe; give each
/// thread its own instance.
class GRecurrence {
 public:
  const GPoly& operator()(std::size_t n);
  /// (α-β)^{n-1} g_n(x) for n >= 1, and 1 for n = 0.
  const MultiPoly& scaled_numerator(std::size_t n);

 private:
  void extend(std::size_t n);

  std::vector<MultiPoly> numerators_;
  std::vector<GPoly> g_;
};

GPoly g_recurrence(std::size_t n);
/// [t^n] 1/(1-y) with y = tΦ(y), Φ(y) = ((α-β)yw + β)/(1 - yw), by
/// Lagrange inversion over Q[α, β, w]; g_0 = 1.
GPoly g_lagrange(std::size_t n);
/// g_n assembled from riordan_A(0..n-1, n).
GPoly g_riordan(std::size_t n);

}  // namespace runyon
