#pragma once

#include "runyon/ratfunc.hpp"

#include <span>
#include <vector>

namespace runyon::alg {

/// x expressed through w = (x - β)/(α - β), i.e. β + w(α - β).
MultiPoly x_in_w();
/// w = (x - β)/(α - β) as a rational function.
RatFunc w_in_x();

/// Coefficients A_0..A_{n-1} in Q[α, β] with g = sum_k A_k w^k.
/// For n == 0 the only admissible g is 1 and the result is empty.
/// Throws BasisOverflow if g is not a polynomial in w of degree <= n-1
/// over Q[α, β].
std::vector<MultiPoly> to_w_basis(const RatFunc& g, std::size_t n);

/// sum_k A_k (x - β)^k (α - β)^{-k}. The empty list maps to 1.
RatFunc from_w_basis(std::span<const MultiPoly> coeffs);

}  // namespace runyon::alg
