#pragma once

#include "runyon/gpoly.hpp"
#include "runyon/ratfunc.hpp"
#include "runyon/series.hpp"

#include <nlohmann/json.hpp>

namespace runyon {

using Json = nlohmann::ordered_json;

/// [{"coefficient": "p/q", "exponents": {"alpha": 2, ...}}, ...] in
/// decreasing monomial order; zero is [].
Json to_json(const alg::MultiPoly& p);
/// {"num": ..., "den": ...} with the denominator expanded.
Json to_json(const alg::RatFunc& r);
Json to_json(const Rational& q);
/// {"n": n, "A": [poly, ...], "ratfunc": {...}}.
Json to_json(const GPoly& g);

/// Throw ParseError on malformed input.
alg::MultiPoly multipoly_from_json(const Json& j);
alg::RatFunc ratfunc_from_json(const Json& j);

template <CoefficientRing R>
Json to_json(const series::TruncSeries<R>& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(to_json(c));
  return Json{{"variable", s.var()}, {"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

}  // namespace runyon
