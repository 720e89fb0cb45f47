#pragma once

#include "runyon/errors.hpp"
#include "runyon/multipoly.hpp"
#include "runyon/ratfunc.hpp"
#include "runyon/rational.hpp"

#include <concepts>
#include <string>

namespace runyon {

/// Per-type glue the series code needs beyond the arithmetic operators.
/// `divide(a, b)` must return q with q*b == a or throw.
template <class R>
struct RingTraits;

template <>
struct RingTraits<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& a) { return a.is_zero(); }
  static bool is_invertible(const Rational& a) { return !a.is_zero(); }
  static Rational divide(const Rational& a, const Rational& b) { return a / b; }
  static Rational from_rational(const Rational& q) { return q; }
  static std::string to_string(const Rational& a, bool /*ascii*/) { return a.to_string(); }
};

template <>
struct RingTraits<alg::MultiPoly> {
  static alg::MultiPoly zero() { return {}; }
  static alg::MultiPoly one() { return alg::MultiPoly(1); }
  static bool is_zero(const alg::MultiPoly& a) { return a.is_zero(); }
  static bool is_invertible(const alg::MultiPoly& a) { return a.is_constant() && !a.is_zero(); }
  static alg::MultiPoly divide(const alg::MultiPoly& a, const alg::MultiPoly& b) { return alg::exact_div(a, b); }
  static alg::MultiPoly from_rational(const Rational& q) { return alg::MultiPoly(q); }
  static std::string to_string(const alg::MultiPoly& a, bool ascii) { return a.to_string(ascii); }
};

template <>
struct RingTraits<alg::RatFunc> {
  static alg::RatFunc zero() { return {}; }
  static alg::RatFunc one() { return alg::RatFunc(1); }
  static bool is_zero(const alg::RatFunc& a) { return a.is_zero(); }
  static bool is_invertible(const alg::RatFunc& a) { return !a.is_zero(); }
  static alg::RatFunc divide(const alg::RatFunc& a, const alg::RatFunc& b) { return a / b; }
  static alg::RatFunc from_rational(const Rational& q) { return alg::RatFunc(q); }
  static std::string to_string(const alg::RatFunc& a, bool ascii) { return a.to_string(ascii); }
};

/// Commutative ring usable as a series coefficient domain.
template <class R>
concept CoefficientRing = std::regular<R> && requires(const R& a, const R& b, const Rational& q) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { RingTraits<R>::zero() } -> std::convertible_to<R>;
  { RingTraits<R>::one() } -> std::convertible_to<R>;
  { RingTraits<R>::is_zero(a) } -> std::convertible_to<bool>;
  { RingTraits<R>::is_invertible(a) } -> std::convertible_to<bool>;
  { RingTraits<R>::divide(a, b) } -> std::convertible_to<R>;
  { RingTraits<R>::from_rational(q) } -> std::convertible_to<R>;
};

}  // namespace runyon
