#pragma once

#include "runyon/multipoly.hpp"

#include <array>
#include <cstdint>
#include <string>

namespace runyon::alg {

/// Linear forms that the denominator of a RatFunc is factored over.
/// Every denominator arising in this library is a product of these.
enum class Factor : std::uint8_t { AlphaMinusBeta = 0, XMinusAlpha, XMinusBeta, Alpha, Beta, X };
inline constexpr std::size_t kNumFactors = 6;

const MultiPoly& factor_poly(Factor f);

/// Quotient num/den of two polynomials. The denominator is held as
/// prod f_i^{e_i} * rest, where the f_i are the tracked linear forms and
/// `rest` is monic. Tracked factors are cancelled against the numerator by
/// trial division; no general gcd is ever computed, so two equal RatFuncs
/// need not be structurally identical. Use operator== (cross-multiplication).
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(Rational c) : num_(std::move(c)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(int c) : num_(c) {}                  // NOLINT(google-explicit-constructor)
  RatFunc(MultiPoly num) : num_(std::move(num)) {}  // NOLINT(google-explicit-constructor)
  /// Throws DenominatorVanishes if `den` is the zero polynomial.
  RatFunc(MultiPoly num, MultiPoly den);

  const MultiPoly& num() const { return num_; }
  /// Expanded denominator.
  MultiPoly den() const;
  std::uint32_t factor_exponent(Factor f) const { return exps_[static_cast<std::size_t>(f)]; }
  const MultiPoly& residual_den() const { return rest_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const;
  /// Throws DivisionNotExact unless the denominator cancels completely.
  MultiPoly as_polynomial() const;

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  /// Throws DenominatorVanishes when b == 0.
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  RatFunc inverse() const;
  RatFunc pow(std::uint32_t k) const;
  RatFunc scaled(const Rational& c) const;

  /// Cross-multiplication equality: a.num * b.den == b.num * a.den.
  friend bool operator==(const RatFunc& a, const RatFunc& b);

  /// Throws DenominatorVanishes if the denominator is zero at `pt`.
  Rational eval(const PointAssignment& pt) const;

  std::string to_string(bool ascii = false) const;

 private:
  void cancel();

  MultiPoly num_;
  std::array<std::uint32_t, kNumFactors> exps_{};
  MultiPoly rest_{1};
};

bool ratfunc_eq(const RatFunc& a, const RatFunc& b);
Rational eval_at_point(const RatFunc& r, const PointAssignment& pt);

/// Ring-homomorphic substitution of `v` by a rational function.
RatFunc poly_subst(const MultiPoly& p, Var v, const RatFunc& value);
RatFunc ratfunc_subst(const RatFunc& r, Var v, const RatFunc& value);

}  // namespace runyon::alg
