#pragma once

#include "runyon/rational.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace runyon::alg {

/// The four symbols of the problem, in the fixed order used by the
/// monomial ordering and by printing.
enum class Var : std::uint8_t { X = 0, Alpha = 1, Beta = 2, W = 3 };

inline constexpr std::size_t kNumVars = 4;
inline constexpr std::array<Var, kNumVars> kAllVars{Var::X, Var::Alpha, Var::Beta, Var::W};

std::string var_name(Var v, bool ascii);
/// Accepts "x", "alpha"/"α", "beta"/"β", "w".
std::optional<Var> parse_var(std::string_view name);

/// Exponent vector over (x, α, β, w). Ordered graded-lexicographically.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::array<std::uint32_t, kNumVars> exps) : exps_(exps) {}
  static Monomial of(Var v, std::uint32_t e = 1);

  std::uint32_t operator[](Var v) const { return exps_[static_cast<std::size_t>(v)]; }
  const std::array<std::uint32_t, kNumVars>& exponents() const { return exps_; }
  std::uint32_t degree() const;
  bool is_one() const { return degree() == 0; }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& o) const;
  /// Precondition: `d.divides(*this)`.
  Monomial operator/(const Monomial& d) const;
  Monomial without(Var v) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::array<std::uint32_t, kNumVars> exps_{};
};

struct Term {
  Monomial monomial;
  Rational coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Values for some subset of the variables. Evaluating a polynomial that
/// mentions an unassigned variable throws std::invalid_argument.
class PointAssignment {
 public:
  PointAssignment() = default;
  PointAssignment(Rational x, Rational alpha, Rational beta);

  PointAssignment& set(Var v, Rational value);
  const std::optional<Rational>& get(Var v) const { return values_[static_cast<std::size_t>(v)]; }
  const Rational& at(Var v) const;
  std::string to_string(bool ascii = true) const;

 private:
  std::array<std::optional<Rational>, kNumVars> values_{};
};

/// Sparse polynomial over Q in (x, α, β, w). Terms are kept sorted by
/// decreasing monomial with no zero coefficients, so structural equality
/// is mathematical equality.
class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(Rational c);  // NOLINT(google-explicit-constructor)
  MultiPoly(int c) : MultiPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  MultiPoly(Monomial m, Rational c);
  static MultiPoly var(Var v);
  /// Builds from arbitrary (unsorted, possibly repeated or zero) terms.
  static MultiPoly from_terms(std::vector<Term> terms);

  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (coefficient of the unit monomial).
  Rational constant_term() const;
  Rational coeff(const Monomial& m) const;
  /// Precondition: nonzero.
  const Term& leading_term() const { return terms_.front(); }

  std::uint32_t degree_in(Var v) const;
  std::uint32_t total_degree() const;
  bool mentions(Var v) const { return degree_in(v) > 0; }
  /// Degree if every term has the same total degree; nullopt otherwise
  /// (and for zero).
  std::optional<std::uint32_t> homogeneous_degree() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  MultiPoly scaled(const Rational& c) const;
  MultiPoly pow(std::uint32_t k) const;

  /// Polynomial substitution of `v` by `value`.
  MultiPoly subst(Var v, const MultiPoly& value) const;
  /// Coefficients c_0..c_d (free of v) with *this = sum c_e v^e.
  std::vector<MultiPoly> coefficients_in(Var v) const;

  Rational eval(const PointAssignment& pt) const;

  /// Human-readable form in decreasing monomial order; "0" for zero.
  std::string to_string(bool ascii = false) const;

 private:
  void add_scaled(const MultiPoly& o, const Rational& c, const Monomial& m);

  std::vector<Term> terms_;
};

/// Multivariate division with remainder under the graded-lex order.
std::pair<MultiPoly, MultiPoly> divide_with_remainder(const MultiPoly& p, const MultiPoly& d);
/// Quotient if `d` divides `p` exactly, nullopt otherwise. Throws
/// DenominatorVanishes for d == 0.
std::optional<MultiPoly> try_exact_div(const MultiPoly& p, const MultiPoly& d);
/// Quotient q with q*d == p. Throws DivisionNotExact on nonzero remainder.
MultiPoly exact_div(const MultiPoly& p, const MultiPoly& d);

enum class PolyOp { Add, Sub, Mul, Pow };
/// Dispatcher over the ring operations; `k` is the exponent for Pow.
MultiPoly poly_arith(const MultiPoly& p, const MultiPoly& q, PolyOp op, std::uint32_t k = 0);

}  // namespace runyon::alg
