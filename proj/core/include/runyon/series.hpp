#pragma once

#include "runyon/errors.hpp"
#include "runyon/ring.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace runyon::series {

/// Power series c_0 + c_1 v + ... + c_N v^N + O(v^{N+1}) in the variable
/// named `var`. The coefficient vector always has exactly N+1 entries.
template <CoefficientRing R>
class TruncSeries {
 public:
  using Traits = RingTraits<R>;

  TruncSeries() : TruncSeries("t", 0) {}
  TruncSeries(std::string var, std::size_t order) : var_(std::move(var)), coeffs_(order + 1, Traits::zero()) {}
  TruncSeries(std::string var, std::size_t order, std::vector<R> coeffs) : var_(std::move(var)), coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1, Traits::zero());
  }

  static TruncSeries constant(std::string var, std::size_t order, R c) {
    TruncSeries s(std::move(var), order);
    s.coeffs_[0] = std::move(c);
    return s;
  }
  /// The series `var` itself (zero when order == 0).
  static TruncSeries variable(std::string var, std::size_t order) {
    TruncSeries s(std::move(var), order);
    if (order >= 1) s.coeffs_[1] = Traits::one();
    return s;
  }

  const std::string& var() const { return var_; }
  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<R>& coeffs() const { return coeffs_; }
  const R& operator[](std::size_t k) const { return coeffs_.at(k); }
  void set(std::size_t k, R value) { coeffs_.at(k) = std::move(value); }

  /// Index of the first nonzero coefficient, or order()+1 for zero.
  std::size_t valuation() const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (!Traits::is_zero(coeffs_[k])) return k;
    }
    return coeffs_.size();
  }

  /// Truncates or zero-pads to `order`.
  TruncSeries resized(std::size_t order) const {
    TruncSeries out = *this;
    out.coeffs_.resize(order + 1, Traits::zero());
    return out;
  }
  TruncSeries renamed(std::string var) const {
    TruncSeries out = *this;
    out.var_ = std::move(var);
    return out;
  }

  TruncSeries operator-() const {
    TruncSeries out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }
  TruncSeries scaled(const R& c) const {
    TruncSeries out = *this;
    for (auto& x : out.coeffs_) x = x * c;
    return out;
  }

  /// d/dvar; the result has order N-1 (order 0 for a constant series).
  TruncSeries derivative() const {
    const std::size_t n = order() == 0 ? 0 : order() - 1;
    TruncSeries out(var_, n);
    for (std::size_t k = 1; k <= order(); ++k) {
      out.coeffs_[k - 1] = coeffs_[k] * Traits::from_rational(Rational(static_cast<long>(k)));
    }
    return out;
  }

  /// Divides by var^k; the first k coefficients must vanish. Order drops by k.
  TruncSeries shifted_down(std::size_t k) const {
    if (k > order()) {
      throw ValuationMismatch("cannot divide an order-" + std::to_string(order()) + " series by " + var_ + "^" +
                              std::to_string(k));
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (!Traits::is_zero(coeffs_[i])) {
        throw ValuationMismatch("coefficient " + std::to_string(i) + " is nonzero; cannot divide by " + var_ + "^" +
                                std::to_string(k));
      }
    }
    return TruncSeries(var_, order() - k, std::vector<R>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
  }
  /// Multiplies by var^k, keeping the order.
  TruncSeries shifted_up(std::size_t k) const {
    TruncSeries out(var_, order());
    for (std::size_t i = 0; i + k <= order(); ++i) out.coeffs_[i + k] = coeffs_[i];
    return out;
  }

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) { return combine(a, b, false); }
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return combine(a, b, true); }
  /// Truncated Cauchy product.
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    check_var(a, b);
    const std::size_t n = std::min(a.order(), b.order());
    TruncSeries out(a.var_, n);
    const std::size_t va = a.valuation();
    const std::size_t vb = b.valuation();
    for (std::size_t k = va + vb; k <= n; ++k) {
      R sum = Traits::zero();
      bool any = false;
      for (std::size_t i = va; i + vb <= k; ++i) {
        const R& ai = a.coeffs_[i];
        const R& bj = b.coeffs_[k - i];
        if (Traits::is_zero(ai) || Traits::is_zero(bj)) continue;
        sum = any ? sum + ai * bj : ai * bj;
        any = true;
      }
      out.coeffs_[k] = std::move(sum);
    }
    return out;
  }

  /// Coefficient-wise equality up to the common order; false for
  /// different variables.
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.var_ == b.var_ && !first_mismatch(a, b).has_value();
  }

  /// First index below the common order where the coefficients differ.
  friend std::optional<std::size_t> first_mismatch(const TruncSeries& a, const TruncSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    for (std::size_t k = 0; k <= n; ++k) {
      if (!(a.coeffs_[k] == b.coeffs_[k])) return k;
    }
    return std::nullopt;
  }

 private:
  static void check_var(const TruncSeries& a, const TruncSeries& b) {
    if (a.var_ != b.var_) {
      throw VariableMismatch("series in '" + a.var_ + "' combined with series in '" + b.var_ + "'");
    }
  }
  static TruncSeries combine(const TruncSeries& a, const TruncSeries& b, bool subtract) {
    check_var(a, b);
    const std::size_t n = std::min(a.order(), b.order());
    TruncSeries out(a.var_, n);
    for (std::size_t k = 0; k <= n; ++k) {
      out.coeffs_[k] = subtract ? a.coeffs_[k] - b.coeffs_[k] : a.coeffs_[k] + b.coeffs_[k];
    }
    return out;
  }

  std::string var_;
  std::vector<R> coeffs_;
};

enum class SeriesOp { Add, Sub, Mul };

template <CoefficientRing R>
TruncSeries<R> series_arith(const TruncSeries<R>& a, const TruncSeries<R>& b, SeriesOp op) {
  switch (op) {
    case SeriesOp::Add: return a + b;
    case SeriesOp::Sub: return a - b;
    case SeriesOp::Mul: return a * b;
  }
  return a;
}

/// a / b, computed coefficient by coefficient with exact ring division by
/// b_0. The result has order min(a.order, b.order).
template <CoefficientRing R>
TruncSeries<R> series_divide(const TruncSeries<R>& a, const TruncSeries<R>& b) {
  using T = RingTraits<R>;
  if (a.var() != b.var()) {
    throw VariableMismatch("series in '" + a.var() + "' divided by series in '" + b.var() + "'");
  }
  if (T::is_zero(b[0])) {
    throw NotInvertibleConstantTerm("divisor has zero constant term");
  }
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<R> q;
  q.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    R acc = a[k];
    for (std::size_t i = 1; i <= k; ++i) {
      if (T::is_zero(b[i]) || T::is_zero(q[k - i])) continue;
      acc = acc - b[i] * q[k - i];
    }
    q.push_back(T::is_zero(acc) ? T::zero() : T::divide(acc, b[0]));
  }
  return TruncSeries<R>(a.var(), n, std::move(q));
}

template <CoefficientRing R>
TruncSeries<R> series_inverse(const TruncSeries<R>& s) {
  using T = RingTraits<R>;
  if (!T::is_invertible(s[0])) {
    throw NotInvertibleConstantTerm("constant term " + T::to_string(s[0], true) + " is not a unit");
  }
  return series_divide(TruncSeries<R>::constant(s.var(), s.order(), T::one()), s);
}

/// Square root with the branch fixed by `root`, the required constant term
/// (root*root must equal s[0]; 2*root must divide the recurrence terms).
template <CoefficientRing R>
TruncSeries<R> series_sqrt(const TruncSeries<R>& s, const R& root) {
  using T = RingTraits<R>;
  if (!(root * root == s[0])) {
    throw BadRootHint("(" + T::to_string(root, true) + ")^2 != " + T::to_string(s[0], true));
  }
  const R two_root = root + root;
  if (T::is_zero(two_root)) {
    throw NotInvertibleConstantTerm("square root needs a nonzero constant term");
  }
  std::vector<R> r;
  r.reserve(s.order() + 1);
  r.push_back(root);
  for (std::size_t k = 1; k <= s.order(); ++k) {
    R acc = s[k];
    for (std::size_t i = 1; i < k; ++i) {
      if (T::is_zero(r[i]) || T::is_zero(r[k - i])) continue;
      acc = acc - r[i] * r[k - i];
    }
    r.push_back(T::is_zero(acc) ? T::zero() : T::divide(acc, two_root));
  }
  return TruncSeries<R>(s.var(), s.order(), std::move(r));
}

/// s^k by repeated squaring.
template <CoefficientRing R>
TruncSeries<R> series_pow(const TruncSeries<R>& s, std::size_t k) {
  auto result = TruncSeries<R>::constant(s.var(), s.order(), RingTraits<R>::one());
  auto base = s;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

/// outer(inner), Horner scheme. The result lives in inner's variable and is
/// truncated to min(outer.order, inner.order).
template <CoefficientRing R>
TruncSeries<R> series_compose(const TruncSeries<R>& outer, const TruncSeries<R>& inner) {
  using T = RingTraits<R>;
  if (!T::is_zero(inner[0])) {
    throw NonzeroInnerConstant("inner series has constant term " + T::to_string(inner[0], true));
  }
  const std::size_t n = std::min(outer.order(), inner.order());
  const auto in = inner.resized(n);
  auto result = TruncSeries<R>::constant(inner.var(), n, outer[n]);
  for (std::size_t k = n; k-- > 0;) {
    result = result * in;
    result.set(0, result[0] + outer[k]);
  }
  return result;
}

/// Compositional inverse by Newton iteration, R <- R - (S(R) - v)/S'(R),
/// doubling the precision each step. The result is a series in
/// `result_var` (defaults to s's variable).
template <CoefficientRing R>
TruncSeries<R> series_revert(const TruncSeries<R>& s, std::optional<std::string> result_var = std::nullopt) {
  using T = RingTraits<R>;
  const std::string var = result_var.value_or(s.var());
  if (s.order() < 1 || !T::is_zero(s[0])) {
    throw ValuationMismatch("reversion needs a zero constant term");
  }
  if (!T::is_invertible(s[1])) {
    throw ValuationMismatch("reversion needs an invertible linear coefficient, got " + T::to_string(s[1], true));
  }
  const std::size_t n = s.order();
  const auto f = s.renamed(var);
  auto r = TruncSeries<R>(var, 1);
  r.set(1, T::divide(T::one(), s[1]));
  for (std::size_t prec = 1; prec < n;) {
    prec = std::min(2 * prec, n);
    const auto fp = f.resized(prec);
    r = r.resized(prec);
    auto residual = series_compose(fp, r) - TruncSeries<R>::variable(var, prec);
    auto slope = series_compose(fp.derivative().resized(prec), r);
    r = r - series_divide(residual, slope);
  }
  return r.resized(n);
}

/// A rational function num(y)/den(y) with polynomial numerator and
/// denominator in an auxiliary variable y over the coefficient ring.
template <CoefficientRing R>
struct YFraction {
  std::vector<R> num;
  std::vector<R> den{RingTraits<R>::one()};

  const R& den_at_zero() const { return den.at(0); }

  /// Evaluates at a series y with zero constant term.
  TruncSeries<R> at(const TruncSeries<R>& y) const {
    using T = RingTraits<R>;
    if (den.empty() || !T::is_invertible(den[0])) {
      throw PoleAtOrigin("denominator of the y-fraction vanishes at y = 0");
    }
    const auto n = polynomial_at(num, y);
    const auto d = polynomial_at(den, y);
    return series_divide(n, d);
  }

  /// Expansion in powers of `var` (i.e. the value at y = var).
  TruncSeries<R> expand(const std::string& var, std::size_t order) const {
    return at(TruncSeries<R>::variable(var, order));
  }

 private:
  static TruncSeries<R> polynomial_at(const std::vector<R>& p, const TruncSeries<R>& y) {
    using T = RingTraits<R>;
    const std::size_t deg = p.empty() ? 0 : p.size() - 1;
    std::vector<R> c(p.begin(), p.end());
    if (c.empty()) c.push_back(T::zero());
    c.resize(std::max(deg, y.order()) + 1, T::zero());
    TruncSeries<R> outer(y.var(), std::max(deg, y.order()), std::move(c));
    return series_compose(outer.resized(y.order()), y);
  }
};

/// The series y with y = v * phi(y) + O(v^{N+1}), by the fixed-point
/// iteration y <- v*phi(y) from y = 0. Each pass fixes one more coefficient.
template <CoefficientRing R>
TruncSeries<R> solve_functional(const YFraction<R>& phi, std::size_t order, const std::string& var = "t") {
  using T = RingTraits<R>;
  if (phi.den.empty() || !T::is_invertible(phi.den[0])) {
    throw PoleAtOrigin("phi has a pole at y = 0");
  }
  TruncSeries<R> y(var, order);
  for (std::size_t pass = 0; pass < order; ++pass) {
    auto next = phi.at(y).shifted_up(1);
    if (next == y) break;
    y = std::move(next);
  }
  return y;
}

/// [v^n] F(y(v)) where y = v*phi(y), via (1/n) [z^{n-1}] F'(z) phi(z)^n.
template <CoefficientRing R>
R lagrange_coeff(const YFraction<R>& f, const YFraction<R>& phi, std::size_t n) {
  using T = RingTraits<R>;
  if (n == 0) {
    throw IndexOutOfRange("Lagrange inversion needs n >= 1");
  }
  if (phi.den.empty() || !T::is_invertible(phi.den[0]) || f.den.empty() || !T::is_invertible(f.den[0])) {
    throw PoleAtOrigin("F or phi has a pole at y = 0");
  }
  const auto df = f.expand("z", n).derivative();
  const auto phi_n = series_pow(phi.expand("z", n - 1), n);
  const auto prod = df * phi_n;
  return prod[n - 1] * T::from_rational(Rational(1) / Rational(static_cast<long>(n)));
}

}  // namespace runyon::series
