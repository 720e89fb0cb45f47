#include "runyon/ratfunc.hpp"

#include "runyon/errors.hpp"

#include <algorithm>

namespace runyon::alg {

const MultiPoly& factor_poly(Factor f) {
  static const std::array<MultiPoly, kNumFactors> polys = [] {
    const MultiPoly x = MultiPoly::var(Var::X);
    const MultiPoly a = MultiPoly::var(Var::Alpha);
    const MultiPoly b = MultiPoly::var(Var::Beta);
    return std::array<MultiPoly, kNumFactors>{a - b, x - a, x - b, a, b, x};
  }();
  return polys[static_cast<std::size_t>(f)];
}

namespace {

constexpr std::array<Factor, kNumFactors> kFactors{Factor::AlphaMinusBeta, Factor::XMinusAlpha, Factor::XMinusBeta,
                                                    Factor::Alpha,          Factor::Beta,        Factor::X};

MultiPoly factor_power(Factor f, std::uint32_t e) { return e == 0 ? MultiPoly(1) : factor_poly(f).pow(e); }

}  // namespace

RatFunc::RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)) {
  if (den.is_zero()) {
    throw DenominatorVanishes("rational function with zero denominator");
  }
  for (Factor f : kFactors) {
    auto& e = exps_[static_cast<std::size_t>(f)];
    while (!den.is_constant()) {
      auto q = try_exact_div(den, factor_poly(f));
      if (!q) break;
      den = std::move(*q);
      ++e;
    }
  }
  const Rational lead = den.leading_term().coeff;
  num_ = num_.scaled(Rational(1) / lead);
  rest_ = den.scaled(Rational(1) / lead);
  cancel();
}

void RatFunc::cancel() {
  if (num_.is_zero()) {
    exps_.fill(0);
    rest_ = MultiPoly(1);
    return;
  }
  for (Factor f : kFactors) {
    auto& e = exps_[static_cast<std::size_t>(f)];
    while (e > 0) {
      auto q = try_exact_div(num_, factor_poly(f));
      if (!q) break;
      num_ = std::move(*q);
      --e;
    }
  }
  if (!rest_.is_constant()) {
    if (auto q = try_exact_div(num_, rest_)) {
      num_ = std::move(*q);
      rest_ = MultiPoly(1);
    }
  }
}

MultiPoly RatFunc::den() const {
  MultiPoly d = rest_;
  for (Factor f : kFactors) {
    if (const auto e = exps_[static_cast<std::size_t>(f)]; e > 0) {
      d *= factor_power(f, e);
    }
  }
  return d;
}

bool RatFunc::is_polynomial() const {
  return rest_.is_constant() && std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

MultiPoly RatFunc::as_polynomial() const {
  if (!is_polynomial()) {
    throw DivisionNotExact("rational function " + to_string(true) + " is not a polynomial");
  }
  return num_;
}

RatFunc RatFunc::operator-() const {
  RatFunc out = *this;
  out.num_ = -out.num_;
  return out;
}

namespace {

// Multipliers bringing a and b to the common denominator lcm(tracked) * rest.
struct CommonDen {
  MultiPoly mult_a{1};
  MultiPoly mult_b{1};
  std::array<std::uint32_t, kNumFactors> exps{};
  MultiPoly rest{1};
};

}  // namespace

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_polynomial() && b.is_polynomial()) {
    return RatFunc(a.num_ + b.num_);
  }
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  CommonDen c;
  for (Factor f : kFactors) {
    const auto i = static_cast<std::size_t>(f);
    c.exps[i] = std::max(a.exps_[i], b.exps_[i]);
    if (c.exps[i] > a.exps_[i]) c.mult_a *= factor_power(f, c.exps[i] - a.exps_[i]);
    if (c.exps[i] > b.exps_[i]) c.mult_b *= factor_power(f, c.exps[i] - b.exps_[i]);
  }
  if (a.rest_ == b.rest_) {
    c.rest = a.rest_;
  } else {
    c.rest = a.rest_ * b.rest_;
    c.mult_a *= b.rest_;
    c.mult_b *= a.rest_;
  }
  RatFunc out;
  out.num_ = a.num_ * c.mult_a + b.num_ * c.mult_b;
  out.exps_ = c.exps;
  out.rest_ = std::move(c.rest);
  out.cancel();
  return out;
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) {
    return {};
  }
  RatFunc out;
  out.num_ = a.num_ * b.num_;
  for (std::size_t i = 0; i < kNumFactors; ++i) {
    out.exps_[i] = a.exps_[i] + b.exps_[i];
  }
  out.rest_ = a.rest_ * b.rest_;
  if (!a.is_polynomial() || !b.is_polynomial()) {
    out.cancel();
  }
  return out;
}

RatFunc RatFunc::inverse() const {
  if (num_.is_zero()) {
    throw DenominatorVanishes("inverse of the zero rational function");
  }
  return RatFunc(den(), num_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc RatFunc::pow(std::uint32_t k) const {
  RatFunc result(1);
  for (std::uint32_t i = 0; i < k; ++i) {
    result *= *this;
  }
  return result;
}

RatFunc RatFunc::scaled(const Rational& c) const {
  if (c.is_zero()) {
    return {};
  }
  RatFunc out = *this;
  out.num_ = out.num_.scaled(c);
  return out;
}

bool operator==(const RatFunc& a, const RatFunc& b) {
  if (a.exps_ == b.exps_ && a.rest_ == b.rest_) {
    return a.num_ == b.num_;
  }
  return a.num_ * b.den() == b.num_ * a.den();
}

Rational RatFunc::eval(const PointAssignment& pt) const {
  const Rational d = den().eval(pt);
  if (d.is_zero()) {
    throw DenominatorVanishes("denominator " + den().to_string(true) + " vanishes at " + pt.to_string());
  }
  return num_.eval(pt) / d;
}

std::string RatFunc::to_string(bool ascii) const {
  if (is_polynomial()) {
    return num_.to_string(ascii);
  }
  return "(" + num_.to_string(ascii) + ")/(" + den().to_string(ascii) + ")";
}

bool ratfunc_eq(const RatFunc& a, const RatFunc& b) { return a == b; }

Rational eval_at_point(const RatFunc& r, const PointAssignment& pt) { return r.eval(pt); }

RatFunc poly_subst(const MultiPoly& p, Var v, const RatFunc& value) {
  const auto coeffs = p.coefficients_in(v);
  const MultiPoly vn = value.num();
  const MultiPoly vd = value.den();
  const std::size_t deg = coeffs.size() - 1;
  // sum c_e * vn^e * vd^(deg-e), over vd^deg
  std::vector<MultiPoly> den_powers{MultiPoly(1)};
  for (std::size_t e = 1; e <= deg; ++e) {
    den_powers.push_back(den_powers.back() * vd);
  }
  MultiPoly num;
  MultiPoly num_power(1);
  for (std::size_t e = 0; e <= deg; ++e) {
    if (!coeffs[e].is_zero()) {
      num += coeffs[e] * num_power * den_powers[deg - e];
    }
    if (e < deg) {
      num_power *= vn;
    }
  }
  return RatFunc(std::move(num), den_powers[deg]);
}

RatFunc ratfunc_subst(const RatFunc& r, Var v, const RatFunc& value) {
  return poly_subst(r.num(), v, value) / poly_subst(r.den(), v, value);
}

}  // namespace runyon::alg
