#include "runyon/multipoly.hpp"

#include "runyon/errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace runyon::alg {

std::string var_name(Var v, bool ascii) {
  switch (v) {
    case Var::X: return "x";
    case Var::Alpha: return ascii ? "alpha" : "α";
    case Var::Beta: return ascii ? "beta" : "β";
    case Var::W: return "w";
  }
  return "?";
}

std::optional<Var> parse_var(std::string_view name) {
  if (name == "x") return Var::X;
  if (name == "alpha" || name == "α" || name == "a") return Var::Alpha;
  if (name == "beta" || name == "β" || name == "b") return Var::Beta;
  if (name == "w") return Var::W;
  return std::nullopt;
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::of(Var v, std::uint32_t e) {
  Monomial m;
  m.exps_[static_cast<std::size_t>(v)] = e;
  return m;
}

std::uint32_t Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0U); }

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (exps_[i] > other.exps_[i]) {
      return false;
    }
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    r.exps_[i] = exps_[i] + o.exps_[i];
  }
  return r;
}

Monomial Monomial::operator/(const Monomial& d) const {
  Monomial r;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    r.exps_[i] = exps_[i] - d.exps_[i];
  }
  return r;
}

Monomial Monomial::without(Var v) const {
  Monomial r = *this;
  r.exps_[static_cast<std::size_t>(v)] = 0;
  return r;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) {
    return c;
  }
  return a.exps_ <=> b.exps_;
}

// --------------------------------------------------------- PointAssignment

PointAssignment::PointAssignment(Rational x, Rational alpha, Rational beta) {
  set(Var::X, std::move(x));
  set(Var::Alpha, std::move(alpha));
  set(Var::Beta, std::move(beta));
}

PointAssignment& PointAssignment::set(Var v, Rational value) {
  values_[static_cast<std::size_t>(v)] = std::move(value);
  return *this;
}

const Rational& PointAssignment::at(Var v) const {
  const auto& slot = values_[static_cast<std::size_t>(v)];
  if (!slot) {
    throw std::invalid_argument("point assigns no value to " + var_name(v, true));
  }
  return *slot;
}

std::string PointAssignment::to_string(bool ascii) const {
  std::string out;
  for (Var v : kAllVars) {
    if (const auto& slot = get(v)) {
      if (!out.empty()) out += ", ";
      out += var_name(v, ascii) + "=" + slot->to_string();
    }
  }
  return "(" + out + ")";
}

// --------------------------------------------------------------- MultiPoly

namespace {

bool term_greater(const Term& a, const Term& b) { return a.monomial > b.monomial; }

}  // namespace

MultiPoly::MultiPoly(Rational c) {
  if (!c.is_zero()) {
    terms_.push_back({Monomial{}, std::move(c)});
  }
}

MultiPoly::MultiPoly(Monomial m, Rational c) {
  if (!c.is_zero()) {
    terms_.push_back({m, std::move(c)});
  }
}

MultiPoly MultiPoly::var(Var v) { return MultiPoly(Monomial::of(v), Rational(1)); }

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  MultiPoly out;
  out.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().monomial == t.monomial) {
      out.terms_.back().coeff += t.coeff;
    } else {
      if (!out.terms_.empty() && out.terms_.back().coeff.is_zero()) {
        out.terms_.pop_back();
      }
      out.terms_.push_back(std::move(t));
    }
  }
  if (!out.terms_.empty() && out.terms_.back().coeff.is_zero()) {
    out.terms_.pop_back();
  }
  return out;
}

bool MultiPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

Rational MultiPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) {
    return terms_.back().coeff;
  }
  return Rational(0);
}

Rational MultiPoly::coeff(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{m, Rational(0)}, term_greater);
  if (it != terms_.end() && it->monomial == m) {
    return it->coeff;
  }
  return Rational(0);
}

std::uint32_t MultiPoly::degree_in(Var v) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) {
    d = std::max(d, t.monomial[v]);
  }
  return d;
}

std::uint32_t MultiPoly::total_degree() const { return terms_.empty() ? 0 : terms_.front().monomial.degree(); }

std::optional<std::uint32_t> MultiPoly::homogeneous_degree() const {
  if (terms_.empty()) {
    return std::nullopt;
  }
  const auto d = terms_.front().monomial.degree();
  if (terms_.back().monomial.degree() != d) {
    return std::nullopt;
  }
  return d;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& t : out.terms_) {
    t.coeff = -t.coeff;
  }
  return out;
}

void MultiPoly::add_scaled(const MultiPoly& o, const Rational& c, const Monomial& m) {
  if (c.is_zero() || o.terms_.empty()) {
    return;
  }
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end()) {
      merged.push_back(std::move(*a++));
      continue;
    }
    const Monomial bm = b->monomial * m;
    if (a == terms_.end() || bm > a->monomial) {
      merged.push_back({bm, b->coeff * c});
      ++b;
    } else if (a->monomial > bm) {
      merged.push_back(std::move(*a++));
    } else {
      Rational sum = a->coeff + b->coeff * c;
      if (!sum.is_zero()) {
        merged.push_back({a->monomial, std::move(sum)});
      }
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  add_scaled(o, Rational(1), Monomial{});
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  add_scaled(o, Rational(-1), Monomial{});
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) {
    return {};
  }
  if (b.terms_.size() == 1) {
    MultiPoly out;
    out.add_scaled(a, b.terms_[0].coeff, b.terms_[0].monomial);
    return out;
  }
  if (a.terms_.size() == 1) {
    MultiPoly out;
    out.add_scaled(b, a.terms_[0].coeff, a.terms_[0].monomial);
    return out;
  }
  std::vector<Term> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      products.push_back({s.monomial * t.monomial, s.coeff * t.coeff});
    }
  }
  return MultiPoly::from_terms(std::move(products));
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  MultiPoly out;
  out.add_scaled(*this, c, Monomial{});
  return out;
}

MultiPoly MultiPoly::pow(std::uint32_t k) const {
  MultiPoly result(1);
  MultiPoly base = *this;
  while (k > 0) {
    if (k & 1U) {
      result *= base;
    }
    k >>= 1U;
    if (k > 0) {
      base *= base;
    }
  }
  return result;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(Var v) const {
  std::vector<std::vector<Term>> buckets(degree_in(v) + 1);
  for (const auto& t : terms_) {
    buckets[t.monomial[v]].push_back({t.monomial.without(v), t.coeff});
  }
  std::vector<MultiPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) {
    out.push_back(from_terms(std::move(b)));
  }
  return out;
}

MultiPoly MultiPoly::subst(Var v, const MultiPoly& value) const {
  const auto coeffs = coefficients_in(v);
  MultiPoly result;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    result = result * value + *it;
  }
  return result;
}

Rational MultiPoly::eval(const PointAssignment& pt) const {
  std::array<std::vector<Rational>, kNumVars> powers;
  Rational total(0);
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (Var var : kAllVars) {
      const auto e = t.monomial[var];
      if (e == 0) continue;
      auto& cache = powers[static_cast<std::size_t>(var)];
      if (cache.empty()) cache.push_back(Rational(1));
      while (cache.size() <= e) cache.push_back(cache.back() * pt.at(var));
      v *= cache[e];
    }
    total += v;
  }
  return total;
}

std::string MultiPoly::to_string(bool ascii) const {
  if (terms_.empty()) {
    return "0";
  }
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (first) {
      if (c.sign() < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c.sign() < 0 ? " - " : " + ";
      if (c.sign() < 0) c = -c;
    }
    first = false;
    std::string mono;
    for (Var v : kAllVars) {
      const auto e = t.monomial[v];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var_name(v, ascii);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += c.to_string();
    } else if (c.is_one()) {
      out += mono;
    } else {
      out += c.to_string() + "*" + mono;
    }
  }
  return out;
}

// ---------------------------------------------------------------- division

namespace {

// Shared loop: when `stop_on_remainder` is set, the first leading term not
// divisible by LT(d) aborts with nullopt.
std::optional<std::pair<MultiPoly, MultiPoly>> divide_impl(const MultiPoly& p, const MultiPoly& d,
                                                           bool stop_on_remainder) {
  if (d.is_zero()) {
    throw DenominatorVanishes("polynomial division by zero");
  }
  const Term& lead = d.leading_term();
  std::vector<Term> quotient;
  std::vector<Term> remainder;
  MultiPoly rest = p;
  while (!rest.is_zero()) {
    const Term lt = rest.leading_term();
    if (lead.monomial.divides(lt.monomial)) {
      const Monomial qm = lt.monomial / lead.monomial;
      const Rational qc = lt.coeff / lead.coeff;
      rest -= MultiPoly(qm, qc) * d;
      quotient.push_back({qm, qc});
    } else {
      if (stop_on_remainder) {
        return std::nullopt;
      }
      remainder.push_back(lt);
      rest -= MultiPoly(lt.monomial, lt.coeff);
    }
  }
  return std::pair{MultiPoly::from_terms(std::move(quotient)), MultiPoly::from_terms(std::move(remainder))};
}

}  // namespace

std::pair<MultiPoly, MultiPoly> divide_with_remainder(const MultiPoly& p, const MultiPoly& d) {
  return *divide_impl(p, d, false);
}

std::optional<MultiPoly> try_exact_div(const MultiPoly& p, const MultiPoly& d) {
  if (d.is_zero()) {
    throw DenominatorVanishes("polynomial division by zero");
  }
  if (d.is_constant()) {
    return p.scaled(Rational(1) / d.constant_term());
  }
  auto qr = divide_impl(p, d, true);
  if (!qr) {
    return std::nullopt;
  }
  return std::move(qr->first);
}

MultiPoly exact_div(const MultiPoly& p, const MultiPoly& d) {
  auto q = try_exact_div(p, d);
  if (!q) {
    throw DivisionNotExact("(" + p.to_string(true) + ") / (" + d.to_string(true) + ") leaves a remainder");
  }
  return std::move(*q);
}

MultiPoly poly_arith(const MultiPoly& p, const MultiPoly& q, PolyOp op, std::uint32_t k) {
  switch (op) {
    case PolyOp::Add: return p + q;
    case PolyOp::Sub: return p - q;
    case PolyOp::Mul: return p * q;
    case PolyOp::Pow: return p.pow(k);
  }
  return {};
}

}  // namespace runyon::alg
