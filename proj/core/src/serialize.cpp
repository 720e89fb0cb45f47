#include "runyon/serialize.hpp"

#include "runyon/errors.hpp"

namespace runyon {

using alg::MultiPoly;
using alg::Var;

Json to_json(const Rational& q) { return q.to_string(); }

Json to_json(const MultiPoly& p) {
  Json out = Json::array();
  for (const auto& t : p.terms()) {
    Json exps = Json::object();
    for (Var v : alg::kAllVars) {
      if (const auto e = t.monomial[v]; e > 0) exps[alg::var_name(v, true)] = e;
    }
    out.push_back(Json{{"coefficient", t.coeff.to_string()}, {"exponents", std::move(exps)}});
  }
  return out;
}

Json to_json(const alg::RatFunc& r) { return Json{{"num", to_json(r.num())}, {"den", to_json(r.den())}}; }

Json to_json(const GPoly& g) {
  Json a = Json::array();
  for (const auto& ak : g.w_basis) a.push_back(to_json(ak));
  return Json{{"n", g.n}, {"A", std::move(a)}, {"ratfunc", to_json(g.ratfunc())}};
}

MultiPoly multipoly_from_json(const Json& j) {
  if (!j.is_array()) {
    throw ParseError("polynomial must be a JSON array of terms");
  }
  std::vector<alg::Term> terms;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("coefficient") || !t.contains("exponents") || !t["coefficient"].is_string() ||
        !t["exponents"].is_object()) {
      throw ParseError("malformed term: " + t.dump());
    }
    std::array<std::uint32_t, alg::kNumVars> e{};
    for (const auto& [name, value] : t["exponents"].items()) {
      const auto v = alg::parse_var(name);
      if (!v || !value.is_number_unsigned()) {
        throw ParseError("bad exponent entry '" + name + "'");
      }
      e[static_cast<std::size_t>(*v)] = value.get<std::uint32_t>();
    }
    terms.push_back({alg::Monomial(e), Rational::parse(t["coefficient"].get<std::string>())});
  }
  return MultiPoly::from_terms(std::move(terms));
}

alg::RatFunc ratfunc_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
    throw ParseError("rational function must be {\"num\": ..., \"den\": ...}");
  }
  auto den = multipoly_from_json(j["den"]);
  if (den.is_zero()) throw ParseError("zero denominator");
  return alg::RatFunc(multipoly_from_json(j["num"]), std::move(den));
}

}  // namespace runyon
