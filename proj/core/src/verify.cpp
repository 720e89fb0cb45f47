#include "runyon/verify.hpp"

#include "runyon/errors.hpp"
#include "runyon/formulas.hpp"
#include "runyon/generating.hpp"
#include "runyon/gpoly.hpp"
#include "runyon/sampling.hpp"
#include "runyon/series.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace runyon {

namespace {

using json = nlohmann::ordered_json;

constexpr std::size_t kWitnessLimit = 240;

std::string clip(std::string s) {
  if (s.size() > kWitnessLimit) {
    s.resize(kWitnessLimit);
    s += "...";
  }
  return s;
}

template <class R>
std::string show(const R& v) {
  return RingTraits<R>::to_string(v, true);
}

template <class R>
std::string describe(const R& lhs, const R& rhs) {
  return clip("lhs = " + show(lhs) + " ; rhs = " + show(rhs));
}

template <class R>
std::string describe(const series::TruncSeries<R>& lhs, const series::TruncSeries<R>& rhs) {
  if (lhs.var() != rhs.var()) {
    return "series variables differ: " + lhs.var() + " vs " + rhs.var();
  }
  const auto k = first_mismatch(lhs, rhs);
  if (!k) return "";
  return clip("coefficient " + std::to_string(*k) + ": lhs = " + show(lhs[*k]) + " ; rhs = " + show(rhs[*k]));
}

template <class R>
R perturb(const R& v) {
  return v + RingTraits<R>::one();
}

template <class R>
series::TruncSeries<R> perturb(const series::TruncSeries<R>& s) {
  auto out = s;
  out.set(s.order(), s[s.order()] + RingTraits<R>::one());
  return out;
}

/// Appends cases to a report. A computation that throws is a failed case
/// carrying the exception text as its witness.
class Recorder {
 public:
  Recorder(VerificationReport& report, bool inject_fault) : report_(report), fault_(inject_fault) {}

  template <class F>
  void expect_equal(std::string id, json params, F&& compute) {
    CaseRecord rec{std::move(id), std::move(params), CaseStatus::Pass, {}};
    try {
      auto [lhs, rhs] = compute();
      if (fault_) {
        lhs = perturb(lhs);
        fault_ = false;
      }
      if (!(lhs == rhs)) {
        rec.status = CaseStatus::Fail;
        rec.witness = describe(lhs, rhs);
      }
    } catch (const std::exception& e) {
      rec.status = CaseStatus::Fail;
      rec.witness = clip(std::string("exception: ") + e.what());
    }
    report_.cases.push_back(std::move(rec));
  }

  void expect_true(std::string id, json params, bool ok, std::string witness) {
    CaseRecord rec{std::move(id), std::move(params), CaseStatus::Pass, {}};
    if (fault_) {
      ok = false;
      witness = "fault injected";
      fault_ = false;
    }
    if (!ok) {
      rec.status = CaseStatus::Fail;
      rec.witness = clip(std::move(witness));
    }
    report_.cases.push_back(std::move(rec));
  }

  /// Report-only: unequal values are a Mismatch, not a Fail.
  void compare(std::string id, json params, bool equal, std::string witness) {
    report_.cases.push_back(
        {std::move(id), std::move(params), equal ? CaseStatus::Pass : CaseStatus::Mismatch, equal ? "" : clip(witness)});
  }

 private:
  VerificationReport& report_;
  bool fault_;
};

json point_json(const PointAssignment& pt) {
  return {{"x", pt.at(Var::X).to_string()},
          {"alpha", pt.at(Var::Alpha).to_string()},
          {"beta", pt.at(Var::Beta).to_string()}};
}

bool wants_symbolic(CheckMode m) { return m != CheckMode::Numeric; }
bool wants_numeric(CheckMode m) { return m != CheckMode::Symbolic; }

// ------------------------------------------------------------------ suites

void run_recurrence_vs_lagrange(const VerifyOptions& o, Recorder& rec) {
  GRecurrence memo;
  const MultiPoly a = MultiPoly::var(Var::Alpha);
  const MultiPoly b = MultiPoly::var(Var::Beta);
  for (std::size_t n = 0; n <= o.max_n; ++n) {
    const json p{{"n", n}};
    rec.expect_equal("recurrence=lagrange", p, [&] { return std::pair{memo(n).ratfunc(), g_lagrange(n).ratfunc()}; });
    rec.expect_equal("recurrence=riordan", p, [&] { return std::pair{memo(n).ratfunc(), g_riordan(n).ratfunc()}; });
    rec.expect_equal("g(x=beta)=beta^n", p, [&] {
      return std::pair{alg::ratfunc_subst(memo(n).ratfunc(), Var::X, RatFunc(b)), RatFunc(b.pow(static_cast<std::uint32_t>(n)))};
    });
    rec.expect_equal("g(x=alpha)=g_alpha_closed", p, [&] {
      return std::pair{alg::ratfunc_subst(memo(n).ratfunc(), Var::X, RatFunc(a)), RatFunc(g_alpha_closed(n))};
    });
    const GPoly& g = memo(n);
    bool homogeneous = true;
    for (const auto& ak : g.w_basis) {
      homogeneous = homogeneous && (ak.is_zero() || ak.homogeneous_degree() == n);
    }
    const RatFunc view = g.ratfunc();
    const auto dn = view.num().homogeneous_degree();
    const auto dd = view.den().homogeneous_degree();
    homogeneous = homogeneous && dn && dd && *dn == *dd + n;
    rec.expect_true("homogeneous-degree-n", p, homogeneous, "g_" + std::to_string(n) + " = " + view.to_string(true));
    if (n >= 1) {
      const bool degree_ok = g.w_basis.size() == n && !g.w_basis.back().is_zero();
      rec.expect_true("w-degree=n-1", p, degree_ok, "w-basis length " + std::to_string(g.w_basis.size()));
    }
  }
}

void run_carlitz_vs_riordan(const VerifyOptions& o, Recorder& rec) {
  for (long n = 2; n <= static_cast<long>(o.max_n); ++n) {
    for (long r = 1; r < n; ++r) {
      rec.expect_equal("carlitz=riordan", json{{"r", r}, {"n", n}},
                       [&] { return std::pair{carlitz_A(r, n), riordan_A(r, n)}; });
    }
  }
}

void run_gf_match(const VerifyOptions& o, Recorder& rec) {
  if (wants_symbolic(o.mode)) {
    GRecurrence memo;
    const auto closed = G_closed(o.order, symbolic_ratfunc());
    const auto from_rec = G_from_recurrence(o.order, memo);
    for (std::size_t n = 0; n <= o.order; ++n) {
      rec.expect_equal("G-closed=G-recurrence", json{{"n", n}, {"order", o.order}},
                       [&] { return std::pair{closed[n], from_rec[n]}; });
    }
  }
  if (wants_numeric(o.mode)) {
    const auto points = sample_points(o.seed, o.trials);
    for (std::size_t i = 0; i < points.size(); ++i) {
      json p{{"point", i}, {"order", o.numeric_order}};
      p["at"] = point_json(points[i]);
      rec.expect_equal("G-closed=G-recurrence@point", p, [&] {
        return std::pair{G_closed(o.numeric_order, numeric_symbols(points[i])),
                         G_from_recurrence_at(o.numeric_order, points[i])};
      });
    }
  }
}

void run_morrison(const VerifyOptions& o, Recorder& rec) {
  rec.expect_equal("morrison-hand-case", json{{"n", 2}, {"at", {{"x", "3"}, {"alpha", "2"}, {"beta", "1"}}}}, [] {
    return std::pair{morrison_g(2, PointAssignment(Rational(3), Rational(2), Rational(1))), Rational(5)};
  });
  rec.expect_equal("morrison-symbolic", json{{"n", 1}},
                   [] { return std::pair{morrison_symbolic(1), RatFunc(MultiPoly::var(Var::Beta))}; });
  GRecurrence memo;
  const auto points = sample_points(o.seed, o.trials);
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t n = 1; n <= std::max<std::size_t>(o.max_n, 1); ++n) {
      json p{{"n", n}, {"point", i}};
      p["at"] = point_json(points[i]);
      rec.expect_equal("morrison=recurrence@point", p,
                       [&] { return std::pair{morrison_g(n, points[i]), memo(n).eval(points[i])}; });
    }
  }
}

void run_narayana(const VerifyOptions& o, Recorder& rec) {
  for (std::size_t n = 1; n <= o.max_n; ++n) {
    const long nn = static_cast<long>(n);
    const MultiPoly scaled = g_alpha_closed(n).scaled(Rational(nn));
    bool ok = true;
    std::string witness;
    for (long k = 0; k < nn; ++k) {
      std::array<std::uint32_t, alg::kNumVars> e{};
      e[static_cast<std::size_t>(Var::Alpha)] = static_cast<std::uint32_t>(k);
      e[static_cast<std::size_t>(Var::Beta)] = static_cast<std::uint32_t>(nn - k);
      const Rational got = scaled.coeff(alg::Monomial(e));
      const Rational want(binomial(nn, k) * binomial(nn, k + 1));
      if (got != want && ok) {
        ok = false;
        witness = "k = " + std::to_string(k) + ": " + got.to_string() + " vs " + want.to_string();
      }
    }
    ok = ok && scaled.size() == n;
    rec.expect_true("n*g_n(alpha) coefficients=C(n,k)C(n,k+1)", json{{"n", n}}, ok, witness);
  }
  for (std::size_t n = 0; n <= o.max_n; ++n) {
    rec.expect_equal("g_n(alpha)|alpha=beta=1 = catalan", json{{"n", n}}, [&] {
      return std::pair{g_alpha_closed(n).eval(PointAssignment(Rational(0), Rational(1), Rational(1))),
                       Rational(catalan(n))};
    });
  }
  if (wants_symbolic(o.mode)) {
    const MultiPoly a = MultiPoly::var(Var::Alpha);
    const MultiPoly b = MultiPoly::var(Var::Beta);
    const auto gf = narayana_gf(o.max_n, a, b);
    for (std::size_t n = 0; n <= o.max_n; ++n) {
      rec.expect_equal("narayana-gf=g_alpha_closed", json{{"n", n}}, [&] { return std::pair{gf[n], g_alpha_closed(n)}; });
    }
  }
  if (wants_numeric(o.mode)) {
    const auto points = sample_points(o.seed, o.trials);
    for (std::size_t i = 0; i < points.size(); ++i) {
      json p{{"point", i}, {"order", o.narayana_numeric_order}};
      p["at"] = point_json(points[i]);
      rec.expect_equal("narayana-gf=g_alpha_closed@point", p, [&] {
        const auto s = numeric_symbols(points[i]);
        const auto gf = narayana_gf(o.narayana_numeric_order, s.alpha, s.beta);
        Series<Rational> closed("T", o.narayana_numeric_order);
        for (std::size_t n = 0; n <= o.narayana_numeric_order; ++n) {
          closed.set(n, g_alpha_value(n, s.alpha, s.beta));
        }
        return std::pair{gf, closed};
      });
    }
  }
}

void run_kernel(std::size_t order, Recorder& rec) {
  const auto s = symbolic_ratfunc();
  const auto [lhs, rhs] = kernel_sides(order, s.alpha, s.beta);
  for (std::size_t k = 1; k <= order; ++k) {
    rec.expect_equal("kernel-numerator", json{{"k", k}, {"order", order}}, [&] { return std::pair{lhs[k], rhs[k]}; });
  }
}

void run_reversion(std::size_t order, Recorder& rec) {
  const auto s = symbolic_ratfunc();
  const auto forward = T_forward(order, s.alpha, s.beta);
  const auto closed = t_of_T_closed(order, s.alpha, s.beta);
  const auto reverted = series::series_revert(forward, "T");
  for (std::size_t k = 0; k <= order; ++k) {
    rec.expect_equal("revert(T_forward)=t_of_T_closed", json{{"k", k}, {"order", order}},
                     [&] { return std::pair{reverted[k], closed[k]}; });
  }
  rec.expect_equal("t_of_T_closed(T_forward)=t", json{{"order", order}}, [&] {
    return std::pair{series::series_compose(closed, forward), Series<RatFunc>::variable("t", order)};
  });
}

void run_y(std::size_t order, Recorder& rec, VerificationReport& report) {
  const auto s = symbolic_ratfunc();
  const RatFunc w = w_value(s);
  const auto phi_y = runyon_phi(w, s.alpha, s.beta);
  GRecurrence memo;

  std::optional<Series<RatFunc>> y;
  rec.expect_equal("y=t*phi(y)", json{{"order", order}}, [&] {
    y = y_closed(order, s);
    return std::pair{*y, phi_y.at(*y).shifted_up(1)};
  });
  if (!y) {
    return;
  }
  const auto gf = one_over_one_minus(*y);
  for (std::size_t n = 0; n <= order; ++n) {
    rec.expect_equal("[t^n]1/(1-y)=g_n", json{{"n", n}, {"order", order}},
                     [&] { return std::pair{gf[n], memo(n).ratfunc()}; });
  }
  const auto G = G_closed(order, s);
  const RatFunc amb = s.alpha - s.beta;
  for (std::size_t n = 0; n <= order; ++n) {
    rec.expect_equal("(alpha-beta)G(t/(alpha-beta))=1/(1-y)", json{{"n", n}, {"order", order}}, [&] {
      RatFunc scaled = G[n] * amb;
      for (std::size_t i = 0; i < n; ++i) scaled = scaled / amb;
      return std::pair{scaled, gf[n]};
    });
  }
  // Closed form with the linear-term sign flipped; report only.
  if (order >= 1) {
    const auto printed = y_closed_as_printed(std::min<std::size_t>(order, 2), s);
    const bool same = printed[1] == s.beta;
    rec.compare("printed-y:[t^1]=phi(0)", json{{"order", 2}}, same,
                "[t^1] of the printed closed form is " + printed[1].to_string(true) + ", phi(0) = beta");
    if (!same) {
      report.findings.push_back("closed form of y read literally has [t^1] = " + printed[1].to_string(true) +
                                "; y = t*phi(y) requires beta, which the opposite sign on the linear term gives");
    }
  }
}

void run_inner_sum(std::size_t n, Recorder& rec) {
  const MultiPoly w = MultiPoly::var(Var::W);
  for (std::size_t j = 1; j <= n; ++j) {
    rec.expect_equal("inner-sum", json{{"n", n}, {"j", j}}, [&] {
      const long nn = static_cast<long>(n);
      const long jj = static_cast<long>(j);
      MultiPoly lhs;
      for (long k = jj; k <= nn; ++k) {
        lhs += w.pow(static_cast<std::uint32_t>(k)).scaled(Rational(mpz_class(nn - k) * binomial(k - 1, jj - 1)));
      }
      // [z^{n-1}] (zw)^j / ((1-z)^2 (1-zw)^j) over Q[w]
      const std::size_t order = n - 1;
      Series<MultiPoly> num("z", order);
      if (j <= order) num.set(j, w.pow(static_cast<std::uint32_t>(j)));
      const auto one_minus_z = quadratic<MultiPoly>("z", order, MultiPoly(1), MultiPoly(-1), MultiPoly());
      const auto one_minus_zw = quadratic<MultiPoly>("z", order, MultiPoly(1), -w, MultiPoly());
      const auto den = one_minus_z * one_minus_z * series::series_pow(one_minus_zw, j);
      const auto rhs = series::series_divide(num, den)[order];
      return std::pair{lhs, rhs};
    });
  }
}

void run_c_compare(std::size_t rmax, std::size_t nmax, Recorder& rec, VerificationReport& report) {
  std::size_t equal_count = 0;
  std::set<std::pair<long, long>> shifted;
  for (long r = 1; r <= static_cast<long>(rmax); ++r) {
    for (long n = 1; n <= static_cast<long>(nmax); ++n) {
      const MultiPoly direct = c_direct(r, n);
      const MultiPoly printed = c_translated(r, n);
      const bool eq = direct == printed;
      equal_count += eq ? 1 : 0;
      json p{{"r", r}, {"n", n}};
      if (r >= 2) {
        const bool sh = direct == c_translated(r - 1, n);
        p["matches_printed_at_r_minus_1"] = sh;
        if (sh) shifted.insert({r, n});
      }
      rec.compare("C-direct=C-printed", p, eq, "direct = " + direct.to_string(true) + " ; printed = " + printed.to_string(true));
    }
  }
  report.findings.push_back("printed closed form equals the defining sum at " + std::to_string(equal_count) + " of " +
                            std::to_string(rmax * nmax) + " pairs");
  std::set<std::pair<long, long>> band;
  for (long r = 2; r <= static_cast<long>(rmax); ++r) {
    for (long n = r; n <= static_cast<long>(nmax); ++n) band.insert({r, n});
  }
  if (!shifted.empty() && shifted == band) {
    report.findings.push_back("defining sum at (r, n) equals the printed form at (r-1, n) exactly when 2 <= r <= n (within range)");
  } else {
    std::string list;
    for (const auto& [r, n] : shifted) list += " (" + std::to_string(r) + "," + std::to_string(n) + ")";
    report.findings.push_back("defining sum at (r, n) equals the printed form at (r-1, n) for:" + (list.empty() ? " none" : list));
  }
}

VerificationReport make_report(const std::string& name, bool asserted = true) {
  VerificationReport r;
  r.suite = name;
  r.asserted = asserted;
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"recurrence-vs-lagrange", "carlitz-vs-riordan", "kernel", "reversion",
                                              "gf-match",               "morrison",           "inner-sum", "narayana",
                                              "y",                      "c-compare"};
  return names;
}

bool is_suite_name(const std::string& name) {
  const auto& n = suite_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

VerificationReport verify_kernel(std::size_t order) {
  auto report = make_report("kernel");
  Recorder rec(report, false);
  run_kernel(order, rec);
  return report;
}

VerificationReport verify_reversion(std::size_t order) {
  auto report = make_report("reversion");
  Recorder rec(report, false);
  run_reversion(order, rec);
  return report;
}

VerificationReport verify_y(std::size_t order) {
  auto report = make_report("y");
  Recorder rec(report, false);
  run_y(order, rec, report);
  return report;
}

VerificationReport inner_sum_check(std::size_t n) {
  auto report = make_report("inner-sum");
  Recorder rec(report, false);
  run_inner_sum(n, rec);
  return report;
}

VerificationReport c_compare(std::size_t rmax, std::size_t nmax) {
  auto report = make_report("c-compare", false);
  Recorder rec(report, false);
  run_c_compare(rmax, nmax, rec, report);
  return report;
}

VerificationReport run_suite(const std::string& name, const VerifyOptions& opts) {
  if (!is_suite_name(name)) {
    throw std::invalid_argument("unknown suite '" + name + "'");
  }
  auto report = make_report(name, name != "c-compare");
  Recorder rec(report, opts.inject_fault && *opts.inject_fault == name);
  if (name == "recurrence-vs-lagrange") {
    run_recurrence_vs_lagrange(opts, rec);
  } else if (name == "carlitz-vs-riordan") {
    run_carlitz_vs_riordan(opts, rec);
  } else if (name == "kernel") {
    run_kernel(opts.order, rec);
  } else if (name == "reversion") {
    run_reversion(opts.order, rec);
  } else if (name == "gf-match") {
    run_gf_match(opts, rec);
  } else if (name == "morrison") {
    run_morrison(opts, rec);
  } else if (name == "inner-sum") {
    for (std::size_t n = 1; n <= opts.max_n; ++n) run_inner_sum(n, rec);
  } else if (name == "narayana") {
    run_narayana(opts, rec);
  } else if (name == "y") {
    run_y(opts.order, rec, report);
  } else {
    run_c_compare(opts.c_max, opts.c_max, rec, report);
  }
  return report;
}

}  // namespace runyon
