#include "cli.hpp"

#include "runyon/errors.hpp"
#include "runyon/formulas.hpp"
#include "runyon/generating.hpp"
#include "runyon/gpoly.hpp"
#include "runyon/sampling.hpp"
#include "runyon/serialize.hpp"
#include "runyon/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#ifndef RUNYON_VERSION
#define RUNYON_VERSION "0.0.0"
#endif

namespace runyon::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Json, Csv, Text };

struct Config {
  std::string format = "text";
  std::string output;
  bool ascii = false;
  long n = 0;
  long k = 0;
  long r = 0;
  std::size_t max_n = 0;
  std::size_t order = 0;
  std::size_t numeric_order = 40;
  std::string mode;
  std::uint64_t seed = 42;
  std::size_t trials = 0;
  std::vector<std::string> suites{"all"};
  std::size_t c_max = 8;
  std::string x, alpha, beta;
  std::string repr = "w-basis";
  std::string target;
  std::string inject_fault;
};

// Which subcommand-local options the user actually gave.
struct Given {
  const CLI::App* app = nullptr;
  bool operator()(const std::string& name) const { return app->count(name) > 0; }
};

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    line += csv_field(cells[i]);
  }
  return line + "\n";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += sep;
    s += parts[i];
  }
  return s;
}

Rational parse_rational(const std::string& text, const std::string& flag) {
  if (text.empty()) throw UsageError(flag + " is required");
  try {
    return Rational::parse(text);
  } catch (const Error& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

long need(const Given& given, const std::string& flag, long value) {
  if (!given(flag)) throw UsageError(flag + " is required");
  if (value < 0) throw UsageError(flag + " must be non-negative");
  return value;
}

Json point_json(const Rational& x, const Rational& a, const Rational& b) {
  return Json{{"x", x.to_string()}, {"alpha", a.to_string()}, {"beta", b.to_string()}};
}

std::string sym(const char* unicode, const char* ascii, bool use_ascii) { return use_ascii ? ascii : unicode; }

// ---------------------------------------------------------------- compute

template <CoefficientRing R>
std::string render_series(const series::TruncSeries<R>& s, Format f, bool ascii) {
  std::string out;
  switch (f) {
    case Format::Json:
      return dump(to_json(s));
    case Format::Csv:
      out = csv_row({"k", "coefficient"});
      for (std::size_t k = 0; k <= s.order(); ++k) out += csv_row({std::to_string(k), RingTraits<R>::to_string(s[k], ascii)});
      return out;
    case Format::Text:
      for (std::size_t k = 0; k <= s.order(); ++k) {
        out += "[" + s.var() + "^" + std::to_string(k) + "] " + RingTraits<R>::to_string(s[k], ascii) + "\n";
      }
      return out;
  }
  return out;
}

// One named polynomial with its integer indices, e.g. A with n and k.
std::string render_poly(const std::string& name, const std::vector<std::pair<std::string, long>>& idx,
                        const MultiPoly& p, Format f, bool ascii) {
  if (f == Format::Json) {
    Json j = Json::object();
    for (const auto& [key, v] : idx) j[key] = v;
    j[name] = to_json(p);
    return dump(j);
  }
  if (f == Format::Csv) {
    std::vector<std::string> head, row;
    for (const auto& [key, v] : idx) {
      head.push_back(key);
      row.push_back(std::to_string(v));
    }
    head.push_back(name);
    row.push_back(p.to_string(ascii));
    return csv_row(head) + csv_row(row);
  }
  return p.to_string(ascii) + "\n";
}

std::string compute_g(const Config& c, const Given& given, Format f) {
  const auto n = static_cast<std::size_t>(need(given, "--n", c.n));
  const GPoly g = g_recurrence(n);
  const bool wb = c.repr == "w-basis";
  if (f == Format::Json) {
    Json j{{"n", n}};
    if (wb) {
      j["A"] = Json::array();
      for (const auto& a : g.w_basis) j["A"].push_back(to_json(a));
    } else {
      j["ratfunc"] = to_json(g.ratfunc());
    }
    return dump(j);
  }
  if (f == Format::Csv) {
    if (!wb) {
      const RatFunc rf = g.ratfunc();
      return csv_row({"n", "num", "den"}) + csv_row({std::to_string(n), rf.num().to_string(c.ascii), rf.den().to_string(c.ascii)});
    }
    std::string out = csv_row({"n", "k", "A"});
    for (std::size_t k = 0; k < g.w_basis.size(); ++k) {
      out += csv_row({std::to_string(n), std::to_string(k), g.w_basis[k].to_string(c.ascii)});
    }
    return out;
  }
  const std::string lhs = "g_" + std::to_string(n);
  if (wb) return lhs + "(w) = " + g.w_polynomial().to_string(c.ascii) + "\n";
  return lhs + "(x) = " + g.ratfunc().to_string(c.ascii) + "\n";
}

std::string compute_coefficients(const Config& c, const Given& given, Format f, bool carlitz) {
  const long n = need(given, "--n", c.n);
  const std::string index = carlitz ? "--r" : "--k";
  const std::string key = carlitz ? "r" : "k";
  const auto coeff = [&](long i) { return carlitz ? carlitz_A(i, n) : riordan_A(i, n); };
  if (given(index)) {
    const long i = need(given, index, carlitz ? c.r : c.k);
    return render_poly("A", {{"n", n}, {key, i}}, coeff(i), f, c.ascii);
  }
  const long lo = carlitz ? 1 : 0;
  if (n <= lo) throw UsageError("--n must be at least " + std::to_string(lo + 1));
  std::vector<MultiPoly> all;
  for (long i = lo; i < n; ++i) all.push_back(coeff(i));
  if (f == Format::Json) {
    Json arr = Json::array();
    for (const auto& p : all) arr.push_back(to_json(p));
    return dump(Json{{"n", n}, {key + "_from", lo}, {"A", std::move(arr)}});
  }
  std::string out = f == Format::Csv ? csv_row({"n", key, "A"}) : "";
  for (long i = lo; i < n; ++i) {
    const std::string s = all[static_cast<std::size_t>(i - lo)].to_string(c.ascii);
    if (f == Format::Csv) {
      out += csv_row({std::to_string(n), std::to_string(i), s});
    } else {
      out += "A_" + std::to_string(i) + "^(" + std::to_string(n) + ") = " + s + "\n";
    }
  }
  return out;
}

template <CoefficientRing R>
std::string compute_series(const std::string& what, std::size_t order, const Symbols<R>& s, Format f, bool ascii) {
  if (what == "narayana-gf") return render_series(narayana_gf(order, s.alpha, s.beta), f, ascii);
  if (what == "y") return render_series(y_closed(order, s), f, ascii);
  return render_series(G_closed(order, s), f, ascii);
}

std::string cmd_compute(const Config& c, const Given& given, Format f) {
  const std::string& what = c.target;
  if (what == "g") return compute_g(c, given, f);
  if (what == "A") return compute_coefficients(c, given, f, false);
  if (what == "carlitz") return compute_coefficients(c, given, f, true);
  if (what == "phi") {
    const long r = need(given, "--r", c.r);
    const long k = need(given, "--k", c.k);
    return render_poly("phi", {{"r", r}, {"k", k}}, phi(r, k), f, c.ascii);
  }
  if (what == "narayana") {
    const long n = need(given, "--n", c.n);
    return render_poly("g_alpha", {{"n", n}}, g_alpha_closed(static_cast<std::size_t>(n)), f, c.ascii);
  }
  const std::size_t order = given("--order") ? c.order : 8;
  const std::string mode = c.mode.empty() ? "symbolic" : c.mode;
  if (mode == "both") throw UsageError("compute takes --mode symbolic or numeric");
  if (mode == "symbolic") {
    if (what == "narayana-gf") return render_series(narayana_gf(order, MultiPoly::var(alg::Var::Alpha), MultiPoly::var(alg::Var::Beta)), f, c.ascii);
    return compute_series(what, order, symbolic_ratfunc(), f, c.ascii);
  }
  const Rational a = parse_rational(c.alpha, "--alpha");
  const Rational b = parse_rational(c.beta, "--beta");
  const Rational x = what == "narayana-gf" && c.x.empty() ? Rational(0) : parse_rational(c.x, "--x");
  return compute_series(what, order, numeric_symbols(PointAssignment(x, a, b)), f, c.ascii);
}

// ---------------------------------------------------------------- eval

std::vector<Rational> g_values_at(std::size_t nmax, const Rational& x, const Rational& a, const Rational& b) {
  const auto nums = recurrence_numerators(nmax, MultiPoly(a), MultiPoly(b));
  const PointAssignment pt(x, a, b);
  std::vector<Rational> out{Rational(1)};
  Rational scale(1);
  for (std::size_t n = 1; n <= nmax; ++n) {
    if (n >= 2) scale *= a - b;
    out.push_back(nums[n].eval(pt) / scale);
  }
  return out;
}

std::string cmd_eval(const Config& c, const Given& given, Format f) {
  const Rational x = parse_rational(c.x, "--x");
  const Rational a = parse_rational(c.alpha, "--alpha");
  const Rational b = parse_rational(c.beta, "--beta");
  if (a == b) throw UsageError("--alpha and --beta must differ");
  std::size_t lo = 0;
  std::size_t hi = given("--max-n") ? c.max_n : 10;
  if (given("--n")) lo = hi = static_cast<std::size_t>(need(given, "--n", c.n));
  const auto values = g_values_at(hi, x, a, b);
  std::string out;
  if (f == Format::Json) {
    Json rows = Json::array();
    for (std::size_t n = lo; n <= hi; ++n) rows.push_back(Json{{"n", n}, {"g", values[n].to_string()}});
    return dump(Json{{"at", point_json(x, a, b)}, {"values", std::move(rows)}});
  }
  if (f == Format::Csv) {
    out = csv_row({"n", "x", "alpha", "beta", "g"});
    for (std::size_t n = lo; n <= hi; ++n) {
      out += csv_row({std::to_string(n), x.to_string(), a.to_string(), b.to_string(), values[n].to_string()});
    }
    return out;
  }
  const std::string at = "x=" + x.to_string() + ", " + sym("α", "alpha", c.ascii) + "=" + a.to_string() + ", " +
                         sym("β", "beta", c.ascii) + "=" + b.to_string();
  for (std::size_t n = lo; n <= hi; ++n) out += "g_" + std::to_string(n) + "(" + at + ") = " + values[n].to_string() + "\n";
  return out;
}

// ---------------------------------------------------------------- table

struct TableRow {
  std::vector<Json> keys;
  std::vector<std::string> cells;
  Json cells_json = Json::array();
};

struct Table {
  std::string name;
  std::vector<std::string> key_columns;
  std::vector<std::string> key_labels;
  std::string column_prefix;
  Json header = Json::object();
  std::vector<TableRow> rows;
};

std::string key_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

std::string render_table(const Table& t, Format f) {
  if (f == Format::Json) {
    Json j{{"table", t.name}};
    for (const auto& [k, v] : t.header.items()) j[k] = v;
    Json rows = Json::array();
    for (const auto& row : t.rows) {
      Json r = Json::object();
      for (std::size_t i = 0; i < row.keys.size(); ++i) r[t.key_columns[i]] = row.keys[i];
      r["entries"] = row.cells_json;
      rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return dump(j);
  }
  std::string out;
  if (f == Format::Csv) {
    std::size_t width = 0;
    for (const auto& row : t.rows) width = std::max(width, row.cells.size());
    std::vector<std::string> head = t.key_columns;
    for (std::size_t i = 0; i < width; ++i) head.push_back(t.column_prefix + std::to_string(i));
    out = csv_row(head);
    for (const auto& row : t.rows) {
      std::vector<std::string> line;
      for (const auto& k : row.keys) line.push_back(key_text(k));
      line.insert(line.end(), row.cells.begin(), row.cells.end());
      line.resize(t.key_columns.size() + width);
      out += csv_row(line);
    }
    return out;
  }
  for (const auto& row : t.rows) {
    std::vector<std::string> label;
    for (std::size_t i = 0; i < row.keys.size(); ++i) label.push_back(t.key_labels[i] + "=" + key_text(row.keys[i]));
    out += join(label, ", ") + ": " + join(row.cells, ", ") + "\n";
  }
  return out;
}

void add_poly(TableRow& row, const MultiPoly& p, bool ascii) {
  row.cells.push_back(p.to_string(ascii));
  row.cells_json.push_back(to_json(p));
}

Table table_A(const Config& c, const Given& given) {
  Table t{"A", {"n"}, {"n"}, "A_", {}, {}};
  long lo = 1;
  long hi = given("--max-n") ? static_cast<long>(c.max_n) : 6;
  if (given("--n")) lo = hi = need(given, "--n", c.n);
  if (lo < 1) throw UsageError("--n must be at least 1");
  for (long n = lo; n <= hi; ++n) {
    TableRow row{{Json(n)}, {}};
    for (long k = 0; k < n; ++k) add_poly(row, riordan_A(k, n), c.ascii);
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table table_phi(const Config& c, const Given& given) {
  Table t{"phi", {"r"}, {"r"}, "k=", {}, {}};
  const long rmax = given("--r") ? need(given, "--r", c.r) : 4;
  const long kmax = given("--k") ? need(given, "--k", c.k) : 4;
  for (long r = 0; r <= rmax; ++r) {
    TableRow row{{Json(r)}, {}};
    for (long k = 0; k <= kmax; ++k) add_poly(row, phi(r, k), c.ascii);
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table table_narayana(const Config& c, const Given& given) {
  Table t{"narayana", {"n"}, {"n"}, "k=", {}, {}};
  const long hi = given("--max-n") ? static_cast<long>(c.max_n) : 6;
  for (long n = 1; n <= hi; ++n) {
    TableRow row{{Json(n)}, {}};
    for (long k = 0; k < n; ++k) {
      const mpz_class v = binomial(n, k) * binomial(n, k + 1) / n;
      row.cells.push_back(v.get_str());
      row.cells_json.push_back(v.get_str());
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table table_g_values(const Config& c, const Given& given) {
  Table t{"g-values", {"x", "alpha", "beta"}, {"x", sym("α", "alpha", c.ascii), sym("β", "beta", c.ascii)}, "g_", {}, {}};
  const std::size_t nmax = given("--max-n") ? c.max_n : 6;
  const std::size_t trials = given("--trials") ? c.trials : 5;
  t.header = Json{{"seed", c.seed}, {"max_n", nmax}};
  for (const auto& pt : sample_points(c.seed, trials)) {
    const Rational& x = pt.at(alg::Var::X);
    const Rational& a = pt.at(alg::Var::Alpha);
    const Rational& b = pt.at(alg::Var::Beta);
    TableRow row{{Json(x.to_string()), Json(a.to_string()), Json(b.to_string())}, {}};
    for (const auto& v : g_values_at(nmax, x, a, b)) {
      row.cells.push_back(v.to_string());
      row.cells_json.push_back(v.to_string());
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::string cmd_table(const Config& c, const Given& given, Format f) {
  if (c.target == "A") return render_table(table_A(c, given), f);
  if (c.target == "phi") return render_table(table_phi(c, given), f);
  if (c.target == "narayana") return render_table(table_narayana(c, given), f);
  return render_table(table_g_values(c, given), f);
}

// ---------------------------------------------------------------- verify

CheckMode parse_mode(const std::string& m) {
  if (m == "symbolic") return CheckMode::Symbolic;
  if (m == "numeric") return CheckMode::Numeric;
  return CheckMode::Both;
}

std::string cmd_verify(const Config& c, const Given& given, Format f, int& exit_code) {
  VerifyOptions o;
  if (given("--max-n")) o.max_n = c.max_n;
  if (given("--order")) o.order = c.order;
  if (given("--numeric-order")) o.numeric_order = c.numeric_order;
  if (given("--trials")) o.trials = c.trials;
  o.seed = c.seed;
  o.c_max = c.c_max;
  o.mode = parse_mode(c.mode.empty() ? "both" : c.mode);

  std::vector<std::string> suites;
  for (const auto& s : c.suites) {
    if (s == "all") {
      for (const auto& name : suite_names()) suites.push_back(name);
    } else if (is_suite_name(s)) {
      suites.push_back(s);
    } else {
      throw UsageError("unknown suite '" + s + "'");
    }
  }
  if (!c.inject_fault.empty()) {
    if (!is_suite_name(c.inject_fault)) throw UsageError("unknown suite '" + c.inject_fault + "'");
    o.inject_fault = c.inject_fault;
  }

  std::vector<VerificationReport> reports;
  bool ok = true;
  for (const auto& s : suites) {
    reports.push_back(run_suite(s, o));
    if (reports.back().asserted && !reports.back().passed()) ok = false;
  }
  exit_code = ok ? kExitOk : kExitVerifyFailed;

  std::string out;
  if (f == Format::Json) {
    Json config{{"suites", suites},
                {"max_n", o.max_n},
                {"order", o.order},
                {"numeric_order", o.numeric_order},
                {"narayana_numeric_order", o.narayana_numeric_order},
                {"trials", o.trials},
                {"mode", c.mode.empty() ? "both" : c.mode},
                {"c_max", o.c_max}};
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(r.to_json());
    return dump(Json{{"tool", "runyon"},
                     {"version", RUNYON_VERSION},
                     {"seed", o.seed},
                     {"config", std::move(config)},
                     {"reports", std::move(arr)},
                     {"passed", ok}});
  }
  if (f == Format::Csv) {
    out = csv_row({"suite", "id", "params", "status", "witness"});
    for (const auto& r : reports) {
      for (const auto& cs : r.cases) out += csv_row({r.suite, cs.id, cs.params.dump(), to_string(cs.status), cs.witness});
    }
    return out;
  }
  out = "seed " + std::to_string(o.seed) + "\n";
  for (const auto& r : reports) out += r.to_text();
  out += ok ? "overall: PASS\n" : "overall: FAIL\n";
  return out;
}

// ---------------------------------------------------------------- wiring

void add_output_options(CLI::App* sub, Config& c) {
  sub->add_option("--format", c.format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  sub->add_option("--output,-o", c.output, "Write to this file instead of standard output");
  sub->add_flag("--ascii", c.ascii, "Spell α and β as alpha and beta");
}

void add_point_options(CLI::App* sub, Config& c) {
  sub->add_option("--x", c.x, "x as p or p/q");
  sub->add_option("--alpha", c.alpha, "α as p or p/q");
  sub->add_option("--beta", c.beta, "β as p or p/q");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Exact computations and identity checks for the Runyon functional-difference equation", "runyon"};
  app.require_subcommand(1);
  app.set_version_flag("--version", RUNYON_VERSION);

  auto* compute = app.add_subcommand("compute", "Print one object");
  compute->add_option("object", c.target, "g, A, carlitz, phi, narayana, narayana-gf, y or G")
      ->required()
      ->check(CLI::IsMember({"g", "A", "carlitz", "phi", "narayana", "narayana-gf", "y", "G"}));
  compute->add_option("--n", c.n, "Index n");
  compute->add_option("--k", c.k, "Index k");
  compute->add_option("--r", c.r, "Index r");
  compute->add_option("--order", c.order, "Truncation order for series (default 8)");
  compute->add_option("--repr", c.repr, "w-basis or ratfunc")->check(CLI::IsMember({"w-basis", "ratfunc"}));
  compute->add_option("--mode", c.mode, "symbolic or numeric (series only)")->check(CLI::IsMember({"symbolic", "numeric", "both"}));
  add_point_options(compute, c);
  add_output_options(compute, c);

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", c.suites, "all, or suite names (comma separated)")->delimiter(',');
  verify->add_option("--max-n", c.max_n, "Highest n (default 12)");
  verify->add_option("--order", c.order, "Symbolic truncation order (default 16)");
  verify->add_option("--numeric-order", c.numeric_order, "Truncation order at sample points (default 40)");
  verify->add_option("--mode", c.mode, "symbolic, numeric or both (default both)")->check(CLI::IsMember({"symbolic", "numeric", "both"}));
  verify->add_option("--seed", c.seed, "Seed for sample points")->capture_default_str();
  verify->add_option("--trials", c.trials, "Number of sample points (default 20)");
  verify->add_option("--max", c.c_max, "Range bound for c-compare")->capture_default_str();
  verify->add_option("--inject-fault", c.inject_fault)->group("");
  add_output_options(verify, c);

  auto* table = app.add_subcommand("table", "Print a table");
  table->add_option("kind", c.target, "A, phi, narayana or g-values")
      ->required()
      ->check(CLI::IsMember({"A", "phi", "narayana", "g-values"}));
  table->add_option("--n", c.n, "Single row n (A)");
  table->add_option("--max-n", c.max_n, "Rows up to n (default 6)");
  table->add_option("--r", c.r, "Rows up to r (phi, default 4)");
  table->add_option("--k", c.k, "Columns up to k (phi, default 4)");
  table->add_option("--seed", c.seed, "Seed for sample points (g-values)")->capture_default_str();
  table->add_option("--trials", c.trials, "Number of sample points (g-values, default 5)");
  add_output_options(table, c);

  auto* eval = app.add_subcommand("eval", "Evaluate g_n at a rational point");
  eval->add_option("--n", c.n, "Single n");
  eval->add_option("--max-n", c.max_n, "Values for n = 0..max-n (default 10)");
  add_point_options(eval, c);
  add_output_options(eval, c);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const Format f = c.format == "json" ? Format::Json : c.format == "csv" ? Format::Csv : Format::Text;
  int exit_code = kExitOk;
  std::string text;
  try {
    if (compute->parsed()) {
      text = cmd_compute(c, Given{compute}, f);
    } else if (verify->parsed()) {
      text = cmd_verify(c, Given{verify}, f, exit_code);
    } else if (table->parsed()) {
      text = cmd_table(c, Given{table}, f);
    } else {
      text = cmd_eval(c, Given{eval}, f);
    }
  } catch (const UsageError& e) {
    err << "runyon: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "runyon: " << e.code() << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "runyon: " << e.what() << "\n";
    return kExitUsage;
  }

  if (c.output.empty()) {
    out << text;
  } else {
    std::ofstream file(c.output, std::ios::binary);
    if (!file) {
      err << "runyon: cannot open " << c.output << "\n";
      return kExitUsage;
    }
    file << text;
  }
  return exit_code;
}

}  // namespace runyon::cli
