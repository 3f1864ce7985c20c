#include "qcat/cli.hpp"

#include <cstdlib>
#include <ostream>

#include "json.hpp"
#include "qcat/errors.hpp"
#include "qcat/expr.hpp"
#include "qcat/fuss.hpp"
#include "qcat/pary.hpp"
#include "qcat/verify.hpp"

namespace qcat::cli {

namespace {

using nlohmann::ordered_json;

struct Row {
  ordered_json index;
  std::string label;  // plain and LaTeX row name
  std::string value;
  std::string latex;
  std::vector<std::string> extra;  // further columns in plain output
};

struct Report {
  std::string command;
  ordered_json params = ordered_json::object();
  std::vector<std::string> columns;  // headers for plain output when rows carry extra
  std::vector<Row> rows;
  std::vector<Check> checks;
};

std::string latex_rational(const mpq_class& a) {
  if (a.get_den() == 1) return a.get_str();
  return "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
}

std::string latex_poly(const std::vector<mpq_class>& c, int root) {
  std::string out;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    const mpq_class a = abs(c[k]);
    std::string mono;
    if (k > 0) {
      const QExp e(static_cast<long>(k), root);
      mono = "q";
      if (e != QExp(1)) mono += "^{" + (e.is_integer() ? std::to_string(e.num) : e.to_string()) + "}";
    }
    std::string term = (a == 1 && !mono.empty()) ? mono : latex_rational(a) + mono;
    if (out.empty()) out = (c[k] < 0 ? "-" : "") + term;
    else out += (c[k] < 0 ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

std::string latex(const QRat& x) {
  const std::string num = latex_poly(x.numerator(), x.root());
  const std::vector<mpq_class> den = x.denominator();
  if (den == std::vector<mpq_class>{1}) return num;
  return "\\frac{" + num + "}{" + latex_poly(den, x.root()) + "}";
}

std::string latex(const ZSeries& f) {
  std::string out;
  for (int d = f.low(); d <= f.max_degree(); ++d) {
    const QRat c = f.coeff(d);
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "\\left(" + latex(c) + "\\right)";
    if (d != 0) out += d == 1 ? "z" : "z^{" + std::to_string(d) + "}";
  }
  if (out.empty()) out = "0";
  if (!f.exact()) out += " + O(z^{" + std::to_string(f.trunc() + 1) + "})";
  return out;
}

Row qrat_row(ordered_json index, std::string label, const QRat& v) {
  return {std::move(index), std::move(label), v.to_string(), latex(v), {}};
}

int resolve(int value) { return value >= 0 ? value : default_truncation(); }

void require_positive(int v, const char* what) {
  if (v < 1) throw DomainError(std::string(what) + " must be at least 1");
}

void require_arity(int p) {
  if (p < 2) throw DomainError("p must be at least 2");
}

// An explicit --trunc declares the input known only to that z-order.
int declared(const RunConfig& c) { return c.trunc >= 0 ? c.trunc : kExact; }

CatalanSeries parse_ptilde(const std::string& text, int trunc_z = kExact) {
  return CatalanSeries::from_ptilde(expr::lower(*expr::parse(text), trunc_z));
}

ZSeries parse_phi(const std::string& text, int trunc) {
  return expr::lower_univariate(*expr::parse(text), trunc);
}

Report cmd_dual_coeffs(const RunConfig& c) {
  const CatalanSeries P = parse_ptilde(c.ptilde, declared(c));
  const int r1 = resolve(c.r1);
  const int r2 = c.r2 >= 0 ? c.r2 : P.t_degree ? P.row_bound(r1) : resolve(-1);
  require_positive(r1, "r1");
  require_positive(r2, "r2");
  Report r{"dual-coeffs", {{"ptilde", c.ptilde}, {"r1", r1}, {"r2", r2}}, {}, {}, {}};
  if (c.trunc >= 0) r.params["trunc"] = c.trunc;
  const DualCoeffs a = dual_coeffs_segner(P, r1, r2);
  const DualCoeffs b = dual_coeffs_triangular(P, r1, r2);
  for (const auto& [k, v] : a.entries) {
    r.rows.push_back(qrat_row(ordered_json::array({k.i1, k.i2}),
                              "T_{" + std::to_string(k.i1) + "," + std::to_string(k.i2) + "}", v));
  }
  r.checks.push_back({"segner_equals_triangular", a.entries == b.entries});
  return r;
}

Report cmd_carlitz(const RunConfig& c) {
  const int n = resolve(c.n);
  Report r{"carlitz", {{"n", n}}, {}, {}, {}};
  const QNumberTable t = carlitz(n);
  for (int i = 0; i <= n; ++i) r.rows.push_back(qrat_row(i, "C_" + std::to_string(i), t.values[i]));
  r.checks = run_suite("carlitz", {2, std::max(n, 1), c.seed});
  return r;
}

Report cmd_qfuss(const RunConfig& c) {
  require_arity(c.p);
  const int n = resolve(c.n);
  Report r{"qfuss", {{"p", c.p}, {"n", n}}, {}, {}, {}};
  const QNumberTable t = qfuss(c.p, n);
  for (int i = 0; i <= n; ++i) {
    r.rows.push_back(qrat_row(i, "C_{" + std::to_string(c.p) + "," + std::to_string(i) + "}",
                              t.values[i]));
  }
  r.checks = run_suite("qfuss", {c.p, std::max(n, 1), c.seed});
  return r;
}

Report cmd_tgen(const RunConfig& c) {
  require_arity(c.p);
  const int N = resolve(c.order);
  require_positive(N, "order");
  const PAryContext ctx = PAryContext::make(parse_phi(c.phi, declared(c)), c.p);
  Report r{"tgen", {{"phi", c.phi}, {"p", c.p}, {"order", N}}, {"dual", "functional", "ratio", "theta"}, {}, {}};
  if (c.trunc >= 0) r.params["trunc"] = c.trunc;
  const ZSeries a = tgen_from_dual(ctx, N), b = tgen_functional(ctx, N), d = tgen_ratio(ctx, N),
                e = theta_constant_term(ctx, N);
  for (int i = 0; i <= N; ++i) {
    Row row = qrat_row(i, "[z^" + std::to_string(i) + "]", a.coeff(i));
    row.extra = {b.coeff(i).to_string(), d.coeff(i).to_string(), e.coeff(i).to_string()};
    r.rows.push_back(std::move(row));
  }
  r.checks = {{"dual_equals_functional", agree_to(a, b, N)},
              {"dual_equals_ratio", agree_to(a, d, N)},
              {"dual_equals_theta", agree_to(a, e, N)}};
  return r;
}

Report cmd_diamond(const RunConfig& c) {
  require_arity(c.p);
  const int N = resolve(c.order);
  require_positive(N, "order");
  const ZSeries phi = parse_phi(c.phi, declared(c));
  const PAryContext ctx = PAryContext::make(phi, c.p);
  Report r{"diamond", {{"phi", c.phi}, {"p", c.p}, {"order", N}}, {}, {}, {}};
  if (c.trunc >= 0) r.params["trunc"] = c.trunc;
  const ZSeries d = diamond(ctx, N);
  for (int i = 1; i <= N; ++i) r.rows.push_back(qrat_row(i, "[z^" + std::to_string(i) + "]", d.coeff(i)));
  const ZSeries back = diamond(PAryContext::make(d, c.p), N, true);
  r.checks.push_back({"involution", agree_to(back, phi.truncated(N), N)});
  return r;
}

Report cmd_basis(const RunConfig& c) {
  const CatalanSeries P = parse_ptilde(c.ptilde);
  const int trunc = resolve(c.trunc);
  require_positive(trunc, "trunc");
  const int n = c.n >= 0 ? c.n : std::min(trunc, 6);
  Report r{"basis", {{"ptilde", c.ptilde}, {"n", n}, {"trunc", trunc}}, {}, {}, {}};
  bool ratio = true;
  for (int k = 0; k <= n; ++k) {
    const ZSeries e = basis_element(P, k, trunc);
    r.rows.push_back({k, "e_" + std::to_string(k), e.to_string(), latex(e), {}});
    const ZSeries lhs = dilate(e, 1) * P.at_t_one();
    const ZSeries rhs = e * eval_t_exact(P.p, k);
    ratio = ratio && agree_to(lhs, rhs, std::min(lhs.trunc(), rhs.trunc()));
  }
  r.checks.push_back({"ratio_law", ratio});
  return r;
}

Report cmd_verify(const RunConfig& c) {
  require_arity(c.p);
  const int N = c.order >= 0 ? c.order : 8;
  Report r{"verify", {{"suite", c.suite}, {"p", c.p}, {"order", N}, {"seed", c.seed}}, {}, {}, {}};
  r.checks = run_suite(c.suite, {c.p, N, c.seed});
  return r;
}

void emit_json(const Report& r, std::ostream& out) {
  ordered_json j;
  j["command"] = r.command;
  j["params"] = r.params;
  j["values"] = ordered_json::array();
  for (const Row& row : r.rows) j["values"].push_back({{"index", row.index}, {"value", row.value}});
  j["checks"] = ordered_json::array();
  for (const Check& ch : r.checks) j["checks"].push_back({{"name", ch.name}, {"pass", ch.pass}});
  out << j.dump(2) << '\n';
}

void emit_plain(const Report& r, std::ostream& out) {
  if (!r.columns.empty() && !r.rows.empty()) {
    out << "# columns:";
    for (const auto& col : r.columns) out << ' ' << col;
    out << '\n';
  }
  for (const Row& row : r.rows) {
    out << row.label << " = " << row.value;
    for (const auto& x : row.extra) out << " | " << x;
    out << '\n';
  }
  for (const Check& ch : r.checks) out << "check " << ch.name << ": " << (ch.pass ? "pass" : "FAIL") << '\n';
}

void emit_latex(const Report& r, std::ostream& out) {
  out << "% qcat " << r.command << ' ' << r.params.dump() << '\n';
  if (!r.rows.empty()) {
    out << "\\begin{aligned}\n";
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
      out << r.rows[i].label << " &= " << r.rows[i].latex << (i + 1 < r.rows.size() ? " \\\\" : "") << '\n';
    }
    out << "\\end{aligned}\n";
  }
  for (const Check& ch : r.checks) out << "% check " << ch.name << ": " << (ch.pass ? "pass" : "FAIL") << '\n';
}

}  // namespace

int default_truncation() {
  const char* env = std::getenv("QCAT_DEFAULT_TRUNC");
  if (env == nullptr || *env == '\0') return 12;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > 100000) {
    throw DomainError(std::string("QCAT_DEFAULT_TRUNC must be a positive integer, got '") + env + "'");
  }
  return static_cast<int>(v);
}

Format parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "latex") return Format::Latex;
  if (name == "plain") return Format::Plain;
  throw DomainError("unknown format '" + name + "'");
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    Report r;
    if (config.command == "dual-coeffs") r = cmd_dual_coeffs(config);
    else if (config.command == "carlitz") r = cmd_carlitz(config);
    else if (config.command == "qfuss") r = cmd_qfuss(config);
    else if (config.command == "tgen") r = cmd_tgen(config);
    else if (config.command == "diamond") r = cmd_diamond(config);
    else if (config.command == "verify") r = cmd_verify(config);
    else if (config.command == "basis") r = cmd_basis(config);
    else throw DomainError("unknown command '" + config.command + "'");

    switch (config.format) {
      case Format::Json: emit_json(r, out); break;
      case Format::Plain: emit_plain(r, out); break;
      case Format::Latex: emit_latex(r, out); break;
    }
    for (const Check& ch : r.checks) {
      if (!ch.pass) return kCheckFailed;
    }
    return kOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const InsufficientTruncation& e) {
    err << "insufficient truncation: " << e.what() << '\n';
    return kTruncation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kOther;
  }
}

}  // namespace qcat::cli
