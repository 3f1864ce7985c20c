#include "qcat/verify.hpp"

#include <functional>
#include <map>
#include <random>

#include "qcat/errors.hpp"
#include "qcat/fuss.hpp"
#include "qcat/pary.hpp"
#include "qcat/qweyl.hpp"

namespace qcat {

namespace {

ZTSeries ptilde_of(std::initializer_list<std::tuple<int, int, long>> terms) {
  ZTSeries r;
  for (auto [i, j, c] : terms) r.add_to(i, j, QRat(c));
  return r;
}

// P = t - z Ptilde t^2 for Ptilde = 0, 1, t, 1 + t.
std::vector<std::pair<std::string, CatalanSeries>> polynomial_family() {
  return {{"t", CatalanSeries::from_ptilde(ZTSeries())},
          {"t-zt^2", CatalanSeries::from_ptilde(ptilde_of({{0, 0, 1}}))},
          {"t-zt^3", CatalanSeries::from_ptilde(ptilde_of({{0, 1, 1}}))},
          {"t-z(1+t)t^2", CatalanSeries::from_ptilde(ptilde_of({{0, 0, 1}, {0, 1, 1}}))}};
}

std::vector<std::pair<std::string, ZSeries>> phi_family() {
  auto poly = [](std::initializer_list<long> c) {
    std::vector<QRat> v;
    for (long x : c) v.emplace_back(x);
    return ZSeries::polynomial(v);
  };
  return {{"z", poly({0, 1})}, {"z+z^2", poly({0, 1, 1})}, {"z-2z^2+z^3", poly({0, 1, -2, 1})}};
}

std::vector<Check> suite_carlitz(const SuiteParams& sp) {
  const QNumberTable t = carlitz(sp.order);
  bool catalan = true, degree = true;
  for (int n = 0; n <= sp.order; ++n) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), 2 * n, n);
    catalan = catalan && t.values[n].eval_q1() == mpq_class(b / (n + 1));
    degree = degree && static_cast<int>(t.values[n].numerator().size()) - 1 == n * (n - 1) / 2;
  }
  return {{"carlitz_catalan_at_q1", catalan}, {"carlitz_degree_binom_n_2", degree}};
}

std::vector<Check> suite_dual_coeffs(const SuiteParams& sp) {
  std::vector<ZTSeries> family = {ZTSeries(),
                                  ptilde_of({{0, 0, 1}}),
                                  ptilde_of({{0, 1, 1}}),
                                  ptilde_of({{0, 0, 1}, {0, 1, 1}}),
                                  ptilde_of({{0, 0, 1}, {1, 0, 1}}),
                                  ptilde_of({{0, 0, 1}, {1, 0, 1}, {0, 2, 1}})};
  std::mt19937_64 rng(sp.seed);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int k = 0; k < 3; ++k) {
    ZTSeries r;
    for (int i = 0; i <= 3; ++i) {
      for (int j = 0; j <= 3; ++j) r.add_to(i, j, QRat(c(rng)));
    }
    family.push_back(r);
  }
  bool agree = true;
  const int r1 = sp.order, r2 = sp.order + 4;
  for (const ZTSeries& pt : family) {
    const CatalanSeries P = CatalanSeries::from_ptilde(pt);
    agree = agree && dual_coeffs_segner(P, r1, r2).entries ==
                         dual_coeffs_triangular(P, r1, r2).entries;
  }
  return {{"segner_equals_triangular", agree}};
}

std::vector<Check> suite_duality(const SuiteParams& sp) {
  const int N = std::min(sp.order, 6);
  std::vector<Check> out;
  for (const auto& [name, P] : polynomial_family()) {
    const DualCoeffs T = dual_coeffs_segner(P, 2 * N + 2, P.row_bound(2 * N + 2));
    bool ok = true;
    for (int k = 0; k <= N; ++k) {
      const ZSeries e = basis_element(P, k, 2 * N + 2);
      for (int n = 0; n <= N; ++n) ok = ok && dual_form(P, T, n, e) == QRat(n == k ? 1 : 0);
    }
    out.push_back({"dual_form_delta[" + name + "]", ok});
  }
  return out;
}

std::vector<Check> suite_q_equation(const SuiteParams& sp) {
  std::vector<Check> out;
  for (const auto& [name, P] : polynomial_family()) {
    const int m = sp.order, ma = P.row_bound(m);
    const DualCoeffs T = dual_coeffs_segner(P, m, ma);
    out.push_back({"q_equation_residual_zero[" + name + "]", verify_q_equation(P, T, m, ma).is_zero()});
  }
  return out;
}

std::vector<Check> suite_diagonal(const SuiteParams& sp) {
  std::vector<Check> out;
  std::mt19937_64 rng(sp.seed);
  std::uniform_int_distribution<int> c(-3, 3);
  const int trunc = sp.order;
  for (const auto& [name, P] : polynomial_family()) {
    const DualCoeffs T = dual_coeffs_segner(P, trunc, P.row_bound(trunc));
    bool diag = true;
    for (int k = 0; k <= trunc / 2; ++k) {
      const ZSeries e = basis_element(P, k, trunc);
      diag = diag && agree_to(apply_T(P, T, e, trunc), e * QRat::q_pow(k), trunc);
    }
    bool powers = true;
    std::vector<QRat> v(trunc + 1);
    for (auto& x : v) x = QRat(c(rng));
    const ZSeries f = ZSeries::polynomial(v, trunc);
    ZSeries iter = f;
    for (int n = 1; n <= 3; ++n) {
      iter = apply_T(P, T, iter, trunc);
      powers = powers && agree_to(apply_T_power(P, T, n, f, trunc), iter, trunc);
    }
    out.push_back({"T_diagonal_on_basis[" + name + "]", diag});
    out.push_back({"T_power_equals_iteration[" + name + "]", powers});
  }
  return out;
}

std::vector<Check> suite_inversion(const SuiteParams& sp) {
  std::vector<Check> out;
  const int N = sp.order;
  for (const auto& [name, phi] : phi_family()) {
    const PAryContext ctx = PAryContext::make(phi, sp.p);
    const PAryContext dctx = PAryContext::make(diamond(ctx, N), sp.p);
    bool inv = true;
    for (int m = 0; m <= N; ++m) {
      const ZSeries zm = ZSeries::monomial(QRat(1), m, N);
      inv = inv && agree_to(u_apply(ctx, u_apply(dctx, zm, true, N), false, N), zm, N) &&
            agree_to(u_apply(dctx, u_apply(ctx, zm, false, N), true, N), zm, N);
    }
    out.push_back({"U_inversion[" + name + "]", inv});
    out.push_back({"diamond_involution[" + name + "]", agree_to(diamond(dctx, N, true), phi, N)});
  }
  return out;
}

std::vector<Check> suite_tgen(const SuiteParams& sp) {
  std::vector<Check> out;
  const int N = sp.order;
  for (const auto& [name, phi] : phi_family()) {
    const PAryContext ctx = PAryContext::make(phi, sp.p);
    const ZSeries a = tgen_from_dual(ctx, N);
    const bool ok = agree_to(a, tgen_functional(ctx, N), N) && agree_to(a, tgen_ratio(ctx, N), N) &&
                    agree_to(a, theta_constant_term(ctx, N), N);
    out.push_back({"four_tgen_constructions_agree[" + name + "]", ok});
  }
  return out;
}

std::vector<Check> suite_cfrac(const SuiteParams& sp) {
  const int N = sp.order;
  const ZSeries cf = rogers_ramanujan_cfrac(N + 2, N);
  const ZSeries ai = q_airy(1, N, true);
  return {{"cfrac_equals_tgen", agree_to(cf, tgen_functional(PAryContext::make(ZSeries::z(), 2), N), N)},
          {"cfrac_equals_Ai(z)/Ai(qz)", agree_to(cf, ai * reciprocal(dilate(ai, 1), N), N)}};
}

std::vector<Check> suite_qfuss(const SuiteParams& sp) {
  const QNumberTable a = qfuss(sp.p, sp.order), b = qfuss_via_basis(sp.p, sp.order);
  bool closed = true;
  for (int n = 0; n <= sp.order; ++n) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(sp.p) * n, n);
    closed = closed && a.values[n].eval_q1() == mpq_class(c / ((sp.p - 1) * n + 1));
  }
  return {{"qfuss_equals_basis_solve", a.values == b.values}, {"qfuss_closed_form_at_q1", closed}};
}

using Suite = std::function<std::vector<Check>(const SuiteParams&)>;

const std::vector<std::pair<std::string, Suite>>& suites() {
  static const std::vector<std::pair<std::string, Suite>> s = {
      {"carlitz", suite_carlitz},   {"dual-coeffs", suite_dual_coeffs},
      {"duality", suite_duality},   {"q-equation", suite_q_equation},
      {"diagonal", suite_diagonal}, {"inversion", suite_inversion},
      {"tgen", suite_tgen},         {"cfrac", suite_cfrac},
      {"qfuss", suite_qfuss}};
  return s;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : suites()) n.push_back(name);
    return n;
  }();
  return names;
}

std::vector<Check> run_suite(const std::string& name, const SuiteParams& params) {
  if (params.p < 2) throw DomainError("p must be at least 2");
  if (params.order < 1) throw DomainError("order must be at least 1");
  std::vector<Check> out;
  for (const auto& [n, fn] : suites()) {
    if (name != "all" && name != n) continue;
    for (Check& c : fn(params)) {
      c.name = n + "/" + c.name;
      out.push_back(std::move(c));
    }
    if (name == n) return out;
  }
  if (name != "all") throw DomainError("unknown suite '" + name + "'");
  return out;
}

}  // namespace qcat
