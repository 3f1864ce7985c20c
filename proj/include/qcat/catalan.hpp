#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcat/series.hpp"

namespace qcat {

using IndexMap = std::map<Index2, QRat>;

// P(z, t) = t - z * Ptilde(z, t) * t^2.
struct CatalanSeries {
  ZTSeries ptilde;
  ZTSeries p;
  // deg_t P, known when Ptilde is exact in t.
  std::optional<int> t_degree;

  static CatalanSeries from_ptilde(const ZTSeries& ptilde);
  // P(z, 1)
  ZSeries at_t_one() const;
  // Largest possible t-index of a nonzero dual coefficient in row m.
  int row_bound(int m) const;
};

// e_k: the solution of e(qz) P(z,1) = e(z) P(z,q^k) with e = z^k + O(z^{k+1}).
ZSeries basis_element(const CatalanSeries& P, int k, int trunc);

// Products prod_{j<m} P(q^j z, t) inside a fixed window, built on demand.
class PredualTable {
 public:
  PredualTable(const CatalanSeries& P, int trunc_z, int trunc_t);
  const ZTSeries& column(int m);
  // z^{i1} prod_{j<i2} P(q^j z, t)
  ZTSeries element(Index2 i);

 private:
  const CatalanSeries& P_;
  int tz_;
  int tt_;
  std::vector<ZTSeries> columns_;
};

ZTSeries predual(const CatalanSeries& P, Index2 i, int trunc_z, int trunc_t);

// sum_{i<j} u_i[2] u_j[1]
long bn(const std::vector<Index2>& u);

struct DualCoeffs {
  IndexMap entries;  // nonzero entries only
  int max_r1 = 0;
  int max_r2 = 0;
  std::string method;

  QRat at(Index2 i) const;
  QRat at(int i1, int i2) const { return at(Index2{i1, i2}); }
  bool covers(int r1, int r2) const { return r1 <= max_r1 && r2 <= max_r2; }
};

DualCoeffs dual_coeffs_segner(const CatalanSeries& P, int max_r1, int max_r2);
DualCoeffs dual_coeffs_triangular(const CatalanSeries& P, int max_r1, int max_r2);

// Visiting order of the triangular solve: shell s lists (0,s)..(s-1,s) and
// then (s,0)..(s,s), restricted to the window.
std::vector<Index2> staircase_order(int max_r1, int max_r2);

// sum over n-tuples with sum r of x_{k1}...x_{kn} q^{B_n(k)}, inside the window.
IndexMap twisted_power(const IndexMap& x, int n, int max_r1, int max_r2);

// Coefficient of t^b in Delta P(z, s, t), as a series in (z, s).
std::vector<ZTSeries> delta_p_slices(const CatalanSeries& P);
// Delta P(z, s, q^k) = sum_a c_a(z) s^a; returns c_0 .. c_{deg_t P - 1}.
std::vector<ZSeries> delta_p(const CatalanSeries& P, QExp k);

// T f(z) = sum_i T_i e~_i(z, 1) f(q^{i2} z), known to min(trunc, f.trunc()).
ZSeries apply_T(const CatalanSeries& P, const DualCoeffs& T, const ZSeries& f, int trunc);
// T^n f via the grouped multi-index formula.
ZSeries apply_T_power(const CatalanSeries& P, const DualCoeffs& T, int n, const ZSeries& f,
                      int trunc);
// [e_n] f = q^n [z^0] (Delta P(z, T, q^n) f / (e_n(qz) P(z, 1)))
QRat dual_form(const CatalanSeries& P, const DualCoeffs& T, int n, const ZSeries& f);

// Pi_2(f, g) = sum_{i,j} f_i g_j e~_i(z,t) e~_j(q^{i2} z, t), with f and g given
// as coefficient arrays on the predual basis.
ZTSeries pi2(const CatalanSeries& P, const IndexMap& f, const IndexMap& g, int trunc_z,
             int trunc_t);

}  // namespace qcat
