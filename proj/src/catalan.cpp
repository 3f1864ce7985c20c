#include "qcat/catalan.hpp"

#include <algorithm>

#include "qcat/errors.hpp"

namespace qcat {

namespace {

std::string window_name(int r1, int r2) {
  return "(" + std::to_string(r1) + "," + std::to_string(r2) + ")";
}

int require_t_degree(const CatalanSeries& P, const char* what) {
  if (!P.t_degree) throw Unsupported(std::string(what) + " needs P polynomial in t");
  return *P.t_degree;
}

using Grid = std::vector<std::vector<QRat>>;

Grid make_grid(int r1, int r2) { return Grid(r1 + 1, std::vector<QRat>(r2 + 1)); }

}  // namespace

CatalanSeries CatalanSeries::from_ptilde(const ZTSeries& ptilde) {
  CatalanSeries P;
  P.ptilde = ptilde;
  ZTSeries p(trunc_add(ptilde.trunc_z(), 1), trunc_add(ptilde.trunc_t(), 2));
  p.add_to(0, 1, QRat(1));
  for (const auto& [k, v] : ptilde.terms()) p.add_to(k.i1 + 1, k.i2 + 2, -v);
  P.p = p;
  if (is_exact(ptilde.trunc_t())) P.t_degree = std::max(1, ptilde.t_degree() + 2);
  return P;
}

ZSeries CatalanSeries::at_t_one() const { return eval_t_exact(p, 0); }

int CatalanSeries::row_bound(int m) const {
  const int d = require_t_degree(*this, "the row bound");
  return m * std::max(d - 1, 0) + 1;
}

ZSeries basis_element(const CatalanSeries& P, int k, int trunc) {
  if (k < 0) throw DomainError("basis index must be nonnegative");
  const ZSeries num = eval_t_exact(P.p, k);
  const ZSeries den = eval_t_exact(P.p, 0);
  const int n = std::min(trunc - k, num.trunc());
  if (n < 0) throw InsufficientTruncation("e_" + std::to_string(k) + " needs trunc >= k");
  const ZSeries ratio = num * reciprocal(den, n);
  std::vector<QRat> e(n + 1);
  e[0] = QRat(1);
  const QRat qk = QRat::q_pow(k);
  for (int m = 1; m <= n; ++m) {
    QRat acc;
    for (int c = 1; c <= m; ++c) {
      if (e[m - c].is_zero()) continue;
      const QRat rc = ratio.coeff(c);
      if (!rc.is_zero()) acc += rc * e[m - c];
    }
    if (!acc.is_zero()) e[m] = acc / (QRat::q_pow(k + m) - qk);
  }
  ZSeries out(0, k + n);
  for (int m = 0; m <= n; ++m) out.set(k + m, e[m]);
  return out;
}

PredualTable::PredualTable(const CatalanSeries& P, int trunc_z, int trunc_t)
    : P_(P), tz_(trunc_z), tt_(trunc_t) {
  columns_.push_back(ZTSeries::monomial(QRat(1), 0, 0, tz_, tt_));
}

const ZTSeries& PredualTable::column(int m) {
  while (static_cast<int>(columns_.size()) <= m) {
    const int j = static_cast<int>(columns_.size()) - 1;
    columns_.push_back(mul_window(columns_.back(), scale_z(P_.p, j), tz_, tt_));
  }
  return columns_[m];
}

ZTSeries PredualTable::element(Index2 i) {
  return column(i.i2).shifted_z(i.i1).truncated(tz_, tt_);
}

ZTSeries predual(const CatalanSeries& P, Index2 i, int trunc_z, int trunc_t) {
  PredualTable table(P, trunc_z, trunc_t);
  return table.element(i);
}

long bn(const std::vector<Index2>& u) {
  long total = 0;
  long prefix_t = 0;
  for (const Index2& x : u) {
    total += prefix_t * x.i1;
    prefix_t += x.i2;
  }
  return total;
}

QRat DualCoeffs::at(Index2 i) const {
  if (i.i1 < 0 || i.i2 < 0) return QRat();
  if (!covers(i.i1, i.i2)) {
    throw InsufficientWindow("dual coefficient " + i.to_string() + " outside window " +
                             window_name(max_r1, max_r2));
  }
  auto it = entries.find(i);
  return it == entries.end() ? QRat() : it->second;
}

DualCoeffs dual_coeffs_segner(const CatalanSeries& P, int max_r1, int max_r2) {
  if (max_r1 < 0 || max_r2 < 0) throw DomainError("negative window");
  const ZTSeries& pt = P.ptilde;
  if (max_r1 >= 1 && max_r2 >= 2) {
    if (pt.trunc_z() < max_r1 - 1) {
      throw InsufficientTruncation("R" + Index2{pt.trunc_z() + 1, 1}.to_string() +
                                   " is needed for window " + window_name(max_r1, max_r2) +
                                   " but Ptilde is known only to z^" +
                                   std::to_string(pt.trunc_z()));
    }
    if (pt.trunc_t() < max_r2 - 2) {
      throw InsufficientTruncation("R" + Index2{0, pt.trunc_t() + 2}.to_string() +
                                   " is needed for window " + window_name(max_r1, max_r2) +
                                   " but Ptilde is known only to t^" +
                                   std::to_string(pt.trunc_t()));
    }
  }
  // R = Ptilde * t, restricted to the indices that can contribute.
  struct RTerm {
    int i;
    int j;
    QRat v;
  };
  std::vector<RTerm> rterms;
  int max_power = 1;
  for (const auto& [k, v] : pt.terms()) {
    const int i = k.i1;
    const int j = k.i2 + 1;
    if (i + 1 > max_r1 || j + 1 > max_r2) continue;
    rterms.push_back({i, j, v});
    max_power = std::max(max_power, j + 1);
  }

  Grid T = make_grid(max_r1, max_r2);
  // pw[k] holds the twisted k-fold products; pw[1] is T itself.
  std::vector<Grid> pw(max_power + 1);
  for (int k = 2; k <= max_power; ++k) pw[k] = make_grid(max_r1, max_r2);
  auto power = [&](int k) -> const Grid& { return k == 1 ? T : pw[k]; };

  for (int n = 0; n <= max_r1; ++n) {
    for (int m = 0; m <= max_r2; ++m) {
      QRat val = (n == 0 && m == 1) ? QRat(1) : QRat();
      for (const RTerm& r : rterms) {
        if (r.i + 1 > n || r.j + 1 > m) continue;
        const QRat& s = power(r.j + 1)[n - r.i - 1][m];
        if (!s.is_zero()) val += r.v * s;
      }
      T[n][m] = val;
    }
    for (int k = 2; k <= max_power; ++k) {
      const Grid& prev = power(k - 1);
      for (int m = k; m <= max_r2; ++m) {
        QRat acc;
        for (int a1 = 0; a1 <= n; ++a1) {
          for (int a2 = k - 1; a2 < m; ++a2) {
            const QRat& sv = prev[a1][a2];
            if (sv.is_zero()) continue;
            const QRat& tv = T[n - a1][m - a2];
            if (tv.is_zero()) continue;
            acc += sv * tv * QRat::q_pow(static_cast<long>(a2) * (n - a1));
          }
        }
        pw[k][n][m] = acc;
      }
    }
  }

  DualCoeffs out;
  out.max_r1 = max_r1;
  out.max_r2 = max_r2;
  out.method = "segner";
  for (int n = 0; n <= max_r1; ++n) {
    for (int m = 0; m <= max_r2; ++m) {
      if (!T[n][m].is_zero()) out.entries.emplace(Index2{n, m}, T[n][m]);
    }
  }
  return out;
}

std::vector<Index2> staircase_order(int max_r1, int max_r2) {
  std::vector<Index2> order;
  const int shells = std::max(max_r1, max_r2);
  for (int s = 0; s <= shells; ++s) {
    for (int x = 0; x < s; ++x) {
      if (x <= max_r1 && s <= max_r2) order.push_back({x, s});
    }
    for (int y = 0; y <= s; ++y) {
      if (s <= max_r1 && y <= max_r2) order.push_back({s, y});
    }
  }
  return order;
}

DualCoeffs dual_coeffs_triangular(const CatalanSeries& P, int max_r1, int max_r2) {
  if (max_r1 < 0 || max_r2 < 0) throw DomainError("negative window");
  const int w1 = std::min(max_r1, P.p.trunc_z());
  const int w2 = std::min(max_r2, P.p.trunc_t());
  PredualTable table(P, w1, w2);
  ZTSeries residual = ZTSeries::monomial(QRat(1), 0, 1, w1, w2);
  DualCoeffs out;
  out.max_r1 = w1;
  out.max_r2 = w2;
  out.method = "triangular";
  for (const Index2& j : staircase_order(w1, w2)) {
    const QRat g = residual.coeff(j.i1, j.i2);
    if (g.is_zero()) continue;
    out.entries.emplace(j, g);
    residual -= table.element(j) * g;
  }
  return out;
}

IndexMap twisted_power(const IndexMap& x, int n, int max_r1, int max_r2) {
  IndexMap acc{{Index2{0, 0}, QRat(1)}};
  for (int step = 0; step < n; ++step) {
    IndexMap next;
    for (const auto& [a, av] : acc) {
      for (const auto& [b, bv] : x) {
        const Index2 r = a + b;
        if (r.i1 > max_r1 || r.i2 > max_r2) continue;
        QRat v = av * bv * QRat::q_pow(static_cast<long>(a.i2) * b.i1);
        auto [it, inserted] = next.try_emplace(r, v);
        if (!inserted) {
          it->second += v;
          if (it->second.is_zero()) next.erase(it);
        }
      }
    }
    acc = std::move(next);
  }
  return acc;
}

std::vector<ZTSeries> delta_p_slices(const CatalanSeries& P) {
  const int d = require_t_degree(P, "Delta P");
  std::vector<ZTSeries> slices(d, ZTSeries(P.p.trunc_z(), kExact));
  for (const auto& [k, v] : P.p.terms()) {
    for (int a = 0; a < k.i2; ++a) slices[k.i2 - 1 - a].add_to(k.i1, a, v);
  }
  return slices;
}

std::vector<ZSeries> delta_p(const CatalanSeries& P, QExp k) {
  const int d = require_t_degree(P, "Delta P");
  std::vector<ZSeries> c(d, ZSeries(0, P.p.trunc_z()));
  for (const auto& [idx, v] : P.p.terms()) {
    for (int a = 0; a < idx.i2; ++a) {
      c[a].add_to(idx.i1, v * QRat::q_pow(k * (idx.i2 - 1 - a)));
    }
  }
  return c;
}

namespace {

// Sum over columns m of (sum_{i1} S_{i1,m} z^{i1}) prod_{j<m} P(q^j z, 1) f(q^m z).
ZSeries apply_grouped(const CatalanSeries& P, const IndexMap& S, const ZSeries& f, int n,
                      int max_col) {
  const ZSeries p1 = P.at_t_one();
  ZSeries result(0, n);
  ZSeries prod = ZSeries::one(n);
  for (int m = 0; m <= max_col; ++m) {
    ZSeries col(0, n);
    for (const auto& [k, v] : S) {
      if (k.i2 == m && k.i1 <= n) col.set(k.i1, v);
    }
    if (col.order()) result += (col * prod * dilate(f, m)).truncated(n);
    prod = (prod * dilate(p1, m)).truncated(n);
  }
  return result.truncated(n);
}

int checked_trunc(const CatalanSeries& P, const DualCoeffs& T, const ZSeries& f, int trunc,
                  int* slope) {
  const int d = require_t_degree(P, "the operator T");
  *slope = std::max(d - 1, 0);
  if (f.low() < 0) throw DomainError("T acts on power series");
  const int n = std::min({trunc, f.trunc(), P.p.trunc_z()});
  if (!T.covers(n, n * *slope + 1)) {
    throw InsufficientWindow("T needs dual coefficients up to " +
                             window_name(n, n * *slope + 1) + ", have " +
                             window_name(T.max_r1, T.max_r2));
  }
  return n;
}

}  // namespace

ZSeries apply_T(const CatalanSeries& P, const DualCoeffs& T, const ZSeries& f, int trunc) {
  int slope = 0;
  const int n = checked_trunc(P, T, f, trunc, &slope);
  IndexMap S;
  for (const auto& [k, v] : T.entries) {
    if (k.i1 <= n) S.emplace(k, v);
  }
  return apply_grouped(P, S, f, n, n * slope + 1);
}

ZSeries apply_T_power(const CatalanSeries& P, const DualCoeffs& T, int n, const ZSeries& f,
                      int trunc) {
  if (n < 0) throw DomainError("negative power of T");
  int slope = 0;
  const int N = checked_trunc(P, T, f, trunc, &slope);
  IndexMap base;
  for (const auto& [k, v] : T.entries) {
    if (k.i1 <= N) base.emplace(k, v);
  }
  const int cols = N * slope + n;
  return apply_grouped(P, twisted_power(base, n, N, cols), f, N, cols);
}

QRat dual_form(const CatalanSeries& P, const DualCoeffs& T, int n, const ZSeries& f) {
  if (n < 0) throw DomainError("basis index must be nonnegative");
  const std::vector<ZSeries> c = delta_p(P, n);
  if (f.trunc() < n) {
    throw InsufficientTruncation("dual form [e_" + std::to_string(n) + "] needs f to z^" +
                                 std::to_string(n));
  }
  ZSeries num(0, n);
  ZSeries power = f.truncated(n);
  for (std::size_t a = 0; a < c.size(); ++a) {
    if (a > 0) power = apply_T(P, T, power, n);
    num += (c[a] * power).truncated(n);
  }
  const ZSeries en = basis_element(P, n, 2 * n);
  const ZSeries den = (dilate(en, 1) * P.at_t_one()).truncated(2 * n).with_low(n);
  const ZSeries quotient = num * reciprocal(den);
  return QRat::q_pow(n) * quotient.coeff(0);
}

ZTSeries pi2(const CatalanSeries& P, const IndexMap& f, const IndexMap& g, int trunc_z,
             int trunc_t) {
  PredualTable table(P, trunc_z, trunc_t);
  ZTSeries ghat(trunc_z, trunc_t);
  for (const auto& [j, v] : g) {
    if (j.i1 <= trunc_z && j.i2 <= trunc_t) ghat += table.element(j) * v;
  }
  std::map<int, ZTSeries> by_column;
  for (const auto& [i, v] : f) {
    if (i.i1 > trunc_z || i.i2 > trunc_t) continue;
    auto [it, inserted] = by_column.try_emplace(i.i2, ZTSeries(trunc_z, trunc_t));
    it->second.add_to(i.i1, 0, v);
  }
  ZTSeries result(std::min(trunc_z, ghat.trunc_z()), std::min(trunc_t, ghat.trunc_t()));
  for (const auto& [m, col] : by_column) {
    const ZTSeries left = mul_window(col, table.column(m), trunc_z, trunc_t);
    result += mul_window(left, scale_z(ghat, m), trunc_z, trunc_t);
  }
  return result;
}

}  // namespace qcat
