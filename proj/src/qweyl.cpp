#include "qcat/qweyl.hpp"

#include <algorithm>

#include "qcat/errors.hpp"

namespace qcat {

namespace {

void accumulate(IndexMap& m, Index2 k, const QRat& v) {
  if (v.is_zero()) return;
  auto [it, inserted] = m.try_emplace(k, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) m.erase(it);
  }
}

}  // namespace

NormalOrdered NormalOrdered::monomial(const QRat& c, int i, int j, int max_m, int max_a) {
  NormalOrdered r;
  r.max_m = max_m;
  r.max_a = max_a;
  if (i <= max_m && j <= max_a) accumulate(r.terms, {i, j}, c);
  return r;
}

NormalOrdered NormalOrdered::from_dual(const DualCoeffs& T) {
  NormalOrdered r;
  r.terms = T.entries;
  r.max_m = T.max_r1;
  r.max_a = T.max_r2;
  return r;
}

QRat NormalOrdered::coeff(int i, int j) const {
  if (i > max_m || j > max_a) {
    throw InsufficientWindow("M^" + std::to_string(i) + " A^" + std::to_string(j) +
                             " is outside the known window");
  }
  auto it = terms.find({i, j});
  return it == terms.end() ? QRat() : it->second;
}

NormalOrdered NormalOrdered::truncated(int mm, int ma) const {
  NormalOrdered r;
  r.max_m = std::min(max_m, mm);
  r.max_a = std::min(max_a, ma);
  for (const auto& [k, v] : terms) {
    if (k.i1 <= r.max_m && k.i2 <= r.max_a) r.terms.emplace(k, v);
  }
  return r;
}

NormalOrdered& NormalOrdered::operator+=(const NormalOrdered& o) {
  *this = truncated(o.max_m, o.max_a);
  for (const auto& [k, v] : o.terms) {
    if (k.i1 <= max_m && k.i2 <= max_a) accumulate(terms, k, v);
  }
  return *this;
}

NormalOrdered& NormalOrdered::operator-=(const NormalOrdered& o) {
  NormalOrdered neg = o;
  for (auto& [k, v] : neg.terms) v = -v;
  return *this += neg;
}

NormalOrdered& NormalOrdered::operator*=(const QRat& c) {
  if (c.is_zero()) {
    terms.clear();
    return *this;
  }
  for (auto& [k, v] : terms) v *= c;
  return *this;
}

NormalOrdered no_mul(const NormalOrdered& x, const NormalOrdered& y) {
  NormalOrdered r;
  r.max_m = std::min(x.max_m, y.max_m);
  r.max_a = std::min(x.max_a, y.max_a);
  for (const auto& [a, av] : x.terms) {
    for (const auto& [b, bv] : y.terms) {
      const Index2 s = a + b;
      if (s.i1 > r.max_m || s.i2 > r.max_a) continue;
      accumulate(r.terms, s, av * bv * QRat::q_pow(static_cast<long>(a.i2) * b.i1));
    }
  }
  return r;
}

NormalOrdered operator*(const NormalOrdered& a, const NormalOrdered& b) { return no_mul(a, b); }

namespace {

NormalOrdered substitute(const ZTSeries& P, const NormalOrdered& T0, int max_m, int max_a,
                         bool m_on_right) {
  if (T0.terms.count({0, 0})) throw IllGraded("T has a nonzero constant term");
  if (max_m > T0.max_m || max_a > T0.max_a) {
    throw InsufficientWindow("substitution window exceeds the window of T");
  }
  const NormalOrdered T = T0.truncated(max_m, max_a);
  NormalOrdered result = NormalOrdered::monomial(QRat(), 0, 0, max_m, max_a);
  NormalOrdered power = NormalOrdered::monomial(QRat(1), 0, 0, max_m, max_a);
  // Every term of T raises M-degree plus A-degree, so T^j vanishes in the
  // window once j exceeds max_m + max_a.
  for (int j = 0; j <= max_m + max_a && !power.is_zero(); ++j) {
    for (int i = 0; i <= max_m; ++i) {
      const QRat c = P.coeff(i, j);
      if (c.is_zero()) continue;
      const NormalOrdered mi = NormalOrdered::monomial(QRat(1), i, 0, max_m, max_a);
      result += (m_on_right ? no_mul(power, mi) : no_mul(mi, power)) * c;
    }
    power = no_mul(power, T);
  }
  return result;
}

}  // namespace

NormalOrdered no_substitute(const ZTSeries& P, const NormalOrdered& T, int max_m, int max_a) {
  return substitute(P, T, max_m, max_a, false);
}

NormalOrdered no_substitute_right(const ZTSeries& P, const NormalOrdered& T, int max_m,
                                  int max_a) {
  return substitute(P, T, max_m, max_a, true);
}

NormalOrdered verify_q_equation(const CatalanSeries& P, const DualCoeffs& T, int max_m,
                                int max_a) {
  const NormalOrdered A = NormalOrdered::monomial(QRat(1), 0, 1, max_m, max_a);
  return A - no_substitute(P.p, NormalOrdered::from_dual(T), max_m, max_a);
}

ZSeries op_A(const CatalanSeries& P, const ZSeries& f) { return P.at_t_one() * dilate(f, 1); }

ZSeries op_M(const ZSeries& f) { return f.shifted(1); }

ZSeries apply_P_of_MT(const CatalanSeries& P, const DualCoeffs& T, const ZSeries& f, int trunc) {
  if (!P.t_degree) throw Unsupported("P(M, T) on series needs P polynomial in t");
  const int n = std::min(trunc, f.trunc());
  ZSeries result(0, n);
  ZSeries power = f.truncated(n);
  for (int j = 0; j <= *P.t_degree; ++j) {
    if (j > 0) power = apply_T(P, T, power, n);
    for (int i = 0; i <= n; ++i) {
      const QRat c = P.p.coeff(i, j);
      if (!c.is_zero()) result += (power.shifted(i) * c).truncated(n);
    }
  }
  return result;
}

}  // namespace qcat
