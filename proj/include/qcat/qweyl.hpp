#pragma once

#include "qcat/catalan.hpp"

namespace qcat {

// Element sum c_{ij} M^i A^j of the q-Weyl algebra, A M = q M A, kept in
// normal order and known for M-degree <= max_m and A-degree <= max_a.
struct NormalOrdered {
  IndexMap terms;
  int max_m = kExact;
  int max_a = kExact;

  static NormalOrdered monomial(const QRat& c, int i, int j, int max_m = kExact,
                                int max_a = kExact);
  static NormalOrdered from_dual(const DualCoeffs& T);

  bool is_zero() const { return terms.empty(); }
  QRat coeff(int i, int j) const;
  NormalOrdered truncated(int max_m, int max_a) const;

  NormalOrdered& operator+=(const NormalOrdered& o);
  NormalOrdered& operator-=(const NormalOrdered& o);
  NormalOrdered& operator*=(const QRat& c);
  friend NormalOrdered operator+(NormalOrdered a, const NormalOrdered& b) { return a += b; }
  friend NormalOrdered operator-(NormalOrdered a, const NormalOrdered& b) { return a -= b; }
  friend NormalOrdered operator*(NormalOrdered a, const QRat& c) { return a *= c; }
  friend NormalOrdered operator*(const NormalOrdered& a, const NormalOrdered& b);
};

// Product with A^b M^c = q^{bc} M^c A^b.
NormalOrdered no_mul(const NormalOrdered& x, const NormalOrdered& y);

// P(M, T) = sum P_{ij} M^i T^j inside the window.  IllGraded when T has a
// constant term.
NormalOrdered no_substitute(const ZTSeries& P, const NormalOrdered& T, int max_m, int max_a);
// sum P_{ij} T^j M^i, the other placement of M.
NormalOrdered no_substitute_right(const ZTSeries& P, const NormalOrdered& T, int max_m,
                                  int max_a);

// A - P(M, T) inside the window; zero when T solves the q-equation there.
NormalOrdered verify_q_equation(const CatalanSeries& P, const DualCoeffs& T, int max_m,
                                int max_a);

// Operator model on series: A f = P(z,1) f(qz), M f = z f.
ZSeries op_A(const CatalanSeries& P, const ZSeries& f);
ZSeries op_M(const ZSeries& f);
// sum P_{ij} z^i T^j f, known to min(trunc, f.trunc()).
ZSeries apply_P_of_MT(const CatalanSeries& P, const DualCoeffs& T, const ZSeries& f, int trunc);

}  // namespace qcat
