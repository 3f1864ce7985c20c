#pragma once

#include <vector>

#include "qcat/catalan.hpp"

namespace qcat {

// phi of order >= 1 and arity p >= 2.  L is the root order that every
// exponent in this family fits into.
struct PAryContext {
  ZSeries phi;
  int p = 2;
  int L = 2;

  static PAryContext make(const ZSeries& phi, int p);
  // Same arity with phi's coefficients sent through q -> 1/q.
  PAryContext inverted() const;
};

// z^k prod_{j < k(p-1)} (1 - phi(r^j z)) with r = q^base.
ZSeries pary_power(const ZSeries& phi, int p, int k, QExp base, int trunc);
ZSeries pary_power(const PAryContext& ctx, int k, int trunc);
// prod_{j<k} psi(r^j z) with r = q^base; psi must have order 1.
ZSeries garsia_power(const ZSeries& psi, int k, int trunc, QExp base = 1);
// f(z^{p-1})
ZSeries kp_transform(const ZSeries& f, int p);
// P = t - t phi(t^{p-1} z) as a Catalan series.
CatalanSeries catalan_from_phi(const ZSeries& phi, int p);

// T_0..T_N of sum_n q^{-n} T_n phi_{p,n,q}(qz) = 1/(1 - phi(z)).
std::vector<QRat> pary_dual_coeffs(const PAryContext& ctx, int N);
// phi^diamond = -sum_{n>=1} T_n q^{-C(n(p-1)+1, 2)/(p-1)} z^n.  With inverse_q
// the computation runs with 1/q in place of q.
ZSeries diamond(const PAryContext& ctx, int N, bool inverse_q = false);
// U z^k = q^{C(k(p-1), 2)/(p-1)} phi_{p,k,q}(z), extended linearly.  With
// inverse_q, U_{p,phi,1/q}.
ZSeries u_apply(const PAryContext& ctx, const ZSeries& f, bool inverse_q, int trunc);

// Multiplies the coefficient of z^n by q^{-iterations C(n,2)}.
ZSeries roof(const ZSeries& f, int iterations);
// The g with g(z) = f(z) g(z/q), g(0) = 1; needs f(0) = 1.
ZSeries star(const ZSeries& f, int trunc);

// Four constructions of the generating series sum_n q^{-(p-1)C(n,2)} T_n z^n.
ZSeries tgen_from_dual(const PAryContext& ctx, int N);
ZSeries tgen_functional(const PAryContext& ctx, int N);
ZSeries tgen_ratio(const PAryContext& ctx, int N);
ZSeries theta_constant_term(const PAryContext& ctx, int N);

}  // namespace qcat
