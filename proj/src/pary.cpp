#include "qcat/pary.hpp"

#include <numeric>

#include "qcat/errors.hpp"

namespace qcat {

namespace {

long binom2(long n) { return n * (n - 1) / 2; }

void require_order_one(const ZSeries& phi) {
  if (phi.low() < 0) throw DomainError("phi must be a power series");
  if (!phi.coeff(0).is_zero()) throw DomainError("phi must have order at least 1");
}

// prod_{j<m} (1 - phi(r^j z)) for m = 0..count, each truncated at trunc.
std::vector<ZSeries> partial_products(const ZSeries& phi, QExp base, int count, int trunc) {
  std::vector<ZSeries> out;
  out.reserve(count + 1);
  out.push_back(ZSeries::one(trunc));
  const ZSeries one_minus = ZSeries::one() - phi;
  for (int j = 0; j < count; ++j) {
    out.push_back((out.back() * dilate(one_minus, base * j)).truncated(trunc));
  }
  return out;
}

}  // namespace

PAryContext PAryContext::make(const ZSeries& phi, int p) {
  if (p < 2) throw DomainError("arity p must be at least 2");
  require_order_one(phi);
  PAryContext ctx;
  ctx.phi = phi;
  ctx.p = p;
  ctx.L = std::lcm(2, p - 1);
  return ctx;
}

PAryContext PAryContext::inverted() const {
  PAryContext ctx = *this;
  ctx.phi = subst_inverse_q(phi);
  return ctx;
}

ZSeries pary_power(const ZSeries& phi, int p, int k, QExp base, int trunc) {
  if (k < 0) throw DomainError("negative p-ary power");
  require_order_one(phi);
  const int inner = trunc - k;
  if (inner < 0) return ZSeries(0, trunc);
  std::vector<ZSeries> prods = partial_products(phi, base, k * (p - 1), inner);
  return prods.back().shifted(k);
}

ZSeries pary_power(const PAryContext& ctx, int k, int trunc) {
  return pary_power(ctx.phi, ctx.p, k, 1, trunc);
}

ZSeries garsia_power(const ZSeries& psi, int k, int trunc, QExp base) {
  if (k < 0) throw DomainError("negative power");
  if (psi.low() < 0 || !psi.coeff(0).is_zero() || psi.coeff(1).is_zero()) {
    throw DomainError("psi must have order exactly 1");
  }
  ZSeries r = ZSeries::one(trunc);
  for (int j = 0; j < k; ++j) r = (r * dilate(psi, base * j)).truncated(trunc);
  return r;
}

ZSeries kp_transform(const ZSeries& f, int p) {
  if (p < 2) throw DomainError("arity p must be at least 2");
  return substitute_power(f, p - 1);
}

CatalanSeries catalan_from_phi(const ZSeries& phi, int p) {
  require_order_one(phi);
  if (p < 2) throw DomainError("arity p must be at least 2");
  ZTSeries pt(trunc_add(phi.trunc(), -1), kExact);
  for (int i = 1; i <= phi.max_degree(); ++i) pt.add_to(i - 1, (p - 1) * i - 1, phi.coeff(i));
  return CatalanSeries::from_ptilde(pt);
}

std::vector<QRat> pary_dual_coeffs(const PAryContext& ctx, int N) {
  if (N < 0) throw DomainError("negative order");
  if (ctx.phi.trunc() < N) {
    throw InsufficientTruncation("phi is known only to z^" + std::to_string(ctx.phi.trunc()));
  }
  ZSeries residual = reciprocal(ZSeries::one() - ctx.phi, N);
  std::vector<ZSeries> prods = partial_products(ctx.phi, 1, N * (ctx.p - 1), N);
  std::vector<QRat> T(N + 1);
  for (int n = 0; n <= N; ++n) {
    T[n] = residual.coeff(n);
    if (T[n].is_zero()) continue;
    // q^{-n} phi_{p,n,q}(qz); its leading coefficient is 1.
    ZSeries b = dilate(prods[n * (ctx.p - 1)].shifted(n), 1) * QRat::q_pow(-n);
    residual -= (b * T[n]).truncated(N);
  }
  return T;
}

ZSeries diamond(const PAryContext& ctx, int N, bool inverse_q) {
  if (inverse_q) return subst_inverse_q(diamond(ctx.inverted(), N, false));
  const std::vector<QRat> T = pary_dual_coeffs(ctx, N);
  const long d = ctx.p - 1;
  ZSeries out(0, N);
  for (int n = 1; n <= N; ++n) {
    const long m = n * d;
    out.set(n, -T[n] * qpow(QExp(-(m + 1) * m / 2, d), ctx.L));
  }
  return out;
}

ZSeries u_apply(const PAryContext& ctx, const ZSeries& f, bool inverse_q, int trunc) {
  if (inverse_q) {
    return subst_inverse_q(u_apply(ctx.inverted(), subst_inverse_q(f), false, trunc));
  }
  if (f.low() < 0) throw DomainError("U acts on power series");
  const int N = std::min(trunc, f.trunc());
  const long d = ctx.p - 1;
  std::vector<ZSeries> prods = partial_products(ctx.phi, 1, N * d, N);
  ZSeries out(0, N);
  for (int k = 0; k <= N; ++k) {
    const QRat c = f.coeff(k);
    if (c.is_zero()) continue;
    const QRat scale = c * qpow(QExp(k * (k * d - 1), 2), ctx.L);
    out += (prods[k * d].shifted(k) * scale).truncated(N);
  }
  return out;
}

ZSeries roof(const ZSeries& f, int iterations) {
  ZSeries r(f.low(), f.trunc());
  for (int n = f.low(); n <= f.max_degree(); ++n) {
    const QRat c = f.coeff(n);
    if (!c.is_zero()) r.set(n, c * QRat::q_pow(-iterations * binom2(n)));
  }
  return r;
}

ZSeries star(const ZSeries& f, int trunc) {
  if (f.low() < 0 || f.coeff(0) != QRat(1)) throw DomainError("star needs f(0) = 1");
  const int N = std::min(trunc, f.trunc());
  std::vector<QRat> g(N + 1);
  g[0] = QRat(1);
  for (int k = 1; k <= N; ++k) {
    QRat acc;
    for (int i = 1; i <= k; ++i) {
      const QRat fi = f.coeff(i);
      if (fi.is_zero() || g[k - i].is_zero()) continue;
      acc += fi * QRat::q_pow(i - k) * g[k - i];
    }
    if (!acc.is_zero()) g[k] = acc / (QRat(1) - QRat::q_pow(-k));
  }
  return ZSeries::polynomial(g, N);
}

ZSeries tgen_from_dual(const PAryContext& ctx, int N) {
  const std::vector<QRat> T = pary_dual_coeffs(ctx, N);
  ZSeries out(0, N);
  for (int n = 0; n <= N; ++n) out.set(n, T[n] * QRat::q_pow(-(ctx.p - 1) * binom2(n)));
  return out;
}

ZSeries tgen_functional(const PAryContext& ctx, int N) {
  if (ctx.phi.trunc() < N) {
    throw InsufficientTruncation("phi is known only to z^" + std::to_string(ctx.phi.trunc()));
  }
  const int d = ctx.p - 1;
  ZSeries T = ZSeries::one(N);
  // Each pass fixes one more coefficient.
  for (int pass = 0; pass < N; ++pass) {
    ZSeries next = ZSeries::one(N);
    ZSeries prod = T;  // prod_{0 <= j <= d i} T(q^{-j} z), starting at i = 0
    int last_j = 0;
    for (int i = 1; i <= N; ++i) {
      for (int j = last_j + 1; j <= d * i; ++j) prod = (prod * dilate(T, -j)).truncated(N - i);
      last_j = d * i;
      const QRat c = ctx.phi.coeff(i);
      if (c.is_zero()) continue;
      next += (prod.shifted(i) * (c * QRat::q_pow(-d * binom2(i)))).truncated(N);
    }
    T = next;
  }
  return T;
}

ZSeries tgen_ratio(const PAryContext& ctx, int N) {
  const ZSeries g = roof(star(ZSeries::one() - ctx.phi, N), ctx.p - 1);
  return dilate(g, -1) * reciprocal(g, N);
}

ZSeries theta_constant_term(const PAryContext& ctx, int N) {
  const ZSeries Phi = star(ZSeries::one() - ctx.phi, N);
  const int d = ctx.p - 1;
  // theta(x, Q) = sum_n Q^{C(n,2)} x^n with Q = q^{-(p-1)}; the constant term in
  // u pairs u^{-n} of theta with u^n of Phi.
  auto pairing = [&](int extra) {
    ZSeries out(0, N);
    for (int n = 0; n <= N; ++n) {
      const QRat theta_n = QRat::q_pow(-d * binom2(n) - extra * n);
      out.set(n, theta_n * Phi.coeff(n));
    }
    return out;
  };
  return pairing(1) * reciprocal(pairing(0), N);
}

}  // namespace qcat
