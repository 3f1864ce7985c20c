#include "qcat/fuss.hpp"

#include "qcat/errors.hpp"

namespace qcat {

namespace {

void require_nonnegative(int N) {
  if (N < 0) throw DomainError("negative table size");
}

struct CompositionWalk {
  const std::vector<QRat>& C;
  int p;
  QRat total;

  // Part j (1-based) gets a value in [0, remaining]; the last part takes the rest.
  void walk(int j, int remaining, long placed, long exponent, const QRat& acc) {
    if (j == p) {
      const long k = remaining;
      const long e = exponent + (p - 1) * k * placed + (j - 1) * k;
      total += acc * C[k] * QRat::q_pow(e);
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      const long e = exponent + static_cast<long>(p - 1) * k * placed + static_cast<long>(j - 1) * k;
      walk(j + 1, remaining - k, placed + k, e, acc * C[k]);
    }
  }
};

}  // namespace

QNumberTable carlitz(int N) {
  require_nonnegative(N);
  QNumberTable t{2, {QRat(1)}, "carlitz recursion"};
  for (int r = 1; r <= N; ++r) {
    QRat c;
    for (int i = 0; i < r; ++i) {
      c += t.values[i] * t.values[r - 1 - i] * QRat::q_pow(static_cast<long>(r - 1 - i) * (i + 1));
    }
    t.values.push_back(c);
  }
  return t;
}

QNumberTable qfuss(int p, int N) {
  if (p < 2) throw DomainError("arity p must be at least 2");
  require_nonnegative(N);
  QNumberTable t{p, {QRat(1)}, "composition recursion"};
  for (int n = 1; n <= N; ++n) {
    CompositionWalk w{t.values, p, QRat()};
    w.walk(1, n - 1, 0, 0, QRat(1));
    t.values.push_back(w.total);
  }
  return t;
}

QNumberTable qfuss_via_basis(int p, int N) {
  if (p < 2) throw DomainError("arity p must be at least 2");
  require_nonnegative(N);
  QNumberTable t{p, {}, "basis expansion of 1"};
  ZSeries residual = ZSeries::one(N);
  for (int n = 0; n <= N; ++n) {
    const QRat c = residual.coeff(n);
    t.values.push_back(c);
    if (c.is_zero()) continue;
    residual -= (pochhammer(n * (p - 1) + 1, N - n).shifted(n) * c).truncated(N);
  }
  return t;
}

ZSeries q_airy(int p, int N, bool inverse_q) {
  if (p < 1) throw DomainError("q_airy needs p >= 1");
  require_nonnegative(N);
  ZSeries out(0, N);
  QRat poch(1);
  for (int n = 0; n <= N; ++n) {
    if (n > 0) poch *= QRat(1) - QRat::q_pow(n);
    const long e = p == 1 ? static_cast<long>(n) * n : static_cast<long>(p) * n * (n - 1) / 2;
    out.set(n, QRat(n % 2 ? -1 : 1) * QRat::q_pow(e) / poch);
  }
  return inverse_q ? subst_inverse_q(out) : out;
}

ZSeries rogers_ramanujan_cfrac(int depth, int N) {
  require_nonnegative(N);
  if (depth < N) {
    throw InsufficientDepth("continued fraction depth " + std::to_string(depth) +
                            " cannot fix z^" + std::to_string(N));
  }
  ZSeries K = ZSeries::one(N);
  for (int j = depth - 1; j >= 0; --j) {
    const ZSeries zj = ZSeries::monomial(QRat::q_pow(-j), 1);
    K = reciprocal(ZSeries::one() - (zj * K).truncated(N), N);
  }
  return K;
}

}  // namespace qcat
