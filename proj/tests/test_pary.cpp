#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qcat/errors.hpp"
#include "qcat/pary.hpp"

using namespace qcat;

namespace {

const QRat q = QRat::q();

ZSeries poly(std::initializer_list<long> c, int trunc = kExact) {
  std::vector<QRat> v;
  for (long x : c) v.emplace_back(x);
  return ZSeries::polynomial(v, trunc);
}

std::vector<ZSeries> phis() { return {poly({0, 1}), poly({0, 1, 1}), poly({0, 1, -2, 1})}; }

}  // namespace

TEST(PAry, ContextValidation) {
  EXPECT_THROW(PAryContext::make(poly({1, 1}), 2), DomainError);
  EXPECT_THROW(PAryContext::make(poly({0, 1}), 1), DomainError);
  EXPECT_EQ(PAryContext::make(poly({0, 1}), 3).L, 2);
  EXPECT_EQ(PAryContext::make(poly({0, 1}), 4).L, 6);
}

TEST(PAry, UOfZForCarlitz) {
  PAryContext ctx = PAryContext::make(poly({0, 1}), 2);
  EXPECT_TRUE(agree_to(u_apply(ctx, poly({0, 1}), false, 6), poly({0, 1, -1}), 6));
}

TEST(PAry, PowerOfZ) {
  // phi = z, p = 3: phi_{3,1,q} = z (1 - z)(1 - qz)
  PAryContext ctx = PAryContext::make(poly({0, 1}), 3);
  ZSeries expect = ZSeries::polynomial({QRat(0), QRat(1), -(QRat(1) + q), q});
  EXPECT_TRUE(agree_to(pary_power(ctx, 1, 8), expect, 8));
}

TEST(PAry, DiamondLeadingCoefficient) {
  PAryContext ctx = PAryContext::make(poly({0, 1}), 2);
  EXPECT_EQ(diamond(ctx, 4).coeff(1), -q.inverse());
}

TEST(PAry, TgenForCarlitz) {
  PAryContext ctx = PAryContext::make(poly({0, 1}), 2);
  ZSeries T = tgen_from_dual(ctx, 2);
  EXPECT_EQ(T.coeff(0), QRat(1));
  EXPECT_EQ(T.coeff(1), QRat(1));
  EXPECT_EQ(T.coeff(2), (QRat(1) + q) / q);
}

TEST(PAry, Roof) {
  EXPECT_EQ(roof(poly({0, 0, 1}), 1), ZSeries::monomial(q.inverse(), 2));
  EXPECT_EQ(roof(poly({0, 0, 0, 1}), 2), ZSeries::monomial(QRat::q_pow(-6), 3));
}

TEST(PAry, KpTransformSwapsArity) {
  // K_p phi_{p,k,q} = (K_p phi)_{2, k(p-1), q^{1/(p-1)}}
  for (int p : {2, 3, 4}) {
    for (const ZSeries& phi : phis()) {
      PAryContext ctx = PAryContext::make(phi, p);
      for (int k = 0; k <= 3; ++k) {
        ZSeries lhs = kp_transform(pary_power(ctx, k, 10), p);
        ZSeries rhs = pary_power(kp_transform(phi, p), 2, k * (p - 1), QExp(1, p - 1), 10);
        EXPECT_TRUE(agree_to(lhs, rhs, 10)) << p << " " << k;
      }
    }
  }
}

TEST(PAry, GarsiaPowerOfZTimesOneMinusPhi) {
  // For p = 2, phi_{2,k,q} = q^{-C(k,2)} psi_{[k,q]} with psi = z (1 - phi).
  for (const ZSeries& phi : phis()) {
    ZSeries psi = (ZSeries::one() - phi).shifted(1);
    for (int k = 0; k <= 4; ++k) {
      ZSeries lhs = pary_power(phi, 2, k, 1, 9);
      ZSeries rhs = garsia_power(psi, k, 9) * QRat::q_pow(-k * (k - 1) / 2);
      EXPECT_TRUE(agree_to(lhs, rhs, 9));
    }
  }
  EXPECT_THROW(garsia_power(poly({0, 0, 1}), 2, 5), DomainError);
}

TEST(PAry, StarOfOneMinusZIsEuler) {
  // g(z) = prod_n (1 - z/q^n): [z^n] = (-1)^n q^{-C(n,2)} / (1/q;1/q)_n
  ZSeries g = star(poly({1, -1}), 8);
  for (int n = 0; n <= 8; ++n) {
    QRat poch(1);
    for (int j = 1; j <= n; ++j) poch *= QRat(1) - QRat::q_pow(-j);
    QRat expect = QRat(n % 2 ? -1 : 1) * QRat::q_pow(-n * (n - 1) / 2) / poch;
    EXPECT_EQ(g.coeff(n), expect) << n;
  }
}

TEST(PAry, StarSatisfiesItsEquation) {
  for (const ZSeries& phi : phis()) {
    ZSeries f = ZSeries::one() - phi;
    ZSeries g = star(f, 8);
    EXPECT_TRUE(agree_to(g, f * dilate(g, -1), 8));
  }
}

TEST(PAry, DualCoefficientsMatchGeneralSolver) {
  for (int p : {2, 3}) {
    for (const ZSeries& phi : phis()) {
      PAryContext ctx = PAryContext::make(phi, p);
      const int N = 5;
      std::vector<QRat> T = pary_dual_coeffs(ctx, N);
      CatalanSeries P = catalan_from_phi(phi, p);
      DualCoeffs full = dual_coeffs_triangular(P, N, N * (p - 1) + 1);
      for (const auto& [k, v] : full.entries) {
        EXPECT_EQ(k.i2, k.i1 * (p - 1) + 1) << k.to_string();
      }
      for (int n = 0; n <= N; ++n) EXPECT_EQ(full.at(n, n * (p - 1) + 1), T[n]) << n;
    }
  }
}

TEST(PAry, BasisIsPAryPower) {
  for (int p : {2, 3}) {
    for (const ZSeries& phi : phis()) {
      PAryContext ctx = PAryContext::make(phi, p);
      CatalanSeries P = catalan_from_phi(phi, p);
      for (int k = 0; k <= 4; ++k) {
        EXPECT_TRUE(agree_to(basis_element(P, k, 9), pary_power(ctx, k, 9), 9)) << p << " " << k;
      }
    }
  }
}

TEST(PAry, UInversionSmall) {
  for (int p : {2, 3}) {
    for (const ZSeries& phi : phis()) {
      PAryContext ctx = PAryContext::make(phi, p);
      const int N = 6;
      PAryContext dctx = PAryContext::make(diamond(ctx, N), p);
      for (int m = 0; m <= 4; ++m) {
        ZSeries zm = ZSeries::monomial(QRat(1), m, N);
        ZSeries a = u_apply(ctx, u_apply(dctx, zm, true, N), false, N);
        ZSeries b = u_apply(dctx, u_apply(ctx, zm, false, N), true, N);
        EXPECT_TRUE(agree_to(a, zm, N)) << p << " m=" << m;
        EXPECT_TRUE(agree_to(b, zm, N)) << p << " m=" << m;
      }
    }
  }
}

TEST(PAry, DiamondInvolution) {
  for (int p : {2, 3}) {
    for (const ZSeries& phi : phis()) {
      const int N = 6;
      PAryContext dctx = PAryContext::make(diamond(PAryContext::make(phi, p), N), p);
      EXPECT_TRUE(agree_to(diamond(dctx, N, true), phi, N));
    }
  }
}

TEST(PAry, FourTgenConstructionsAgree) {
  for (int p : {2, 3}) {
    for (const ZSeries& phi : phis()) {
      PAryContext ctx = PAryContext::make(phi, p);
      const int N = 6;
      ZSeries a = tgen_from_dual(ctx, N);
      EXPECT_TRUE(agree_to(a, tgen_functional(ctx, N), N));
      EXPECT_TRUE(agree_to(a, tgen_ratio(ctx, N), N));
      EXPECT_TRUE(agree_to(a, theta_constant_term(ctx, N), N));
      // T = 1 - phi^diamond(q^{p/2} z)
      EXPECT_TRUE(agree_to(a, ZSeries::one() - dilate(diamond(ctx, N), QExp(p, 2)), N));
    }
  }
}

TEST(PAryProperty, BnExpansion) {
  std::mt19937_64 rng(555);
  std::uniform_int_distribution<int> len(1, 6), nd(1, 5);
  auto c2 = [](long n) { return n * (n - 1) / 2; };
  for (int trial = 0; trial < 200; ++trial) {
    const int m = len(rng);
    std::vector<Index2> u(m);
    long total = 0;
    for (auto& x : u) {
      const int n = nd(rng);
      x = {n - 1, n};
      total += n;
    }
    long rhs = c2(total);
    for (int i = 0; i < m; ++i) rhs -= c2(u[i].i2) + static_cast<long>(u[i].i2) * (m - 1 - i);
    EXPECT_EQ(bn(u), rhs);
  }
}
