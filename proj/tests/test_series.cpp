#include <gtest/gtest.h>

#include <functional>

#include "qcat/errors.hpp"
#include "qcat/series.hpp"
#include "support.hpp"

using namespace qcat;

namespace {

const QRat q = QRat::q();

// Number of ordered ways to write n as a sum of 1s and 2s, by enumeration.
long count_compositions_12(int n) {
  std::function<long(int)> walk = [&](int rest) -> long {
    if (rest == 0) return 1;
    long c = walk(rest - 1);
    if (rest >= 2) c += walk(rest - 2);
    return c;
  };
  return walk(n);
}

// Gaussian binomial by the q-Pascal rule.
QRat qbinom(int n, int k) {
  if (k < 0 || k > n) return QRat();
  if (k == 0 || k == n) return QRat(1);
  return qbinom(n - 1, k - 1) + QRat::q_pow(k) * qbinom(n - 1, k);
}

ZSeries random_series(std::mt19937_64& rng, int trunc, bool unit) {
  std::vector<QRat> c(trunc + 1);
  for (auto& x : c) x = test_support::random_qrat(rng, true);
  if (unit && c[0].is_zero()) c[0] = QRat(1);
  return ZSeries::polynomial(c, trunc);
}

}  // namespace

TEST(ZSeries, ReciprocalOfOneMinusZ) {
  ZSeries f = ZSeries::polynomial({QRat(1), QRat(-1)});
  ZSeries g = reciprocal(f, 5);
  EXPECT_EQ(g.trunc(), 5);
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(g[n], QRat(1));
  EXPECT_THROW(g[6], InsufficientTruncation);
}

TEST(ZSeries, ReciprocalCountsCompositions) {
  ZSeries f = ZSeries::polynomial({QRat(1), QRat(-1), QRat(-1)});
  ZSeries g = reciprocal(f, 15);
  for (int n = 0; n <= 15; ++n) EXPECT_EQ(g[n], QRat(count_compositions_12(n))) << n;
}

TEST(ZSeries, ReciprocalErrors) {
  EXPECT_THROW(reciprocal(ZSeries::polynomial({QRat(0), QRat(1)}), 4), NotInvertible);
  EXPECT_THROW(reciprocal(ZSeries::polynomial({QRat(1), QRat(1)})), InsufficientTruncation);
  ZSeries m = reciprocal(ZSeries::monomial(q, 2));
  EXPECT_EQ(m, ZSeries::monomial(q.inverse(), -2));
}

TEST(ZSeries, LaurentReciprocal) {
  // 1/(z + z^2) = z^{-1} - 1 + z - z^2 + ...
  ZSeries f = ZSeries::polynomial({QRat(0), QRat(1), QRat(1)}, 6).with_low(1);
  ZSeries g = reciprocal(f);
  EXPECT_EQ(g.low(), -1);
  EXPECT_EQ(g.trunc(), 4);
  EXPECT_EQ(g[-1], QRat(1));
  EXPECT_EQ(g[0], QRat(-1));
  EXPECT_EQ(g[3], QRat(1));
  EXPECT_EQ(g[4], QRat(-1));
}

TEST(ZSeries, ProductTruncationRule) {
  ZSeries f = ZSeries::polynomial({QRat(1), QRat(1)}, 4).shifted(-1);  // z^{-1} + 1, known to z^3
  ZSeries g = ZSeries::polynomial({QRat(1), QRat(1)}, 2);
  ZSeries h = f * g;
  EXPECT_EQ(h.low(), -1);
  EXPECT_EQ(h.trunc(), std::min(3 + 0, 2 + -1));
  EXPECT_EQ(h[-1], QRat(1));
  EXPECT_EQ(h[0], QRat(2));
  EXPECT_EQ(h[1], QRat(1));
}

TEST(ZSeries, Dilate) {
  ZSeries f = ZSeries::polynomial({QRat(1), QRat(1)});
  EXPECT_EQ(dilate(f, 1), ZSeries::polynomial({QRat(1), q}));
  EXPECT_EQ(dilate(f, QExp(1, 2)), ZSeries::polynomial({QRat(1), QRat::q_pow(QExp(1, 2))}));
}

TEST(ZSeries, PochhammerSmall) {
  EXPECT_EQ(pochhammer(0), ZSeries::one());
  EXPECT_EQ(pochhammer(2), ZSeries::polynomial({QRat(1), -(QRat(1) + q), q}));
}

TEST(ZSeries, PochhammerMatchesQBinomialTheorem) {
  for (int n = 0; n <= 7; ++n) {
    ZSeries p = pochhammer(n);
    for (int k = 0; k <= n; ++k) {
      QRat expect = qbinom(n, k) * QRat::q_pow(k * (k - 1) / 2) * QRat(k % 2 ? -1 : 1);
      EXPECT_EQ(p[k], expect) << n << "," << k;
    }
    EXPECT_EQ(p.max_degree(), n);
  }
  EXPECT_EQ(pochhammer(6, 3).trunc(), 3);
}

TEST(ZSeries, SubstitutePower) {
  ZSeries f = ZSeries::polynomial({QRat(1), QRat(2)}, 3);
  ZSeries g = substitute_power(f, 2);
  EXPECT_EQ(g.trunc(), 7);
  EXPECT_EQ(g[2], QRat(2));
  EXPECT_EQ(g[1], QRat());
}

TEST(ZTSeries, EvalTAndCompleteness) {
  ZTSeries F;
  F.add_to(1, 0, QRat(1));
  F.add_to(2, 1, QRat(1));
  EvalT e = eval_t(F, 1);
  EXPECT_TRUE(e.t_complete);
  EXPECT_EQ(e.value, ZSeries::polynomial({QRat(0), QRat(1), q}));

  ZTSeries G = F.truncated(kExact, 3);
  EXPECT_FALSE(eval_t(G, 1).t_complete);
  EXPECT_THROW(eval_t_exact(G, 1), TIncomplete);
}

TEST(ZTSeries, ScaleZ) {
  ZTSeries F = ZTSeries::monomial(QRat(1), 2, 1);
  EXPECT_EQ(scale_z(F, 3), ZTSeries::monomial(QRat::q_pow(6), 2, 1));
}

TEST(ZTSeries, WindowedProduct) {
  ZTSeries a;
  a.add_to(0, 0, QRat(1));
  a.add_to(1, 1, QRat(1));
  ZTSeries sq = mul_window(a, a, 1, 5);
  EXPECT_EQ(sq.trunc_z(), 1);
  EXPECT_EQ(sq.coeff(1, 1), QRat(2));
  EXPECT_THROW(sq.coeff(2, 2), InsufficientTruncation);
}

TEST(SeriesProperty, RingLaws) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    ZSeries f = random_series(rng, 6, true);
    ZSeries g = random_series(rng, 6, false);
    ZSeries h = random_series(rng, 6, false);
    EXPECT_EQ(f * g, g * f);
    EXPECT_EQ((f * g) * h, f * (g * h));
    EXPECT_EQ(f * (g + h), f * g + f * h);
    EXPECT_EQ(dilate(f * g, 2), dilate(f, 2) * dilate(g, 2));
    ZSeries inv = reciprocal(f);
    EXPECT_EQ(f * inv, ZSeries::one(6));
  }
}

TEST(SeriesProperty, EvalTIsMultiplicative) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> deg(0, 3);
  for (int trial = 0; trial < 30; ++trial) {
    ZTSeries F, G;
    for (int k = 0; k < 5; ++k) {
      F.add_to(deg(rng), deg(rng), test_support::random_qrat(rng, true));
      G.add_to(deg(rng), deg(rng), test_support::random_qrat(rng, true));
    }
    for (QExp a : {QExp(0), QExp(1), QExp(-2), QExp(1, 2)}) {
      EXPECT_EQ(eval_t_exact(F * G, a), eval_t_exact(F, a) * eval_t_exact(G, a));
      EXPECT_EQ(eval_t_exact(scale_z(F, 1), a), dilate(eval_t_exact(F, a), 1));
    }
  }
}
