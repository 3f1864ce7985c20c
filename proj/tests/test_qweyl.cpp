#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "qcat/errors.hpp"
#include "qcat/qweyl.hpp"

using namespace qcat;

namespace {

const QRat q = QRat::q();

ZTSeries ptilde_of(std::initializer_list<std::tuple<int, int, long>> terms) {
  ZTSeries r;
  for (auto [i, j, c] : terms) r.add_to(i, j, QRat(c));
  return r;
}

std::vector<CatalanSeries> standard_family() {
  return {CatalanSeries::from_ptilde(ZTSeries()),
          CatalanSeries::from_ptilde(ptilde_of({{0, 0, 1}})),
          CatalanSeries::from_ptilde(ptilde_of({{0, 1, 1}})),
          CatalanSeries::from_ptilde(ptilde_of({{0, 0, 1}, {0, 1, 1}}))};
}

NormalOrdered ma(int i, int j) { return NormalOrdered::monomial(QRat(1), i, j); }

}  // namespace

TEST(QWeyl, CommutationRule) {
  EXPECT_EQ((ma(0, 1) * ma(1, 0)).terms, (ma(1, 1) * q).terms);
  EXPECT_EQ((ma(1, 0) * ma(0, 1)).terms, ma(1, 1).terms);
  EXPECT_EQ((ma(0, 2) * ma(3, 0)).terms, (ma(3, 2) * QRat::q_pow(6)).terms);
}

TEST(QWeyl, WindowIsComponentwiseMin) {
  NormalOrdered x = NormalOrdered::monomial(QRat(1), 1, 1, 3, 5);
  NormalOrdered y = NormalOrdered::monomial(QRat(1), 2, 1, 6, 2);
  NormalOrdered p = x * y;
  EXPECT_EQ(p.max_m, 3);
  EXPECT_EQ(p.max_a, 2);
  EXPECT_EQ(p.coeff(3, 2), q * q);
  EXPECT_THROW(p.coeff(4, 0), InsufficientWindow);
}

TEST(QWeylProperty, MonomialProductsTwistByBn) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> len(1, 5), comp(0, 3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Index2> u(len(rng));
    for (auto& x : u) x = {comp(rng), comp(rng)};
    NormalOrdered prod = ma(0, 0);
    Index2 sum;
    for (const auto& x : u) {
      prod = prod * ma(x.i1, x.i2);
      sum = sum + x;
    }
    EXPECT_EQ(prod.terms, (ma(sum.i1, sum.i2) * QRat::q_pow(bn(u))).terms);
  }
}

TEST(QWeyl, DualCoefficientsSolveQEquation) {
  for (const CatalanSeries& P : standard_family()) {
    const int m = 6;
    DualCoeffs T = dual_coeffs_segner(P, m, P.row_bound(m));
    NormalOrdered res = verify_q_equation(P, T, m, P.row_bound(m));
    EXPECT_TRUE(res.is_zero()) << P.ptilde.to_string();
  }
}

TEST(QWeyl, PerturbedCoefficientsLeaveResidual) {
  CatalanSeries P = CatalanSeries::from_ptilde(ptilde_of({{0, 0, 1}}));
  DualCoeffs T = dual_coeffs_segner(P, 4, 5);
  T.entries[{2, 3}] += QRat(1);
  NormalOrdered res = verify_q_equation(P, T, 4, 5);
  EXPECT_FALSE(res.is_zero());
}

TEST(QWeyl, MOnTheLeftOfTp) {
  // P = t - z t^3 written as T - M T^3 kills A; T - T^3 M does not.
  CatalanSeries P = CatalanSeries::from_ptilde(ptilde_of({{0, 1, 1}}));
  const int m = 5;
  DualCoeffs T = dual_coeffs_segner(P, m, P.row_bound(m));
  NormalOrdered A = NormalOrdered::monomial(QRat(1), 0, 1, m, P.row_bound(m));
  NormalOrdered left = A - no_substitute(P.p, NormalOrdered::from_dual(T), m, P.row_bound(m));
  NormalOrdered right = A - no_substitute_right(P.p, NormalOrdered::from_dual(T), m, P.row_bound(m));
  EXPECT_TRUE(left.is_zero());
  EXPECT_FALSE(right.is_zero());
}

TEST(QWeyl, ConstantTermIsIllGraded) {
  CatalanSeries P = CatalanSeries::from_ptilde(ZTSeries());
  NormalOrdered bad = ma(0, 0);
  bad.max_m = 3;
  bad.max_a = 3;
  EXPECT_THROW(no_substitute(P.p, bad, 3, 3), IllGraded);
}

TEST(QWeyl, OperatorModelCommutation) {
  CatalanSeries P = CatalanSeries::from_ptilde(ptilde_of({{0, 0, 1}, {1, 0, 2}}));
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<QRat> c(7);
    for (auto& x : c) x = QRat(static_cast<long>(rng() % 9) - 4);
    ZSeries f = ZSeries::polynomial(c, 6);
    EXPECT_EQ(op_A(P, op_M(f)), op_M(op_A(P, f)) * q);
  }
}

TEST(QWeyl, OperatorModelQEquationOnBasis) {
  for (const CatalanSeries& P : standard_family()) {
    const int n = 7;
    DualCoeffs T = dual_coeffs_segner(P, n, P.row_bound(n));
    for (int k = 0; k <= 5; ++k) {
      ZSeries e = basis_element(P, k, n);
      EXPECT_TRUE(agree_to(op_A(P, e), apply_P_of_MT(P, T, e, n), n)) << k;
    }
  }
}
