#include <gtest/gtest.h>

#include "qcat/errors.hpp"
#include "qcat/qrat.hpp"
#include "support.hpp"

using qcat::QExp;
using qcat::QRat;
using qcat::test_support::eval_at;
using qcat::test_support::random_qrat;

namespace {

QRat poly(std::initializer_list<long> c) {
  QRat r;
  long e = 0;
  for (long x : c) r += QRat(x) * QRat::q_pow(e++);
  return r;
}

const QRat q = QRat::q();

}  // namespace

TEST(QRat, NormalizeCancelsCommonFactor) {
  QRat x = QRat::from_coeffs({-1, 0, 1}, {-1, 1});
  EXPECT_EQ(x, poly({1, 1}));
  EXPECT_EQ(x.to_string(), "1+q");
  EXPECT_EQ(x.denominator().size(), 1u);
}

TEST(QRat, ZeroDenominatorIsMalformed) {
  EXPECT_THROW(QRat::from_coeffs({1}, {0, 0}), qcat::MalformedValue);
  EXPECT_THROW(QRat::from_coeffs({1}, {}), qcat::MalformedValue);
}

TEST(QRat, DenominatorIsMonic) {
  QRat x = QRat::from_coeffs({2}, {4, 6});  // 2/(4+6s) = (1/3)/(s+2/3)
  auto d = x.denominator();
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[1], 1);
  EXPECT_EQ(d[0], mpq_class(2, 3));
  EXPECT_EQ(x.numerator(), std::vector<mpq_class>{mpq_class(1, 3)});
}

TEST(QRat, FractionalPowers) {
  QRat s3 = qcat::qpow(QExp(3, 2), 2);
  EXPECT_EQ(s3.root(), 2);
  std::vector<mpq_class> expect{0, 0, 0, 1};
  EXPECT_EQ(s3.numerator(), expect);
  EXPECT_EQ(s3.to_string(), "q^(3/2)");
  EXPECT_THROW(qcat::qpow(QExp(1, 3), 2), qcat::IncompatibleRoot);
  // q^{1/2} squared drops back to root order 1.
  EXPECT_EQ(QRat::q_pow(QExp(1, 2)) * QRat::q_pow(QExp(1, 2)), q);
  EXPECT_EQ((QRat::q_pow(QExp(1, 2)) * q).to_string(), "q^(3/2)");
}

TEST(QRat, MixedRootArithmeticLiftsToLcm) {
  QRat a = QRat::q_pow(QExp(1, 2));
  QRat b = QRat::q_pow(QExp(1, 3));
  QRat p = a * b;
  EXPECT_EQ(p.root(), 6);
  EXPECT_EQ(p, QRat::q_pow(QExp(5, 6)));
  EXPECT_EQ((a + b).to_string(), "q^(1/3)+q^(1/2)");
}

TEST(QRat, SubstituteInverseQ) {
  EXPECT_EQ(poly({1, 1}).subst_inverse_q().to_string(), "(1+q)/q");
  QRat x = QRat(1) / (QRat(1) - q);
  EXPECT_EQ(x.subst_inverse_q(), q / (q - QRat(1)));
  EXPECT_EQ(x.subst_inverse_q().to_string(), "q/(-1+q)");
  EXPECT_EQ(QRat::q_pow(QExp(3, 2)).subst_inverse_q(), QRat::q_pow(QExp(-3, 2)));
}

TEST(QRat, EvalAtOne) {
  EXPECT_EQ(poly({1, 1, 2, 1}).eval_q1(), 5);
  EXPECT_THROW((QRat(1) / (QRat(1) - q)).eval_q1(), qcat::PoleError);
  // Removable singularity disappears under normalization.
  EXPECT_EQ(((q * q - QRat(1)) / (q - QRat(1))).eval_q1(), 2);
}

TEST(QRat, CanonicalString) {
  EXPECT_EQ(poly({1, 1, 2, 1}).to_string(), "1+q+2q^2+q^3");
  EXPECT_EQ(QRat(0).to_string(), "0");
  EXPECT_EQ((QRat(mpq_class(-1, 2)) * q * q).to_string(), "-(1/2)q^2");
  EXPECT_EQ(q.inverse().to_string(), "1/q");
  EXPECT_EQ((q + q.inverse()).to_string(), "(1+q^2)/q");
}

TEST(QRat, DivisionByZeroThrows) {
  EXPECT_THROW(QRat(1) / QRat(0), qcat::NotInvertible);
}

TEST(QRatProperty, FieldLawsUnderEvaluation) {
  std::mt19937_64 rng(20240601);
  const mpq_class u(7, 3);
  const int Lc = 6;
  for (int trial = 0; trial < 300; ++trial) {
    QRat a = random_qrat(rng);
    QRat b = random_qrat(rng);
    QRat c = random_qrat(rng);
    const mpq_class ea = eval_at(a, u, Lc), eb = eval_at(b, u, Lc), ec = eval_at(c, u, Lc);
    EXPECT_EQ(eval_at(a + b, u, Lc), ea + eb);
    EXPECT_EQ(eval_at(a - b, u, Lc), ea - eb);
    EXPECT_EQ(eval_at(a * b, u, Lc), ea * eb);
    if (!b.is_zero()) {
      EXPECT_EQ(eval_at(a / b, u, Lc), ea / eb);
      EXPECT_EQ(a / b * b, a);
    }
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ(a - a, QRat(0));
    EXPECT_EQ(a.subst_inverse_q().subst_inverse_q(), a);
    EXPECT_EQ((a * b).subst_inverse_q(), a.subst_inverse_q() * b.subst_inverse_q());
    // Normalizing a canonical value is the identity.
    EXPECT_EQ(QRat::from_coeffs(a.numerator(), a.denominator(), a.root()), a);
    (void)ec;
  }
}

TEST(QRatProperty, PowMatchesRepeatedProduct) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    QRat a = random_qrat(rng, true);
    QRat r(1);
    for (int n = 0; n <= 5; ++n) {
      EXPECT_EQ(qcat::pow(a, n), r);
      r *= a;
    }
  }
}
