#include <gtest/gtest.h>

#include <random>

#include "qcat/errors.hpp"
#include "qcat/expr.hpp"

using namespace qcat;
using namespace qcat::expr;

namespace {

const QRat q = QRat::q();

std::size_t error_offset(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.offset();
  }
  return std::string::npos;
}

}  // namespace

TEST(Expr, CatalanPolynomial) {
  const ZTSeries p = lower(*parse("t - z*t^2"));
  ZTSeries expect = ZTSeries::monomial(QRat(1), 0, 1) - ZTSeries::monomial(QRat(1), 1, 2);
  EXPECT_EQ(p, expect);
}

TEST(Expr, RationalCoefficient) {
  const ZSeries f = lower_univariate(*parse("z + (1/2)*z^2"));
  EXPECT_EQ(f.coeff(1), QRat(1));
  EXPECT_EQ(f.coeff(2), QRat(mpq_class(1, 2)));
}

TEST(Expr, Precedence) {
  // ^ binds tighter than unary minus, which binds tighter than *.
  EXPECT_EQ(lower(*parse("-z^2")), -ZTSeries::monomial(QRat(1), 2, 0));
  EXPECT_EQ(*parse("-z*t"), *parse("(-z)*t"));
  EXPECT_EQ(*parse("1 - z - t"), *parse("(1 - z) - t"));
  EXPECT_EQ(lower(*parse("2*3^2")), ZTSeries::monomial(QRat(18), 0, 0));
  EXPECT_EQ(lower(*parse(" q ^ ( -2 ) * z")), ZTSeries::monomial(QRat::q_pow(-2), 1, 0));
  EXPECT_EQ(lower(*parse("(1+q)^-1")), ZTSeries::monomial((QRat(1) + q).inverse(), 0, 0));
}

TEST(Expr, SyntaxErrorsCarryOffsets) {
  EXPECT_EQ(error_offset("z + + z"), 4u);
  EXPECT_EQ(error_offset("z * (t"), 6u);
  EXPECT_EQ(error_offset("x + z"), 0u);
  EXPECT_EQ(error_offset("z + zeta"), 4u);
  EXPECT_EQ(error_offset("2z"), 1u);
  EXPECT_EQ(error_offset("1/0"), 2u);
  EXPECT_EQ(error_offset("z^2^3"), 3u);
  EXPECT_EQ(error_offset(""), 0u);
}

TEST(Expr, LoweringRules) {
  EXPECT_THROW(lower(*parse("z^(-1)")), ParseError);
  EXPECT_THROW(lower(*parse("0^(-1)")), ParseError);
  try {
    lower_univariate(*parse("z + t"));
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 4u);
  }
  const ZTSeries w = lower(*parse("(1+z+t)^3"), 1, 2);
  EXPECT_EQ(w.trunc_z(), 1);
  EXPECT_EQ(w.coeff(1, 2), QRat(3));
  EXPECT_THROW(w.coeff(2, 0), InsufficientTruncation);
  EXPECT_EQ(lower_univariate(*parse("(1-z)^5"), 2).trunc(), 2);
}

TEST(Expr, PrintParseRoundTrip) {
  for (const char* s : {"t - z*t^2", "z + (1/2)*z^2", "-z^2", "(-z)^2", "-(z + t)*q^(-3)",
                        "1 - (z - t)", "z*(t*q)", "((1/3))^2", "--z", "(z + 1)^0"}) {
    const NodePtr a = parse(s);
    const NodePtr b = parse(to_text(*a));
    EXPECT_EQ(*a, *b) << s << " -> " << to_text(*a);
  }
}

TEST(ExprProperty, LowerPrintParseRoundTrip) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> coef(-3, 3), deg(0, 3), qexp(-2, 2);
  for (int trial = 0; trial < 100; ++trial) {
    ZTSeries f;
    for (int k = 0; k < 5; ++k) {
      QRat c = QRat(coef(rng)) * QRat::q_pow(qexp(rng)) + QRat(coef(rng)) / QRat(2);
      f.add_to(deg(rng), deg(rng), c);
    }
    const std::string text = poly_to_text(f);
    EXPECT_EQ(lower(*parse(text)), f) << text;
  }
  EXPECT_THROW(poly_to_text(ZTSeries::monomial(q.inverse() + QRat(1) / (QRat(1) - q), 0, 0)),
               Unsupported);
}
