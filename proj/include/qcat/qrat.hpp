#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "qcat/zpoly.hpp"

namespace qcat {

// Reduced rational exponent a/b of q, b > 0.
struct QExp {
  long num = 0;
  long den = 1;

  QExp() = default;
  QExp(long n) : num(n) {}  // NOLINT(google-explicit-constructor)
  QExp(long n, long d);

  friend QExp operator+(QExp a, QExp b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
  friend QExp operator-(QExp a, QExp b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
  friend QExp operator*(QExp a, long k) { return {a.num * k, a.den}; }
  friend QExp operator*(long k, QExp a) { return a * k; }
  QExp operator-() const { return {-num, den}; }
  friend bool operator==(const QExp&, const QExp&) = default;
  friend std::strong_ordering operator<=>(const QExp& a, const QExp& b) {
    return a.num * b.den <=> b.num * a.den;
  }
  bool is_integer() const { return den == 1; }
  std::string to_string() const;
};

// Element of Q(q^{1/L}).  Stored as s^shift * num(s) / den(s) with s = q^{1/L},
// num and den integer polynomials with nonzero constant terms, coprime over Q,
// den with positive leading coefficient and the two contents coprime.  L is the
// smallest root order that can express the value, so the representation is
// unique and structural equality is value equality.
class QRat {
 public:
  QRat() = default;
  QRat(long v);                // NOLINT(google-explicit-constructor)
  QRat(const mpz_class& v);    // NOLINT(google-explicit-constructor)
  QRat(const mpq_class& v);    // NOLINT(google-explicit-constructor)

  // q^e, stored with the root order e.den.
  static QRat q_pow(QExp e);
  static QRat q() { return q_pow(1); }
  // num(s)/den(s) from coefficient lists in s = q^{1/root}; throws MalformedValue
  // on a zero denominator.
  static QRat from_coeffs(const std::vector<mpq_class>& num, const std::vector<mpq_class>& den,
                          int root = 1);

  int root() const { return root_; }
  bool is_zero() const { return num_.empty(); }
  bool is_one() const;
  // True when the denominator is a monomial, i.e. a Laurent polynomial in q^{1/L}.
  bool is_laurent() const { return den_.size() == 1; }

  QRat inverse() const;  // NotInvertible on zero
  // q -> 1/q
  QRat subst_inverse_q() const;
  // Value at q = 1; PoleError when the denominator vanishes there.
  mpq_class eval_q1() const;

  // Canonical form: numerator over Q in s and monic denominator in s, with the
  // s-power absorbed into whichever side it belongs.
  std::vector<mpq_class> numerator() const;
  std::vector<mpq_class> denominator() const;
  // Terms of a Laurent value in increasing exponent.  Requires is_laurent().
  std::vector<std::pair<QExp, mpq_class>> laurent_terms() const;
  // Coefficient of q^e of a Laurent value.
  mpq_class coeff(QExp e) const;

  std::string to_string() const;

  QRat& operator+=(const QRat& o);
  QRat& operator-=(const QRat& o);
  QRat& operator*=(const QRat& o);
  QRat& operator/=(const QRat& o);
  QRat operator-() const;

  friend QRat operator+(QRat a, const QRat& b) { return a += b; }
  friend QRat operator-(QRat a, const QRat& b) { return a -= b; }
  friend QRat operator*(QRat a, const QRat& b) { return a *= b; }
  friend QRat operator/(QRat a, const QRat& b) { return a /= b; }
  friend bool operator==(const QRat& a, const QRat& b) {
    return a.root_ == b.root_ && a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  void canonicalize();  // full reduction from arbitrary num/den
  void finish();        // sign, content and root reduction for coprime num/den
  void reduce_root();
  void lift_to(int root);
  static QRat product(const QRat& a, const QRat& b);
  static QRat sum(const QRat& a, const QRat& b, bool negate_b);

  int root_ = 1;
  int shift_ = 0;
  zpoly::ZPoly num_;
  zpoly::ZPoly den_{1};
};

// q^{e} expressed over the root order L; IncompatibleRoot unless e.den divides L.
QRat qpow(QExp e, int L);
QRat pow(const QRat& x, long n);
std::ostream& operator<<(std::ostream& os, const QRat& x);

}  // namespace qcat
