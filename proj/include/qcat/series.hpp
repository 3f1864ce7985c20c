#pragma once

#include <compare>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcat/qrat.hpp"

namespace qcat {

// Truncation orders are inclusive degrees.  kExact marks an exactly known
// (polynomial) series; arithmetic on truncation orders saturates at it.
inline constexpr int kExact = std::numeric_limits<int>::max() / 4;
inline bool is_exact(int trunc) { return trunc >= kExact; }
inline int trunc_add(int a, int b) {
  if (is_exact(a) || is_exact(b)) return kExact;
  return a + b;
}

// Laurent series in z with coefficients in Q(q^{1/L}), known up to z^trunc.
class ZSeries {
 public:
  ZSeries() = default;
  ZSeries(int low, int trunc);

  static ZSeries polynomial(const std::vector<QRat>& coeffs, int trunc = kExact);
  static ZSeries monomial(const QRat& c, int degree, int trunc = kExact);
  static ZSeries one(int trunc = kExact) { return monomial(QRat(1), 0, trunc); }
  static ZSeries z() { return monomial(QRat(1), 1); }

  int low() const { return low_; }
  int trunc() const { return trunc_; }
  bool exact() const { return is_exact(trunc_); }

  // Zero below low and for absent entries; InsufficientTruncation above trunc.
  QRat coeff(int d) const;
  QRat operator[](int d) const { return coeff(d); }
  void set(int d, const QRat& v);
  void add_to(int d, const QRat& v);

  std::optional<int> order() const;
  // Highest degree with a stored nonzero coefficient; low - 1 if none.
  int max_degree() const;

  ZSeries truncated(int n) const;
  // Same series with a different lower bound; raising it requires zeros below.
  ZSeries with_low(int low) const;
  // z^k * f
  ZSeries shifted(int k) const;

  ZSeries operator-() const;
  ZSeries& operator+=(const ZSeries& o);
  ZSeries& operator-=(const ZSeries& o);
  ZSeries& operator*=(const QRat& c);

  friend ZSeries operator+(ZSeries a, const ZSeries& b) { return a += b; }
  friend ZSeries operator-(ZSeries a, const ZSeries& b) { return a -= b; }
  friend ZSeries operator*(const ZSeries& a, const ZSeries& b);
  friend ZSeries operator*(ZSeries a, const QRat& c) { return a *= c; }
  friend ZSeries operator*(const QRat& c, ZSeries a) { return a *= c; }
  // Same truncation order and same coefficients.
  friend bool operator==(const ZSeries& a, const ZSeries& b);

  std::string to_string() const;

 private:
  int low_ = 0;
  int trunc_ = kExact;
  std::vector<QRat> c_;  // c_[k] is the coefficient of z^{low_ + k}
};

// 1/f.  The coefficient at f.low() must be nonzero.  The result is known to
// f.trunc() - 2 f.low(), capped at max_trunc; reciprocals of non-monomial
// polynomials need a finite max_trunc.
ZSeries reciprocal(const ZSeries& f, int max_trunc = kExact);
// f(q^a z)
ZSeries dilate(const ZSeries& f, QExp a);
// (z;q)_n truncated at trunc.
ZSeries pochhammer(int n, int trunc = kExact);
// f(z^m)
ZSeries substitute_power(const ZSeries& f, int m);
// Coefficientwise q -> 1/q.
ZSeries subst_inverse_q(const ZSeries& f);
// Coefficients up to z^n agree; InsufficientTruncation if either is unknown there.
bool agree_to(const ZSeries& f, const ZSeries& g, int n);

struct Index2 {
  int i1 = 0;
  int i2 = 0;
  friend auto operator<=>(const Index2&, const Index2&) = default;
  friend Index2 operator+(Index2 a, Index2 b) { return {a.i1 + b.i1, a.i2 + b.i2}; }
  friend Index2 operator-(Index2 a, Index2 b) { return {a.i1 - b.i1, a.i2 - b.i2}; }
  std::string to_string() const { return "(" + std::to_string(i1) + "," + std::to_string(i2) + ")"; }
};

// Power series in z and t; entry (i, j) is the coefficient of z^i t^j and is
// known when i <= trunc_z and j <= trunc_t.
class ZTSeries {
 public:
  ZTSeries() = default;
  ZTSeries(int trunc_z, int trunc_t) : tz_(trunc_z), tt_(trunc_t) {}

  static ZTSeries monomial(const QRat& c, int i, int j, int trunc_z = kExact, int trunc_t = kExact);

  int trunc_z() const { return tz_; }
  int trunc_t() const { return tt_; }
  const std::map<Index2, QRat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  QRat coeff(int i, int j) const;
  void add_to(int i, int j, const QRat& v);
  // Largest t-degree among stored terms; -1 when zero.
  int t_degree() const;

  ZTSeries truncated(int trunc_z, int trunc_t) const;
  // z^k * F
  ZTSeries shifted_z(int k) const;

  ZTSeries operator-() const;
  ZTSeries& operator+=(const ZTSeries& o);
  ZTSeries& operator-=(const ZTSeries& o);
  ZTSeries& operator*=(const QRat& c);
  friend ZTSeries operator+(ZTSeries a, const ZTSeries& b) { return a += b; }
  friend ZTSeries operator-(ZTSeries a, const ZTSeries& b) { return a -= b; }
  friend ZTSeries operator*(ZTSeries a, const QRat& c) { return a *= c; }
  friend ZTSeries operator*(const ZTSeries& a, const ZTSeries& b);
  friend bool operator==(const ZTSeries& a, const ZTSeries& b) {
    return a.tz_ == b.tz_ && a.tt_ == b.tt_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  int tz_ = kExact;
  int tt_ = kExact;
  std::map<Index2, QRat> terms_;  // nonzero entries only
};

// a * b computed only inside the window z^trunc_z, t^trunc_t.
ZTSeries mul_window(const ZTSeries& a, const ZTSeries& b, int trunc_z, int trunc_t);

struct EvalT {
  ZSeries value;
  bool t_complete;
};
// F(z, q^a).  t_complete is false when F is truncated in t, in which case the
// value only collects the known t-degrees.
EvalT eval_t(const ZTSeries& F, QExp a);
// Same, throwing TIncomplete instead of returning a partial sum.
ZSeries eval_t_exact(const ZTSeries& F, QExp a);
// F(q^a z, t)
ZTSeries scale_z(const ZTSeries& F, QExp a);
// Coefficientwise q -> 1/q.
ZTSeries subst_inverse_q(const ZTSeries& F);

}  // namespace qcat
