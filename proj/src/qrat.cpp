#include "qcat/qrat.hpp"

#include <numeric>
#include <ostream>
#include <sstream>

#include "qcat/errors.hpp"

namespace qcat {

using zpoly::ZPoly;

QExp::QExp(long n, long d) {
  if (d == 0) throw DomainError("exponent with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const long g = std::gcd(n, d);
  num = n / g;
  den = d / g;
}

std::string QExp::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

QRat::QRat(long v) {
  if (v != 0) num_ = {mpz_class(v)};
}

QRat::QRat(const mpz_class& v) {
  if (sgn(v) != 0) num_ = {v};
}

QRat::QRat(const mpq_class& v) {
  if (sgn(v) != 0) {
    num_ = {v.get_num()};
    den_ = {v.get_den()};
  }
}

QRat QRat::q_pow(QExp e) {
  QRat r(1);
  r.root_ = static_cast<int>(e.den);
  r.shift_ = static_cast<int>(e.num);
  return r;
}

QRat QRat::from_coeffs(const std::vector<mpq_class>& num, const std::vector<mpq_class>& den,
                       int root) {
  if (root < 1) throw DomainError("root order must be positive");
  mpz_class l = 1;
  for (const auto& c : num) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  for (const auto& c : den) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  auto to_z = [&](const std::vector<mpq_class>& v) {
    ZPoly p(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      mpq_class x = v[i] * l;
      p[i] = x.get_num();
    }
    zpoly::trim(p);
    return p;
  };
  QRat r;
  r.root_ = root;
  r.num_ = to_z(num);
  r.den_ = to_z(den);
  r.canonicalize();
  return r;
}

namespace {

ZPoly gcd_nontrivial(const ZPoly& a, const ZPoly& b) {
  if (zpoly::degree(a) <= 0 || zpoly::degree(b) <= 0) return ZPoly{1};
  return zpoly::gcd(a, b);
}

ZPoly compress(const ZPoly& a, int g) {
  ZPoly r(zpoly::degree(a) / g + 1);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i * g];
  return r;
}

}  // namespace

void QRat::canonicalize() {
  zpoly::trim(num_);
  zpoly::trim(den_);
  if (den_.empty()) throw MalformedValue("zero denominator");
  if (num_.empty()) {
    *this = QRat();
    return;
  }
  int v = zpoly::valuation(num_);
  num_ = zpoly::drop_low(num_, v);
  shift_ += v;
  v = zpoly::valuation(den_);
  den_ = zpoly::drop_low(den_, v);
  shift_ -= v;
  ZPoly g = gcd_nontrivial(num_, den_);
  if (zpoly::degree(g) > 0) {
    num_ = zpoly::divexact(num_, g);
    den_ = zpoly::divexact(den_, g);
  }
  finish();
}

void QRat::finish() {
  if (num_.empty()) {
    *this = QRat();
    return;
  }
  if (sgn(den_.back()) < 0) {
    zpoly::negate(num_);
    zpoly::negate(den_);
  }
  if (!zpoly::is_one(den_)) {
    mpz_class c = zpoly::content(den_);
    if (c != 1) {
      mpz_class cn = zpoly::content(num_);
      mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), cn.get_mpz_t());
      if (c != 1) {
        zpoly::divexact_scalar(num_, c);
        zpoly::divexact_scalar(den_, c);
      }
    }
  }
  reduce_root();
}

void QRat::reduce_root() {
  if (root_ == 1) return;
  int g = std::gcd(root_, shift_ < 0 ? -shift_ : shift_);
  for (std::size_t i = 1; i < num_.size() && g > 1; ++i) {
    if (sgn(num_[i]) != 0) g = std::gcd(g, static_cast<int>(i));
  }
  for (std::size_t i = 1; i < den_.size() && g > 1; ++i) {
    if (sgn(den_[i]) != 0) g = std::gcd(g, static_cast<int>(i));
  }
  if (g <= 1) return;
  num_ = compress(num_, g);
  den_ = compress(den_, g);
  shift_ /= g;
  root_ /= g;
}

void QRat::lift_to(int root) {
  const int m = root / root_;
  if (m == 1) return;
  num_ = zpoly::spread(num_, m);
  den_ = zpoly::spread(den_, m);
  shift_ *= m;
  root_ = root;
}

bool QRat::is_one() const {
  return root_ == 1 && shift_ == 0 && zpoly::is_one(num_) && zpoly::is_one(den_);
}

QRat QRat::product(const QRat& a0, const QRat& b0) {
  if (a0.is_zero() || b0.is_zero()) return QRat();
  const QRat* a = &a0;
  const QRat* b = &b0;
  QRat la, lb;
  if (a0.root_ != b0.root_) {
    const int L = std::lcm(a0.root_, b0.root_);
    la = a0;
    la.lift_to(L);
    lb = b0;
    lb.lift_to(L);
    a = &la;
    b = &lb;
  }
  QRat r;
  r.root_ = a->root_;
  r.shift_ = a->shift_ + b->shift_;
  if (a->is_laurent() && b->is_laurent()) {
    r.num_ = zpoly::mul(a->num_, b->num_);
    r.den_ = {a->den_[0] * b->den_[0]};
  } else {
    ZPoly g1 = gcd_nontrivial(a->num_, b->den_);
    ZPoly g2 = gcd_nontrivial(b->num_, a->den_);
    const bool t1 = zpoly::degree(g1) > 0;
    const bool t2 = zpoly::degree(g2) > 0;
    r.num_ = zpoly::mul(t1 ? zpoly::divexact(a->num_, g1) : a->num_,
                        t2 ? zpoly::divexact(b->num_, g2) : b->num_);
    r.den_ = zpoly::mul(t2 ? zpoly::divexact(a->den_, g2) : a->den_,
                        t1 ? zpoly::divexact(b->den_, g1) : b->den_);
  }
  r.finish();
  return r;
}

QRat QRat::sum(const QRat& a0, const QRat& b0, bool negate_b) {
  if (b0.is_zero()) return a0;
  if (a0.is_zero()) return negate_b ? -b0 : b0;
  const QRat* a = &a0;
  const QRat* b = &b0;
  QRat la, lb;
  if (a0.root_ != b0.root_) {
    const int L = std::lcm(a0.root_, b0.root_);
    la = a0;
    la.lift_to(L);
    lb = b0;
    lb.lift_to(L);
    a = &la;
    b = &lb;
  }
  const int m = std::min(a->shift_, b->shift_);
  ZPoly na = zpoly::shift_up(a->num_, a->shift_ - m);
  ZPoly nb = zpoly::shift_up(b->num_, b->shift_ - m);
  if (negate_b) zpoly::negate(nb);
  QRat r;
  r.root_ = a->root_;
  r.shift_ = m;
  if (a->is_laurent() && b->is_laurent()) {
    const mpz_class& da = a->den_[0];
    const mpz_class& db = b->den_[0];
    if (da == db) {
      r.num_ = zpoly::add(na, nb);
      r.den_ = {da};
    } else {
      r.num_ = zpoly::add(zpoly::scale(na, db), zpoly::scale(nb, da));
      r.den_ = {da * db};
    }
    if (r.num_.empty()) return QRat();
    const int v = zpoly::valuation(r.num_);
    r.num_ = zpoly::drop_low(r.num_, v);
    r.shift_ += v;
  } else {
    ZPoly g = gcd_nontrivial(a->den_, b->den_);
    const bool tg = zpoly::degree(g) > 0;
    ZPoly ap = tg ? zpoly::divexact(a->den_, g) : a->den_;
    ZPoly bp = tg ? zpoly::divexact(b->den_, g) : b->den_;
    r.num_ = zpoly::add(zpoly::mul(na, bp), zpoly::mul(nb, ap));
    if (r.num_.empty()) return QRat();
    r.den_ = zpoly::mul(ap, b->den_);
    const int v = zpoly::valuation(r.num_);
    r.num_ = zpoly::drop_low(r.num_, v);
    r.shift_ += v;
    if (tg) {
      ZPoly g2 = gcd_nontrivial(r.num_, g);
      if (zpoly::degree(g2) > 0) {
        r.num_ = zpoly::divexact(r.num_, g2);
        r.den_ = zpoly::divexact(r.den_, g2);
      }
    }
  }
  r.finish();
  return r;
}

QRat& QRat::operator+=(const QRat& o) { return *this = sum(*this, o, false); }
QRat& QRat::operator-=(const QRat& o) { return *this = sum(*this, o, true); }
QRat& QRat::operator*=(const QRat& o) { return *this = product(*this, o); }
QRat& QRat::operator/=(const QRat& o) { return *this = product(*this, o.inverse()); }

QRat QRat::operator-() const {
  QRat r(*this);
  zpoly::negate(r.num_);
  return r;
}

QRat QRat::inverse() const {
  if (is_zero()) throw NotInvertible("division by zero");
  QRat r;
  r.root_ = root_;
  r.shift_ = -shift_;
  r.num_ = den_;
  r.den_ = num_;
  r.finish();
  return r;
}

QRat QRat::subst_inverse_q() const {
  if (is_zero()) return *this;
  QRat r;
  r.root_ = root_;
  r.shift_ = -shift_ - zpoly::degree(num_) + zpoly::degree(den_);
  r.num_ = zpoly::reverse(num_);
  r.den_ = zpoly::reverse(den_);
  r.finish();
  return r;
}

mpq_class QRat::eval_q1() const {
  if (is_zero()) return 0;
  mpz_class d = zpoly::eval_one(den_);
  if (sgn(d) == 0) throw PoleError("pole at q = 1");
  mpq_class r(zpoly::eval_one(num_), d);
  r.canonicalize();
  return r;
}

std::vector<mpq_class> QRat::numerator() const {
  if (is_zero()) return {};
  const int off = shift_ > 0 ? shift_ : 0;
  std::vector<mpq_class> out(num_.size() + off);
  for (std::size_t i = 0; i < num_.size(); ++i) {
    out[i + off] = mpq_class(num_[i], den_.back());
    out[i + off].canonicalize();
  }
  return out;
}

std::vector<mpq_class> QRat::denominator() const {
  if (is_zero()) return {mpq_class(1)};
  const int off = shift_ < 0 ? -shift_ : 0;
  std::vector<mpq_class> out(den_.size() + off);
  for (std::size_t i = 0; i < den_.size(); ++i) {
    out[i + off] = mpq_class(den_[i], den_.back());
    out[i + off].canonicalize();
  }
  return out;
}

std::vector<std::pair<QExp, mpq_class>> QRat::laurent_terms() const {
  if (!is_laurent()) throw DomainError("not a Laurent polynomial: " + to_string());
  std::vector<std::pair<QExp, mpq_class>> out;
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (sgn(num_[i]) == 0) continue;
    mpq_class c(num_[i], den_[0]);
    c.canonicalize();
    out.emplace_back(QExp(shift_ + static_cast<long>(i), root_), c);
  }
  return out;
}

mpq_class QRat::coeff(QExp e) const {
  if (!is_laurent()) throw DomainError("not a Laurent polynomial: " + to_string());
  if (is_zero()) return 0;
  const long scaled = e.num * root_;
  if (scaled % e.den != 0) return 0;
  const long idx = scaled / e.den - shift_;
  if (idx < 0 || idx >= static_cast<long>(num_.size())) return 0;
  mpq_class c(num_[idx], den_[0]);
  c.canonicalize();
  return c;
}

namespace {

std::string format_sum(const std::vector<mpq_class>& coeffs, int root, int* terms) {
  std::ostringstream os;
  *terms = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    mpq_class c = coeffs[i];
    if (sgn(c) == 0) continue;
    const bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (neg) {
      os << '-';
    } else if (*terms > 0) {
      os << '+';
    }
    ++*terms;
    const QExp e(static_cast<long>(i), root);
    if (e.num == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) {
      if (c.get_den() == 1) {
        os << c.get_str();
      } else {
        os << '(' << c.get_str() << ')';
      }
    }
    os << 'q';
    if (e.den != 1) {
      os << "^(" << e.to_string() << ')';
    } else if (e.num != 1) {
      os << '^' << e.num;
    }
  }
  if (*terms == 0) os << '0';
  return os.str();
}

}  // namespace

std::string QRat::to_string() const {
  int nt = 0;
  int dt = 0;
  std::string n = format_sum(numerator(), root_, &nt);
  std::vector<mpq_class> d = denominator();
  if (d.size() == 1) return n;
  std::string ds = format_sum(d, root_, &dt);
  if (nt > 1) n = "(" + n + ")";
  if (dt > 1) ds = "(" + ds + ")";
  return n + "/" + ds;
}

QRat qpow(QExp e, int L) {
  if (L < 1 || L % e.den != 0) {
    throw IncompatibleRoot("q^" + e.to_string() + " is not expressible with root order " +
                           std::to_string(L));
  }
  return QRat::q_pow(e);
}

QRat pow(const QRat& x, long n) {
  if (n < 0) return pow(x.inverse(), -n);
  QRat result(1);
  QRat base = x;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const QRat& x) { return os << x.to_string(); }

}  // namespace qcat
