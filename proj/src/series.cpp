#include "qcat/series.hpp"

#include <algorithm>
#include <sstream>

#include "qcat/errors.hpp"

namespace qcat {

namespace {

std::string trunc_name(int t) { return is_exact(t) ? "exact" : std::to_string(t); }

}  // namespace

ZSeries::ZSeries(int low, int trunc) : low_(low), trunc_(trunc) {}

ZSeries ZSeries::polynomial(const std::vector<QRat>& coeffs, int trunc) {
  ZSeries f(0, trunc);
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    if (static_cast<int>(d) > trunc) break;
    f.set(static_cast<int>(d), coeffs[d]);
  }
  return f;
}

ZSeries ZSeries::monomial(const QRat& c, int degree, int trunc) {
  ZSeries f(degree, trunc);
  if (degree <= trunc) f.set(degree, c);
  return f;
}

QRat ZSeries::coeff(int d) const {
  if (d > trunc_) {
    throw InsufficientTruncation("coefficient of z^" + std::to_string(d) +
                                 " requested from a series known to z^" + std::to_string(trunc_));
  }
  const int k = d - low_;
  if (k < 0 || k >= static_cast<int>(c_.size())) return QRat();
  return c_[k];
}

void ZSeries::set(int d, const QRat& v) {
  if (d > trunc_) return;
  if (d < low_) {
    if (v.is_zero()) return;
    c_.insert(c_.begin(), low_ - d, QRat());
    low_ = d;
  }
  const std::size_t k = d - low_;
  if (k >= c_.size()) {
    if (v.is_zero()) return;
    c_.resize(k + 1);
  }
  c_[k] = v;
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void ZSeries::add_to(int d, const QRat& v) {
  if (v.is_zero() || d > trunc_) return;
  if (d >= low_ && d - low_ < static_cast<int>(c_.size())) {
    c_[d - low_] += v;
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  } else {
    set(d, v);
  }
}

std::optional<int> ZSeries::order() const {
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (!c_[k].is_zero()) return low_ + static_cast<int>(k);
  }
  return std::nullopt;
}

int ZSeries::max_degree() const { return low_ + static_cast<int>(c_.size()) - 1; }

ZSeries ZSeries::truncated(int n) const {
  ZSeries r(*this);
  if (n >= trunc_) return r;
  r.trunc_ = n;
  const int keep = std::max(0, n - low_ + 1);
  if (static_cast<int>(r.c_.size()) > keep) r.c_.resize(keep);
  while (!r.c_.empty() && r.c_.back().is_zero()) r.c_.pop_back();
  return r;
}

ZSeries ZSeries::with_low(int low) const {
  ZSeries r(low, trunc_);
  for (int d = low_; d <= max_degree(); ++d) {
    const QRat c = coeff(d);
    if (d < low && !c.is_zero()) {
      throw DomainError("series has a nonzero term below the requested lower bound");
    }
    r.set(d, c);
  }
  return r;
}

ZSeries ZSeries::shifted(int k) const {
  ZSeries r(*this);
  r.low_ += k;
  r.trunc_ = trunc_add(trunc_, k);
  return r;
}

ZSeries ZSeries::operator-() const {
  ZSeries r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

ZSeries& ZSeries::operator+=(const ZSeries& o) {
  trunc_ = std::min(trunc_, o.trunc_);
  if (o.low_ < low_) {
    c_.insert(c_.begin(), low_ - o.low_, QRat());
    low_ = o.low_;
  }
  for (int d = o.low_; d <= o.max_degree() && d <= trunc_; ++d) {
    const QRat& v = o.c_[d - o.low_];
    if (v.is_zero()) continue;
    const std::size_t k = d - low_;
    if (k >= c_.size()) c_.resize(k + 1);
    c_[k] += v;
  }
  const int keep = std::max(0, is_exact(trunc_) ? static_cast<int>(c_.size()) : trunc_ - low_ + 1);
  if (static_cast<int>(c_.size()) > keep) c_.resize(keep);
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  return *this;
}

ZSeries& ZSeries::operator-=(const ZSeries& o) { return *this += -o; }

ZSeries& ZSeries::operator*=(const QRat& c) {
  if (c.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= c;
  return *this;
}

ZSeries operator*(const ZSeries& a, const ZSeries& b) {
  const int trunc = std::min(trunc_add(a.trunc_, b.low_), trunc_add(b.trunc_, a.low_));
  ZSeries r(a.low_ + b.low_, trunc);
  const int na = static_cast<int>(a.c_.size());
  const int nb = static_cast<int>(b.c_.size());
  if (na == 0 || nb == 0) return r;
  int top = na + nb - 2;
  if (!is_exact(trunc)) top = std::min(top, trunc - r.low_);
  if (top < 0) return r;
  r.c_.assign(top + 1, QRat());
  for (int i = 0; i < na && i <= top; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; j < nb && i + j <= top; ++j) {
      if (b.c_[j].is_zero()) continue;
      r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  while (!r.c_.empty() && r.c_.back().is_zero()) r.c_.pop_back();
  return r;
}

bool operator==(const ZSeries& a, const ZSeries& b) {
  if (a.trunc_ != b.trunc_) return false;
  const int lo = std::min(a.low_, b.low_);
  const int hi = std::max(a.max_degree(), b.max_degree());
  for (int d = lo; d <= hi; ++d) {
    if (a.coeff(d) != b.coeff(d)) return false;
  }
  return true;
}

std::string ZSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int d = low_; d <= max_degree(); ++d) {
    const QRat c = coeff(d);
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << '(' << c.to_string() << ")*z^" << d;
  }
  if (first) os << '0';
  if (!exact()) os << " + O(z^" << trunc_ + 1 << ')';
  return os.str();
}

ZSeries reciprocal(const ZSeries& f, int max_trunc) {
  const int l = f.low();
  const QRat a0 = f.coeff(l);
  if (a0.is_zero()) throw NotInvertible("series has zero leading coefficient at z^" + std::to_string(l));
  int trunc = std::min(trunc_add(f.trunc(), -2 * l), max_trunc);
  if (is_exact(trunc)) {
    if (f.max_degree() == l) return ZSeries::monomial(a0.inverse(), -l);
    throw InsufficientTruncation("reciprocal of a polynomial needs a finite truncation");
  }
  ZSeries g(-l, trunc);
  const QRat inv = a0.inverse();
  std::vector<QRat> b;
  for (int n = 0; -l + n <= trunc; ++n) {
    QRat acc;
    if (n == 0) {
      acc = inv;
    } else {
      for (int k = 1; k <= n; ++k) {
        if (b[n - k].is_zero()) continue;
        const QRat ak = f.coeff(l + k);
        if (!ak.is_zero()) acc += ak * b[n - k];
      }
      acc = -acc * inv;
    }
    b.push_back(acc);
    g.set(-l + n, acc);
  }
  return g;
}

ZSeries dilate(const ZSeries& f, QExp a) {
  ZSeries r(f.low(), f.trunc());
  for (int d = f.low(); d <= f.max_degree(); ++d) {
    const QRat c = f.coeff(d);
    if (!c.is_zero()) r.set(d, c * QRat::q_pow(a * d));
  }
  return r;
}

ZSeries pochhammer(int n, int trunc) {
  if (n < 0) throw DomainError("pochhammer length must be nonnegative");
  ZSeries r = ZSeries::one(trunc);
  for (int j = 0; j < n; ++j) {
    ZSeries factor = ZSeries::polynomial({QRat(1), -QRat::q_pow(j)});
    r = (r * factor).truncated(trunc);
  }
  return r;
}

ZSeries substitute_power(const ZSeries& f, int m) {
  if (m < 1) throw DomainError("substitution exponent must be positive");
  const int trunc = is_exact(f.trunc()) ? kExact : f.trunc() * m + (m - 1);
  ZSeries r(f.low() * m, trunc);
  for (int d = f.low(); d <= f.max_degree(); ++d) r.set(d * m, f.coeff(d));
  return r;
}

ZSeries subst_inverse_q(const ZSeries& f) {
  ZSeries r(f.low(), f.trunc());
  for (int d = f.low(); d <= f.max_degree(); ++d) r.set(d, f.coeff(d).subst_inverse_q());
  return r;
}

bool agree_to(const ZSeries& f, const ZSeries& g, int n) {
  const int lo = std::min(f.low(), g.low());
  for (int d = lo; d <= n; ++d) {
    if (f.coeff(d) != g.coeff(d)) return false;
  }
  return true;
}

ZTSeries ZTSeries::monomial(const QRat& c, int i, int j, int trunc_z, int trunc_t) {
  ZTSeries r(trunc_z, trunc_t);
  r.add_to(i, j, c);
  return r;
}

QRat ZTSeries::coeff(int i, int j) const {
  if (i > tz_ || j > tt_) {
    throw InsufficientTruncation("coefficient z^" + std::to_string(i) + " t^" + std::to_string(j) +
                                 " outside the known window (" + trunc_name(tz_) + ", " +
                                 trunc_name(tt_) + ")");
  }
  auto it = terms_.find({i, j});
  return it == terms_.end() ? QRat() : it->second;
}

void ZTSeries::add_to(int i, int j, const QRat& v) {
  if (v.is_zero() || i > tz_ || j > tt_) return;
  auto [it, inserted] = terms_.try_emplace({i, j}, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int ZTSeries::t_degree() const {
  int d = -1;
  for (const auto& [k, v] : terms_) d = std::max(d, k.i2);
  return d;
}

ZTSeries ZTSeries::truncated(int trunc_z, int trunc_t) const {
  ZTSeries r(std::min(tz_, trunc_z), std::min(tt_, trunc_t));
  for (const auto& [k, v] : terms_) {
    if (k.i1 <= r.tz_ && k.i2 <= r.tt_) r.terms_.emplace(k, v);
  }
  return r;
}

ZTSeries ZTSeries::shifted_z(int k) const {
  ZTSeries r(trunc_add(tz_, k), tt_);
  for (const auto& [idx, v] : terms_) r.terms_.emplace(Index2{idx.i1 + k, idx.i2}, v);
  return r;
}

ZTSeries ZTSeries::operator-() const {
  ZTSeries r(*this);
  for (auto& [k, v] : r.terms_) v = -v;
  return r;
}

ZTSeries& ZTSeries::operator+=(const ZTSeries& o) {
  *this = truncated(o.tz_, o.tt_);
  for (const auto& [k, v] : o.terms_) add_to(k.i1, k.i2, v);
  return *this;
}

ZTSeries& ZTSeries::operator-=(const ZTSeries& o) { return *this += -o; }

ZTSeries& ZTSeries::operator*=(const QRat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

ZTSeries operator*(const ZTSeries& a, const ZTSeries& b) {
  return mul_window(a, b, kExact, kExact);
}

ZTSeries mul_window(const ZTSeries& a, const ZTSeries& b, int trunc_z, int trunc_t) {
  const int tz = std::min({a.trunc_z(), b.trunc_z(), trunc_z});
  const int tt = std::min({a.trunc_t(), b.trunc_t(), trunc_t});
  ZTSeries r(tz, tt);
  for (const auto& [ka, va] : a.terms()) {
    if (ka.i1 > tz || ka.i2 > tt) continue;
    for (const auto& [kb, vb] : b.terms()) {
      if (ka.i1 + kb.i1 > tz) break;
      if (ka.i2 + kb.i2 > tt) continue;
      r.add_to(ka.i1 + kb.i1, ka.i2 + kb.i2, va * vb);
    }
  }
  return r;
}

std::string ZTSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << v.to_string() << ")*z^" << k.i1 << "*t^" << k.i2;
  }
  if (first) os << '0';
  os << " [window " << trunc_name(tz_) << ", " << trunc_name(tt_) << ']';
  return os.str();
}

EvalT eval_t(const ZTSeries& F, QExp a) {
  ZSeries r(0, F.trunc_z());
  for (const auto& [k, v] : F.terms()) r.add_to(k.i1, v * QRat::q_pow(a * k.i2));
  return {r, is_exact(F.trunc_t())};
}

ZSeries eval_t_exact(const ZTSeries& F, QExp a) {
  EvalT e = eval_t(F, a);
  if (!e.t_complete) {
    throw TIncomplete("evaluation in t needs all t-degrees, series is known only to t^" +
                      std::to_string(F.trunc_t()));
  }
  return e.value;
}

ZTSeries scale_z(const ZTSeries& F, QExp a) {
  ZTSeries r(F.trunc_z(), F.trunc_t());
  for (const auto& [k, v] : F.terms()) r.add_to(k.i1, k.i2, v * QRat::q_pow(a * k.i1));
  return r;
}

ZTSeries subst_inverse_q(const ZTSeries& F) {
  ZTSeries r(F.trunc_z(), F.trunc_t());
  for (const auto& [k, v] : F.terms()) r.add_to(k.i1, k.i2, v.subst_inverse_q());
  return r;
}

}  // namespace qcat
