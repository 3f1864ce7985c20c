#include "qcat/zpoly.hpp"

#include <algorithm>
#include <utility>

namespace qcat::zpoly {

void trim(ZPoly& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

int degree(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

ZPoly add(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

ZPoly sub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  trim(r);
  return r;
}

ZPoly scale(const ZPoly& a, const mpz_class& c) {
  if (sgn(c) == 0) return {};
  ZPoly r(a);
  for (auto& x : r) x *= c;
  return r;
}

void negate(ZPoly& a) {
  for (auto& x : a) mpz_neg(x.get_mpz_t(), x.get_mpz_t());
}

mpz_class content(const ZPoly& a) {
  mpz_class g = 0;
  for (const auto& x : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void divexact_scalar(ZPoly& a, const mpz_class& c) {
  if (c == 1) return;
  for (auto& x : a) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
}

ZPoly primitive(const ZPoly& a) {
  ZPoly r(a);
  if (r.empty()) return r;
  divexact_scalar(r, content(r));
  if (sgn(r.back()) < 0) negate(r);
  return r;
}

namespace {

// Pseudo-remainder of a by b, up to a nonzero constant factor.
ZPoly prem(ZPoly a, const ZPoly& b) {
  const int db = degree(b);
  const mpz_class& lb = b.back();
  mpz_class c;
  while (degree(a) >= db) {
    c = a.back();
    const int k = degree(a) - db;
    for (auto& x : a) x *= lb;
    for (int j = 0; j <= db; ++j) {
      mpz_submul(a[k + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
    }
    trim(a);
  }
  return a;
}

}  // namespace

ZPoly gcd(const ZPoly& a0, const ZPoly& b0) {
  if (a0.empty()) return primitive(b0);
  if (b0.empty()) return primitive(a0);
  ZPoly a = primitive(a0);
  ZPoly b = primitive(b0);
  if (degree(a) < degree(b)) std::swap(a, b);
  while (!b.empty()) {
    if (degree(b) == 0) return ZPoly{1};
    ZPoly r = prem(std::move(a), b);
    a = std::move(b);
    b = primitive(r);
  }
  return a;
}

ZPoly divexact(const ZPoly& a, const ZPoly& b) {
  if (a.empty()) return {};
  const int db = degree(b);
  if (db == 0) {
    ZPoly r(a);
    divexact_scalar(r, b[0]);
    return r;
  }
  ZPoly rem(a);
  ZPoly q(degree(a) - db + 1);
  for (int k = degree(a) - db; k >= 0; --k) {
    mpz_class& lead = rem[k + db];
    if (sgn(lead) == 0) continue;
    mpz_divexact(q[k].get_mpz_t(), lead.get_mpz_t(), b.back().get_mpz_t());
    for (int j = 0; j <= db; ++j) {
      mpz_submul(rem[k + j].get_mpz_t(), q[k].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  trim(q);
  return q;
}

int valuation(const ZPoly& a) {
  int k = 0;
  while (sgn(a[k]) == 0) ++k;
  return k;
}

ZPoly drop_low(const ZPoly& a, int k) {
  if (k == 0) return a;
  return ZPoly(a.begin() + k, a.end());
}

ZPoly shift_up(const ZPoly& a, int k) {
  if (k == 0 || a.empty()) return a;
  ZPoly r(a.size() + k);
  std::copy(a.begin(), a.end(), r.begin() + k);
  return r;
}

ZPoly reverse(const ZPoly& a) { return ZPoly(a.rbegin(), a.rend()); }

ZPoly spread(const ZPoly& a, int m) {
  if (m == 1 || a.empty()) return a;
  ZPoly r(degree(a) * m + 1);
  for (std::size_t i = 0; i < a.size(); ++i) r[i * m] = a[i];
  return r;
}

mpz_class eval_one(const ZPoly& a) {
  mpz_class s = 0;
  for (const auto& x : a) s += x;
  return s;
}

bool is_one(const ZPoly& a) { return a.size() == 1 && a[0] == 1; }

}  // namespace qcat::zpoly
