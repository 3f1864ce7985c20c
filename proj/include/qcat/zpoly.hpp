#pragma once

#include <gmpxx.h>

#include <vector>

// Dense univariate polynomials over Z; c[i] is the coefficient of s^i.
// An empty vector is the zero polynomial; nonzero ones carry no trailing zeros.
namespace qcat::zpoly {

using ZPoly = std::vector<mpz_class>;

void trim(ZPoly& a);
int degree(const ZPoly& a);  // -1 for zero

ZPoly add(const ZPoly& a, const ZPoly& b);
ZPoly sub(const ZPoly& a, const ZPoly& b);
ZPoly mul(const ZPoly& a, const ZPoly& b);
ZPoly scale(const ZPoly& a, const mpz_class& c);
void negate(ZPoly& a);

mpz_class content(const ZPoly& a);  // nonnegative; 0 for zero
void divexact_scalar(ZPoly& a, const mpz_class& c);
ZPoly primitive(const ZPoly& a);

// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
ZPoly gcd(const ZPoly& a, const ZPoly& b);
// a / b where b divides a in Q[s] and b is primitive.
ZPoly divexact(const ZPoly& a, const ZPoly& b);

// Number of trailing zero coefficients at s^0; the polynomial must be nonzero.
int valuation(const ZPoly& a);
ZPoly drop_low(const ZPoly& a, int k);
ZPoly shift_up(const ZPoly& a, int k);
ZPoly reverse(const ZPoly& a);
// a(s^m)
ZPoly spread(const ZPoly& a, int m);
mpz_class eval_one(const ZPoly& a);
bool is_one(const ZPoly& a);

}  // namespace qcat::zpoly
