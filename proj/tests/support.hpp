#pragma once

#include <gmpxx.h>

#include <random>
#include <vector>

#include "qcat/qrat.hpp"

namespace qcat::test_support {

// Evaluates x at q = u^Lc, i.e. s = u^{Lc/L}.  Uses only the exposed
// canonical coefficient lists, so it checks arithmetic via the evaluation
// homomorphism.
inline mpq_class eval_at(const QRat& x, const mpq_class& u, int Lc) {
  mpq_class s = 1;
  for (int i = 0; i < Lc / x.root(); ++i) s *= u;
  auto horner = [&](const std::vector<mpq_class>& c) {
    mpq_class acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * s + *it;
    return acc;
  };
  mpq_class r = horner(x.numerator()) / horner(x.denominator());
  r.canonicalize();
  return r;
}

inline QRat random_qrat(std::mt19937_64& rng, bool laurent_only = false) {
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> deg(0, 3);
  std::uniform_int_distribution<int> rootd(1, 3);
  std::uniform_int_distribution<int> shift(-2, 2);
  const int root = rootd(rng);
  std::vector<mpq_class> num(deg(rng) + 1);
  for (auto& c : num) c = coef(rng);
  std::vector<mpq_class> den{1};
  if (!laurent_only) {
    do {
      den.assign(deg(rng) + 1, 0);
      for (auto& c : den) c = coef(rng);
    } while ([&] {
      for (auto& c : den)
        if (sgn(c) != 0) return false;
      return true;
    }());
  }
  return QRat::from_coeffs(num, den, root) * QRat::q_pow(QExp(shift(rng), root));
}

}  // namespace qcat::test_support
