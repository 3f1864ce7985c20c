#pragma once

#include <string>
#include <vector>

#include "qcat/series.hpp"

namespace qcat {

struct QNumberTable {
  int p = 2;
  std::vector<QRat> values;
  std::string provenance;
};

// C_r = sum_{i<r} C_i C_{r-1-i} q^{(r-1-i)(i+1)}
QNumberTable carlitz(int N);
// Sum over compositions k_1 + ... + k_p = n - 1 of
// prod C_{p,k_j} q^{(p-1) sum_{i<j} k_i k_j + sum_j (j-1) k_j}.
QNumberTable qfuss(int p, int N);
// Solves sum_n C_{p,n} z^n (z;q)_{n(p-1)+1} = 1 degree by degree.
QNumberTable qfuss_via_basis(int p, int N);

// p = 1: sum (-1)^n q^{n^2} z^n / (q;q)_n.
// p >= 2: sum (-1)^n q^{p C(n,2)} z^n / (q;q)_n.
// inverse_q replaces q by 1/q throughout.
ZSeries q_airy(int p, int N, bool inverse_q);

// 1/(1 - z/(1 - (z/q)/(1 - (z/q^2)/...))) cut off after `depth` levels.
ZSeries rogers_ramanujan_cfrac(int depth, int N);

}  // namespace qcat
