#pragma once

#include <cstdint>
#include <vector>

#include "polychrome/errors.hpp"

namespace polychrome {

// C(a, k), zero when a < k or k < 0.
inline int64_t binom(int64_t a, int64_t k) {
  if (k < 0 || a < k) return 0;
  if (k > a - k) k = a - k;
  int64_t r = 1;
  for (int64_t i = 1; i <= k; ++i) {
    r = r * (a - k + i) / i;  // exact: r*(a-k+i) is divisible by i at each step
  }
  return r;
}

// Face-class count of Q_d: the elementary upper bound on the number of
// colors of any d-polychromatic ell-face coloring.
inline int64_t binom_upper(int d, int ell) {
  if (ell < 0 || d < ell) throw ParamViolation("need d >= ell >= 0");
  return binom(int64_t(d) + 1, int64_t(ell) + 1);
}

struct PBas {
  int64_t value = 0;
  std::vector<int64_t> moduli;  // balanced, larger first
};

// Best balanced-moduli color count: ceil((d+1)/(ell+1))^r * floor(...)^(ell+1-r)
// with r = (d+1) mod (ell+1) normalized into (0, ell+1].
inline PBas p_bas(int d, int ell) {
  if (ell < 0 || d < ell) throw ParamViolation("need d >= ell >= 0");
  int64_t q = (int64_t(d) + 1) / (ell + 1);
  int64_t r = (int64_t(d) + 1) % (ell + 1);
  PBas out;
  out.value = 1;
  for (int64_t i = 0; i < r; ++i) {
    out.moduli.push_back(q + 1);
    out.value *= q + 1;
  }
  for (int64_t i = r; i <= ell; ++i) {
    out.moduli.push_back(q);
    out.value *= q;
  }
  return out;
}

}  // namespace polychrome
