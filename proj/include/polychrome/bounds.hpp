#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "polychrome/bounds_basic.hpp"
#include "polychrome/colorings.hpp"
#include "polychrome/errors.hpp"

namespace polychrome {

using Mat3 = std::array<std::array<int64_t, 3>, 3>;
using Vec3 = std::array<int64_t, 3>;

namespace detail {

inline int64_t trunc_div(int64_t a, int64_t b) { return a / b; }
inline int64_t floor_div(int64_t a, int64_t b) {
  int64_t q = a / b;
  return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
}

// Row Hermite normal form in place: positive pivots, zeros below, entries
// above each pivot reduced into [0, pivot).  Returns the rank; U (if given)
// accumulates the unimodular row transform.
inline int row_hnf(std::vector<std::vector<int64_t>>& m,
                   std::vector<std::vector<int64_t>>* u = nullptr) {
  const size_t rows = m.size();
  const size_t cols = rows ? m[0].size() : 0;
  if (u) {
    u->assign(rows, std::vector<int64_t>(rows, 0));
    for (size_t i = 0; i < rows; ++i) (*u)[i][i] = 1;
  }
  auto row_sub = [&](size_t dst, size_t src, int64_t q) {
    for (size_t k = 0; k < cols; ++k) m[dst][k] -= q * m[src][k];
    if (u)
      for (size_t k = 0; k < rows; ++k) (*u)[dst][k] -= q * (*u)[src][k];
  };
  auto row_swap = [&](size_t i, size_t j) {
    std::swap(m[i], m[j]);
    if (u) std::swap((*u)[i], (*u)[j]);
  };
  auto row_negate = [&](size_t i) {
    for (auto& x : m[i]) x = -x;
    if (u)
      for (auto& x : (*u)[i]) x = -x;
  };

  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    while (true) {
      size_t i1 = rows, i2 = rows;
      for (size_t i = row; i < rows; ++i) {
        if (m[i][col] == 0) continue;
        if (i1 == rows || std::abs(m[i][col]) < std::abs(m[i1][col])) {
          i2 = i1;
          i1 = i;
        } else if (i2 == rows || std::abs(m[i][col]) < std::abs(m[i2][col])) {
          i2 = i;
        }
      }
      if (i2 == rows) break;  // at most one nonzero left
      row_sub(i2, i1, trunc_div(m[i2][col], m[i1][col]));
    }
    size_t piv = rows;
    for (size_t i = row; i < rows; ++i)
      if (m[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    row_swap(row, piv);
    if (m[row][col] < 0) row_negate(row);
    for (size_t i = 0; i < row; ++i) {
      int64_t q = floor_div(m[i][col], m[row][col]);
      if (q) row_sub(i, row, q);
    }
    ++row;
  }
  return int(row);
}

inline int64_t det3(const Mat3& b) {
  return b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1]) -
         b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0]) +
         b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0]);
}

}  // namespace detail

// Canonical (Hermite) form of a 3x3 integer basis; rows still span the same
// lattice.  Throws on singular input.
inline Mat3 hermite_form(const Mat3& basis) {
  std::vector<std::vector<int64_t>> m(3);
  for (int i = 0; i < 3; ++i) m[i] = {basis[i][0], basis[i][1], basis[i][2]};
  if (detail::row_hnf(m) != 3) throw StructuralError("singular lattice basis");
  Mat3 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i][j] = m[i][j];
  return out;
}

// Canonical basis of { v in Z^3 : sum_i v_i * weights[i] = 0 }.  The kernel
// is recovered as the left kernel of the stacked relation matrix
// [weights; diag(moduli)], which projects bijectively onto it.
inline Mat3 kernel_lattice(const LinearColoring& c) {
  if (c.ell != 2) throw StructuralError("kernel lattice is defined for ell = 2 colorings");
  const auto& moduli = c.group.moduli();
  const size_t f = moduli.size();
  std::vector<std::vector<int64_t>> a(3 + f, std::vector<int64_t>(f, 0));
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < f; ++j) a[i][j] = c.weights[i].residues[j];
  for (size_t j = 0; j < f; ++j) a[3 + j][j] = moduli[j];

  std::vector<std::vector<int64_t>> u;
  int rank = detail::row_hnf(a, &u);
  if (size_t(rank) != f) throw StructuralError("relation matrix rank defect");

  Mat3 basis{};
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) basis[i][j] = u[rank + i][j];
  Mat3 h = hermite_form(basis);
  if (detail::det3(h) != c.group.order())
    throw StructuralError("kernel index does not match group order");
  return h;
}

// 2*Q(v) for the tetrahedral quadratic form Q = x^2+y^2+z^2+xy+yz+zx;
// always an even-free positive integer for v != 0.
inline int64_t two_q(const Vec3& v) {
  int64_t a = v[0] + v[1], b = v[1] + v[2], c = v[2] + v[0];
  return a * a + b * b + c * c;
}

struct ShortestVec {
  Vec3 v{};
  int64_t two_q = 0;
};

// Shortest nonzero lattice vector under Q, by exhaustive search of the
// coordinate box |v_i| <= ceil(sqrt(2) N^(1/3)); the box provably contains
// a minimizer because Q(v) >= |v|^2/2 and min Q <= N^(2/3).  Ties broken
// lexicographically on (2Q, v).
inline ShortestVec shortest_vector(const Mat3& basis) {
  Mat3 h = hermite_form(basis);
  int64_t n = detail::det3(h);
  int64_t bound = int64_t(std::ceil(std::sqrt(2.0) * std::cbrt(double(n)))) + 1;

  auto contains = [&](const Vec3& v) {
    // back-substitute v = x * h over the integers
    if (v[0] % h[0][0] != 0) return false;
    int64_t x0 = v[0] / h[0][0];
    int64_t r1 = v[1] - x0 * h[0][1];
    if (r1 % h[1][1] != 0) return false;
    int64_t x1 = r1 / h[1][1];
    int64_t r2 = v[2] - x0 * h[0][2] - x1 * h[1][2];
    return r2 % h[2][2] == 0;
  };

  ShortestVec best;
  bool found = false;
  for (int64_t x = -bound; x <= bound; ++x)
    for (int64_t y = -bound; y <= bound; ++y)
      for (int64_t z = -bound; z <= bound; ++z) {
        Vec3 v{x, y, z};
        if ((x | y | z) == 0 || !contains(v)) continue;
        int64_t q2 = two_q(v);
        if (!found || q2 < best.two_q || (q2 == best.two_q && v < best.v)) {
          best = ShortestVec{v, q2};
          found = true;
        }
      }
  if (!found) throw StructuralError("no lattice vector in search box");
  return best;
}

// Everything the frustum/sphere-packing chain needs, in exact integers:
// c^2 = two_q/2, s = ceil(sqrt(3/2) c) via 4s^2 >= 3*two_q, and the two
// inequalities c^3 <= N and N <= C(d+1,3) - C(d+1-s,3).
struct LatticeCertificate {
  int64_t N = 0;
  Mat3 kernel_basis{};
  Vec3 shortest_vec{};
  int64_t c_squared_times_2 = 0;
  int64_t s = 0;
  int64_t frustum_bound = 0;
  bool sphere_ok = false;
  bool frustum_ok = false;
};

inline LatticeCertificate lattice_bound_check(const LinearColoring& c, int d) {
  if (c.ell != 2) throw StructuralError("lattice bound applies to ell = 2 colorings");
  LatticeCertificate cert;
  cert.kernel_basis = kernel_lattice(c);
  cert.N = detail::det3(cert.kernel_basis);
  ShortestVec sv = shortest_vector(cert.kernel_basis);
  cert.shortest_vec = sv.v;
  cert.c_squared_times_2 = sv.two_q;
  int64_t s = 0;
  while (4 * s * s < 3 * sv.two_q) ++s;
  cert.s = s;
  cert.frustum_bound = binom(int64_t(d) + 1, 3) - binom(int64_t(d) + 1 - s, 3);
  cert.sphere_ok = sv.two_q * sv.two_q * sv.two_q <= 8 * cert.N * cert.N;
  cert.frustum_ok = cert.N <= cert.frustum_bound;
  return cert;
}

struct AsymptoticReport {
  double c_over_d_max = 0;
  double s_over_d = 0;
  double n_ratio_bound = 0;
};

// Largest y = c/d satisfying the finite-d cubic inequality obtained from the
// frustum/height/sphere chain, found by bisection, and the N/C(d+1,3) bound
// it implies.  Converges to c/d <= 0.5434 and ratio < 26/27 as d grows.
inline AsymptoticReport asymptotic_ratio(int64_t d) {
  if (d < 3) throw ParamViolation("need d >= 3");
  const double dd = double(d);
  const double lead = 6.0 - std::sqrt(27.0 / 8.0);
  auto g = [&](double y) {
    return lead * y * y * y + 4.5 * ((dd - 1) / dd) * y * y -
           std::sqrt(1.5) * ((3 * dd * dd - 6 * dd + 2) / (dd * dd)) * y -
           3 * (dd - 1) / (dd * dd);
  };
  double lo = 0.0, hi = 2.0;
  while (hi - lo > 1e-12) {
    double mid = 0.5 * (lo + hi);
    (g(mid) <= 0 ? lo : hi) = mid;
  }
  AsymptoticReport rep;
  rep.c_over_d_max = 0.5 * (lo + hi);
  rep.s_over_d = std::sqrt(1.5) * rep.c_over_d_max + 1.0 / dd;
  double s = rep.s_over_d * dd;
  rep.n_ratio_bound =
      1.0 - ((dd + 1 - s) * (dd - s) * (dd - 1 - s)) / ((dd + 1) * dd * (dd - 1));
  return rep;
}

}  // namespace polychrome
