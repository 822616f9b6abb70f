#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "polychrome/bounds.hpp"
#include "polychrome/colorings.hpp"

using namespace polychrome;

namespace {

bool in_kernel(const LinearColoring& c, const Vec3& v) {
  GroupElement acc = c.group.zero();
  for (int i = 0; i < 3; ++i) acc = c.group.add(acc, c.group.scale(v[i], c.weights[i]));
  return acc == c.group.zero();
}

Mat3 matmul(const Mat3& a, const Mat3& b) {
  Mat3 out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) out[i][j] += a[i][k] * b[k][j];
  return out;
}

}  // namespace

TEST_CASE("p_bas values and moduli") {
  CHECK(p_bas(6, 2).value == 12);
  CHECK(p_bas(6, 2).moduli == std::vector<int64_t>{3, 2, 2});
  CHECK(p_bas(7, 1).value == 16);
  CHECK(p_bas(3, 3).value == 1);
  for (int d = 1; d <= 100; ++d)
    CHECK(p_bas(d, 1).value == (int64_t(d) + 1) * (d + 1) / 4);  // floor((d+1)^2/4)
  CHECK_THROWS_AS(p_bas(1, 2), ParamViolation);
}

TEST_CASE("binomial upper bound") {
  CHECK(binom_upper(4, 2) == 10);
  CHECK(binom_upper(12, 2) == 286);
  CHECK(binom_upper(5, 5) == 1);
  CHECK(binom(2, 3) == 0);
  CHECK(binom(-1, 3) == 0);
  CHECK(binom(1000001, 3) == int64_t(1000001) * 1000000 * 999999 / 6);
}

TEST_CASE("kernel lattice of the d=4 construction") {
  LinearColoring c = main_coloring(4).coloring;
  Mat3 b = kernel_lattice(c);
  CHECK(b == Mat3{{{1, 1, 0}, {0, 3, 1}, {0, 0, 2}}});
  CHECK(detail::det3(b) == 6);
  CHECK(in_kernel(c, {1, 1, 0}));
  CHECK(in_kernel(c, {-1, 2, -1}));
  for (const auto& row : b) CHECK(in_kernel(c, {row[0], row[1], row[2]}));
}

TEST_CASE("kernel lattice of the trivial coloring is Z^3") {
  Group z1({1});
  LinearColoring triv = make_linear(z1, {z1.zero(), z1.zero(), z1.zero()}, 2);
  Mat3 b = kernel_lattice(triv);
  CHECK(b == Mat3{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}});
}

TEST_CASE("kernel index equals group order for every main construction") {
  for (int d = 4; d <= 12; ++d) {
    LinearColoring c = main_coloring(d).coloring;
    Mat3 b = kernel_lattice(c);
    CHECK(detail::det3(b) == c.group.order());
    for (const auto& row : b) CHECK(in_kernel(c, {row[0], row[1], row[2]}));
  }
  CHECK_THROWS_AS(kernel_lattice(basic_coloring(5, 1).coloring), StructuralError);
}

TEST_CASE("shortest vectors of the main constructions") {
  ShortestVec s4 = shortest_vector(kernel_lattice(main_coloring(4).coloring));
  CHECK(s4.two_q == 6);
  ShortestVec s6 = shortest_vector(kernel_lattice(main_coloring(6).coloring));
  CHECK(s6.two_q == 6);
  CHECK(s6.v == Vec3{-1, 2, -1});

  Group z1({1});
  LinearColoring triv = make_linear(z1, {z1.zero(), z1.zero(), z1.zero()}, 2);
  ShortestVec s1 = shortest_vector(kernel_lattice(triv));
  CHECK(s1.two_q == 2);  // a unit vector, c = 1
}

TEST_CASE("shortest vector is basis-independent") {
  std::mt19937 rng(99);
  Mat3 base = kernel_lattice(main_coloring(6).coloring);
  ShortestVec ref = shortest_vector(base);
  for (int trial = 0; trial < 300; ++trial) {
    // random unimodular transform: shear rows, maybe swap
    Mat3 t{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    for (int k = 0; k < 10; ++k) {
      int i = int(rng() % 3), j = int(rng() % 3);
      if (i == j) continue;
      int64_t f = int64_t(rng() % 7) - 3;
      for (int col = 0; col < 3; ++col) t[i][col] += f * t[j][col];
    }
    Mat3 rebased = matmul(t, base);
    if (std::abs(detail::det3(rebased)) != 15) continue;  // overflow guard in shear chain
    ShortestVec got = shortest_vector(rebased);
    REQUIRE(got.two_q == ref.two_q);
    REQUIRE(got.v == ref.v);
    REQUIRE(hermite_form(rebased) == base);
  }
}

TEST_CASE("gram form matches an explicit tetrahedral basis") {
  // rows (1,0,0), (1/2, sqrt(3)/2, 0), (1/2, sqrt(3)/6, sqrt(6)/3)
  const double b[3][3] = {{1, 0, 0},
                          {0.5, std::sqrt(3.0) / 2, 0},
                          {0.5, std::sqrt(3.0) / 6, std::sqrt(6.0) / 3}};
  std::mt19937 rng(4);
  for (int iter = 0; iter < 2000; ++iter) {
    Vec3 v{int64_t(rng() % 21) - 10, int64_t(rng() % 21) - 10, int64_t(rng() % 21) - 10};
    double x[3] = {0, 0, 0};
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k) x[k] += double(v[i]) * b[i][k];
    double norm2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
    REQUIRE(std::abs(norm2 - double(two_q(v)) / 2) < 1e-9);
  }
}

TEST_CASE("lattice bound certificates for the main constructions") {
  struct Row {
    int d;
    int64_t n, q2, s, frustum;
  };
  // frozen from independent enumeration
  const Row rows[] = {{4, 6, 6, 3, 10},    {5, 9, 6, 3, 19},    {6, 15, 6, 3, 31},
                      {7, 21, 14, 4, 52},  {8, 28, 14, 4, 74},  {9, 40, 14, 4, 100},
                      {10, 52, 26, 5, 145}, {11, 65, 26, 5, 185}, {12, 85, 26, 5, 230}};
  for (const Row& r : rows) {
    LatticeCertificate cert = lattice_bound_check(main_coloring(r.d).coloring, r.d);
    CHECK(cert.N == r.n);
    CHECK(cert.c_squared_times_2 == r.q2);
    CHECK(cert.s == r.s);
    CHECK(cert.frustum_bound == r.frustum);
    CHECK(cert.sphere_ok);
    CHECK(cert.frustum_ok);
  }
}

TEST_CASE("trivial coloring bound at d=2") {
  Group z1({1});
  LinearColoring triv = make_linear(z1, {z1.zero(), z1.zero(), z1.zero()}, 2);
  LatticeCertificate cert = lattice_bound_check(triv, 2);
  CHECK(cert.N == 1);
  CHECK(cert.c_squared_times_2 == 2);
  CHECK(cert.s == 2);
  CHECK(cert.frustum_bound == 1);
  CHECK(cert.sphere_ok);
  CHECK(cert.frustum_ok);
}

TEST_CASE("asymptotic ratio bounds") {
  AsymptoticReport r6 = asymptotic_ratio(1000000);
  CHECK(r6.c_over_d_max <= 0.5434);
  CHECK(std::abs(r6.c_over_d_max - 0.5434) < 5e-5);
  CHECK(r6.s_over_d < 0.666);
  CHECK(r6.n_ratio_bound < 26.0 / 27.0);

  AsymptoticReport r7 = asymptotic_ratio(10000000);
  CHECK(r7.n_ratio_bound <= r6.n_ratio_bound + 1e-9);

  // below the asymptotic regime the finite-d bound is allowed to exceed 26/27
  AsymptoticReport r100 = asymptotic_ratio(100);
  CHECK(r100.n_ratio_bound > 26.0 / 27.0);
  CHECK_THROWS_AS(asymptotic_ratio(2), ParamViolation);
}
