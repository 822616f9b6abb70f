#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "polychrome/bounds_basic.hpp"
#include "polychrome/colorings.hpp"

using namespace polychrome;

namespace {

// Independent subgroup closure over element sets (test-side oracle).
std::set<int64_t> closure(const Group& g, const std::vector<GroupElement>& gens) {
  std::set<int64_t> seen{g.index(g.zero())};
  std::vector<GroupElement> frontier{g.zero()};
  while (!frontier.empty()) {
    GroupElement x = frontier.back();
    frontier.pop_back();
    for (const auto& w : gens) {
      GroupElement y = g.add(x, w);
      if (seen.insert(g.index(y)).second) frontier.push_back(y);
    }
  }
  return seen;
}

}  // namespace

TEST_CASE("make_linear checks surjectivity") {
  Group g({3, 2});
  std::vector<GroupElement> w = {GroupElement{{1, 1}}, GroupElement{{2, 1}}, GroupElement{{0, 1}}};
  REQUIRE(closure(g, w).size() == 6);  // oracle agrees these weights generate
  CHECK_NOTHROW(make_linear(g, w, 2));

  Group z4({4});
  CHECK_THROWS_AS(make_linear(z4, {GroupElement{{2}}, GroupElement{{2}}}, 1), NotSurjective);

  Group z1({1});
  LinearColoring one = make_linear(z1, {z1.zero(), z1.zero(), z1.zero()}, 2);
  CHECK(one.group.order() == 1);

  CHECK_THROWS_AS(make_linear(g, w, 1), StructuralError);  // wrong weight count
}

TEST_CASE("basic coloring: balanced moduli, larger first") {
  BuiltColoring b = basic_coloring(4, 2);
  CHECK(b.coloring.group.moduli() == std::vector<int64_t>{2, 2, 1});
  CHECK(b.coloring.group.order() == 4);
  CHECK(b.d == 4);

  BuiltColoring b14 = basic_coloring(14, 2);
  CHECK(b14.coloring.group.moduli() == std::vector<int64_t>{5, 5, 5});
  CHECK(b14.coloring.group.order() == 125);

  BuiltColoring same = basic_coloring(3, 3);
  CHECK(same.coloring.group.order() == 1);

  CHECK_THROWS_AS(basic_coloring(1, 2), ParamViolation);
}

TEST_CASE("basic coloring weights are unit projections") {
  BuiltColoring b = basic_coloring(6, 2);
  REQUIRE(b.coloring.group.moduli() == std::vector<int64_t>{3, 2, 2});
  CHECK(b.coloring.weights[0] == GroupElement{{1, 0, 0}});
  CHECK(b.coloring.weights[1] == GroupElement{{0, 1, 0}});
  CHECK(b.coloring.weights[2] == GroupElement{{0, 0, 1}});
}

TEST_CASE("crux coloring") {
  BuiltColoring a = crux_coloring({2, 3, CruxParams::Variant::A});
  CHECK(a.coloring.group.moduli() == std::vector<int64_t>{5, 3});
  CHECK(a.d == 6);
  CHECK(a.coloring.group.order() == 15);
  CHECK(a.coloring.weights[1] == GroupElement{{3, 1}});  // -t stored canonically

  BuiltColoring b = crux_coloring({1, 2, CruxParams::Variant::B});
  CHECK(b.coloring.group.moduli() == std::vector<int64_t>{3, 2});
  CHECK(b.d == 4);
  CHECK(b.coloring.group.order() == 6);
  CHECK(b.coloring.weights == std::vector<GroupElement>{GroupElement{{1, 1}},
                                                        GroupElement{{2, 1}},
                                                        GroupElement{{0, 1}}});

  CHECK_THROWS_AS(crux_coloring({2, 2, CruxParams::Variant::A}), ParamViolation);
  CHECK_THROWS_AS(crux_coloring({1, 2, CruxParams::Variant::A}), ParamViolation);
  CHECK_THROWS_AS(crux_coloring({0, 1, CruxParams::Variant::B}), ParamViolation);
}

TEST_CASE("main coloring dispatch") {
  CHECK(main_coloring(9).coloring.group.moduli() == std::vector<int64_t>{10, 4});
  CHECK(main_coloring(9).coloring.group.order() == 40);
  CHECK(main_coloring(5).coloring.group.moduli() == std::vector<int64_t>{3, 3});
  CHECK(main_coloring(5).coloring.group.order() == 9);
  BuiltColoring seven = main_coloring(7);
  CHECK(seven.coloring.group.moduli() == std::vector<int64_t>{7, 3});
  CHECK(seven.coloring.group.order() == 21);
  CHECK(seven.note.has_value());  // published table prints 20=5*4 here
  CHECK_FALSE(main_coloring(8).note.has_value());
  CHECK_THROWS_AS(main_coloring(3), ParamViolation);
}

TEST_CASE("main coloring color count follows the case formula up to d=100") {
  for (int d = 4; d <= 100; ++d) {
    int64_t k = d / 3;
    int64_t expect = d % 3 == 0   ? (k * k + 1) * (k + 1)
                     : d % 3 == 1 ? (k * k + k + 1) * (k + 1)
                                  : (k * k + k + 1) * (k + 2);
    CHECK(main_coloring(d).coloring.group.order() == expect);
  }
}

TEST_CASE("basic coloring count equals p_bas for all 1 <= ell <= d <= 30") {
  for (int d = 1; d <= 30; ++d)
    for (int ell = 1; ell <= d; ++ell)
      CHECK(basic_coloring(d, ell).coloring.group.order() == p_bas(d, ell).value);
}

TEST_CASE("product coloring") {
  BuiltColoring c0 = basic_coloring(5, 1);
  REQUIRE(c0.coloring.group.order() == 9);
  BuiltColoring c1 = main_coloring(6);
  BuiltColoring p = product_coloring(c0, c1);
  CHECK(p.coloring.ell == 4);
  CHECK(p.coloring.group.order() == 135);
  CHECK(p.d == 12);

  BuiltColoring small = product_coloring(basic_coloring(1, 0), main_coloring(4));
  CHECK(small.coloring.ell == 3);
  CHECK(small.coloring.group.order() == 12);
  CHECK(small.d == 6);

  // tensor with the trivial factor leaves the color count unchanged
  Group z1({1});
  LinearColoring triv = make_linear(z1, {z1.zero()}, 0);
  LinearColoring q = product_coloring(triv, c1.coloring);
  CHECK(q.group.order() == c1.coloring.group.order());
  CHECK(q.ell == 3);
}

TEST_CASE("face color evaluation") {
  LinearColoring b555 = make_linear(
      Group({5, 5, 5}),
      {GroupElement{{1, 0, 0}}, GroupElement{{0, 1, 0}}, GroupElement{{0, 0, 1}}}, 2);
  CHECK(face_color(b555, FaceVector{{1, 0, 2}}) == GroupElement{{1, 0, 2}});

  LinearColoring cx = crux_coloring({1, 2, CruxParams::Variant::B}).coloring;
  CHECK(face_color(cx, FaceVector{{1, 0, 2}}) == GroupElement{{1, 1}});
  CHECK(face_color(cx, FaceVector{{0, 0, 0}}) == cx.group.zero());
  CHECK_THROWS_AS(face_color(cx, FaceVector{{1, 0}}), StructuralError);
}

TEST_CASE("face color is additive") {
  std::mt19937 rng(7);
  std::vector<LinearColoring> fixtures = {
      main_coloring(4).coloring, main_coloring(6).coloring, basic_coloring(6, 2).coloring,
      basic_coloring(5, 1).coloring,
      product_coloring(basic_coloring(1, 0), main_coloring(4)).coloring};
  for (const auto& c : fixtures) {
    for (int iter = 0; iter < 10000; ++iter) {
      FaceVector v, w, sum;
      for (int i = 0; i <= c.ell; ++i) {
        int64_t a = rng() % 50, b = rng() % 50;
        v.entries.push_back(a);
        w.entries.push_back(b);
        sum.entries.push_back(a + b);
      }
      REQUIRE(face_color(c, sum) == c.group.add(face_color(c, v), face_color(c, w)));
    }
  }
}

TEST_CASE("face color image is the whole group") {
  // exhaustive over v in [0,E)^(ell+1) for every construction of order <= 1000
  std::vector<LinearColoring> fixtures;
  for (int d = 4; d <= 12; ++d) fixtures.push_back(main_coloring(d).coloring);
  for (int d = 2; d <= 8; ++d)
    for (int ell = 1; ell <= 2 && ell <= d; ++ell)
      fixtures.push_back(basic_coloring(d, ell).coloring);
  for (const auto& c : fixtures) {
    REQUIRE(c.group.order() <= 1000);
    int64_t e = c.group.exponent();
    std::set<int64_t> seen;
    std::vector<int64_t> v(c.ell + 1, 0);
    while (true) {
      seen.insert(c.group.index(face_color(c, FaceVector{v})));
      int i = c.ell;
      while (i >= 0 && ++v[i] == e) v[i--] = 0;
      if (i < 0) break;
    }
    CHECK(int64_t(seen.size()) == c.group.order());
  }
}
