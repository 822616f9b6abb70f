#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "polychrome/codec.hpp"

using namespace polychrome;

TEST_CASE("coloring files round-trip") {
  LinearColoring c = crux_coloring({1, 2, CruxParams::Variant::B}).coloring;
  std::string text = encode_coloring(c);
  LinearColoring back = decode_coloring(text);
  CHECK(back.ell == c.ell);
  CHECK(back.group == c.group);
  CHECK(back.weights == c.weights);
  CHECK(back.label == c.label);
  CHECK(encode_coloring(back) == text);
}

TEST_CASE("crux(1,2,B) encodes canonically") {
  Json j = coloring_to_json(crux_coloring({1, 2, CruxParams::Variant::B}).coloring);
  CHECK(j["format_version"] == 1);
  CHECK(j["ell"] == 2);
  CHECK(j["moduli"] == Json::array({3, 2}));
  CHECK(j["weights"] == Json::array({{1, 1}, {2, 1}, {0, 1}}));
  // canonical key order
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"format_version", "ell", "moduli", "weights", "label"});
}

TEST_CASE("decode rejects malformed files") {
  CHECK_THROWS_AS(decode_coloring("not json"), ParseError);
  CHECK_THROWS_AS(decode_coloring("[1,2]"), ParseError);
  CHECK_THROWS_AS(decode_coloring(R"({"format_version":1,"ell":2,"moduli":[3,2]})"), ParseError);
  CHECK_THROWS_AS(
      decode_coloring(
          R"({"format_version":9,"ell":0,"moduli":[2],"weights":[[1]],"label":""})"),
      ParseError);
  // wrong residue arity
  CHECK_THROWS_AS(
      decode_coloring(
          R"({"format_version":1,"ell":1,"moduli":[3,2],"weights":[[1],[0,1]],"label":""})"),
      ParseError);
  // out-of-range residue
  CHECK_THROWS_AS(
      decode_coloring(
          R"({"format_version":1,"ell":1,"moduli":[3,2],"weights":[[3,0],[0,1]],"label":""})"),
      ParseError);
  // weights that do not generate the group
  CHECK_THROWS_AS(
      decode_coloring(
          R"({"format_version":1,"ell":1,"moduli":[4],"weights":[[2],[2]],"label":""})"),
      NotSurjective);
}

TEST_CASE("round-trip over random colorings") {
  std::mt19937 rng(123);
  auto groups = enumerate_abelian_groups(12);
  int built = 0;
  while (built < 1100) {
    const Group& g = groups[rng() % groups.size()];
    int ell = 1 + int(rng() % 2);
    std::vector<GroupElement> w;
    for (int i = 0; i <= ell; ++i) w.push_back(g.unindex(rng() % g.order()));
    if (!weights_generate_group(g, w)) continue;
    ++built;
    LinearColoring c{ell, g, w, "fixture " + std::to_string(built)};
    LinearColoring back = decode_coloring(encode_coloring(c));
    REQUIRE(back.weights == c.weights);
    REQUIRE(back.group == c.group);
    REQUIRE(encode_coloring(back) == encode_coloring(c));
  }
}
