#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "polychrome/codec.hpp"
#include "polychrome/search.hpp"

using namespace polychrome;

TEST_CASE("abelian group enumeration by isomorphism class") {
  auto groups = enumerate_abelian_groups(8);
  auto at_order = [&](int64_t n) {
    std::set<std::vector<int64_t>> out;
    for (const auto& g : groups)
      if (g.order() == n) out.insert(g.moduli());
    return out;
  };
  CHECK(at_order(1) == std::set<std::vector<int64_t>>{{1}});
  CHECK(at_order(4) == std::set<std::vector<int64_t>>{{4}, {2, 2}});
  CHECK(at_order(6) == std::set<std::vector<int64_t>>{{3, 2}});
  CHECK(at_order(8) == std::set<std::vector<int64_t>>{{8}, {4, 2}, {2, 2, 2}});
  CHECK(groups.size() == 1 + 1 + 1 + 2 + 1 + 1 + 1 + 3);

  auto g12 = enumerate_abelian_groups(12);
  std::set<std::vector<int64_t>> twelve;
  for (const auto& g : g12)
    if (g.order() == 12) twelve.insert(g.moduli());
  CHECK(twelve == std::set<std::vector<int64_t>>{{4, 3}, {3, 2, 2}});
}

TEST_CASE("search d=3 ell=1: the balanced bound is already optimal at order 5") {
  SearchResult res = search_best_linear(3, 1, 5);
  CHECK(res.best_count == 4);
  CHECK(res.best.size() == 12);
  for (const auto& c : res.best) CHECK(c.group.order() == 4);
  // frozen counters from an independent enumeration
  CHECK(res.candidates == 71);
  CHECK(res.not_surjective == 17);
  CHECK(res.refuted == 30);
  CHECK(res.verified == 24);
  CHECK(res.pruned_by_bound == 0);  // lattice pruning applies to ell = 2 only
  CHECK(res.groups_skipped_by_binom == 0);
  CHECK(res.complete);
  CHECK(res.not_surjective + res.pruned_by_bound + res.refuted + res.verified +
            res.budget_skipped ==
        res.candidates);
}

TEST_CASE("search d=4 ell=2 reaches the 6-color construction") {
  SearchResult res = search_best_linear(4, 2, 6);
  CHECK(res.best_count == 6);
  CHECK(res.best.size() == 8);
  for (const auto& c : res.best) {
    CHECK(c.group.moduli() == std::vector<int64_t>{3, 2});
    // every winner re-verifies under the literal oracle
    CHECK(verify_cube_oracle(c, 4, 6).polychromatic);
  }
  CHECK(res.best_count >= main_coloring(4).coloring.group.order());
}

TEST_CASE("pigeonhole keeps tiny instances trivial") {
  SearchResult res = search_best_linear(2, 2, 2);
  CHECK(res.best_count == 1);
  CHECK(res.groups_skipped_by_binom == 1);  // order 2 exceeds C(3,3) = 1
  CHECK(res.candidates == 1);
  CHECK(res.best.size() == 1);
}

TEST_CASE("pruning never changes the outcome") {
  for (auto [d, ell, max_order] : {std::tuple{3, 1, 5}, {4, 2, 6}, {2, 2, 3}}) {
    SearchResult pruned = search_best_linear(d, ell, max_order);
    SearchOptions raw;
    raw.prune = false;
    SearchResult full = search_best_linear(d, ell, max_order, raw);
    CHECK(pruned.best_count == full.best_count);
    REQUIRE(pruned.best.size() == full.best.size());
    for (size_t i = 0; i < pruned.best.size(); ++i)
      CHECK(pruned.best[i].weights == full.best[i].weights);
  }
}

TEST_CASE("search results are independent of worker count") {
  SearchOptions one;
  one.workers = 1;
  SearchOptions four;
  four.workers = 4;
  Json a = search_to_json(search_best_linear(4, 2, 6, one));
  Json b = search_to_json(search_best_linear(4, 2, 6, four));
  CHECK(a == b);
}

TEST_CASE("search argument validation") {
  CHECK_THROWS_AS(search_best_linear(1, 2, 4), ParamViolation);
  CHECK_THROWS_AS(search_best_linear(3, 1, 0), ParamViolation);
}
