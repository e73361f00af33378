#include <algorithm>

#include "doctest.h"

#include "hodge/strat.hpp"
#include "json.hpp"

using namespace hodge;

namespace {

std::size_t find(const StrataPoset& poset, std::array<int, 3> delta, int alpha1, int beta1) {
  for (std::size_t i = 0; i < poset.size(); ++i) {
    const auto& y = poset.points()[i];
    if (y.delta == delta && y.alpha[0] == alpha1 && y.beta[0] == beta1) return i;
  }
  FAIL("point not found");
  return 0;
}

}  // namespace

TEST_SUITE("strat") {
  TEST_CASE("order examples at h = 2, mu = (1,1,1)") {
    const StrataPoset poset = StrataPoset::admissible(2, {1, 1, 1});
    const std::size_t bottom = find(poset, {1, 1, 1}, 1, 1);
    const std::size_t left = find(poset, {2, 1, 0}, 2, 1);
    const std::size_t right = find(poset, {2, 1, 0}, 1, 2);
    const std::size_t top = find(poset, {2, 1, 0}, 2, 2);
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(poset.leq(i, i));
      CHECK(poset.leq(bottom, i));
      CHECK(poset.leq(i, top));
    }
    CHECK_FALSE(poset.leq(left, right));
    CHECK_FALSE(poset.leq(right, left));

    const auto edges = hasse(poset);
    const std::vector<std::pair<std::size_t, std::size_t>> expected{{bottom, left}, {bottom, right}, {left, top}, {right, top}};
    CHECK(edges.size() == 4);
    for (const auto& e : expected) CHECK(std::find(edges.begin(), edges.end(), e) != edges.end());

    CHECK(closure_set(poset.points()[bottom], poset).size() == 4);
    CHECK(closure_set(poset.points()[top], poset) == std::vector<StrataPoint>{poset.points()[top]});
  }

  TEST_CASE("order axioms and the minimum on every small poset") {
    for (int h = 1; h <= 3; ++h)
      for (int a = 0; a <= h; ++a)
        for (int b = 0; b <= a; ++b)
          for (int c = 0; c <= b; ++c) {
            const StrataPoset poset = StrataPoset::admissible(h, {a, b, c});
            const std::size_t n = poset.size();
            if (n == 0) continue;
            for (std::size_t i = 0; i < n; ++i) {
              CHECK(poset.leq(i, i));
              for (std::size_t j = 0; j < n; ++j) {
                CHECK(poset.leq(i, j) == leq(poset.points()[i], poset.points()[j]));
                if (i != j && poset.leq(i, j)) CHECK_FALSE(poset.leq(j, i));
                for (std::size_t k = 0; k < n; ++k)
                  if (poset.leq(i, j) && poset.leq(j, k)) CHECK(poset.leq(i, k));
              }
            }
            // Unique minimum (P(μ), P(d1,d2), P(d2,d3)).
            const StrataPoint bottom{h, {a, b, c}, {a, b, c}, {a, b}, {b, c}};
            const std::size_t at = poset.index_of(bottom);
            for (std::size_t i = 0; i < n; ++i) CHECK(poset.leq(at, i));
            // Hasse edges are exactly the covering relations.
            const auto edges = hasse(poset);
            for (std::size_t i = 0; i < n; ++i)
              for (std::size_t j = 0; j < n; ++j) {
                bool covers = i != j && poset.leq(i, j);
                for (std::size_t k = 0; k < n && covers; ++k)
                  if (k != i && k != j && poset.leq(i, k) && poset.leq(k, j)) covers = false;
                CHECK(covers == (std::find(edges.begin(), edges.end(), std::pair{i, j}) != edges.end()));
              }
          }
  }

  TEST_CASE("chains and antichains") {
    const StrataPoint low{2, {1, 1, 1}, {1, 1, 1}, {1, 1}, {1, 1}};
    const StrataPoint high{2, {1, 1, 1}, {2, 1, 0}, {2, 0}, {2, 0}};
    CHECK(hasse(StrataPoset({low, high})).size() == 1);
    const StrataPoint left{2, {1, 1, 1}, {2, 1, 0}, {2, 0}, {1, 1}};
    const StrataPoint right{2, {1, 1, 1}, {2, 1, 0}, {1, 1}, {2, 0}};
    CHECK(hasse(StrataPoset({left, right})).empty());
    CHECK_THROWS_AS(leq(low, StrataPoint{1, {1, 1, 1}, {1, 1, 1}, {1, 1}, {1, 1}}), std::invalid_argument);
  }

  TEST_CASE("exports are stable") {
    const StrataPoset poset = StrataPoset::admissible(2, {1, 1, 1});
    CHECK(export_dot(poset) == export_dot(StrataPoset::admissible(2, {1, 1, 1})));
    const auto j = nlohmann::json::parse(export_json(poset));
    CHECK(j["nodes"].size() == 4);
    CHECK(j["edges"].size() == 4);
    CHECK(export_dot(poset).rfind("digraph strata {", 0) == 0);
  }
}
