#include <random>

#include "doctest.h"

#include "hodge/polygon.hpp"

using namespace hodge;

namespace {

// (1/N) Σ max(0, x + d_i - h), straight from the definition.
Rational direct_eval(int h, const std::vector<int>& d, Rational x) {
  Rational total(0);
  for (int di : d) total += std::max(Rational(0), x + di - h);
  return total / static_cast<std::int64_t>(d.size());
}

std::vector<int> random_d(std::mt19937_64& rng, int h) {
  std::vector<int> d(1 + rng() % 4);
  for (auto& x : d) x = static_cast<int>(rng() % static_cast<std::uint64_t>(h + 1));
  return d;
}

}  // namespace

TEST_SUITE("polygon") {
  TEST_CASE("evaluation examples") {
    const Polygon p(2, {2, 1});
    CHECK(p.eval(2) == Rational(3, 2));
    CHECK(p.eval(1) == Rational(1, 2));
    CHECK(p.eval(0) == Rational(0));
    const Polygon zero(3, {0, 0, 0});
    for (int x = 0; x <= 3; ++x) CHECK(zero.eval(x) == Rational(0));
  }

  TEST_CASE("slopes follow d_i - d_{i+1} multiplicities") {
    const auto s = Polygon(2, {2, 1}).slopes();
    CHECK(s.size() == 2);
    CHECK(s.at(Rational(1, 2)) == 1);
    CHECK(s.at(Rational(1)) == 1);
  }

  TEST_CASE("from_slopes and recover_d") {
    CHECK(recover_d(Polygon(2, {2, 1})) == std::vector<int>{2, 1});
    CHECK(recover_d(Polygon(2, {0, 0})) == std::vector<int>{0, 0});
    const Polygon p = Polygon::from_slopes(2, 3, {Rational(1, 3), Rational(1)});
    for (int x = 0; x <= 2; ++x) CHECK(p.eval(x) == direct_eval(2, {2, 1, 1}, x));
    CHECK(recover_d(p, 3) == std::vector<int>{2, 1, 1});
  }

  TEST_CASE("refine and star") {
    CHECK(Polygon(2, {2}).refine(2) == Polygon(2, {2, 2}));
    CHECK(Polygon(2, {2, 1}).refine(1) == Polygon(2, {2, 1}));
    CHECK(star(Polygon(2, {2}), Polygon(2, {1})) == Polygon(2, {2, 1}));
    const Polygon p(3, {3, 1, 0});
    CHECK(star(p, p) == p);
  }

  TEST_CASE("dominance examples") {
    const Polygon a(2, {2, 0});
    const Polygon b(2, {1, 1});
    CHECK(dominates(a, a));
    CHECK(dominates(a, b));
    CHECK_FALSE(dominates(b, a));
  }

  TEST_CASE("randomized properties") {
    std::mt19937_64 rng(42);
    for (int k = 0; k < 2000; ++k) {
      const int h = 1 + static_cast<int>(rng() % 6);
      const auto d1 = random_d(rng, h);
      const auto d2 = random_d(rng, h);
      const Polygon p(h, d1);
      const Polygon q(h, d2);
      for (int x = 0; x <= h; ++x) CHECK(p.eval(x) == direct_eval(h, d1, x));
      for (int x = 1; x < h; ++x) CHECK(2 * p.eval(x) <= p.eval(x - 1) + p.eval(x + 1));
      auto sorted = d1;
      std::sort(sorted.rbegin(), sorted.rend());
      CHECK(recover_d(p, static_cast<int>(d1.size())) == sorted);
      const Polygon r = p.refine(3);
      for (int x = 0; x <= h; ++x) CHECK(r.eval(x) == p.eval(x));
      CHECK(star(p, q) == star(q, p));
      CHECK(dominates(p, q) == dominates_pointwise(p, q));
      // Pointwise check against the definition at integers.
      bool above = true;
      for (int x = 0; x <= h; ++x) above = above && direct_eval(h, d1, x) >= direct_eval(h, d2, x);
      CHECK(dominates(p, q) == above);
    }
  }

  TEST_CASE("star respects dominance at fixed denominators") {
    // ⋆ weights each factor by its denominator, so the comparison pairs
    // polygons written with the same number of d_i.
    std::mt19937_64 rng(3);
    int exercised = 0;
    auto with_length = [&](int h, std::size_t n) {
      std::vector<int> d(n);
      for (auto& x : d) x = static_cast<int>(rng() % static_cast<std::uint64_t>(h + 1));
      return Polygon(h, d);
    };
    for (int k = 0; k < 4000; ++k) {
      const int h = 1 + static_cast<int>(rng() % 4);
      const std::size_t n1 = 1 + rng() % 3;
      const std::size_t n2 = 1 + rng() % 3;
      const Polygon p1 = with_length(h, n1);
      const Polygon p1b = with_length(h, n1);
      const Polygon p2 = with_length(h, n2);
      const Polygon p2b = with_length(h, n2);
      if (!dominates(p1, p1b) || !dominates(p2, p2b)) continue;
      ++exercised;
      CHECK(dominates(star(p1, p2), star(p1b, p2b)));
    }
    CHECK(exercised > 100);
  }

  TEST_CASE("star depends on the denominator, not only on the function") {
    CHECK(Polygon(2, {2}) == Polygon(2, {2, 2}));
    CHECK_FALSE(star(Polygon(2, {2}), Polygon(2, {1})) == star(Polygon(2, {2, 2}), Polygon(2, {1})));
  }
}
