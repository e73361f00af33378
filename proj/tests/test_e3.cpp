#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"

#include "hodge/e3.hpp"
#include "hodge/e3_oracle.hpp"

using namespace hodge;

namespace {

// A + span of a few random elements of B, for A ⊆ B.
Subspace between(std::mt19937_64& rng, const Subspace& a, const Subspace& b) {
  const PrimeField& f = a.field();
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < a.dim(); ++r) rows.push_back(a.basis().row_vector(r));
  const std::size_t extra = rng() % (b.dim() + 1);
  for (std::size_t k = 0; k < extra; ++k) {
    Vector v(b.ambient_dim(), 0);
    for (std::size_t r = 0; r < b.dim(); ++r) {
      const auto c = static_cast<Elem>(rng() % f.p());
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = f.add(v[j], f.mul(c, b.basis()(r, j)));
    }
    rows.push_back(v);
  }
  return Subspace::span(f, a.ambient_dim(), rows);
}

}  // namespace

TEST_SUITE("e3") {
  TEST_CASE("enumeration examples") {
    const auto one = enum_yadm(1, {1, 1, 1});
    REQUIRE(one.size() == 1);
    CHECK(one[0].delta == std::array{1, 1, 1});
    CHECK(one[0].alpha == std::array{1, 1});
    CHECK(one[0].beta == std::array{1, 1});

    const auto four = enum_yadm(2, {1, 1, 1});
    REQUIRE(four.size() == 4);
    std::set<std::pair<int, int>> special;
    for (const auto& y : four) {
      if (y.delta == std::array{1, 1, 1}) {
        CHECK(y.alpha == std::array{1, 1});
        CHECK(y.beta == std::array{1, 1});
      } else {
        CHECK(y.delta == std::array{2, 1, 0});
        special.insert({y.alpha[0], y.beta[0]});
      }
    }
    CHECK(special == std::set<std::pair<int, int>>{{2, 1}, {1, 2}, {2, 2}});

    const auto zero = enum_yadm(2, {0, 0, 0});
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].delta == std::array{0, 0, 0});
  }

  TEST_CASE("phi examples") {
    const PrimeField f(2);
    const ConcreteModule j3 = realize(JordanType(3, 1, {3}), f);
    const PRDatum chain{j3, {j3.zero(), power_image(j3, 2), power_image(j3, 1), j3.whole()}};
    CHECK(phi(chain, 1) == StrataPoint{1, {1, 1, 1}, {1, 1, 1}, {1, 1}, {1, 1}});

    const ConcreteModule flat(f, 3, Matrix(3, 3));
    const PRDatum d = pr_construct(flat, {1, 1, 1});
    CHECK(phi(d, 3) == StrataPoint{3, {1, 1, 1}, {3, 0, 0}, {2, 0}, {2, 0}});

    const ConcreteModule empty(f, 3, Matrix(0, 0));
    const PRDatum z{empty, {empty.zero(), empty.zero(), empty.zero(), empty.zero()}};
    CHECK(phi(z, 1) == StrataPoint{1, {0, 0, 0}, {0, 0, 0}, {0, 0}, {0, 0}});
  }

  TEST_CASE("normal forms") {
    const PrimeField f(2);
    const auto y = enum_yadm(1, {1, 1, 1})[0];
    const PRDatum d = normal_form(y, f);
    CHECK(jordan_type(d.module).parts() == std::vector<int>{3});
    CHECK(d.flag[1] == power_image(d.module, 2));
    CHECK(d.flag[2] == power_image(d.module, 1));

    // The minimal point δ = μ, α = (d1, d2), β = (d2, d3).
    const StrataPoint bottom{3, {2, 1, 1}, {2, 1, 1}, {2, 1}, {1, 1}};
    REQUIRE(check_admissible(bottom));
    CHECK(phi(normal_form(bottom, f), 3) == bottom);
    CHECK_THROWS_AS(normal_form(StrataPoint{2, {1, 1, 1}, {2, 1, 0}, {1, 1}, {1, 1}}, f), InadmissiblePoint);
  }

  TEST_CASE("phi of random PR data lands in Y^adm") {
    std::mt19937_64 rng(17);
    const std::vector<std::vector<int>> shapes{{3}, {3, 1}, {2, 2}, {3, 2}, {2, 1, 1}, {3, 3}, {3, 1, 1}, {2, 2, 1}, {1, 1, 1}};
    int checked = 0;
    for (int k = 0; k < 600; ++k) {
      const PrimeField f(k % 2 == 0 ? 2 : 3);
      const auto& parts = shapes[rng() % shapes.size()];
      const ConcreteModule m = realize(JordanType(3, static_cast<int>(parts.size()), parts), f);
      const Subspace m1 = between(rng, power_image(m, 2), torsion_flag(m, 1));
      const Subspace m2 = between(rng, sum(power_image(m, 1), m1), preimage(m.t(), m1));
      const PRDatum d{m, {m.zero(), m1, m2, m.whole()}};
      if (!validate_pr(d, d.type())) continue;
      const auto mu = d.type();
      if (!(mu[0] >= mu[1] && mu[1] >= mu[2])) continue;
      ++checked;
      const StrataPoint y = phi(d, static_cast<int>(parts.size()));
      CHECK(check_in_y(y).ok);
      CHECK(check_admissible(y).ok);
    }
    CHECK(checked > 100);
  }

  TEST_CASE("enumerated points satisfy beta_2 <= delta_2 <= beta_1") {
    for (int h = 1; h <= 4; ++h)
      for (int a = 0; a <= h; ++a)
        for (int b = 0; b <= a; ++b)
          for (int c = 0; c <= b; ++c)
            for (const auto& y : enum_yadm(h, {a, b, c})) {
              CHECK(y.beta[1] <= y.delta[1]);
              CHECK(y.delta[1] <= y.beta[0]);
              CHECK(check_in_y(y).ok);
            }
  }

  TEST_CASE("polarized points are admissible") {
    for (int g = 1; g <= 3; ++g) {
      const auto adm = enum_yadm(2 * g, {g, g, g});
      for (const auto& y : enum_ypol(g)) {
        CHECK(check_admissible(y).ok);
        CHECK(std::find(adm.begin(), adm.end(), y) != adm.end());
        CHECK(y.delta[1] == g);
      }
    }
  }

  TEST_CASE("oracle class counts") {
    CHECK(iso_classes_oracle(1, {1, 1, 1}).size() == 1);
    const auto classes = iso_classes_oracle(2, {1, 1, 1});
    CHECK(classes.size() == 4);
    std::set<StrataPoint> images;
    for (const auto& k : classes) images.insert(phi(k.representative, 2));
    CHECK(images.size() == 4);
    CHECK(iso_classes_oracle(2, {0, 0, 0}).size() == 1);
  }
}
