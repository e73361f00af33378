#include "doctest.h"

#include "hodge/degenerate.hpp"
#include "hodge/isotropic.hpp"
#include "hodge/strat.hpp"

using namespace hodge;

TEST_SUITE("degenerate") {
  TEST_CASE("free module operator and pairing") {
    const PrimeField f(3);
    for (std::size_t g = 1; g <= 2; ++g) {
      const Matrix t = free_module_operator(2 * g);
      const Matrix form = free_module_pairing(f, g);
      CHECK(power(f, t, 3).is_zero());
      CHECK(rank(f, t) == 4 * g);
      CHECK(rank(f, form) == 6 * g);
      // Alternating and T self-adjoint.
      for (std::size_t i = 0; i < 6 * g; ++i)
        for (std::size_t j = 0; j < 6 * g; ++j) CHECK(form(i, j) == f.neg(form(j, i)));
      CHECK(multiply(f, transpose(t), form) == multiply(f, form, t));
    }
  }

  TEST_CASE("embedded normal forms keep their invariants") {
    for (int h = 1; h <= 3; ++h)
      for (int a = 0; a <= h; ++a)
        for (int b = 0; b <= a; ++b)
          for (int c = 0; c <= b; ++c)
            for (const auto& y : enum_yadm(h, {a, b, c})) CHECK(flag_invariants(embed_normal_form(y, PrimeField(2))) == y);
  }

  TEST_CASE("trivial degeneration is the constant lift") {
    for (const auto& y : enum_yadm(2, {2, 1, 0})) {
      const DegenerationResult r = degenerate_step(y, y, PrimeField(2));
      CHECK(r.generic == y);
      CHECK(r.lifted.omega.degree() <= 0);
      CHECK(r.lifted.omega2.degree() <= 0);
    }
  }

  TEST_CASE("h = 2, mu = (1,1,1): top point down to the minimum") {
    const StrataPoint from{2, {1, 1, 1}, {2, 1, 0}, {2, 0}, {2, 0}};
    const StrataPoint to{2, {1, 1, 1}, {1, 1, 1}, {1, 1}, {1, 1}};
    const DegenerationResult r = degenerate_step(from, to, PrimeField(2));
    CHECK(r.generic == to);
    CHECK(generic_invariants(r.lifted, 2, to.mu).delta == std::array{1, 1, 1});
    CHECK(Subspace::span(PrimeField(2), 6, r.lifted.omega.special_fiber()) == r.special.omega);
    CHECK_THROWS_AS(degenerate_step(to, from, PrimeField(2)), OrderViolation);
    CHECK_THROWS_AS(check_degeneration_inequalities(to, from), InequalityFailure);
    CHECK_NOTHROW(check_degeneration_inequalities(from, to));
  }

  TEST_CASE("incomparable points are refused") {
    const StrataPoint left{2, {1, 1, 1}, {2, 1, 0}, {2, 0}, {1, 1}};
    const StrataPoint right{2, {1, 1, 1}, {2, 1, 0}, {1, 1}, {2, 0}};
    CHECK_THROWS_AS(degenerate_step(left, right, PrimeField(2)), OrderViolation);
    CHECK_THROWS_AS(degenerate_step(right, left, PrimeField(3)), OrderViolation);
  }

  TEST_CASE("every covering pair degenerates, over F_2 and F_3") {
    for (Elem p : {2u, 3u})
      for (int h = 1; h <= 3; ++h)
        for (int a = 0; a <= h; ++a)
          for (int b = 0; b <= a; ++b)
            for (int c = 0; c <= b; ++c) {
              const StrataPoset poset = StrataPoset::admissible(h, {a, b, c});
              for (const auto& [lower, upper] : hasse(poset)) {
                const auto& to = poset.points()[lower];
                const auto& from = poset.points()[upper];
                CAPTURE(from.label());
                CAPTURE(to.label());
                CHECK(degenerate_step(from, to, PrimeField(p)).generic == to);
              }
            }
  }

  TEST_CASE("polarized g = 1") {
    const Matrix form = free_module_pairing(PrimeField(2), 1);
    const auto points = enum_ypol(1);
    for (const auto& from : points) {
      const auto special = polarized_normal_form(from, PrimeField(2));
      REQUIRE(special.has_value());
      CHECK(orthogonal(special->omega, form) == special->omega);
      for (const auto& to : points) {
        if (!leq(to, from)) continue;
        const DegenerationResult r = degenerate_step(from, to, PrimeField(2), true);
        CHECK(r.generic == to);
        CHECK(gram(r.lifted.omega, form).is_zero());
      }
    }
  }
}
