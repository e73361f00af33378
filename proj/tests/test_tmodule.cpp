#include <functional>
#include <random>

#include "doctest.h"

#include "hodge/tmodule.hpp"

using namespace hodge;

namespace {

void partitions(int n, int max_part, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (n == 0) return out.push_back(prefix);
  for (int a = std::min(n, max_part); a >= 1; --a) {
    prefix.push_back(a);
    partitions(n - a, a, prefix, out);
    prefix.pop_back();
  }
}

std::vector<std::vector<int>> partitions(int n, int max_part) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  partitions(n, max_part, prefix, out);
  return out;
}

// T' = P T P^{-1} with P a product of elementary matrices I + c E_{ij}.
Matrix conjugate(const PrimeField& f, Matrix t, std::mt19937_64& rng) {
  const std::size_t n = t.rows();
  if (n < 2) return t;
  for (int k = 0; k < 6; ++k) {
    const std::size_t i = rng() % n;
    std::size_t j = rng() % n;
    if (i == j) j = (j + 1) % n;
    const Elem c = static_cast<Elem>(1 + rng() % (f.p() - 1));
    Matrix p = Matrix::identity(n);
    Matrix p_inv = Matrix::identity(n);
    p(i, j) = c;
    p_inv(i, j) = f.neg(c);
    t = multiply(f, multiply(f, p, t), p_inv);
  }
  return t;
}

}  // namespace

TEST_SUITE("tmodule") {
  TEST_CASE("realize and jordan_type examples") {
    const PrimeField f(2);
    const ConcreteModule j3 = realize(JordanType(3, 1, {3}), f);
    CHECK(j3.dim() == 3);
    CHECK(rank(f, j3.t()) == 2);
    CHECK(jordan_type(j3).parts() == std::vector<int>{3});
    CHECK(jordan_type(ConcreteModule(f, 3, Matrix(3, 3))).parts() == std::vector<int>{1, 1, 1});
    Matrix t(3, 3);  // J_2 ⊕ J_1
    t(0, 1) = 1;
    CHECK(jordan_type(ConcreteModule(f, 3, t)).parts() == std::vector<int>{2, 1});
    CHECK(realize(JordanType(3, 2, {}), f).dim() == 0);
  }

  TEST_CASE("torsion flag and delta for J_3 + J_1") {
    const PrimeField f(2);
    const ConcreteModule m = realize(JordanType(3, 2, {3, 1}), f);
    CHECK(torsion_flag(m, 0).dim() == 0);
    CHECK(torsion_flag(m, 1).dim() == 2);
    CHECK(torsion_flag(m, 2).dim() == 3);
    CHECK(torsion_flag(m, 3).dim() == 4);
    CHECK(power_image(m, 3).dim() == 0);
    CHECK(delta_vector(m) == std::vector<int>{2, 1, 1});
  }

  TEST_CASE("Hodge polygon examples") {
    const JordanType j(3, 2, {3, 1});
    const Polygon p = hodge_polygon(j);
    CHECK(p == Polygon(2, {2, 1, 1}));
    const auto s = p.slopes();
    CHECK(s.at(Rational(1, 3)) == 1);
    CHECK(s.at(Rational(1)) == 1);
    CHECK(hodge_polygon(JordanType(3, 2, {3, 3})) == Polygon(2, {2, 2, 2}));
    CHECK(hodge_polygon(JordanType(3, 2, {})) == Polygon(2, {0, 0, 0}));
  }

  TEST_CASE("delta is the conjugate partition and everything agrees after a change of basis") {
    std::mt19937_64 rng(8);
    for (Elem p : {2u, 3u})
      for (int e = 1; e <= 3; ++e)
        for (int dim = 0; dim <= 6; ++dim)
          for (const auto& parts : partitions(dim, e)) {
            const PrimeField f(p);
            const int h = static_cast<int>(parts.size());
            const JordanType j(e, h, parts);
            std::vector<int> conj(static_cast<std::size_t>(e), 0);
            for (int a : parts)
              for (int i = 0; i < a; ++i) ++conj[static_cast<std::size_t>(i)];
            CHECK(j.delta() == conj);
            CHECK(std::is_sorted(conj.rbegin(), conj.rend()));
            CHECK(JordanType::from_delta(e, h, conj) == j);
            const ConcreteModule m(f, e, conjugate(f, realize(j, f).t(), rng));
            CHECK(jordan_type(m, h) == j);
            CHECK(delta_vector(m) == conj);
            // Endpoint mass: e · Hdg(M)(h) = dim M.
            CHECK(hodge_polygon(m, h).eval(h) * e == Rational(dim));
          }
  }

  TEST_CASE("sub and quotient delta") {
    const PrimeField f(2);
    const ConcreteModule m = realize(JordanType(3, 2, {3, 1}), f);
    const Subspace tm = power_image(m, 1);
    CHECK(is_t_stable(m, tm));
    CHECK(submodule_delta(m, tm, 3) == std::vector<int>{1, 1, 0});
    CHECK(quotient_delta(m, tm, 3) == std::vector<int>{2, 0, 0});
  }
}
