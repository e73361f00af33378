#include <functional>
#include <random>

#include "doctest.h"

#include "hodge/poly.hpp"

using namespace hodge;

namespace {

Poly random_poly(std::mt19937_64& rng, const PrimeField& f, int max_degree) {
  std::vector<Elem> c(static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(max_degree + 1) + 1));
  for (auto& x : c) x = static_cast<Elem>(rng() % f.p());
  return Poly(f, c);
}

PolyMatrix random_matrix(std::mt19937_64& rng, const PrimeField& f, std::size_t r, std::size_t c, int degree) {
  PolyMatrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (rng() % 3 != 0) m(i, j) = random_poly(rng, f, degree);
  return m;
}

// Determinant by cofactor expansion along the first row.
Poly cofactor_det(const PolyMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  const PrimeField& f = m.field();
  if (rows.empty()) return Poly::constant(f, 1);
  Poly out(f, {});
  for (std::size_t k = 0; k < cols.size(); ++k) {
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    std::vector<std::size_t> sub_cols = cols;
    sub_cols.erase(sub_cols.begin() + static_cast<std::ptrdiff_t>(k));
    const Poly term = m(rows[0], cols[k]) * cofactor_det(m, sub_rows, sub_cols);
    out = k % 2 == 0 ? out + term : out - term;
  }
  return out;
}

// Largest k with a nonzero k x k minor.
std::size_t minor_rank(const PolyMatrix& m) {
  std::size_t best = 0;
  const std::size_t top = std::min(m.rows(), m.cols());
  for (std::size_t k = 1; k <= top; ++k) {
    bool found = false;
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
    std::function<void(std::size_t)> pick_cols = [&](std::size_t from) {
      if (found) return;
      if (cols.size() == k) {
        if (!cofactor_det(m, rows, cols).is_zero()) found = true;
        return;
      }
      for (std::size_t c = from; c < m.cols(); ++c) {
        cols.push_back(c);
        pick_cols(c + 1);
        cols.pop_back();
      }
    };
    std::function<void(std::size_t)> pick_rows = [&](std::size_t from) {
      if (found) return;
      if (rows.size() == k) return pick_cols(0);
      for (std::size_t r = from; r < m.rows(); ++r) {
        rows.push_back(r);
        pick_rows(r + 1);
        rows.pop_back();
      }
    };
    pick_rows(0);
    if (!found) break;
    best = k;
  }
  return best;
}

}  // namespace

TEST_SUITE("poly") {
  TEST_CASE("polynomial arithmetic") {
    const PrimeField f(3);
    std::mt19937_64 rng(2);
    for (int k = 0; k < 300; ++k) {
      const Poly a = random_poly(rng, f, 4);
      Poly b = random_poly(rng, f, 3);
      if (b.is_zero()) b = Poly::constant(f, 1);
      Poly q(f, {});
      Poly r(f, {});
      divmod(a, b, q, r);
      CHECK(q * b + r == a);
      CHECK(r.degree() < b.degree());
      CHECK(exact_div(a * b, b) == a);
      const Poly g = gcd(a * b, b);
      CHECK(g.lead() == 1);
      Poly q2(f, {});
      Poly r2(f, {});
      divmod(b, g, q2, r2);
      CHECK(r2.is_zero());
    }
  }

  TEST_CASE("generic rank examples") {
    const PrimeField f(2);
    PolyMatrix d(f, 2, 2);
    d(0, 0) = Poly::monomial(f, 1, 1);
    d(1, 1) = Poly::constant(f, 1);
    CHECK(generic_rank(d) == 2);
    CHECK(rank(f, d.special_fiber()) == 1);
    CHECK(generic_rank(PolyMatrix(f, 3, 4)) == 0);
    Matrix c(2, 3);
    c(0, 0) = 1;
    c(1, 0) = 1;
    CHECK(generic_rank(PolyMatrix::constant(f, c)) == 1);
  }

  TEST_CASE("generic rank agrees with nonvanishing minors") {
    std::mt19937_64 rng(9);
    for (Elem p : {2u, 3u})
      for (int k = 0; k < 300; ++k) {
        const PrimeField f(p);
        const PolyMatrix m = random_matrix(rng, f, 1 + rng() % 4, 1 + rng() % 4, 2);
        const std::size_t r = generic_rank(m);
        CHECK(r == minor_rank(m));
        CHECK(r >= rank(f, m.special_fiber()));
      }
  }

  TEST_CASE("kernel, saturation, intersection and preimage") {
    std::mt19937_64 rng(4);
    for (Elem p : {2u, 3u})
      for (int k = 0; k < 150; ++k) {
        const PrimeField f(p);
        const std::size_t n = 2 + rng() % 3;
        const PolyMatrix a = random_matrix(rng, f, 1 + rng() % 3, n, 1);
        const PolyMatrix b = random_matrix(rng, f, 1 + rng() % 3, n, 1);

        const PolyMatrix ker = generic_kernel(a);
        CHECK(ker.rows() + generic_rank(a) == n);
        if (ker.rows() > 0) CHECK(multiply(ker, transpose(a)).is_zero());

        const PolyMatrix sat = saturate(a);
        CHECK(sat.rows() == generic_rank(a));
        CHECK(rank(f, sat.special_fiber()) == sat.rows());
        CHECK(generic_rank(stack(sat, a)) == generic_rank(a));

        const PolyMatrix both = generic_intersect(a, b);
        CHECK(both.rows() == generic_rank(a) + generic_rank(b) - generic_rank(stack(a, b)));
        if (both.rows() > 0) {
          CHECK(generic_rank(stack(a, both)) == generic_rank(a));
          CHECK(generic_rank(stack(b, both)) == generic_rank(b));
        }

        Matrix t(n, n);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) t(i, j) = static_cast<Elem>(rng() % p);
        const PolyMatrix pre = generic_preimage(t, b);
        if (pre.rows() > 0) CHECK(generic_rank(stack(b, apply_rows(t, pre))) == generic_rank(b));
        // dim T^{-1}W = dim ker T + dim(W ∩ im T).
        const PolyMatrix image = PolyMatrix::constant(f, transpose(t));
        CHECK(pre.rows() == n - rank(f, t) + generic_rank(b) + rank(f, t) - generic_rank(stack(b, image)));
      }
  }
}
