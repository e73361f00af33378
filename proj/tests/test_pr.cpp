#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"

#include "hodge/pr.hpp"

using namespace hodge;

namespace {

Vector unit(std::size_t n, std::size_t i) {
  Vector v(n, 0);
  v[i] = 1;
  return v;
}

Subspace span_units(const PrimeField& f, std::size_t n, std::initializer_list<std::size_t> idx) {
  std::vector<Vector> rows;
  for (auto i : idx) rows.push_back(unit(n, i));
  return Subspace::span(f, n, rows);
}

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

// Compositions of n into e non-negative parts.
std::vector<std::vector<int>> compositions(int n, int e) {
  if (e == 1) return {{n}};
  std::vector<std::vector<int>> out;
  for (int first = n; first >= 0; --first)
    for (auto rest : compositions(n - first, e - 1)) {
      rest.insert(rest.begin(), first);
      out.push_back(rest);
    }
  return out;
}

// min over k of δ_{j+1} + ... + δ_{j+k} + d_{k+1} + ... + d_i.
int alpha_oracle(const std::vector<int>& delta, const std::vector<int>& d, int i, int j) {
  int best = 1 << 30;
  for (int k = 0; k <= i; ++k) {
    int v = 0;
    for (int s = j + 1; s <= std::min<int>(j + k, static_cast<int>(delta.size())); ++s) v += delta[s - 1];
    for (int s = k + 1; s <= i; ++s) v += d[s - 1];
    best = std::min(best, v);
  }
  return best;
}

}  // namespace

TEST_SUITE("pr") {
  TEST_CASE("validate_pr catches wrong dimensions and T-instability") {
    const PrimeField f(2);
    const ConcreteModule j3 = realize(JordanType(3, 1, {3}), f);
    const PRDatum good{j3, {Subspace(f, 3), span_units(f, 3, {0}), span_units(f, 3, {0, 1}), Subspace::full(f, 3)}};
    CHECK(validate_pr(good, {1, 1, 1}).ok);
    const auto wrong_dims = validate_pr(good, {2, 0, 1});
    CHECK_FALSE(wrong_dims.ok);
    CHECK(wrong_dims.level == 1);
    const PRDatum unstable{j3, {Subspace(f, 3), span_units(f, 3, {1}), span_units(f, 3, {0, 1}), Subspace::full(f, 3)}};
    const auto diag = validate_pr(unstable, {1, 1, 1});
    CHECK_FALSE(diag.ok);
    CHECK(diag.level == 1);
  }

  TEST_CASE("pr_exists examples") {
    CHECK(pr_exists(JordanType(3, 1, {3}), {1, 1, 1}));
    CHECK(pr_exists(JordanType(3, 3, {1, 1, 1}), {1, 1, 1}));
    CHECK_FALSE(pr_exists(JordanType(3, 1, {3}), {1, 1, 0}));
    CHECK_FALSE(pr_exists(JordanType(3, 1, {3}), {3, 0, 0}));
  }

  TEST_CASE("pr_construct examples") {
    const PrimeField f(2);
    const ConcreteModule j3 = realize(JordanType(3, 1, {3}), f);
    const PRDatum d = pr_construct(j3, {1, 1, 1});
    CHECK(d.flag[1] == power_image(j3, 2));
    CHECK(d.flag[2] == power_image(j3, 1));
    CHECK(d.flag[3] == j3.whole());

    const ConcreteModule zero_t(f, 3, Matrix(4, 4));
    const PRDatum z = pr_construct(zero_t, {2, 1, 1});
    CHECK(validate_pr(z, {2, 1, 1}).ok);
    for (int i = 1; i <= 3; ++i) {
      CHECK(static_cast<int>(z.flag[static_cast<std::size_t>(i)].dim()) == std::vector<int>{2, 3, 4}[static_cast<std::size_t>(i - 1)]);
      CHECK(intersect(z.flag[static_cast<std::size_t>(i)], power_image(zero_t, 1)).dim() == 0);
    }

    const ConcreteModule m = realize(JordanType(3, 2, {3, 1}), f);
    const PRDatum c = pr_construct(m, {2, 1, 1});
    CHECK(intersect(c.flag[1], power_image(m, 1)).dim() == 1);
    CHECK_THROWS_AS(pr_construct(j3, {3, 0, 0}), PRInfeasible);
    try {
      pr_construct(j3, {3, 0, 0});
    } catch (const PRInfeasible& e) {
      CHECK(e.witness() == 1);
    }
  }

  TEST_CASE("pr_permute") {
    const PrimeField f(2);
    const ConcreteModule j3 = realize(JordanType(3, 1, {3}), f);
    const PRDatum d = pr_construct(j3, {1, 1, 1});
    const PRDatum s = pr_permute(d, 1);
    for (std::size_t i = 0; i < 4; ++i) CHECK(s.flag[i] == d.flag[i]);

    const ConcreteModule zero_t(f, 3, Matrix(3, 3));
    const PRDatum z = pr_construct(zero_t, {2, 1, 0});
    const PRDatum once = pr_permute(z, 1);
    CHECK(once.type() == PRType{1, 2, 0});
    CHECK(validate_pr(once, {1, 2, 0}).ok);
    CHECK(validate_pr(pr_permute(once, 1), {2, 1, 0}).ok);
  }

  TEST_CASE("subspace_in_flag examples") {
    const PrimeField f(2);
    const Subspace e1 = span_units(f, 3, {0});
    const Flag chain({Subspace(f, 3), e1, Subspace::full(f, 3)});
    const std::vector<std::size_t> targets{0, 1, 1};
    CHECK(subspace_in_flag(chain, Subspace(f, 3), 1, targets) == e1);
    const Flag trivial({Subspace(f, 3), Subspace::full(f, 3)});
    const std::vector<std::size_t> two{0, 2};
    CHECK(subspace_in_flag(trivial, Subspace(f, 3), 2, two).dim() == 2);
    const Subspace floor = span_units(f, 3, {1});
    const std::vector<std::size_t> own{0, 0, 1};
    CHECK(subspace_in_flag(chain, floor, 1, own) == floor);
  }

  TEST_CASE("oracle agrees with the criterion, constructions validate, types permute") {
    const PrimeField f(2);
    for (int e = 1; e <= 3; ++e)
      for (int dim = 1; dim <= 4; ++dim)
        for (const auto& parts : partitions(dim, e)) {
          const JordanType j(e, std::max<int>(static_cast<int>(parts.size()), dim), parts);
          const ConcreteModule m = realize(j, f);
          for (const auto& mu : compositions(dim, e)) {
            const bool exists = pr_exists(j, mu);
            CHECK(exists == pr_oracle_exists(m, mu));
            auto sorted = mu;
            std::sort(sorted.rbegin(), sorted.rend());
            CHECK(exists == pr_exists(j, sorted));
            if (!exists) continue;
            const PRDatum d = pr_construct(m, mu);
            CHECK(validate_pr(d, mu).ok);
            for (int i = 1; i + 1 <= e; ++i) {
              auto swapped = mu;
              std::swap(swapped[static_cast<std::size_t>(i - 1)], swapped[static_cast<std::size_t>(i)]);
              CHECK(validate_pr(pr_permute(d, i), swapped).ok);
            }
            if (mu != sorted) continue;
            for (int i = 1; i <= e; ++i)
              for (int p = 0; p <= e; ++p) {
                CHECK(static_cast<int>(intersect(d.flag[static_cast<std::size_t>(i)], power_image(m, p)).dim()) ==
                      alpha_oracle(j.delta(), mu, i, p));
              }
          }
        }
    CHECK_FALSE(pr_oracle_exists(realize(JordanType(3, 1, {3}), f), {1, 1, 0}));
  }

  TEST_CASE("Hdgfilt examples") {
    const PrimeField f(2);
    const ConcreteModule m = realize(JordanType(3, 2, {3, 1}), f);
    for (int i = 0; i <= 3; ++i) {
      const Subspace n = torsion_flag(m, i);
      if (n.contains(power_image(m, 3 - i))) CHECK(check_hdg_filt(m, n, i, 2));
    }
    CHECK(check_hdg_filt(m, m.zero(), 0, 2));
    CHECK_THROWS_AS(check_hdg_filt(m, m.zero(), 1, 2), std::invalid_argument);
  }
}
