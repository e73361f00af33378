#include "hodge/e3.hpp"

#include <algorithm>
#include <sstream>

namespace hodge {

std::string StrataPoint::label() const {
  std::ostringstream os;
  os << "(" << delta[0] << "," << delta[1] << "," << delta[2] << "|" << alpha[0] << "," << alpha[1] << "|" << beta[0]
     << "," << beta[1] << ")";
  return os.str();
}

MembershipCheck check_in_y(const StrataPoint& y) {
  auto fail = [](std::string why) { return MembershipCheck{false, std::move(why)}; };
  const auto [d1, d2, d3] = y.mu;
  if (y.h < 0) return fail("h >= 0");
  if (!(d1 >= d2 && d2 >= d3 && d3 >= 0 && d1 <= y.h)) return fail("h >= d1 >= d2 >= d3 >= 0");
  if (!(y.delta[0] >= y.delta[1] && y.delta[1] >= y.delta[2] && y.delta[2] >= 0 && y.delta[0] <= y.h)) {
    return fail("P1 in 𝒫_3 (h >= δ1 >= δ2 >= δ3 >= 0)");
  }
  if (!(y.alpha[0] >= y.alpha[1] && y.alpha[1] >= 0 && y.alpha[0] <= y.h)) return fail("P2 in 𝒫_2 (h >= α1 >= α2 >= 0)");
  if (!(y.beta[0] >= y.beta[1] && y.beta[1] >= 0 && y.beta[0] <= y.h)) return fail("P3 in 𝒫_2 (h >= β1 >= β2 >= 0)");
  if (y.delta[0] + y.delta[1] + y.delta[2] != d1 + d2 + d3) return fail("mass of P1 = d1+d2+d3");
  if (y.alpha[0] + y.alpha[1] != d1 + d2) return fail("mass of P2 = d1+d2");
  if (y.beta[0] + y.beta[1] != d2 + d3) return fail("mass of P3 = d2+d3");
  const int h = y.h;
  if (!dominates(y.p1(), star(y.p2(), Polygon(h, {d3})))) return fail("P1 >= P2 ⋆ P(d3)");
  if (!dominates(y.p1(), star(y.p3(), Polygon(h, {d1})))) return fail("P1 >= P3 ⋆ P(d1)");
  if (!dominates(y.p2(), Polygon(h, {d1, d2}))) return fail("P2 >= P(d1,d2)");
  if (!dominates(y.p3(), Polygon(h, {d2, d3}))) return fail("P3 >= P(d2,d3)");
  return {};
}

MembershipCheck check_admissible(const StrataPoint& y) {
  if (auto c = check_in_y(y); !c) return c;
  if (y.delta[0] + std::max(y.mu[1], y.delta[1]) > y.alpha[0] + y.beta[0]) {
    return {false, "δ1 + max(d2, δ2) <= α1 + β1"};
  }
  return {};
}

MembershipCheck check_polarized(const StrataPoint& y) {
  if (auto c = check_admissible(y); !c) return c;
  const int g = y.mu[0];
  if (y.h != 2 * g || y.mu[1] != g || y.mu[2] != g) return {false, "h = 2g and μ = (g,g,g)"};
  const int r = y.delta[0];
  if (!(g <= r && r <= 2 * g && y.delta[1] == g && y.delta[2] == 2 * g - r)) return {false, "P1 = P(r, g, 2g-r)"};
  return {};
}

std::vector<StrataPoint> enum_y(int h, const std::array<int, 3>& mu) {
  if (!(mu[0] >= mu[1] && mu[1] >= mu[2] && mu[2] >= 0 && mu[0] <= h)) {
    throw std::invalid_argument("enum_y: μ must be sorted with entries in [0,h]");
  }
  const int total = mu[0] + mu[1] + mu[2];
  const int a_total = mu[0] + mu[1];
  const int b_total = mu[1] + mu[2];
  std::vector<StrataPoint> out;
  for (int x1 = 0; x1 <= h; ++x1)
    for (int x2 = 0; x2 <= x1; ++x2) {
      const int x3 = total - x1 - x2;
      if (x3 < 0 || x3 > x2) continue;
      for (int a1 = 0; a1 <= h; ++a1) {
        const int a2 = a_total - a1;
        if (a2 < 0 || a2 > a1) continue;
        for (int b1 = 0; b1 <= h; ++b1) {
          const int b2 = b_total - b1;
          if (b2 < 0 || b2 > b1) continue;
          StrataPoint y{h, mu, {x1, x2, x3}, {a1, a2}, {b1, b2}};
          if (check_in_y(y)) out.push_back(y);
        }
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<StrataPoint> enum_yadm(int h, const std::array<int, 3>& mu) {
  auto all = enum_y(h, mu);
  std::erase_if(all, [](const StrataPoint& y) { return !check_admissible(y); });
  return all;
}

std::vector<StrataPoint> enum_ypol(int g) {
  if (g < 0) throw std::invalid_argument("enum_ypol: g must be non-negative");
  auto all = enum_yadm(2 * g, {g, g, g});
  std::erase_if(all, [](const StrataPoint& y) { return !check_polarized(y); });
  return all;
}

StrataPoint phi(const PRDatum& datum, int h) {
  const auto& m = datum.module;
  if (m.e() != 3) throw std::invalid_argument("phi: module must be a k[T]/T^3-module");
  const PRType mu = datum.type();
  if (auto diag = validate_pr(datum, mu); !diag) throw std::invalid_argument("phi: invalid datum: " + diag.message);

  const auto delta = delta_vector(m);
  const auto alpha = submodule_delta(m, datum.flag[2], 2);
  const auto beta = quotient_delta(m, datum.flag[1], 2);
  return StrataPoint{h,
                     {mu[0], mu[1], mu[2]},
                     {delta[0], delta[1], delta[2]},
                     {alpha[0], alpha[1]},
                     {beta[0], beta[1]}};
}

PRDatum normal_form(const StrataPoint& y, PrimeField field) {
  if (auto c = check_admissible(y); !c) throw InadmissiblePoint(c.failed);
  const auto [d1, d2, d3] = y.mu;
  const auto [x1, x2, x3] = y.delta;
  const ConcreteModule m = realize(JordanType::from_delta(3, y.h, {x1, x2, x3}), field);
  const Subspace ker_t = torsion_flag(m, 1);
  const Subspace tm = power_image(m, 1);
  const Subspace t2m = power_image(m, 2);
  auto sz = [](int v) { return static_cast<std::size_t>(v); };

  // T^2 M ⊆ M_1 ⊆ M[T] with dim(M_1 ∩ TM) = β1 + d1 - δ1.
  const std::vector<std::size_t> t1{sz(x3), sz(y.beta[0] + d1 - x1), sz(d1)};
  const Subspace m1 = subspace_in_flag(Flag({t2m, intersect(tm, ker_t), ker_t}), t2m, sz(d1), t1);

  // TM + M_1 ⊆ M_2 ⊆ T^{-1} M_1 with dim(M_2 ∩ M[T]) = α1.
  const Subspace container = preimage(m.t(), m1);
  const std::vector<std::size_t> t2{sz(y.alpha[0]), sz(d1 + d2)};
  const Subspace m2 = subspace_in_flag(Flag({intersect(ker_t, container), container}), sum(tm, m1), sz(d1 + d2), t2);

  PRDatum datum{m, {m.zero(), m1, m2, m.whole()}};
  if (!(phi(datum, y.h) == y)) throw std::logic_error("normal_form: constructed datum maps to " + phi(datum, y.h).label());
  (void)d3;
  return datum;
}

}  // namespace hodge
