#include "hodge/degenerate.hpp"

#include <algorithm>

#include "hodge/isotropic.hpp"
#include "hodge/lift.hpp"
#include "hodge/strat.hpp"

namespace hodge {

namespace {

Subspace kernel_power(const PrimeField& f, const Matrix& t, std::size_t k) {
  return Subspace::span(f, t.cols(), kernel(f, power(f, t, k)));
}

Subspace in_coordinates(const Subspace& coords, const Subspace& frame) {
  if (coords.dim() == 0) return Subspace(frame.field(), frame.ambient_dim());
  return Subspace::span(frame.field(), frame.ambient_dim(), multiply(frame.field(), coords.basis(), frame.basis()));
}

PolyMatrix constant_rows(const Subspace& s) {
  if (s.dim() == 0) return PolyMatrix(s.field(), 0, s.ambient_dim());
  return PolyMatrix::constant(s.field(), s.basis());
}

}  // namespace

Matrix free_module_operator(std::size_t h) {
  Matrix t(3 * h, 3 * h);
  for (std::size_t j = 0; j < h; ++j)
    for (std::size_t s = 0; s < 2; ++s) t(3 * j + s + 1, 3 * j + s) = 1;
  return t;
}

Matrix free_module_pairing(const PrimeField& f, std::size_t g) {
  const Matrix j = standard_symplectic(f, g);
  Matrix out(6 * g, 6 * g);
  for (std::size_t a = 0; a < 2 * g; ++a)
    for (std::size_t b = 0; b < 2 * g; ++b)
      for (std::size_t s = 0; s < 3; ++s) out(3 * a + s, 3 * b + 2 - s) = j(a, b);
  return out;
}

EmbeddedFlag embed_normal_form(const StrataPoint& y, PrimeField field) {
  const PRDatum datum = normal_form(y, field);
  const auto h = static_cast<std::size_t>(y.h);
  const JordanType type = JordanType::from_delta(3, y.h, {y.delta.begin(), y.delta.end()});
  Matrix embed(datum.module.dim(), 3 * h);
  std::size_t offset = 0;
  std::size_t block = 0;
  for (int a : type.parts()) {
    for (int k = 0; k < a; ++k) embed(offset + static_cast<std::size_t>(k), 3 * block + 2 - static_cast<std::size_t>(k)) = 1;
    offset += static_cast<std::size_t>(a);
    ++block;
  }
  auto push = [&](const Subspace& s) {
    if (s.dim() == 0) return Subspace(field, 3 * h);
    return Subspace::span(field, 3 * h, multiply(field, s.basis(), embed));
  };
  return EmbeddedFlag{h, push(datum.flag[1]), push(datum.flag[2]), push(datum.flag[3])};
}

StrataPoint flag_invariants(const EmbeddedFlag& flag) {
  const PrimeField& f = flag.omega.field();
  const Matrix t = free_module_operator(flag.h);
  const int d1 = static_cast<int>(flag.omega1.dim());
  const int d2 = static_cast<int>(flag.omega2.dim()) - d1;
  const int d3 = static_cast<int>(flag.omega.dim() - flag.omega2.dim());
  const int k1 = static_cast<int>(intersect(flag.omega, kernel_power(f, t, 1)).dim());
  const int k2 = static_cast<int>(intersect(flag.omega, kernel_power(f, t, 2)).dim());
  const int total = d1 + d2 + d3;
  const int a1 = static_cast<int>(intersect(flag.omega2, kernel_power(f, t, 1)).dim());
  const int b1 = static_cast<int>(intersect(flag.omega, preimage(t, flag.omega1)).dim()) - d1;
  return StrataPoint{static_cast<int>(flag.h), {d1, d2, d3}, {k1, k2 - k1, total - k2}, {a1, d1 + d2 - a1}, {b1, total - d1 - b1}};
}

std::optional<EmbeddedFlag> polarized_normal_form(const StrataPoint& y, PrimeField field) {
  if (auto c = check_polarized(y); !c) throw InadmissiblePoint(c.failed);
  const auto g = static_cast<std::size_t>(y.mu[0]);
  const std::size_t h = 2 * g;
  const std::size_t n = 3 * h;
  const Matrix t = free_module_operator(h);
  const Matrix t2 = power(field, t, 2);
  const Matrix form = free_module_pairing(field, g);
  auto isotropic = [&](const Subspace& s) { return s.dim() == 0 || is_totally_isotropic(PolyMatrix::constant(field, s.basis()), form); };

  std::optional<EmbeddedFlag> found;
  for_each_subspace(field, n, 3 * g, [&](const Subspace& omega) {
    if (!omega.contains(image(t, omega)) || !isotropic(omega)) return true;
    const Subspace t_omega = image(t, omega);
    for_each_subspace(field, omega.dim(), 2 * g, [&](const Subspace& c2) {
      const Subspace omega2 = in_coordinates(c2, omega);
      if (!omega2.contains(t_omega) || !(orthogonal(omega2, form) == preimage(t, omega2))) return true;
      const Subspace t_omega2 = image(t, omega2);
      for_each_subspace(field, omega2.dim(), g, [&](const Subspace& c1) {
        const Subspace omega1 = in_coordinates(c1, omega2);
        if (!omega1.contains(t_omega2) || !(orthogonal(omega1, form) == preimage(t2, omega1))) return true;
        EmbeddedFlag candidate{h, omega1, omega2, omega};
        if (flag_invariants(candidate) == y) found = candidate;
        return !found;
      });
      return !found;
    });
    return !found;
  });
  return found;
}

StrataPoint generic_invariants(const LiftedFlag& flag, std::size_t h, const std::array<int, 3>& mu) {
  const PrimeField& f = flag.omega.field();
  const Matrix t = free_module_operator(h);
  auto r = [](const PolyMatrix& m) { return static_cast<int>(generic_rank(m)); };
  auto kernel_rows = [&](std::size_t k) { return PolyMatrix::constant(f, kernel(f, power(f, t, k))); };
  auto inside = [&](const PolyMatrix& small, const PolyMatrix& big) { return r(stack(big, small)) == r(big); };

  const int d1 = r(flag.omega1);
  const int d12 = r(flag.omega2);
  const int total = r(flag.omega);
  if (d1 != mu[0] || d12 != mu[0] + mu[1] || total != mu[0] + mu[1] + mu[2]) {
    throw std::logic_error("generic_invariants: ranks differ from the type");
  }
  if (!inside(flag.omega1, flag.omega2) || !inside(flag.omega2, flag.omega)) throw std::logic_error("generic_invariants: flag not nested");
  if (r(apply_rows(t, flag.omega1)) != 0 || !inside(apply_rows(t, flag.omega2), flag.omega1) ||
      !inside(apply_rows(t, flag.omega), flag.omega2)) {
    throw std::logic_error("generic_invariants: T does not lower the filtration");
  }
  const int k1 = static_cast<int>(generic_intersection_dim(flag.omega, kernel_rows(1)));
  const int k2 = static_cast<int>(generic_intersection_dim(flag.omega, kernel_rows(2)));
  const int a1 = static_cast<int>(generic_intersection_dim(flag.omega2, kernel_rows(1)));
  // dim(ω ∩ T^{-1}ω_1) = dim ω - dim((Tω + ω_1)/ω_1).
  const int pre = total - (r(stack(apply_rows(t, flag.omega), flag.omega1)) - d1);
  const int b1 = pre - d1;
  return StrataPoint{static_cast<int>(h), mu, {k1, k2 - k1, total - k2}, {a1, d12 - a1}, {b1, total - d1 - b1}};
}

void check_degeneration_inequalities(const StrataPoint& from, const StrataPoint& to) {
  const int d1 = from.mu[0];
  const auto& x = to.delta;
  const auto& xp = from.delta;
  if (!(x[0] + to.alpha[1] <= std::min(xp[0] + to.alpha[1], from.beta[0] + d1))) {
    throw InequalityFailure("δ1 + α2 <= min(δ1' + α2, β1' + d1) fails");
  }
  if (!(to.beta[0] + d1 <= from.beta[0] + d1)) throw InequalityFailure("β1 + d1 <= β1' + d1 fails");
  if (!(x[0] + x[1] <= std::min(xp[0] + xp[1], to.alpha[0] + from.beta[0]))) {
    throw InequalityFailure("δ1 + δ2 <= min(δ1' + δ2', α1 + β1') fails");
  }
}

DegenerationResult degenerate_step(const StrataPoint& from, const StrataPoint& to, PrimeField field, bool polarized) {
  const auto check = polarized ? check_polarized : check_admissible;
  if (auto c = check(from); !c) throw InadmissiblePoint(c.failed);
  if (auto c = check(to); !c) throw InadmissiblePoint(c.failed);
  if (!leq(to, from)) throw OrderViolation("degenerate_step: target " + to.label() + " is not below " + from.label());

  std::optional<EmbeddedFlag> special;
  if (polarized) special = polarized_normal_form(from, field);
  else special = embed_normal_form(from, field);
  if (!special) throw std::logic_error("degenerate_step: no polarized normal form for " + from.label());
  if (!(flag_invariants(*special) == from)) throw std::logic_error("degenerate_step: special flag has wrong invariants");

  const std::size_t h = special->h;
  const std::size_t n = 3 * h;
  const Matrix t = free_module_operator(h);
  const PolyMatrix ker_t = PolyMatrix::constant(field, kernel(field, t));
  const PolyMatrix ker_t2 = PolyMatrix::constant(field, kernel(field, power(field, t, 2)));
  const auto [d1, d2, d3] = to.mu;
  std::optional<Matrix> form;
  if (polarized) form = free_module_pairing(field, static_cast<std::size_t>(to.mu[0]));

  // Step 1: ω_1 stays constant.
  const PolyMatrix omega1 = constant_rows(special->omega1);
  const Subspace pre1 = preimage(t, special->omega1);
  const PolyMatrix pre1_rows = constant_rows(pre1);

  check_degeneration_inequalities(from, to);

  // Step 2: ω_1 ⊆ M[T] ⊆ T^{-1}ω_1 with generic dims (d1, α1, d1 + d2).
  LiftProblem second{field, n, {omega1, ker_t, pre1_rows}, special->omega2, {d1, to.alpha[0], d1 + d2}};
  constexpr int kVariants = 48;
  std::string last_error = "no variant tried";
  for (int variant = 0; variant < kVariants; ++variant) {
    LiftOptions options2;
    if (variant % 2 == 0) options2.prefer = special->omega;
    if (variant >= 2) options2.seed = static_cast<std::uint64_t>(variant);
    const PolyMatrix omega2 = lift_subspace(second, options2);

    const PolyMatrix f_rows = saturate(stack(ker_t, omega2));
    const PolyMatrix pre2 = generic_preimage(t, omega2);
    const PolyMatrix g_rows = generic_intersect(ker_t2, pre2);
    LiftProblem third{field,
                      n,
                      {omega2, f_rows, pre1_rows, g_rows, pre2},
                      special->omega,
                      {d1 + d2, to.delta[0] + to.alpha[1], to.beta[0] + d1, to.delta[0] + to.delta[1], d1 + d2 + d3}};
    const auto reached = third.special_dims();
    try {
      check_lift_feasible(third);
    } catch (const LiftInfeasible& e) {
      last_error = e.what();
      continue;
    }
    // Step 3 itself may need a few seeds in the polarized case.
    for (int inner = 0; inner < (polarized ? 16 : 1); ++inner) {
      LiftOptions options3;
      if (inner > 0) options3.seed = static_cast<std::uint64_t>(1000 + inner);
      const PolyMatrix omega = lift_subspace(third, options3);
      if (form && !is_totally_isotropic(omega, *form)) {
        last_error = "lifted ω is not totally isotropic";
        continue;
      }
      LiftedFlag lifted{omega1, omega2, omega};
      const StrataPoint generic = generic_invariants(lifted, h, to.mu);
      if (!(generic == to)) {
        last_error = "generic invariants " + generic.label() + " differ from target";
        continue;
      }
      return DegenerationResult{*special, lifted, generic, {reached[1], reached[3]}, variant};
    }
  }
  throw std::logic_error("degenerate_step: " + from.label() + " -> " + to.label() + " failed: " + last_error);
}

}  // namespace hodge
