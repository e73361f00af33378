#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

#include "hodge/e3.hpp"
#include "hodge/poly.hpp"

namespace hodge {

/// The free k[T]/T^3-module of rank h: coordinate 3j + s holds T^s E_j.
Matrix free_module_operator(std::size_t h);
/// Pairing on the free module of rank 2g: coefficient of T^2 in the
/// k[T]/T^3-bilinear extension of the standard alternating form.
Matrix free_module_pairing(const PrimeField& f, std::size_t g);

/// A PR flag ω_1 ⊆ ω_2 ⊆ ω inside the free module of rank h.
struct EmbeddedFlag {
  std::size_t h = 0;
  Subspace omega1;
  Subspace omega2;
  Subspace omega;
};

/// normal_form(y) placed in the free module: block vector b_k ↦ T^{2-k} E_j.
EmbeddedFlag embed_normal_form(const StrataPoint& y, PrimeField field);
/// Exhaustive search for a flag with ω Lagrangian, ω_1^⊥ = T^{-2}ω_1,
/// ω_2^⊥ = T^{-1}ω_2 and invariants y. Empty when none exists.
std::optional<EmbeddedFlag> polarized_normal_form(const StrataPoint& y, PrimeField field);

/// Invariants of a constant flag.
StrataPoint flag_invariants(const EmbeddedFlag& flag);

struct LiftedFlag {
  PolyMatrix omega1;
  PolyMatrix omega2;
  PolyMatrix omega;
};

/// Invariants over F_p(X) from generic ranks; throws std::logic_error if
/// the lifted flag is not a PR flag generically.
StrataPoint generic_invariants(const LiftedFlag& flag, std::size_t h, const std::array<int, 3>& mu);

class OrderViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InequalityFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Checks the three inequalities needed before the last lift:
///   δ1 + α2 <= min(δ1' + α2, β1' + d1)
///   β1 + d1 <= β1' + d1
///   δ1 + δ2 <= min(δ1' + δ2', α1 + β1')
/// with (δ', α', β') from `from` and (δ, α, β) from `to`.
void check_degeneration_inequalities(const StrataPoint& from, const StrataPoint& to);

struct DegenerationResult {
  EmbeddedFlag special;
  LiftedFlag lifted;
  StrataPoint generic;
  /// dim(ω̄ ∩ ℱ̄) and dim(ω̄ ∩ 𝒢̄) reached by the chosen lift of ω_2.
  std::array<int, 2> reductions{};
  int variant = 0;
};

/// Lifts the normal form of `from` over F_p[X] so that the generic fiber has
/// invariants `to`. Requires to <= from; polarized mode also requires Y^pol
/// points and keeps ω totally isotropic.
DegenerationResult degenerate_step(const StrataPoint& from, const StrataPoint& to, PrimeField field,
                                   bool polarized = false);

}  // namespace hodge
