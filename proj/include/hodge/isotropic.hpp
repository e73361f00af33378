#pragma once

#include <vector>

#include "hodge/lift.hpp"

namespace hodge {

/// Gram matrix of the standard alternating form on F_p^{2g}:
/// <x, y> = Σ_i x_i y_{g+i} - x_{g+i} y_i.
Matrix standard_symplectic(const PrimeField& f, std::size_t g);

/// rows · form · rowsᵀ over F_p[X].
PolyMatrix gram(const PolyMatrix& rows, const Matrix& form);
bool is_totally_isotropic(const PolyMatrix& rows, const Matrix& form);

/// { v : <v, s> = 0 for all s in S }.
Subspace orthogonal(const Subspace& s, const Matrix& form);

/// Symplectic basis (p_1..p_g, q_1..q_g), <p_a, q_b> = δ_ab, with L̄ = span(p)
/// and every flag member spanned by a subset of the basis. The flag must
/// satisfy M_i^⊥ = M_{l-i}.
struct SymplecticBasis {
  std::vector<Vector> p;
  std::vector<Vector> q;
};
SymplecticBasis adapted_symplectic_basis(const Flag& flag, const Subspace& lagrangian, const Matrix& form);

/// Checks the polarized hypotheses (perfect form, M_i^⊥ = M_{l-i}, L̄
/// Lagrangian) and the lift inequalities including d'_{l-i} = g - h_i + d'_i.
void check_isotropic_feasible(const LiftProblem& problem, const Matrix& form);

/// Totally isotropic lift of the form f_a = p_a + X Σ_b S_ab q_b with S
/// symmetric over F_p, sparsest S first. The flag must be constant.
PolyMatrix lift_isotropic(const LiftProblem& problem, const Matrix& form);

}  // namespace hodge
