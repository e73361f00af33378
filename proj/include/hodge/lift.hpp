#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hodge/poly.hpp"
#include "hodge/subspace.hpp"

namespace hodge {

/// Direct summands M_1 ⊆ ... ⊆ M_l of R^n (each given by spanning rows), a
/// special subspace L̄ ⊆ M̄_l and target generic dimensions d'_i for L ∩ M_i.
struct LiftProblem {
  PrimeField field;
  std::size_t ambient = 0;
  std::vector<PolyMatrix> flag;
  Subspace special;
  std::vector<int> targets;

  static LiftProblem constant(const Flag& flag, const Subspace& special, std::vector<int> targets);

  /// h_i, the ranks of the flag members.
  std::vector<int> ranks() const;
  /// d_i = dim(L̄ ∩ M̄_i).
  std::vector<int> special_dims() const;
};

class LiftInfeasible : public std::invalid_argument {
 public:
  LiftInfeasible(const std::string& inequality, std::size_t index)
      : std::invalid_argument("lift infeasible: " + inequality + " fails at i = " + std::to_string(index)),
        inequality_(inequality),
        index_(index) {}
  /// One of "d'_l = d_l", "d'_i - d'_{i-1} >= 0", "d'_i - d'_{i-1} <= h_i - h_{i-1}", "d'_i <= d_i".
  const std::string& inequality() const { return inequality_; }
  std::size_t index() const { return index_; }

 private:
  std::string inequality_;
  std::size_t index_;
};

struct LiftOptions {
  /// Free directions are drawn from this subspace first when possible.
  std::optional<Subspace> prefer;
  /// When set, the adapted bases are randomized with this seed.
  std::optional<std::uint64_t> seed;
};

/// Throws LiftInfeasible naming the first violated inequality.
void check_lift_feasible(const LiftProblem& problem);

/// Rows of a basis of a direct summand L ⊆ R^n with L(0) = L̄ and
/// dim_{F_p(X)}(L ∩ M_i) = d'_i.
PolyMatrix lift_subspace(const LiftProblem& problem, const LiftOptions& options = {});

struct LiftReport {
  bool special_fiber = false;
  bool direct_summand = false;
  bool generic_dims = false;
  std::vector<int> dims;  // measured generic dims of L ∩ M_i
  std::string message;

  bool ok() const { return special_fiber && direct_summand && generic_dims; }
};

/// Independent check of the three lift conditions; generic dims come from
/// generic_rank(L) + generic_rank(M_i) - generic_rank([L; M_i]).
LiftReport verify_lift(const LiftProblem& problem, const PolyMatrix& lift);

/// dim over F_p(X) of the intersection of two row modules.
std::size_t generic_intersection_dim(const PolyMatrix& a, const PolyMatrix& b);

}  // namespace hodge
