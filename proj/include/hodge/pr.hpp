#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hodge/subspace.hpp"
#include "hodge/tmodule.hpp"

namespace hodge {

/// Graded dimensions μ = (d_1, ..., d_e) of a filtration.
using PRType = std::vector<int>;

/// Filtration 0 = M_0 ⊆ M_1 ⊆ ... ⊆ M_e = M with T·M_i ⊆ M_{i-1}.
struct PRDatum {
  ConcreteModule module;
  std::vector<Subspace> flag;  // flag[0] = 0, flag[e] = M

  PRType type() const;
};

struct PRDiagnostics {
  bool ok = true;
  int level = -1;  // first offending index, -1 when ok
  std::string message;

  explicit operator bool() const { return ok; }
};

PRDiagnostics validate_pr(const PRDatum& datum, const PRType& mu);

/// Hdg(J) ≥ P(μ) together with Σ d_i = dim; false on any size mismatch.
bool pr_exists(const JordanType& j, const PRType& mu);

class PRInfeasible : public std::invalid_argument {
 public:
  PRInfeasible(const std::string& what, int witness) : std::invalid_argument(what), witness_(witness) {}
  /// Smallest i with d_1 + ... + d_i > δ_1 + ... + δ_i, or 0 for a mass mismatch.
  int witness() const { return witness_; }

 private:
  int witness_;
};

/// Expected dim(M_i ∩ T^j M) for the greedy construction with sorted μ:
/// min over k of δ_{j+1} + ... + δ_{j+k} + d_{k+1} + ... + d_i.
int pr_alpha(const std::vector<int>& delta, const PRType& sorted_mu, int i, int j);

PRDatum pr_construct(const ConcreteModule& m, const PRType& mu);

/// Swaps d_i and d_{i+1} (1-based i in [1, e-1]); only M_i changes.
PRDatum pr_permute(const PRDatum& datum, int i);

class InfeasibleTargets : public std::invalid_argument {
 public:
  InfeasibleTargets(const std::string& bound, std::size_t index)
      : std::invalid_argument("infeasible intersection targets: " + bound + " at index " + std::to_string(index)),
        bound_(bound),
        index_(index) {}
  const std::string& bound() const { return bound_; }
  std::size_t index() const { return index_; }

 private:
  std::string bound_;
  std::size_t index_;
};

/// Finds S with floor ⊆ S ⊆ flag.back(), dim S = target_dim and
/// dim(S ∩ flag[j]) = targets[j]. Vectors are added level by level starting
/// from the deepest member, each one independent modulo S + flag[j-1].
Subspace subspace_in_flag(const Flag& flag, const Subspace& floor, std::size_t target_dim,
                          std::span<const std::size_t> targets);

/// Exhaustive depth-first search for a PR datum of type μ.
bool pr_oracle_exists(const ConcreteModule& m, const PRType& mu, std::uint64_t cap = enumeration_cap());

/// Hdg(M) ≥ Hdg(N) ⋆ Hdg(M/N) for N T-stable with T^i N = 0 and
/// T^{e-i} M ⊆ N. Throws when the preconditions fail.
bool check_hdg_filt(const ConcreteModule& m, const Subspace& n, int i, int h);

}  // namespace hodge
