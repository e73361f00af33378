#pragma once

#include <vector>

#include "hodge/field.hpp"
#include "hodge/polygon.hpp"
#include "hodge/subspace.hpp"

namespace hodge {

/// Isomorphism class of a k[T]/T^e-module generated by at most h elements:
/// M ≅ ⊕ k[T]/T^{a_i}. Parts are kept sorted non-increasing and padded with
/// zeros to length h.
class JordanType {
 public:
  JordanType(int e, int h, std::vector<int> parts);

  /// Inverse of delta(): parts are the conjugate partition of δ.
  static JordanType from_delta(int e, int h, const std::vector<int>& delta);

  int e() const { return e_; }
  int h() const { return h_; }
  const std::vector<int>& parts() const { return parts_; }
  int dim() const;
  /// δ_i = #{ j : a_j >= i } for i = 1..e.
  std::vector<int> delta() const;

  bool operator==(const JordanType&) const = default;

 private:
  int e_;
  int h_;
  std::vector<int> parts_;
};

/// Finite-dimensional vector space with a nilpotent operator T, T^e = 0.
/// T acts on column vectors and need not be in Jordan form.
class ConcreteModule {
 public:
  ConcreteModule(PrimeField field, int e, Matrix t);

  const PrimeField& field() const { return field_; }
  int e() const { return e_; }
  std::size_t dim() const { return t_.rows(); }
  const Matrix& t() const { return t_; }

  Subspace zero() const { return Subspace::zero(field_, dim()); }
  Subspace whole() const { return Subspace::full(field_, dim()); }

 private:
  PrimeField field_;
  int e_;
  Matrix t_;
};

/// Direct sum of nilpotent Jordan blocks; inside a block b_0..b_{a-1},
/// T b_k = b_{k-1} and T b_0 = 0.
ConcreteModule realize(const JordanType& j, PrimeField field);

/// Recovers parts from the ranks of T^i. With h < 0 the generator bound is
/// the number of nonzero parts.
JordanType jordan_type(const ConcreteModule& m, int h = -1);

/// M[T^i] = ker T^i.
Subspace torsion_flag(const ConcreteModule& m, int i);
/// T^i M.
Subspace power_image(const ConcreteModule& m, int i);
std::vector<int> delta_vector(const ConcreteModule& m);

/// δ of a T-stable subspace S regarded as a k[T]/T^depth-module.
std::vector<int> submodule_delta(const ConcreteModule& m, const Subspace& s, int depth);
/// δ of M/S regarded as a k[T]/T^depth-module; S must be T-stable.
std::vector<int> quotient_delta(const ConcreteModule& m, const Subspace& s, int depth);

bool is_t_stable(const ConcreteModule& m, const Subspace& s);

/// Polygon with slopes a_i/e; cross-checked against P(δ_1, ..., δ_e).
Polygon hodge_polygon(const JordanType& j);
Polygon hodge_polygon(const ConcreteModule& m, int h);
/// P(δ_1, ..., δ_e) alone.
Polygon hodge_polygon_from_delta(int h, const std::vector<int>& delta);

}  // namespace hodge
