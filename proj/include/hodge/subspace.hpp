#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hodge/field.hpp"

namespace hodge {

/// A linear subspace of F_p^n, stored by its reduced row echelon basis.
/// Equal subspaces have identical bases, so equality is structural.
class Subspace {
 public:
  Subspace(PrimeField field, std::size_t ambient_dim);

  static Subspace zero(PrimeField field, std::size_t n) { return Subspace(field, n); }
  static Subspace full(PrimeField field, std::size_t n);
  static Subspace span(PrimeField field, std::size_t n, const Matrix& rows);
  static Subspace span(PrimeField field, std::size_t n, const std::vector<Vector>& rows);

  const PrimeField& field() const { return field_; }
  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Remainder of v after eliminating the pivot coordinates.
  Vector reduce(std::span<const Elem> v) const;
  bool contains(std::span<const Elem> v) const;
  bool contains(const Subspace& other) const;

  bool operator==(const Subspace& other) const {
    return field_ == other.field_ && n_ == other.n_ && basis_ == other.basis_;
  }

 private:
  PrimeField field_;
  std::size_t n_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
/// T(W) for an endomorphism T acting on column vectors.
Subspace image(const Matrix& t, const Subspace& w);
/// { v : T v in W }.
Subspace preimage(const Matrix& t, const Subspace& w);
/// dim A - dim B, requiring B contained in A.
std::size_t quotient_dim(const Subspace& a, const Subspace& b);

/// Vectors of `outer`'s basis (in order) completing `inner` to `outer`.
std::vector<Vector> complement_basis(const Subspace& inner, const Subspace& outer);

/// Nested chain F_0 in F_1 in ... in F_l of one ambient space.
class Flag {
 public:
  Flag() = default;
  explicit Flag(std::vector<Subspace> members);

  std::size_t size() const { return members_.size(); }
  const Subspace& operator[](std::size_t i) const { return members_[i]; }
  const std::vector<Subspace>& members() const { return members_; }
  std::vector<std::size_t> dims() const;

 private:
  std::vector<Subspace> members_;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// Process-wide default cap, initially kDefaultEnumerationCap.
std::uint64_t enumeration_cap();
void set_enumeration_cap(std::uint64_t cap);

class EnumerationCapExceeded : public std::runtime_error {
 public:
  EnumerationCapExceeded(std::uint64_t count, std::uint64_t cap)
      : std::runtime_error("subspace enumeration would visit " + std::to_string(count) +
                           " subspaces, cap is " + std::to_string(cap)),
        count_(count) {}
  std::uint64_t count() const { return count_; }

 private:
  std::uint64_t count_;
};

/// Number of d-dimensional subspaces of F_p^n, saturating at UINT64_MAX.
std::uint64_t gaussian_binomial(std::size_t n, std::size_t d, std::uint64_t p);

/// Visits every d-dimensional subspace of F_p^n exactly once, in canonical
/// form. The callback may return false to stop early.
void for_each_subspace(PrimeField field, std::size_t n, std::size_t d,
                       const std::function<bool(const Subspace&)>& visit,
                       std::uint64_t cap = enumeration_cap());

std::vector<Subspace> enumerate_subspaces(PrimeField field, std::size_t n, std::size_t d,
                                          std::uint64_t cap = enumeration_cap());

}  // namespace hodge
