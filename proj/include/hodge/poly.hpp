#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hodge/field.hpp"
#include "hodge/subspace.hpp"

namespace hodge {

/// Univariate polynomial over F_p in the deformation variable X.
/// Coefficients are stored low degree first with no trailing zeros.
class Poly {
 public:
  Poly() = default;
  explicit Poly(PrimeField field) : field_(field) {}
  Poly(PrimeField field, std::vector<Elem> coeffs);

  static Poly constant(PrimeField field, Elem c) { return Poly(field, {c}); }
  static Poly monomial(PrimeField field, Elem c, std::size_t degree);

  const PrimeField& field() const { return field_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Elem coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  Elem lead() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
  const std::vector<Elem>& coeffs() const { return coeffs_; }
  /// X-adic valuation; -1 for zero.
  int valuation() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(Elem c) const;
  /// Division by X^k; requires the low coefficients to vanish.
  Poly shift_down(std::size_t k) const;
  bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }

  std::string to_string() const;

 private:
  void trim();

  PrimeField field_;
  std::vector<Elem> coeffs_;
};

/// Quotient and remainder; throws on division by zero.
void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
/// a / b, throwing std::logic_error unless b divides a.
Poly exact_div(const Poly& a, const Poly& b);
/// Monic gcd (zero when both are zero).
Poly gcd(const Poly& a, const Poly& b);

using PolyVector = std::vector<Poly>;

/// Row-major matrix of polynomials; rows are the vectors of a module basis.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(PrimeField field, std::size_t rows, std::size_t cols);
  static PolyMatrix constant(PrimeField field, const Matrix& m);
  static PolyMatrix from_rows(PrimeField field, std::size_t cols, const std::vector<PolyVector>& rows);

  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Poly& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Poly& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  PolyVector row(std::size_t r) const;
  void append_row(const PolyVector& v);

  /// Entrywise value at X = 0.
  Matrix special_fiber() const;
  /// Coefficient matrix of X^k.
  Matrix coefficient(std::size_t k) const;
  int degree() const;
  bool is_zero() const;

 private:
  PrimeField field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Poly> data_;
};

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix transpose(const PolyMatrix& a);
PolyMatrix stack(const PolyMatrix& top, const PolyMatrix& bottom);

/// Rank over F_p(X), by fraction-free (Bareiss) elimination.
std::size_t generic_rank(const PolyMatrix& a);

/// Polynomial rows spanning { v : A v = 0 } over F_p(X).
PolyMatrix generic_kernel(const PolyMatrix& a);

// Submodules of R^n, R = F_p[X] localized at X, are given by spanning rows.

/// Rows spanning the saturation (V ⊗ F_p(X)) ∩ R^n of the row module of
/// `rows`; the result has linearly independent special fiber, so it is a
/// basis of a direct summand.
PolyMatrix saturate(const PolyMatrix& rows);
/// Saturated intersection of two row modules.
PolyMatrix generic_intersect(const PolyMatrix& a, const PolyMatrix& b);
/// Saturated { v : T v ∈ W } for a constant operator T acting on columns.
PolyMatrix generic_preimage(const Matrix& t, const PolyMatrix& w);
/// Rows T w for the rows w of `w`.
PolyMatrix apply_rows(const Matrix& t, const PolyMatrix& w);

}  // namespace hodge
