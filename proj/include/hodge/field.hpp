#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hodge {

using Elem = std::uint32_t;
using Vector = std::vector<Elem>;

/// Arithmetic in Z/pZ for a prime p. Elements are kept reduced in [0, p).
class PrimeField {
 public:
  explicit PrimeField(Elem p = 2);

  Elem p() const { return p_; }

  Elem add(Elem a, Elem b) const {
    const Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Elem inv(Elem a) const;
  Elem reduce(std::int64_t v) const;

  bool operator==(const PrimeField&) const = default;

 private:
  Elem p_;
};

bool is_prime(Elem n);

/// Dense row-major matrix of field elements. The field is supplied by the
/// free functions that do arithmetic; the matrix only stores residues.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::size_t cols, const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const { return {row(r).begin(), row(r).end()}; }

  void append_row(std::span<const Elem> v);
  void swap_rows(std::size_t a, std::size_t b);
  void truncate_rows(std::size_t n);

  bool is_zero() const;
  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

Matrix multiply(const PrimeField& f, const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);
Matrix power(const PrimeField& f, const Matrix& t, std::size_t k);
Matrix stack(const Matrix& top, const Matrix& bottom);

/// Returns T v for a column vector v.
Vector apply(const PrimeField& f, const Matrix& t, std::span<const Elem> v);

/// Reduced row echelon form with zero rows removed. Pivot columns are
/// written to `pivots` when non-null.
Matrix rref(const PrimeField& f, Matrix a, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const PrimeField& f, const Matrix& a);

/// Rows form a basis of { v : A v = 0 }.
Matrix kernel(const PrimeField& f, const Matrix& a);

}  // namespace hodge
