#include "hodge/field.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hodge {

bool is_prime(Elem n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(Elem p) : p_(p) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic is not prime: " + std::to_string(p));
}

Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  // a^(p-2)
  Elem result = 1;
  Elem base = a;
  Elem e = p_ - 2;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

Elem PrimeField::reduce(std::int64_t v) const {
  const auto p = static_cast<std::int64_t>(p_);
  auto r = v % p;
  if (r < 0) r += p;
  return static_cast<Elem>(r);
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

void Matrix::append_row(std::span<const Elem> v) {
  if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
}

void Matrix::truncate_rows(std::size_t n) {
  if (n > rows_) throw std::out_of_range("truncate_rows");
  rows_ = n;
  data_.resize(n * cols_);
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Elem x) { return x == 0; });
}

Matrix multiply(const PrimeField& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Elem x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = f.add(c(i, j), f.mul(x, b(k, j)));
    }
  }
  return c;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

Matrix power(const PrimeField& f, const Matrix& t, std::size_t k) {
  if (t.rows() != t.cols()) throw std::invalid_argument("power of non-square matrix");
  Matrix result = Matrix::identity(t.rows());
  for (std::size_t i = 0; i < k; ++i) result = multiply(f, result, t);
  return result;
}

Matrix stack(const Matrix& top, const Matrix& bottom) {
  if (top.cols() != bottom.cols()) throw std::invalid_argument("stack: column mismatch");
  Matrix m = top;
  for (std::size_t r = 0; r < bottom.rows(); ++r) m.append_row(bottom.row(r));
  return m;
}

Vector apply(const PrimeField& f, const Matrix& t, std::span<const Elem> v) {
  if (t.cols() != v.size()) throw std::invalid_argument("apply: dimension mismatch");
  Vector out(t.rows(), 0);
  for (std::size_t i = 0; i < t.rows(); ++i) {
    Elem acc = 0;
    for (std::size_t j = 0; j < t.cols(); ++j) {
      if (v[j] != 0 && t(i, j) != 0) acc = f.add(acc, f.mul(t(i, j), v[j]));
    }
    out[i] = acc;
  }
  return out;
}

Matrix rref(const PrimeField& f, Matrix a, std::vector<std::size_t>* pivots) {
  if (pivots) pivots->clear();
  std::size_t lead = 0;
  for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
    std::size_t sel = lead;
    while (sel < a.rows() && a(sel, col) == 0) ++sel;
    if (sel == a.rows()) continue;
    a.swap_rows(sel, lead);
    const Elem scale = f.inv(a(lead, col));
    for (auto& x : a.row(lead)) x = f.mul(x, scale);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead || a(r, col) == 0) continue;
      const Elem factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) a(r, c) = f.sub(a(r, c), f.mul(factor, a(lead, c)));
    }
    if (pivots) pivots->push_back(col);
    ++lead;
  }
  a.truncate_rows(lead);
  return a;
}

std::size_t rank(const PrimeField& f, const Matrix& a) { return rref(f, a).rows(); }

Matrix kernel(const PrimeField& f, const Matrix& a) {
  std::vector<std::size_t> pivots;
  const Matrix r = rref(f, a, &pivots);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  Matrix basis(0, n);
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v(n, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(r(i, free));
    basis.append_row(v);
  }
  return basis;
}

}  // namespace hodge
