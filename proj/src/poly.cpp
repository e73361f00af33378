#include "hodge/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hodge {

Poly::Poly(PrimeField field, std::vector<Elem> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c %= field_.p();
  trim();
}

Poly Poly::monomial(PrimeField field, Elem c, std::size_t degree) {
  std::vector<Elem> coeffs(degree + 1, 0);
  coeffs[degree] = c;
  return Poly(field, std::move(coeffs));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int Poly::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return static_cast<int>(i);
  return -1;
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Elem> out(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_.add(coeff(i), o.coeff(i));
  return Poly(field_, std::move(out));
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<Elem> out(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_.sub(coeff(i), o.coeff(i));
  return Poly(field_, std::move(out));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly(field_);
  std::vector<Elem> out(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] = field_.add(out[i + j], field_.mul(coeffs_[i], o.coeffs_[j]));
  }
  return Poly(field_, std::move(out));
}

Poly Poly::scaled(Elem c) const {
  std::vector<Elem> out(coeffs_);
  for (auto& x : out) x = field_.mul(x, c);
  return Poly(field_, std::move(out));
}

Poly Poly::shift_down(std::size_t k) const {
  for (std::size_t i = 0; i < k && i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) throw std::logic_error("Poly::shift_down: not divisible by X^k");
  if (k >= coeffs_.size()) return Poly(field_);
  return Poly(field_, std::vector<Elem>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || coeffs_[i] != 1) os << coeffs_[i];
    if (i >= 1) os << "X";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  if (b.is_zero()) throw std::domain_error("divmod: division by zero polynomial");
  const PrimeField& f = a.field();
  std::vector<Elem> rem(a.coeffs());
  const std::size_t db = static_cast<std::size_t>(b.degree());
  const Elem inv_lead = f.inv(b.lead());
  std::vector<Elem> quot(rem.size() >= db + 1 ? rem.size() - db : 0, 0);
  for (std::size_t i = rem.size(); i-- > db;) {
    const Elem c = f.mul(rem[i], inv_lead);
    if (c == 0) continue;
    quot[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] = f.sub(rem[i - db + j], f.mul(c, b.coeff(j)));
  }
  q = Poly(f, std::move(quot));
  r = Poly(f, std::move(rem));
}

Poly exact_div(const Poly& a, const Poly& b) {
  Poly q, r;
  divmod(a, b, q, r);
  if (!r.is_zero()) throw std::logic_error("exact_div: nonzero remainder");
  return q;
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly q, r;
    divmod(x, y, q, r);
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x.scaled(x.field().inv(x.lead()));
}

PolyMatrix::PolyMatrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Poly(field)) {}

PolyMatrix PolyMatrix::constant(PrimeField field, const Matrix& m) {
  PolyMatrix out(field, m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Poly::constant(field, m(r, c));
  return out;
}

PolyMatrix PolyMatrix::from_rows(PrimeField field, std::size_t cols, const std::vector<PolyVector>& rows) {
  PolyMatrix out(field, 0, cols);
  for (const auto& r : rows) out.append_row(r);
  return out;
}

PolyVector PolyMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_), data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

void PolyMatrix::append_row(const PolyVector& v) {
  if (v.size() != cols_) throw std::invalid_argument("PolyMatrix::append_row: width mismatch");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

Matrix PolyMatrix::special_fiber() const { return coefficient(0); }

Matrix PolyMatrix::coefficient(std::size_t k) const {
  Matrix out(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c).coeff(k);
  return out;
}

int PolyMatrix::degree() const {
  int d = -1;
  for (const auto& p : data_) d = std::max(d, p.degree());
  return d;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Poly& p) { return p.is_zero(); });
}

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: shape mismatch");
  PolyMatrix out(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = out(i, j) + a(i, k) * b(k, j);
    }
  return out;
}

PolyMatrix transpose(const PolyMatrix& a) {
  PolyMatrix out(a.field(), a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(c, r) = a(r, c);
  return out;
}

PolyMatrix stack(const PolyMatrix& top, const PolyMatrix& bottom) {
  if (top.cols() != bottom.cols()) throw std::invalid_argument("stack: width mismatch");
  PolyMatrix out = top;
  for (std::size_t r = 0; r < bottom.rows(); ++r) out.append_row(bottom.row(r));
  return out;
}

std::size_t generic_rank(const PolyMatrix& a) {
  PolyMatrix m = a;
  const PrimeField& f = a.field();
  Poly prev = Poly::constant(f, 1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) m(i, j) = exact_div(m(r, c) * m(i, j) - m(i, c) * m(r, j), prev);
      m(i, c) = Poly(f);
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

namespace {

// Divides a row by the monic gcd of its entries.
void remove_content(PolyVector& v) {
  if (v.empty()) return;
  Poly g(v.front().field());
  for (const auto& x : v) g = gcd(g, x);
  if (g.is_zero() || g.degree() == 0) return;
  for (auto& x : v) x = exact_div(x, g);
}

}  // namespace

PolyMatrix generic_kernel(const PolyMatrix& a) {
  const PrimeField& f = a.field();
  const std::size_t n = a.cols();
  std::vector<PolyVector> rows;
  for (std::size_t r = 0; r < a.rows(); ++r) rows.push_back(a.row(r));

  // Fraction-free Gauss-Jordan: every pivot column is zero outside its pivot row.
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const Poly scale_i = rows[r][c];
      const Poly scale_r = rows[i][c];
      for (std::size_t j = 0; j < n; ++j) rows[i][j] = scale_i * rows[i][j] - scale_r * rows[r][j];
      remove_content(rows[i]);
    }
    pivots.push_back(c);
    ++r;
  }

  PolyMatrix out(f, 0, n);
  for (std::size_t free = 0; free < n; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    PolyVector v(n, Poly(f));
    v[free] = Poly::constant(f, 1);
    for (std::size_t k = 0; k < pivots.size(); ++k) v[free] = v[free] * rows[k][pivots[k]];
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      Poly entry = Poly(f) - rows[k][free];
      for (std::size_t l = 0; l < pivots.size(); ++l)
        if (l != k) entry = entry * rows[l][pivots[l]];
      v[pivots[k]] = entry;
    }
    remove_content(v);
    out.append_row(v);
  }
  return out;
}

PolyMatrix saturate(const PolyMatrix& rows) {
  const PrimeField& f = rows.field();
  PolyMatrix basis(f, 0, rows.cols());
  for (std::size_t r = 0; r < rows.rows(); ++r) {
    PolyMatrix trial = basis;
    trial.append_row(rows.row(r));
    if (generic_rank(trial) == trial.rows()) basis = std::move(trial);
  }

  // Replace a row by (Σ c_i row_i)/X whenever the special fiber is dependent.
  while (true) {
    const Matrix dependencies = kernel(f, transpose(basis.special_fiber()));
    if (dependencies.rows() == 0) return basis;
    const auto c = dependencies.row(0);
    std::size_t target = basis.rows();
    for (std::size_t i = 0; i < basis.rows(); ++i) {
      if (c[i] == 0) continue;
      int deg = -1;
      for (std::size_t j = 0; j < basis.cols(); ++j) deg = std::max(deg, basis(i, j).degree());
      int best = -2;
      if (target < basis.rows())
        for (std::size_t j = 0; j < basis.cols(); ++j) best = std::max(best, basis(target, j).degree());
      if (target == basis.rows() || deg > best) target = i;
    }
    PolyVector combo(basis.cols(), Poly(f));
    for (std::size_t i = 0; i < basis.rows(); ++i)
      if (c[i] != 0)
        for (std::size_t j = 0; j < basis.cols(); ++j) combo[j] = combo[j] + basis(i, j).scaled(c[i]);
    for (std::size_t j = 0; j < basis.cols(); ++j) basis(target, j) = combo[j].shift_down(1);
  }
}

PolyMatrix generic_intersect(const PolyMatrix& a, const PolyMatrix& b) {
  return saturate(generic_kernel(stack(generic_kernel(a), generic_kernel(b))));
}

PolyMatrix apply_rows(const Matrix& t, const PolyMatrix& w) {
  const PrimeField& f = w.field();
  PolyMatrix out(f, w.rows(), t.rows());
  for (std::size_t r = 0; r < w.rows(); ++r)
    for (std::size_t i = 0; i < t.rows(); ++i)
      for (std::size_t j = 0; j < t.cols(); ++j)
        if (t(i, j) != 0) out(r, i) = out(r, i) + w(r, j).scaled(t(i, j));
  return out;
}

PolyMatrix generic_preimage(const Matrix& t, const PolyMatrix& w) {
  const PolyMatrix cut = generic_kernel(w);
  return saturate(generic_kernel(multiply(cut, PolyMatrix::constant(w.field(), t))));
}

}  // namespace hodge
