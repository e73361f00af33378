#include "hodge/subspace.hpp"

#include <algorithm>
#include <atomic>
#include <limits>

namespace hodge {

namespace {

std::atomic<std::uint64_t> cap_setting{kDefaultEnumerationCap};

void require_same_ambient(const Subspace& a, const Subspace& b, const char* op) {
  if (!(a.field() == b.field()) || a.ambient_dim() != b.ambient_dim()) {
    throw DimensionMismatch(std::string(op) + ": subspaces live in different ambient spaces");
  }
}

}  // namespace

Subspace::Subspace(PrimeField field, std::size_t ambient_dim)
    : field_(field), n_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::full(PrimeField field, std::size_t n) { return span(field, n, Matrix::identity(n)); }

Subspace Subspace::span(PrimeField field, std::size_t n, const Matrix& rows) {
  if (rows.cols() != n) throw DimensionMismatch("span: vectors have wrong length");
  Subspace s(field, n);
  s.basis_ = rref(field, rows, &s.pivots_);
  return s;
}

Subspace Subspace::span(PrimeField field, std::size_t n, const std::vector<Vector>& rows) {
  return span(field, n, Matrix::from_rows(n, rows));
}

Vector Subspace::reduce(std::span<const Elem> v) const {
  if (v.size() != n_) throw DimensionMismatch("reduce: vector has wrong length");
  Vector r(v.begin(), v.end());
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Elem c = r[pivots_[i]];
    if (c == 0) continue;
    const auto row = basis_.row(i);
    for (std::size_t j = pivots_[i]; j < n_; ++j) r[j] = field_.sub(r[j], field_.mul(c, row[j]));
  }
  return r;
}

bool Subspace::contains(std::span<const Elem> v) const {
  const Vector r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](Elem x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  require_same_ambient(*this, other, "contains");
  for (std::size_t i = 0; i < other.dim(); ++i) {
    if (!contains(other.basis().row(i))) return false;
  }
  return true;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b, "sum");
  return Subspace::span(a.field(), a.ambient_dim(), stack(a.basis(), b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b, "intersect");
  const std::size_t n = a.ambient_dim();
  // Zassenhaus: rows (a|a) and (b|0); rows with vanishing left half span A ∩ B.
  Matrix z(0, 2 * n);
  Vector row(2 * n, 0);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    std::copy(a.basis().row(i).begin(), a.basis().row(i).end(), row.begin());
    std::copy(a.basis().row(i).begin(), a.basis().row(i).end(), row.begin() + static_cast<std::ptrdiff_t>(n));
    z.append_row(row);
  }
  for (std::size_t i = 0; i < b.dim(); ++i) {
    std::fill(row.begin(), row.end(), 0);
    std::copy(b.basis().row(i).begin(), b.basis().row(i).end(), row.begin());
    z.append_row(row);
  }
  const Matrix r = rref(a.field(), z);
  Matrix out(0, n);
  for (std::size_t i = 0; i < r.rows(); ++i) {
    const auto full = r.row(i);
    if (std::all_of(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(n), [](Elem x) { return x == 0; })) {
      out.append_row(full.subspan(n, n));
    }
  }
  return Subspace::span(a.field(), n, out);
}

Subspace image(const Matrix& t, const Subspace& w) {
  const std::size_t n = w.ambient_dim();
  if (t.rows() != n || t.cols() != n) throw DimensionMismatch("image: operator does not act on the ambient space");
  Matrix rows(0, n);
  for (std::size_t i = 0; i < w.dim(); ++i) rows.append_row(apply(w.field(), t, w.basis().row(i)));
  return Subspace::span(w.field(), n, rows);
}

Subspace preimage(const Matrix& t, const Subspace& w) {
  const std::size_t n = w.ambient_dim();
  if (t.rows() != n || t.cols() != n) throw DimensionMismatch("preimage: operator does not act on the ambient space");
  const PrimeField& f = w.field();
  // Tv ∈ W  <=>  C T v = 0 where the rows of C cut out W.
  const Matrix cut = kernel(f, w.basis());
  if (cut.rows() == 0) return Subspace::full(f, n);
  return Subspace::span(f, n, kernel(f, multiply(f, cut, t)));
}

std::size_t quotient_dim(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b, "quotient_dim");
  if (!a.contains(b)) throw std::invalid_argument("quotient_dim: second subspace is not contained in the first");
  return a.dim() - b.dim();
}

std::vector<Vector> complement_basis(const Subspace& inner, const Subspace& outer) {
  require_same_ambient(inner, outer, "complement_basis");
  if (!outer.contains(inner)) throw std::invalid_argument("complement_basis: subspaces are not nested");
  std::vector<Vector> out;
  Subspace acc = inner;
  for (std::size_t i = 0; i < outer.dim() && acc.dim() < outer.dim(); ++i) {
    const auto v = outer.basis().row(i);
    if (acc.contains(v)) continue;
    out.emplace_back(v.begin(), v.end());
    acc = sum(acc, Subspace::span(inner.field(), inner.ambient_dim(), std::vector<Vector>{out.back()}));
  }
  return out;
}

Flag::Flag(std::vector<Subspace> members) : members_(std::move(members)) {
  for (std::size_t i = 1; i < members_.size(); ++i) {
    if (!members_[i].contains(members_[i - 1])) {
      throw std::invalid_argument("flag members are not nested at index " + std::to_string(i));
    }
  }
}

std::vector<std::size_t> Flag::dims() const {
  std::vector<std::size_t> out;
  for (const auto& m : members_) out.push_back(m.dim());
  return out;
}

std::uint64_t gaussian_binomial(std::size_t n, std::size_t d, std::uint64_t p) {
  if (d > n) return 0;
  // Row recurrence [n,k] = [n-1,k-1] + p^k [n-1,k], saturating.
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  auto sat_add = [](std::uint64_t a, std::uint64_t b) { return a > kMax - b ? kMax : a + b; };
  auto sat_mul = [](std::uint64_t a, std::uint64_t b) { return (b != 0 && a > kMax / b) ? kMax : a * b; };
  std::vector<std::uint64_t> row(d + 1, 0);
  row[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    for (std::size_t k = std::min(m, d); k >= 1; --k) {
      std::uint64_t pk = 1;
      for (std::size_t i = 0; i < k; ++i) pk = sat_mul(pk, p);
      row[k] = sat_add(row[k - 1], sat_mul(pk, row[k]));
    }
  }
  return row[d];
}

void for_each_subspace(PrimeField field, std::size_t n, std::size_t d,
                       const std::function<bool(const Subspace&)>& visit, std::uint64_t cap) {
  if (d > n) return;
  const std::uint64_t count = gaussian_binomial(n, d, field.p());
  if (count > cap) throw EnumerationCapExceeded(count, cap);

  std::vector<std::size_t> pivots(d);
  for (std::size_t i = 0; i < d; ++i) pivots[i] = i;
  while (true) {
    // Free slots: (row, col) right of the row's pivot and not in a pivot column.
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = pivots[r] + 1; c < n; ++c)
        if (!is_pivot[c]) slots.emplace_back(r, c);

    Matrix m(d, n);
    for (std::size_t r = 0; r < d; ++r) m(r, pivots[r]) = 1;
    std::vector<Elem> digits(slots.size(), 0);
    while (true) {
      for (std::size_t s = 0; s < slots.size(); ++s) m(slots[s].first, slots[s].second) = digits[s];
      if (!visit(Subspace::span(field, n, m))) return;
      std::size_t s = 0;
      while (s < digits.size() && ++digits[s] == field.p()) digits[s++] = 0;
      if (s == digits.size()) break;
    }

    // Next pivot combination in lexicographic order.
    std::size_t i = d;
    while (i > 0 && pivots[i - 1] == n - d + (i - 1)) --i;
    if (i == 0) return;
    ++pivots[i - 1];
    for (std::size_t j = i; j < d; ++j) pivots[j] = pivots[j - 1] + 1;
  }
}

std::vector<Subspace> enumerate_subspaces(PrimeField field, std::size_t n, std::size_t d, std::uint64_t cap) {
  std::vector<Subspace> out;
  for_each_subspace(field, n, d, [&](const Subspace& s) {
    out.push_back(s);
    return true;
  }, cap);
  return out;
}

std::uint64_t enumeration_cap() { return cap_setting.load(); }

void set_enumeration_cap(std::uint64_t cap) {
  if (cap == 0) throw std::invalid_argument("enumeration cap must be positive");
  cap_setting.store(cap);
}

}  // namespace hodge
