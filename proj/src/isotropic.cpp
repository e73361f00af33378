#include "hodge/isotropic.hpp"

#include <algorithm>
#include <stdexcept>

namespace hodge {

namespace {

Elem pairing(const PrimeField& f, const Matrix& form, std::span<const Elem> x, std::span<const Elem> y) {
  Elem out = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (y[j] != 0 && form(i, j) != 0) out = f.add(out, f.mul(x[i], f.mul(form(i, j), y[j])));
  }
  return out;
}

Vector scaled(const PrimeField& f, Vector v, Elem c) {
  for (auto& x : v) x = f.mul(x, c);
  return v;
}

// A basis vector u of `pool` with <x, u> = 1 after rescaling.
Vector dual_partner(const PrimeField& f, const Matrix& form, const Vector& x, const Subspace& pool) {
  for (std::size_t r = 0; r < pool.dim(); ++r) {
    const Elem a = pairing(f, form, x, pool.basis().row(r));
    if (a != 0) return scaled(f, pool.basis().row_vector(r), f.inv(a));
  }
  throw std::logic_error("adapted_symplectic_basis: no dual partner; form or flag is degenerate");
}

Subspace member_subspace(const PolyMatrix& m, std::size_t n) {
  if (m.degree() > 0) throw std::invalid_argument("lift_isotropic: flag members must be constant");
  return Subspace::span(m.field(), n, m.special_fiber());
}

}  // namespace

Matrix standard_symplectic(const PrimeField& f, std::size_t g) {
  Matrix j(2 * g, 2 * g);
  for (std::size_t i = 0; i < g; ++i) {
    j(i, g + i) = 1;
    j(g + i, i) = f.neg(1);
  }
  return j;
}

PolyMatrix gram(const PolyMatrix& rows, const Matrix& form) {
  return multiply(multiply(rows, PolyMatrix::constant(rows.field(), form)), transpose(rows));
}

bool is_totally_isotropic(const PolyMatrix& rows, const Matrix& form) { return gram(rows, form).is_zero(); }

Subspace orthogonal(const Subspace& s, const Matrix& form) {
  const PrimeField& f = s.field();
  if (s.dim() == 0) return Subspace::full(f, s.ambient_dim());
  return Subspace::span(f, s.ambient_dim(), kernel(f, multiply(f, s.basis(), form)));
}

SymplecticBasis adapted_symplectic_basis(const Flag& flag, const Subspace& lagrangian, const Matrix& form) {
  const PrimeField& f = lagrangian.field();
  const std::size_t n = lagrangian.ambient_dim();
  std::vector<Subspace> isotropic;
  for (std::size_t i = 0; 2 * (i + 1) <= flag.size(); ++i) isotropic.push_back(flag[i]);

  SymplecticBasis out;
  Subspace w = Subspace::full(f, n);
  while (w.dim() > 0) {
    const Subspace l_w = intersect(lagrangian, w);
    std::vector<Subspace> iso_w;
    for (const auto& s : isotropic) iso_w.push_back(intersect(s, w));
    const Subspace top = iso_w.empty() ? Subspace(f, n) : iso_w.back();

    Vector p;
    Vector q;
    if (intersect(l_w, top).dim() > 0) {
      std::size_t i = 0;
      while (intersect(l_w, iso_w[i]).dim() == 0) ++i;
      p = intersect(l_w, iso_w[i]).basis().row_vector(0);
      const Subspace below = i == 0 ? Subspace(f, n) : iso_w[i - 1];
      q = dual_partner(f, form, p, intersect(w, orthogonal(below, form)));
    } else if (top.dim() > 0) {
      std::size_t i = 0;
      while (iso_w[i].dim() == 0) ++i;
      const Vector x = iso_w[i].basis().row_vector(0);
      // p ∈ L̄ with <x, p> = 1; then q = -x gives <p, q> = 1.
      p = dual_partner(f, form, x, l_w);
      q = scaled(f, x, f.neg(1));
    } else {
      p = l_w.basis().row_vector(0);
      q = dual_partner(f, form, p, w);
    }
    out.p.push_back(p);
    out.q.push_back(q);
    w = intersect(w, orthogonal(Subspace::span(f, n, std::vector<Vector>{p, q}), form));
  }
  return out;
}

void check_isotropic_feasible(const LiftProblem& problem, const Matrix& form) {
  const PrimeField& f = problem.field;
  const std::size_t n = problem.ambient;
  if (form.rows() != n || form.cols() != n || n % 2 != 0) throw std::invalid_argument("lift_isotropic: form has wrong size");
  for (std::size_t i = 0; i < n; ++i) {
    if (form(i, i) != 0) throw std::invalid_argument("lift_isotropic: form is not alternating");
    for (std::size_t j = 0; j < n; ++j)
      if (form(i, j) != f.neg(form(j, i))) throw std::invalid_argument("lift_isotropic: form is not alternating");
  }
  if (rank(f, form) != n) throw std::invalid_argument("lift_isotropic: form is not perfect");
  const std::size_t g = n / 2;
  const std::size_t l = problem.flag.size();
  std::vector<Subspace> members;
  for (const auto& m : problem.flag) members.push_back(member_subspace(m, n));
  if (l == 0 || members.back().dim() != n) throw std::invalid_argument("lift_isotropic: M_l must be the whole module");
  for (std::size_t i = 1; i < l; ++i) {
    if (!(orthogonal(members[i - 1], form) == members[l - i - 1])) {
      throw std::invalid_argument("lift_isotropic: M_" + std::to_string(i) + "^⊥ differs from M_" + std::to_string(l - i));
    }
  }
  if (problem.special.dim() != g || !is_totally_isotropic(PolyMatrix::constant(f, problem.special.basis()), form)) {
    throw std::invalid_argument("lift_isotropic: special subspace is not Lagrangian");
  }
  check_lift_feasible(problem);
  const auto h = problem.ranks();
  const auto& t = problem.targets;
  for (std::size_t i = 1; i < l; ++i) {
    if (t[l - i - 1] != static_cast<int>(g) - h[i - 1] + t[i - 1]) throw LiftInfeasible("d'_{l-i} = g - h_i + d'_i", i);
  }
}

PolyMatrix lift_isotropic(const LiftProblem& problem, const Matrix& form) {
  check_isotropic_feasible(problem, form);
  const PrimeField& f = problem.field;
  const std::size_t n = problem.ambient;
  std::vector<Subspace> members;
  for (const auto& m : problem.flag) members.push_back(member_subspace(m, n));
  const SymplecticBasis basis = adapted_symplectic_basis(Flag(members), problem.special, form);
  const std::size_t g = basis.p.size();

  // Symmetric S indexed by the upper triangle, sparsest first.
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t a = 0; a < g; ++a)
    for (std::size_t b = a; b < g; ++b) slots.emplace_back(a, b);
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < slots.size(); ++k) {
    total *= f.p();
    if (total > enumeration_cap()) throw EnumerationCapExceeded(total, enumeration_cap());
  }
  std::vector<std::vector<Elem>> choices;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<Elem> s(slots.size());
    std::uint64_t rest = code;
    for (auto& x : s) {
      x = static_cast<Elem>(rest % f.p());
      rest /= f.p();
    }
    choices.push_back(std::move(s));
  }
  auto weight = [](const std::vector<Elem>& s) { return std::count_if(s.begin(), s.end(), [](Elem x) { return x != 0; }); };
  std::stable_sort(choices.begin(), choices.end(), [&](const auto& a, const auto& b) { return weight(a) < weight(b); });

  for (const auto& s : choices) {
    PolyMatrix rows(f, 0, n);
    for (std::size_t a = 0; a < g; ++a) {
      PolyVector row;
      for (Elem x : basis.p[a]) row.push_back(Poly::constant(f, x));
      for (std::size_t k = 0; k < slots.size(); ++k) {
        const auto [i, j] = slots[k];
        if (s[k] == 0 || (i != a && j != a)) continue;
        const Vector& partner = basis.q[i == a ? j : i];
        for (std::size_t c = 0; c < n; ++c)
          if (partner[c] != 0) row[c] = row[c] + Poly::monomial(f, f.mul(s[k], partner[c]), 1);
      }
      rows.append_row(row);
    }
    if (verify_lift(problem, rows).ok() && is_totally_isotropic(rows, form)) return rows;
  }
  throw std::logic_error("lift_isotropic: no symmetric deformation reaches the targets");
}

}  // namespace hodge
