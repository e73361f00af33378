#include "hodge/lift.hpp"

#include <deque>
#include <random>

namespace hodge {

namespace {

Matrix invert(const PrimeField& f, const Matrix& a) {
  const std::size_t n = a.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n + r) = 1;
  }
  std::vector<std::size_t> pivots;
  const Matrix red = rref(f, aug, &pivots);
  if (red.rows() < n || pivots[n - 1] != n - 1) throw std::logic_error("invert: singular matrix");
  Matrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = red(r, n + c);
  return out;
}

Vector row_times(const PrimeField& f, std::span<const Elem> v, const Matrix& m) {
  Vector out(m.cols(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] = f.add(out[j], f.mul(v[i], m(i, j)));
  }
  return out;
}

Subspace transform(const Subspace& s, const Matrix& m) {
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < s.dim(); ++r) rows.push_back(row_times(s.field(), s.basis().row(r), m));
  return Subspace::span(s.field(), m.cols(), rows);
}

Subspace coordinate_span(const PrimeField& f, std::size_t n, std::size_t k) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < k; ++i) {
    Vector v(n, 0);
    v[i] = 1;
    rows.push_back(std::move(v));
  }
  return Subspace::span(f, n, rows);
}

// Vectors completing `base` inside `outer`: candidates first, then outer's basis.
std::vector<Vector> complete(const Subspace& base, const Subspace& outer, const std::vector<Vector>& candidates) {
  std::vector<Vector> out;
  Subspace acc = base;
  auto take = [&](const Vector& v) {
    if (!outer.contains(v) || acc.contains(v)) return;
    out.push_back(v);
    acc = sum(acc, Subspace::span(base.field(), base.ambient_dim(), std::vector<Vector>{v}));
  };
  for (const auto& v : candidates) take(v);
  for (std::size_t r = 0; r < outer.dim(); ++r) take(outer.basis().row_vector(r));
  return out;
}

std::vector<Vector> random_elements(const Subspace& s, std::mt19937_64& rng, std::size_t count) {
  std::uniform_int_distribution<Elem> coeff(0, s.field().p() - 1);
  std::vector<Vector> out;
  for (std::size_t k = 0; k < count; ++k) {
    Vector v(s.ambient_dim(), 0);
    for (std::size_t r = 0; r < s.dim(); ++r) {
      const Elem c = coeff(rng);
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = s.field().add(v[j], s.field().mul(c, s.basis()(r, j)));
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

LiftProblem LiftProblem::constant(const Flag& flag, const Subspace& special, std::vector<int> targets) {
  LiftProblem p{special.field(), special.ambient_dim(), {}, special, std::move(targets)};
  for (const auto& m : flag.members()) p.flag.push_back(PolyMatrix::constant(m.field(), m.basis()));
  for (auto& m : p.flag)
    if (m.rows() == 0) m = PolyMatrix(special.field(), 0, special.ambient_dim());
  return p;
}

std::vector<int> LiftProblem::ranks() const {
  std::vector<int> out;
  for (const auto& m : flag) out.push_back(static_cast<int>(generic_rank(m)));
  return out;
}

std::vector<int> LiftProblem::special_dims() const {
  std::vector<int> out;
  for (const auto& m : flag) {
    const Subspace fiber = Subspace::span(field, ambient, saturate(m).special_fiber());
    out.push_back(static_cast<int>(intersect(fiber, special).dim()));
  }
  return out;
}

void check_lift_feasible(const LiftProblem& problem) {
  const std::size_t l = problem.flag.size();
  if (l == 0) throw std::invalid_argument("lift: empty flag");
  if (problem.targets.size() != l) throw std::invalid_argument("lift: one target per flag member required");
  for (const auto& m : problem.flag)
    if (m.cols() != problem.ambient) throw std::invalid_argument("lift: flag member in wrong ambient");
  for (std::size_t i = 1; i < l; ++i) {
    if (generic_rank(stack(problem.flag[i - 1], problem.flag[i])) != generic_rank(problem.flag[i])) {
      throw std::invalid_argument("lift: flag is not nested");
    }
  }
  const std::vector<int> h = problem.ranks();
  const std::vector<int> d = problem.special_dims();
  if (d.back() != static_cast<int>(problem.special.dim())) throw std::invalid_argument("lift: special subspace not inside M_l");
  const auto& t = problem.targets;
  if (t.back() != d.back()) throw LiftInfeasible("d'_l = d_l", l);
  for (std::size_t i = 0; i < l; ++i)
    if (t[i] - (i == 0 ? 0 : t[i - 1]) < 0) throw LiftInfeasible("d'_i - d'_{i-1} >= 0", i + 1);
  for (std::size_t i = 0; i < l; ++i)
    if (t[i] - (i == 0 ? 0 : t[i - 1]) > h[i] - (i == 0 ? 0 : h[i - 1])) {
      throw LiftInfeasible("d'_i - d'_{i-1} <= h_i - h_{i-1}", i + 1);
    }
  for (std::size_t i = 0; i < l; ++i)
    if (t[i] > d[i]) throw LiftInfeasible("d'_i <= d_i", i + 1);
}

PolyMatrix lift_subspace(const LiftProblem& problem, const LiftOptions& options) {
  check_lift_feasible(problem);
  const PrimeField& f = problem.field;
  const std::size_t n = problem.ambient;
  std::optional<std::mt19937_64> rng;
  if (options.seed) rng.emplace(*options.seed);

  // R-basis of R^n whose first h_i rows span M_i.
  PolyMatrix adapted(f, 0, n);
  Subspace fiber(f, n);
  std::vector<std::size_t> level_end;
  auto add_if_new = [&](const PolyVector& row, const Vector& at_zero) {
    if (fiber.contains(at_zero)) return;
    adapted.append_row(row);
    fiber = sum(fiber, Subspace::span(f, n, std::vector<Vector>{at_zero}));
  };
  for (const auto& member : problem.flag) {
    const PolyMatrix sat = saturate(member);
    const Matrix sat0 = sat.special_fiber();
    for (std::size_t r = 0; r < sat.rows(); ++r) add_if_new(sat.row(r), sat0.row_vector(r));
    level_end.push_back(adapted.rows());
  }
  const PolyMatrix unit = PolyMatrix::constant(f, Matrix::identity(n));
  for (std::size_t r = 0; r < n; ++r) add_if_new(unit.row(r), Matrix::identity(n).row_vector(r));
  const Matrix to_coords = invert(f, adapted.special_fiber());

  // In coefficient coordinates the flag is spanned by initial unit vectors.
  const Subspace special = transform(problem.special, to_coords);
  std::optional<Subspace> prefer;
  if (options.prefer) prefer = transform(*options.prefer, to_coords);

  std::deque<Vector> pending;
  PolyMatrix coords(f, 0, n);
  auto constant_row = [&](const Vector& e) {
    PolyVector row;
    for (Elem x : e) row.push_back(Poly::constant(f, x));
    return row;
  };
  Subspace prev_special(f, n);
  Subspace prev_level(f, n);
  for (std::size_t i = 0; i < problem.flag.size(); ++i) {
    const Subspace level = coordinate_span(f, n, level_end[i]);
    const Subspace here = intersect(special, level);
    const auto fresh = complete(prev_special, here, rng ? random_elements(here, *rng, here.dim() + 2) : std::vector<Vector>{});

    std::vector<Vector> free_candidates;
    if (prefer) {
      const Subspace pref_here = intersect(*prefer, level);
      if (rng) free_candidates = random_elements(pref_here, *rng, pref_here.dim() + 2);
      for (std::size_t r = 0; r < pref_here.dim(); ++r) free_candidates.push_back(pref_here.basis().row_vector(r));
    }
    if (rng) {
      const auto extra = random_elements(level, *rng, level.dim() + 2);
      free_candidates.insert(free_candidates.end(), extra.begin(), extra.end());
    }
    const auto free = complete(sum(prev_level, here), level, free_candidates);

    const int step = problem.targets[i] - (i == 0 ? 0 : problem.targets[i - 1]);
    const auto own = static_cast<int>(fresh.size());
    if (step <= own) {
      for (int k = 0; k < own; ++k) {
        if (k < step) coords.append_row(constant_row(fresh[static_cast<std::size_t>(k)]));
        else pending.push_back(fresh[static_cast<std::size_t>(k)]);
      }
    } else {
      for (const auto& e : fresh) coords.append_row(constant_row(e));
      // Earlier vectors move up to this level through e + X c with c free here.
      for (int k = 0; k < step - own; ++k) {
        PolyVector row = constant_row(pending.front());
        pending.pop_front();
        const Vector& c = free[static_cast<std::size_t>(k)];
        for (std::size_t j = 0; j < n; ++j)
          if (c[j] != 0) row[j] = row[j] + Poly::monomial(f, c[j], 1);
        coords.append_row(row);
      }
    }
    prev_special = here;
    prev_level = level;
  }
  if (!pending.empty()) throw std::logic_error("lift_subspace: unresolved vectors");
  return multiply(coords, adapted);
}

std::size_t generic_intersection_dim(const PolyMatrix& a, const PolyMatrix& b) {
  return generic_rank(a) + generic_rank(b) - generic_rank(stack(a, b));
}

LiftReport verify_lift(const LiftProblem& problem, const PolyMatrix& lift) {
  LiftReport report;
  if (lift.cols() != problem.ambient) {
    report.message = "lift has wrong width";
    return report;
  }
  const Matrix at_zero = lift.special_fiber();
  report.special_fiber = Subspace::span(problem.field, problem.ambient, at_zero) == problem.special;
  report.direct_summand = rank(problem.field, at_zero) == lift.rows();
  report.generic_dims = true;
  for (std::size_t i = 0; i < problem.flag.size(); ++i) {
    report.dims.push_back(static_cast<int>(generic_intersection_dim(lift, problem.flag[i])));
    if (report.dims.back() != problem.targets[i]) report.generic_dims = false;
  }
  if (!report.special_fiber) report.message = "special fiber differs from L̄";
  else if (!report.direct_summand) report.message = "special fiber has dependent rows";
  else if (!report.generic_dims) report.message = "generic intersection dims differ from targets";
  return report;
}

}  // namespace hodge
