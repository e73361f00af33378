#include "hodge/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <limits>
#include <future>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>

#include "hodge/degenerate.hpp"
#include "hodge/e3.hpp"
#include "hodge/e3_oracle.hpp"
#include "hodge/isotropic.hpp"
#include "hodge/lift.hpp"
#include "hodge/polygon.hpp"
#include "hodge/pr.hpp"
#include "hodge/strat.hpp"
#include "hodge/tmodule.hpp"

namespace hodge {

namespace {

constexpr std::size_t kSamples = 5;

class Recorder {
 public:
  Recorder(int criterion, std::string name) {
    result_.criterion = criterion;
    result_.name = std::move(name);
  }
  void pass() { ++result_.cases; }
  void fail(const std::string& what) {
    ++result_.cases;
    ++result_.failures;
    if (result_.samples.size() < kSamples) result_.samples.push_back(what);
  }
  std::uint64_t cases() const { return result_.cases; }
  void detail(std::string text) { result_.detail = std::move(text); }
  void check(bool ok, const std::function<std::string()>& what) { ok ? pass() : fail(what()); }
  SweepResult finish(std::chrono::steady_clock::time_point start) {
    result_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result_;
  }

 private:
  SweepResult result_;
};

// One seed per sweep, drawn in a fixed order from the master seed.
std::uint64_t sweep_seed(const VerifyConfig& config, int criterion) {
  std::mt19937_64 master(config.seed);
  std::uint64_t out = 0;
  for (int k = 0; k < criterion; ++k) out = master();
  return out;
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

// Partitions of n into parts <= max_part, non-increasing.
void partitions(int n, int max_part, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(prefix);
    return;
  }
  for (int a = std::min(n, max_part); a >= 1; --a) {
    prefix.push_back(a);
    partitions(n - a, a, prefix, out);
    prefix.pop_back();
  }
}

std::vector<std::vector<int>> partitions(int n, int max_part) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  partitions(n, max_part, prefix, out);
  return out;
}

// Non-increasing lists of length len with entries in [0, h].
void decreasing_lists(int len, int h, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(prefix.size()) == len) {
    out.push_back(prefix);
    return;
  }
  const int top = prefix.empty() ? h : prefix.back();
  for (int x = top; x >= 0; --x) {
    prefix.push_back(x);
    decreasing_lists(len, h, prefix, out);
    prefix.pop_back();
  }
}

// All length-len lists with entries in [0, bound].
std::vector<std::vector<int>> all_lists(int len, int bound) {
  std::vector<std::vector<int>> out{{}};
  for (int k = 0; k < len; ++k) {
    std::vector<std::vector<int>> next;
    for (const auto& v : out)
      for (int x = 0; x <= bound; ++x) {
        auto w = v;
        w.push_back(x);
        next.push_back(std::move(w));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

SweepResult sweep_dominance(const VerifyConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  Recorder rec(1, "dominance: prefix sums vs pointwise");
  auto compare = [&](const Polygon& a, const Polygon& b) {
    rec.check(dominates(a, b) == dominates_pointwise(a, b), [&] { return a.to_string() + " vs " + b.to_string(); });
  };
  std::mt19937_64 rng(sweep_seed(config, 1));
  for (int k = 0; k < 10000; ++k) {
    const int h = 1 + static_cast<int>(rng() % 6);
    auto random_d = [&] {
      std::vector<int> d(1 + rng() % 4);
      for (auto& x : d) x = static_cast<int>(rng() % static_cast<std::uint64_t>(h + 1));
      return d;
    };
    compare(Polygon(h, random_d()), Polygon(h, random_d()));
  }
  for (int h = 1; h <= 3; ++h) {
    std::vector<Polygon> all;
    for (int n = 1; n <= 3; ++n) {
      std::vector<std::vector<int>> lists;
      std::vector<int> prefix;
      decreasing_lists(n, h, prefix, lists);
      for (const auto& d : lists) all.emplace_back(h, d);
    }
    for (const auto& a : all)
      for (const auto& b : all) compare(a, b);
  }
  return rec.finish(start);
}

SweepResult sweep_hodge_identity(const VerifyConfig&) {
  const auto start = std::chrono::steady_clock::now();
  Recorder rec(2, "Hodge polygon: slopes a_i/e vs P(delta)");
  const PrimeField f(2);
  for (int e = 1; e <= 3; ++e)
    for (int dim = 1; dim <= 8; ++dim)
      for (const auto& parts : partitions(dim, e)) {
        const int count = static_cast<int>(parts.size());
        for (int h = count; h <= count + 1; ++h) {
          const JordanType j(e, h, parts);
          std::vector<Rational> slopes;
          for (int a : parts) slopes.emplace_back(a, e);
          slopes.resize(static_cast<std::size_t>(h), Rational(0));
          const Polygon by_parts = Polygon::from_slopes(h, e, slopes);
          const Polygon by_delta = hodge_polygon_from_delta(h, j.delta());
          const Polygon by_module = hodge_polygon(realize(j, f), h);
          rec.check(by_parts == by_delta && by_delta == by_module,
                    [&] { return "e=" + std::to_string(e) + " h=" + std::to_string(h) + " parts=" + join(parts); });
        }
      }
  return rec.finish(start);
}

namespace {

// dim(M_i ∩ T^j M) for the greedy flag of sorted type d:
// min over k of δ_{j+1} + ... + δ_{j+k} + d_{k+1} + ... + d_i.
int expected_alpha(const std::vector<int>& delta, const std::vector<int>& d, int i, int j) {
  const int e = static_cast<int>(delta.size());
  int best = std::numeric_limits<int>::max();
  for (int k = 0; k <= i; ++k) {
    int value = 0;
    for (int s = j + 1; s <= std::min(j + k, e); ++s) value += delta[static_cast<std::size_t>(s - 1)];
    for (int s = k + 1; s <= i; ++s) value += d[static_cast<std::size_t>(s - 1)];
    best = std::min(best, value);
  }
  return best;
}

void check_pr_case(Recorder& rec, const JordanType& j, const std::vector<int>& mu, const PrimeField& f) {
  const ConcreteModule m = realize(j, f);
  const std::string key = "e=" + std::to_string(j.e()) + " parts=" + join(j.parts()) + " mu=" + join(mu);
  const bool claimed = pr_exists(j, mu);
  if (claimed != pr_oracle_exists(m, mu)) return rec.fail(key + ": pr_exists disagrees with oracle");
  if (!claimed) {
    try {
      pr_construct(m, mu);
      return rec.fail(key + ": construction succeeded on an infeasible type");
    } catch (const PRInfeasible&) {
      return rec.pass();
    }
  }
  const PRDatum datum = pr_construct(m, mu);
  if (auto diag = validate_pr(datum, mu); !diag) return rec.fail(key + ": " + diag.message);
  if (!std::is_sorted(mu.begin(), mu.end(), std::greater<>())) return rec.pass();
  const std::vector<int> delta = j.delta();
  for (int i = 1; i <= j.e(); ++i)
    for (int p = 0; p <= j.e(); ++p) {
      const auto got = intersect(datum.flag[static_cast<std::size_t>(i)], power_image(m, p)).dim();
      if (static_cast<int>(got) != expected_alpha(delta, mu, i, p)) {
        return rec.fail(key + ": dim(M_" + std::to_string(i) + " ∩ T^" + std::to_string(p) + "M) differs");
      }
    }
  rec.pass();
}

}  // namespace

SweepResult sweep_hdg_pr(const VerifyConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  Recorder rec(3, "PR datum exists iff Hdg(M) >= P(mu)");
  const PrimeField f(2);
  for (int dim = 1; dim <= config.max_dim; ++dim)
    for (const auto& parts : partitions(dim, 3)) {
      const JordanType j(3, std::max(static_cast<int>(parts.size()), 3), parts);
      for (const auto& mu : all_lists(3, 3))
        if (std::accumulate(mu.begin(), mu.end(), 0) == dim) check_pr_case(rec, j, mu, f);
    }
  for (int dim = 1; dim <= 6; ++dim)
    for (const auto& parts : partitions(dim, 2)) {
      const JordanType j(2, static_cast<int>(parts.size()), parts);
      for (const auto& mu : all_lists(2, dim)) {
        if (std::accumulate(mu.begin(), mu.end(), 0) != dim || *std::max_element(mu.begin(), mu.end()) > j.h()) continue;
        check_pr_case(rec, j, mu, f);
      }
    }
  return rec.finish(start);
}

SweepResult sweep_e3_bijection(const VerifyConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  Recorder rec(4, "e=3 classes biject onto Y^adm");
  rec.check(enum_yadm(1, {1, 1, 1}).size() == 1, [] { return "|Y^adm(1,(1,1,1))| != 1"; });
  rec.check(enum_yadm(2, {1, 1, 1}).size() == 4, [] { return "|Y^adm(2,(1,1,1))| != 4"; });
  const int oracle_dim = std::min(config.max_dim, kOracleMaxDim);
  for (int h = 1; h <= oracle_dim; ++h)
    for (int a = 1; a <= h; ++a)
      for (int b = 0; b <= a; ++b)
        for (int c = 0; c <= b; ++c) {
          if (a + b + c > oracle_dim) continue;
          const std::array<int, 3> mu{a, b, c};
          const std::string key = "h=" + std::to_string(h) + " mu=" + join({a, b, c});
          const auto adm = enum_yadm(h, mu);
          const auto classes = iso_classes_oracle(h, mu);
          std::vector<StrataPoint> images;
          for (const auto& k : classes) images.push_back(phi(k.representative, h));
          std::sort(images.begin(), images.end());
          const bool injective = std::adjacent_find(images.begin(), images.end()) == images.end();
          rec.check(classes.size() == adm.size() && injective && images == adm, [&] {
            return key + ": " + std::to_string(classes.size()) + " classes, " + std::to_string(adm.size()) + " points";
          });
        }
  for (int h = 1; h <= 3; ++h)
    for (int a = 0; a <= h; ++a)
      for (int b = 0; b <= a; ++b)
        for (int c = 0; c <= b; ++c)
          for (const auto& y : enum_yadm(h, {a, b, c})) {
            try {
              rec.check(phi(normal_form(y, PrimeField(2)), h) == y, [&] { return "normal_form " + y.label(); });
            } catch (const std::exception& e) {
              rec.fail("normal_form " + y.label() + ": " + e.what());
            }
          }
  return rec.finish(start);
}

namespace {

Vector random_vector(std::mt19937_64& rng, const PrimeField& f, std::size_t n) {
  Vector v(n);
  for (auto& x : v) x = static_cast<Elem>(rng() % f.p());
  return v;
}

Vector random_element(std::mt19937_64& rng, const Subspace& s) {
  const PrimeField& f = s.field();
  Vector v(s.ambient_dim(), 0);
  for (std::size_t r = 0; r < s.dim(); ++r) {
    const auto c = static_cast<Elem>(rng() % f.p());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = f.add(v[j], f.mul(c, s.basis()(r, j)));
  }
  return v;
}

Subspace with_vector(const Subspace& s, const Vector& v) {
  return sum(s, Subspace::span(s.field(), s.ambient_dim(), std::vector<Vector>{v}));
}

Subspace t_closure(const Matrix& t, Subspace s) {
  while (true) {
    const Subspace next = sum(s, image(t, s));
    if (next.dim() == s.dim()) return s;
    s = next;
  }
}

// Random flag M_1 ⊆ ... ⊆ M_l = F_p^n, a random L̄ and its special dims.
struct RandomFlag {
  std::vector<Subspace> members;
  std::vector<int> ranks;
  Subspace special;
  std::vector<int> dims;
};

RandomFlag random_flag(std::mt19937_64& rng, const PrimeField& f, std::size_t n, std::size_t l) {
  std::vector<int> ranks;
  for (std::size_t i = 0; i + 1 < l; ++i) ranks.push_back(static_cast<int>(rng() % (n + 1)));
  ranks.push_back(static_cast<int>(n));
  std::sort(ranks.begin(), ranks.end());
  std::vector<Vector> basis;
  Subspace acc(f, n);
  while (acc.dim() < n) {
    const Vector v = random_vector(rng, f, n);
    if (acc.contains(v)) continue;
    basis.push_back(v);
    acc = with_vector(acc, v);
  }
  RandomFlag out{{}, ranks, Subspace(f, n), {}};
  for (int r : ranks) out.members.push_back(Subspace::span(f, n, std::vector<Vector>(basis.begin(), basis.begin() + r)));
  const std::size_t k = rng() % (n + 1);
  for (std::size_t i = 0; i < k; ++i) out.special = with_vector(out.special, random_vector(rng, f, n));
  for (const auto& m : out.members) out.dims.push_back(static_cast<int>(intersect(m, out.special).dim()));
  return out;
}

// First violated feasibility condition, scanned in the documented order.
std::optional<std::pair<std::string, std::size_t>> first_violation(const std::vector<int>& h, const std::vector<int>& d,
                                                                    const std::vector<int>& t) {
  const std::size_t l = t.size();
  auto prev = [](const std::vector<int>& v, std::size_t i) { return i == 0 ? 0 : v[i - 1]; };
  if (t[l - 1] != d[l - 1]) return std::pair{std::string("d'_l = d_l"), l};
  for (std::size_t i = 0; i < l; ++i)
    if (t[i] < prev(t, i)) return std::pair{std::string("d'_i - d'_{i-1} >= 0"), i + 1};
  for (std::size_t i = 0; i < l; ++i)
    if (t[i] - prev(t, i) > h[i] - prev(h, i)) return std::pair{std::string("d'_i - d'_{i-1} <= h_i - h_{i-1}"), i + 1};
  for (std::size_t i = 0; i < l; ++i)
    if (t[i] > d[i]) return std::pair{std::string("d'_i <= d_i"), i + 1};
  return std::nullopt;
}

}  // namespace

SweepResult sweep_hdg_filt(const VerifyConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  Recorder rec(5, "Hdg(M) >= Hdg(N) * Hdg(M/N)");
  std::mt19937_64 rng(sweep_seed(config, 5));
  for (int k = 0; k < 1000; ++k) {
    const PrimeField f(k % 2 == 0 ? 2 : 3);
    const int e = 1 + static_cast<int>(rng() % 3);
    const int dim = 1 + static_cast<int>(rng() % 6);
    const auto shapes = partitions(dim, e);
    const auto& parts = shapes[rng() % shapes.size()];
    const ConcreteModule m = realize(JordanType(e, static_cast<int>(parts.size()), parts), f);
    const int i = static_cast<int>(rng() % static_cast<std::uint64_t>(e + 1));
    const Subspace killed = torsion_flag(m, i);
    Subspace n = power_image(m, e - i);
    const std::size_t extra = rng() % 3;
    for (std::size_t r = 0; r < extra; ++r) n = with_vector(n, random_element(rng, killed));
    n = t_closure(m.t(), n);
    const int h = static_cast<int>(parts.size()) + static_cast<int>(rng() % 2);
    const std::string key = "p=" + std::to_string(f.p()) + " e=" + std::to_string(e) + " parts=" + join(parts) +
                            " i=" + std::to_string(i) + " dim N=" + std::to_string(n.dim());
    try {
      rec.check(check_hdg_filt(m, n, i, h), [&] { return key; });
    } catch (const std::exception& ex) {
      rec.fail(key + ": " + ex.what());
    }
  }
  return rec.finish(start);
}

SweepResult sweep_lifting(const VerifyConfig& config, int feasible_cases, int infeasible_cases) {
  const auto start = std::chrono::steady_clock::now();
  Recorder rec(6, "flag lifting: " + std::to_string(feasible_cases) + " feasible, " + std::to_string(infeasible_cases) +
                      " infeasible");
  std::mt19937_64 rng(sweep_seed(config, 6));
  int feasible = 0;
  int infeasible = 0;
  while (feasible < feasible_cases || infeasible < infeasible_cases) {
    const PrimeField f(rng() % 2 == 0 ? 2 : 3);
    const std::size_t n = 1 + rng() % 6;
    const std::size_t l = 1 + rng() % 4;
    const RandomFlag flag = random_flag(rng, f, n, l);
    std::vector<int> targets(l);
    for (auto& x : targets) x = static_cast<int>(rng() % (n + 1));
    const bool want_feasible = feasible < feasible_cases && (infeasible >= infeasible_cases || rng() % 6 != 0);
    if (want_feasible) {
      // Walk upwards choosing each step inside its allowed window.
      int prev = 0;
      for (std::size_t i = 0; i < l; ++i) {
        const int width = flag.ranks[i] - (i == 0 ? 0 : flag.ranks[i - 1]);
        const int hi = std::min(prev + width, flag.dims[i]);
        targets[i] = hi < prev ? -1 : prev + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - prev + 1));
        prev = targets[i];
      }
      if (first_violation(flag.ranks, flag.dims, targets)) continue;
    }
    const auto violation = first_violation(flag.ranks, flag.dims, targets);
    const LiftProblem problem = LiftProblem::constant(Flag(flag.members), flag.special, targets);
    const std::string key = "p=" + std::to_string(f.p()) + " h=" + join(flag.ranks) + " d=" + join(flag.dims) +
                            " d'=" + join(targets);
    if (!violation) {
      if (feasible >= feasible_cases) continue;
      ++feasible;
      try {
        const PolyMatrix lift = lift_subspace(problem, LiftOptions{std::nullopt, rng()});
        const LiftReport report = verify_lift(problem, lift);
        rec.check(report.ok(), [&] { return key + ": " + report.message; });
      } catch (const std::exception& ex) {
        rec.fail(key + ": " + ex.what());
      }
    } else {
      if (infeasible >= infeasible_cases) continue;
      ++infeasible;
      try {
        lift_subspace(problem);
        rec.fail(key + ": accepted");
      } catch (const LiftInfeasible& ex) {
        rec.check(ex.inequality() == violation->first && ex.index() == violation->second,
                  [&] { return key + ": reported " + ex.what(); });
      }
    }
  }
  return rec.finish(start);
}

SweepResult sweep_isotropic(const VerifyConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  Recorder rec(7, "isotropic lifting: Gram identically zero");
  std::mt19937_64 rng(sweep_seed(config, 7));
  int deformed = 0;
  while (rec.cases() < 200) {
    const PrimeField f(rng() % 2 == 0 ? 2 : 3);
    const std::size_t g = 1 + rng() % 2;
    const std::size_t n = 2 * g;
    const Matrix form = standard_symplectic(f, g);
    auto isotropic = [&](const Subspace& s) { return is_totally_isotropic(PolyMatrix::constant(f, s.basis()), form); };
    auto grow = [&](Subspace s) {
      for (int attempt = 0; attempt < 50; ++attempt) {
        const Subspace next = with_vector(s, random_vector(rng, f, n));
        if (next.dim() > s.dim() && isotropic(next)) return next;
      }
      return s;
    };
    // Isotropic chain, its orthogonals in reverse, then the whole space.
    std::vector<Subspace> chain;
    Subspace current(f, n);
    const std::size_t k = rng() % 3;
    for (std::size_t i = 0; i < k; ++i) {
      if (i == 0 || rng() % 2 == 0) current = grow(current);
      chain.push_back(current);
    }
    std::vector<Subspace> members = chain;
    for (std::size_t i = k; i-- > 0;) members.push_back(orthogonal(chain[i], form));
    members.push_back(Subspace::full(f, n));
    Subspace lagrangian(f, n);
    // Meeting the flag makes deformations possible.
    if (k > 0 && rng() % 2 == 0) lagrangian = with_vector(lagrangian, random_element(rng, chain.back()));
    for (int attempt = 0; attempt < 200 && lagrangian.dim() < g; ++attempt) lagrangian = grow(lagrangian);
    if (lagrangian.dim() < g) continue;

    const std::size_t l = members.size();
    std::vector<int> h;
    std::vector<int> d;
    for (const auto& m : members) {
      h.push_back(static_cast<int>(m.dim()));
      d.push_back(static_cast<int>(intersect(m, lagrangian).dim()));
    }
    // All valid target vectors; deformed ones are preferred two times in three.
    std::vector<std::vector<int>> valid;
    std::vector<std::vector<int>> moved;
    std::vector<int> targets(l, 0);
    while (true) {
      bool ok = targets[l - 1] == static_cast<int>(g) && !first_violation(h, d, targets);
      for (std::size_t i = 1; i < l && ok; ++i) ok = targets[l - i - 1] == static_cast<int>(g) - h[i - 1] + targets[i - 1];
      if (ok) (targets == d ? valid : moved).push_back(targets);
      std::size_t i = 0;
      while (i < l && targets[i] == d[i]) targets[i++] = 0;
      if (i == l) break;
      ++targets[i];
    }
    if (!moved.empty() && (valid.empty() || rng() % 3 != 0)) valid = moved;
    if (valid.empty()) continue;
    targets = valid[rng() % valid.size()];
    if (targets != d) ++deformed;
    const LiftProblem problem = LiftProblem::constant(Flag(members), lagrangian, targets);
    const std::string key = "p=" + std::to_string(f.p()) + " g=" + std::to_string(g) + " h=" + join(h) + " d=" + join(d) +
                            " d'=" + join(targets);
    try {
      const PolyMatrix lift = lift_isotropic(problem, form);
      const LiftReport report = verify_lift(problem, lift);
      rec.check(report.ok() && is_totally_isotropic(lift, form),
                [&] { return key + ": " + (report.ok() ? std::string("Gram not zero") : report.message); });
    } catch (const std::exception& ex) {
      rec.fail(key + ": " + ex.what());
    }
  }
  rec.detail("deformed=" + std::to_string(deformed));
  return rec.finish(start);
}

namespace {

void check_degeneration(Recorder& rec, const StrataPoint& from, const StrataPoint& to, bool polarized, int& comparable) {
  const std::string key = (polarized ? "pol " : "") + from.label() + " -> " + to.label() + " h=" + std::to_string(from.h);
  const bool related = leq(to, from);
  try {
    const DegenerationResult result = degenerate_step(from, to, PrimeField(2), polarized);
    if (!related) return rec.fail(key + ": incomparable pair accepted");
    ++comparable;
    // Independent re-check: special fibers and generic invariants.
    const auto& lifted = result.lifted;
    auto fiber = [&](const PolyMatrix& m) { return Subspace::span(PrimeField(2), m.cols(), m.special_fiber()); };
    const bool special = fiber(lifted.omega1) == result.special.omega1 && fiber(lifted.omega2) == result.special.omega2 &&
                         fiber(lifted.omega) == result.special.omega;
    const StrataPoint generic = generic_invariants(lifted, static_cast<std::size_t>(to.h), to.mu);
    bool isotropic = true;
    if (polarized) isotropic = is_totally_isotropic(lifted.omega, free_module_pairing(PrimeField(2), static_cast<std::size_t>(to.mu[0])));
    rec.check(special && generic == to && isotropic, [&] {
      return key + (special ? "" : ": special fiber moved") + (generic == to ? "" : ": generic " + generic.label()) +
             (isotropic ? "" : ": not isotropic");
    });
  } catch (const OrderViolation&) {
    rec.check(!related, [&] { return key + ": comparable pair refused"; });
  } catch (const std::exception& ex) {
    rec.fail(key + ": " + ex.what());
  }
}

}  // namespace

SweepResult sweep_degeneration(const VerifyConfig&) {
  const auto start = std::chrono::steady_clock::now();
  Recorder rec(8, "stratum degeneration over all ordered pairs");
  int comparable = 0;
  for (int h = 1; h <= 2; ++h)
    for (int a = 0; a <= h; ++a)
      for (int b = 0; b <= a; ++b)
        for (int c = 0; c <= b; ++c) {
          if (a + b + c == 0) continue;
          const auto points = enum_yadm(h, {a, b, c});
          for (const auto& from : points)
            for (const auto& to : points) check_degeneration(rec, from, to, false, comparable);
        }
  const auto polarized = enum_ypol(1);
  for (const auto& from : polarized)
    for (const auto& to : polarized) check_degeneration(rec, from, to, true, comparable);
  rec.detail("comparable=" + std::to_string(comparable));
  return rec.finish(start);
}

std::vector<SweepResult> run_all(const VerifyConfig& config) {
  using Sweep = SweepResult (*)(const VerifyConfig&);
  const Sweep lifting = [](const VerifyConfig& c) { return sweep_lifting(c); };
  const std::vector<Sweep> sweeps{sweep_dominance, sweep_hodge_identity, sweep_hdg_pr,    sweep_e3_bijection,
                                  sweep_hdg_filt,  lifting,              sweep_isotropic, sweep_degeneration};
  std::vector<std::future<SweepResult>> jobs;
  for (Sweep s : sweeps) jobs.push_back(std::async(std::launch::async, s, config));
  std::vector<SweepResult> out;
  for (auto& j : jobs) out.push_back(j.get());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.criterion < b.criterion; });
  return out;
}

std::string format_report(const VerifyConfig& config, const std::vector<SweepResult>& results) {
  std::ostringstream out;
  out << "hodge verify: max-dim " << config.max_dim << ", seed " << config.seed << '\n';
  int failed = 0;
  for (const auto& r : results) {
    out << (r.ok() ? "PASS" : "FAIL") << "  " << r.criterion << "  " << r.name << "  cases=" << r.cases
        << " failures=" << r.failures;
    if (!r.detail.empty()) out << ' ' << r.detail;
    out << '\n';
    for (const auto& s : r.samples) out << "      " << s << '\n';
    if (!r.ok()) ++failed;
  }
  out << (failed == 0 ? "all sweeps passed" : std::to_string(failed) + " sweep(s) failed") << '\n';
  return out.str();
}

}  // namespace hodge
