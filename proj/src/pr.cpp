#include "hodge/pr.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <numeric>

namespace hodge {

namespace {

std::size_t to_size(int x) { return static_cast<std::size_t>(x); }

// Smallest i (1-based) where the prefix sums of mu exceed those of delta; 0 if none.
int dominance_witness(const std::vector<int>& delta, const PRType& sorted_mu) {
  int a = 0;
  int b = 0;
  for (std::size_t i = 0; i < sorted_mu.size(); ++i) {
    a += i < delta.size() ? delta[i] : 0;
    b += sorted_mu[i];
    if (b > a) return static_cast<int>(i) + 1;
  }
  return 0;
}

}  // namespace

PRType PRDatum::type() const {
  PRType out;
  for (std::size_t i = 1; i < flag.size(); ++i) out.push_back(static_cast<int>(flag[i].dim() - flag[i - 1].dim()));
  return out;
}

PRDiagnostics validate_pr(const PRDatum& datum, const PRType& mu) {
  const auto& m = datum.module;
  const int e = m.e();
  auto fail = [](int level, std::string msg) { return PRDiagnostics{false, level, std::move(msg)}; };
  if (static_cast<int>(mu.size()) != e) return fail(0, "type has length " + std::to_string(mu.size()) + ", expected e");
  if (static_cast<int>(datum.flag.size()) != e + 1) return fail(0, "flag must have e+1 members");
  for (std::size_t i = 0; i < datum.flag.size(); ++i) {
    if (datum.flag[i].ambient_dim() != m.dim() || !(datum.flag[i].field() == m.field())) {
      return fail(static_cast<int>(i), "flag member is not a subspace of M");
    }
  }
  if (datum.flag.front().dim() != 0) return fail(0, "M_0 is not zero");
  if (datum.flag.back().dim() != m.dim()) return fail(e, "M_e is not M");
  for (int i = 1; i <= e; ++i) {
    const auto& lower = datum.flag[to_size(i - 1)];
    const auto& upper = datum.flag[to_size(i)];
    if (!upper.contains(lower)) return fail(i, "M_" + std::to_string(i - 1) + " is not contained in M_" + std::to_string(i));
    if (!lower.contains(image(m.t(), upper))) {
      return fail(i, "T·M_" + std::to_string(i) + " is not contained in M_" + std::to_string(i - 1));
    }
    if (static_cast<int>(upper.dim() - lower.dim()) != mu[to_size(i - 1)]) {
      return fail(i, "dim M_" + std::to_string(i) + "/M_" + std::to_string(i - 1) + " is " +
                         std::to_string(upper.dim() - lower.dim()) + ", expected " + std::to_string(mu[to_size(i - 1)]));
    }
  }
  return {};
}

bool pr_exists(const JordanType& j, const PRType& mu) {
  if (static_cast<int>(mu.size()) != j.e()) return false;
  int total = 0;
  for (int d : mu) {
    if (d < 0 || d > j.h()) return false;
    total += d;
  }
  if (total != j.dim()) return false;
  return dominates(hodge_polygon(j), Polygon(j.h(), mu));
}

int pr_alpha(const std::vector<int>& delta, const PRType& sorted_mu, int i, int j) {
  auto delta_at = [&](int idx) { return idx >= 1 && idx <= static_cast<int>(delta.size()) ? delta[to_size(idx - 1)] : 0; };
  int best = std::numeric_limits<int>::max();
  for (int k = 0; k <= i; ++k) {
    int term = 0;
    for (int t = 1; t <= k; ++t) term += delta_at(j + t);
    for (int t = k + 1; t <= i; ++t) term += sorted_mu[to_size(t - 1)];
    best = std::min(best, term);
  }
  return best;
}

Subspace subspace_in_flag(const Flag& flag, const Subspace& floor, std::size_t target_dim,
                          std::span<const std::size_t> targets) {
  if (flag.size() == 0) throw std::invalid_argument("subspace_in_flag: empty flag");
  if (targets.size() != flag.size()) throw std::invalid_argument("subspace_in_flag: one target per flag member required");
  const Subspace& top = flag[flag.size() - 1];
  if (!top.contains(floor)) throw InfeasibleTargets("floor ⊆ top of flag", flag.size() - 1);
  if (targets.back() != target_dim) throw InfeasibleTargets("target on top member equals target_dim", flag.size() - 1);

  std::vector<std::size_t> floor_dims;
  for (std::size_t j = 0; j < flag.size(); ++j) floor_dims.push_back(intersect(floor, flag[j]).dim());
  for (std::size_t j = 0; j < flag.size(); ++j) {
    const std::size_t g = flag[j].dim();
    const std::size_t g_prev = j == 0 ? 0 : flag[j - 1].dim();
    const std::size_t t_prev = j == 0 ? 0 : targets[j - 1];
    const std::size_t f_prev = j == 0 ? 0 : floor_dims[j - 1];
    if (targets[j] < t_prev) throw InfeasibleTargets("targets non-decreasing", j);
    if (targets[j] > g) throw InfeasibleTargets("target <= dim of flag member", j);
    if (targets[j] - t_prev > g - g_prev) throw InfeasibleTargets("target step <= flag co-dimension step", j);
    if (targets[j] - t_prev < floor_dims[j] - f_prev) throw InfeasibleTargets("target step >= step forced by floor", j);
  }

  const PrimeField& f = floor.field();
  const std::size_t n = floor.ambient_dim();
  Subspace s = floor;
  for (std::size_t j = 0; j < flag.size(); ++j) {
    std::size_t current = intersect(s, flag[j]).dim();
    Subspace acc = j == 0 ? s : sum(s, flag[j - 1]);
    for (std::size_t b = 0; b < flag[j].dim() && current < targets[j]; ++b) {
      const auto v = flag[j].basis().row(b);
      if (acc.contains(v)) continue;
      const Subspace line = Subspace::span(f, n, std::vector<Vector>{Vector(v.begin(), v.end())});
      acc = sum(acc, line);
      s = sum(s, line);
      ++current;
    }
    if (current != targets[j]) throw InfeasibleTargets("greedy extension reached target", j);
  }
  return s;
}

PRDatum pr_construct(const ConcreteModule& m, const PRType& mu) {
  const int e = m.e();
  if (static_cast<int>(mu.size()) != e) throw std::invalid_argument("pr_construct: type must have length e");
  if (std::any_of(mu.begin(), mu.end(), [](int d) { return d < 0; })) {
    throw std::invalid_argument("pr_construct: negative graded dimension");
  }
  if (std::accumulate(mu.begin(), mu.end(), 0) != static_cast<int>(m.dim())) {
    throw PRInfeasible("pr_construct: Σ d_i differs from dim M", 0);
  }
  PRType sorted = mu;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  const std::vector<int> delta = delta_vector(m);
  if (const int w = dominance_witness(delta, sorted); w != 0) {
    throw PRInfeasible("pr_construct: Hdg(M) does not dominate P(μ); prefix " + std::to_string(w) + " fails", w);
  }

  // images[j] = T^j M for j = 0..e.
  std::vector<Subspace> images;
  for (int j = 0; j <= e; ++j) images.push_back(power_image(m, j));

  std::vector<Subspace> flag{m.zero()};
  for (int i = 0; i < e; ++i) {
    const Subspace container = preimage(m.t(), flag.back());
    std::vector<Subspace> chain;
    std::vector<std::size_t> targets;
    for (int j = e; j >= 0; --j) {
      chain.push_back(intersect(images[to_size(j)], container));
      targets.push_back(static_cast<std::size_t>(pr_alpha(delta, sorted, i + 1, j)));
    }
    flag.push_back(subspace_in_flag(Flag(chain), flag.back(), targets.back(), targets));
  }
  PRDatum datum{m, std::move(flag)};

  // Walk the sorted type back to the requested order by adjacent swaps.
  PRType current = sorted;
  for (std::size_t k = 0; k < current.size(); ++k) {
    std::size_t idx = k;
    while (current[idx] != mu[k]) ++idx;
    while (idx > k) {
      datum = pr_permute(datum, static_cast<int>(idx));
      std::swap(current[idx - 1], current[idx]);
      --idx;
    }
  }
  return datum;
}

PRDatum pr_permute(const PRDatum& datum, int i) {
  const int e = datum.module.e();
  if (i < 1 || i >= e) throw std::out_of_range("pr_permute: index outside [1, e-1]");
  const auto& m = datum.module;
  const Subspace& below = datum.flag[to_size(i - 1)];
  const Subspace& mid = datum.flag[to_size(i)];
  const Subspace& above = datum.flag[to_size(i + 1)];
  const std::size_t d_i = mid.dim() - below.dim();
  const std::size_t d_next = above.dim() - mid.dim();
  if (d_i == d_next) return datum;

  // N = M_{i+1}/M_{i-1}; need T·N ⊆ N_1 ⊆ N[T] with dim N_1 = d_{i+1}.
  const Subspace lower = sum(below, image(m.t(), above));
  const Subspace upper = intersect(above, preimage(m.t(), below));
  const std::size_t target = below.dim() + d_next;
  const std::vector<std::size_t> targets{target};
  PRDatum out = datum;
  out.flag[to_size(i)] = subspace_in_flag(Flag({upper}), lower, target, targets);
  return out;
}

bool pr_oracle_exists(const ConcreteModule& m, const PRType& mu, std::uint64_t cap) {
  const int e = m.e();
  if (static_cast<int>(mu.size()) != e) return false;
  if (std::any_of(mu.begin(), mu.end(), [](int d) { return d < 0; })) return false;
  if (std::accumulate(mu.begin(), mu.end(), 0) != static_cast<int>(m.dim())) return false;

  std::map<std::size_t, std::vector<Subspace>> by_dim;
  std::uint64_t budget = cap;
  auto subspaces_of_dim = [&](std::size_t d) -> const std::vector<Subspace>& {
    auto it = by_dim.find(d);
    if (it != by_dim.end()) return it->second;
    const auto count = gaussian_binomial(m.dim(), d, m.field().p());
    if (count > budget) throw EnumerationCapExceeded(count, budget);
    budget -= count;
    return by_dim.emplace(d, enumerate_subspaces(m.field(), m.dim(), d, cap)).first->second;
  };

  std::function<bool(int, const Subspace&, std::size_t)> search = [&](int level, const Subspace& prev,
                                                                       std::size_t dim_prev) {
    if (level == e) return true;
    const std::size_t d = dim_prev + to_size(mu[to_size(level)]);
    for (const auto& cand : subspaces_of_dim(d)) {
      if (!cand.contains(prev)) continue;
      if (!prev.contains(image(m.t(), cand))) continue;
      if (search(level + 1, cand, d)) return true;
    }
    return false;
  };
  return search(0, m.zero(), 0);
}

bool check_hdg_filt(const ConcreteModule& m, const Subspace& n, int i, int h) {
  const int e = m.e();
  if (i < 0 || i > e) throw std::invalid_argument("check_hdg_filt: i outside [0, e]");
  if (!is_t_stable(m, n)) throw std::invalid_argument("check_hdg_filt: N is not T-stable");
  Subspace killed = n;
  for (int k = 0; k < i; ++k) killed = image(m.t(), killed);
  if (killed.dim() != 0) throw std::invalid_argument("check_hdg_filt: T^i N is not zero");
  if (!n.contains(power_image(m, e - i))) throw std::invalid_argument("check_hdg_filt: T^{e-i} M is not inside N");

  const Polygon lhs(h, delta_vector(m));
  if (i == 0) return dominates(lhs, Polygon(h, quotient_delta(m, n, e)));
  if (i == e) return dominates(lhs, Polygon(h, submodule_delta(m, n, e)));
  return dominates(lhs, star(Polygon(h, submodule_delta(m, n, i)), Polygon(h, quotient_delta(m, n, e - i))));
}

}  // namespace hodge
