#include "hodge/strat.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace hodge {

bool leq(const StrataPoint& lower, const StrataPoint& upper) {
  if (lower.h != upper.h || lower.mu != upper.mu) throw std::invalid_argument("leq: points have different (h, μ)");
  return dominates(upper.p1(), lower.p1()) && dominates(upper.p2(), lower.p2()) && dominates(upper.p3(), lower.p3());
}

StrataPoset::StrataPoset(std::vector<StrataPoint> points) : points_(std::move(points)) {
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
  const std::size_t n = points_.size();
  relation_.assign(n * n, false);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) relation_[a * n + b] = hodge::leq(points_[a], points_[b]);
}

std::size_t StrataPoset::index_of(const StrataPoint& y) const {
  const auto it = std::lower_bound(points_.begin(), points_.end(), y);
  return it != points_.end() && *it == y ? static_cast<std::size_t>(it - points_.begin()) : points_.size();
}

std::vector<StrataPoint> closure_set(const StrataPoint& y, const StrataPoset& poset) {
  const std::size_t i = poset.index_of(y);
  if (i == poset.size()) throw std::invalid_argument("closure_set: point not in poset");
  std::vector<StrataPoint> out;
  for (std::size_t j = 0; j < poset.size(); ++j)
    if (poset.leq(i, j)) out.push_back(poset.points()[j]);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> hasse(const StrataPoset& poset) {
  const std::size_t n = poset.size();
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !poset.leq(a, b)) continue;
      bool covered = true;
      for (std::size_t c = 0; c < n && covered; ++c)
        if (c != a && c != b && poset.leq(a, c) && poset.leq(c, b)) covered = false;
      if (covered) edges.emplace_back(a, b);
    }
  return edges;
}

std::string export_dot(const StrataPoset& poset) {
  std::ostringstream os;
  os << "digraph strata {\n";
  for (std::size_t i = 0; i < poset.size(); ++i) os << "  n" << i << " [label=\"" << poset.points()[i].label() << "\"];\n";
  for (const auto& [a, b] : hasse(poset)) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string export_json(const StrataPoset& poset) {
  nlohmann::json nodes = nlohmann::json::array();
  for (std::size_t i = 0; i < poset.size(); ++i) {
    const auto& y = poset.points()[i];
    nodes.push_back({{"id", i}, {"delta", y.delta}, {"alpha", y.alpha}, {"beta", y.beta}});
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [a, b] : hasse(poset)) edges.push_back({a, b});
  nlohmann::json doc{{"nodes", nodes}, {"edges", edges}};
  if (poset.size() > 0) {
    doc["h"] = poset.points().front().h;
    doc["mu"] = poset.points().front().mu;
  }
  return doc.dump() + "\n";
}

}  // namespace hodge
