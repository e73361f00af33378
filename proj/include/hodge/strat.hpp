#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hodge/e3.hpp"

namespace hodge {

/// y <= y' iff P_i(y') dominates P_i(y) for i = 1, 2, 3. Throws on an (h, μ) mismatch.
bool leq(const StrataPoint& lower, const StrataPoint& upper);

class StrataPoset {
 public:
  explicit StrataPoset(std::vector<StrataPoint> points);
  static StrataPoset admissible(int h, const std::array<int, 3>& mu) { return StrataPoset(enum_yadm(h, mu)); }
  static StrataPoset polarized(int g) { return StrataPoset(enum_ypol(g)); }

  const std::vector<StrataPoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  /// Position of y in points(), or size() when absent.
  std::size_t index_of(const StrataPoint& y) const;
  bool leq(std::size_t a, std::size_t b) const { return relation_[a * points_.size() + b]; }

 private:
  std::vector<StrataPoint> points_;
  std::vector<bool> relation_;
};

/// Every point of the poset lying above y (y included), in poset order.
std::vector<StrataPoint> closure_set(const StrataPoint& y, const StrataPoset& poset);

/// Covering pairs (lower, upper) as indices into points(), sorted.
std::vector<std::pair<std::size_t, std::size_t>> hasse(const StrataPoset& poset);

std::string export_dot(const StrataPoset& poset);
std::string export_json(const StrataPoset& poset);

}  // namespace hodge
