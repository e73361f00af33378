#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "hodge/polygon.hpp"
#include "hodge/pr.hpp"

namespace hodge {

/// A triple of polygons (P1, P2, P3) = (P(δ), P(α), P(β)) for the e = 3
/// classification, with P1 ∈ 𝒫_3 and P2, P3 ∈ 𝒫_2 on [0, h].
struct StrataPoint {
  int h = 0;
  std::array<int, 3> mu{};
  std::array<int, 3> delta{};
  std::array<int, 2> alpha{};
  std::array<int, 2> beta{};

  Polygon p1() const { return Polygon(h, {delta.begin(), delta.end()}); }
  Polygon p2() const { return Polygon(h, {alpha.begin(), alpha.end()}); }
  Polygon p3() const { return Polygon(h, {beta.begin(), beta.end()}); }

  bool operator==(const StrataPoint&) const = default;
  /// Lexicographic on (h, μ, δ, α, β).
  auto operator<=>(const StrataPoint&) const = default;

  /// "(δ1,δ2,δ3|α1,α2|β1,β2)"
  std::string label() const;
};

struct MembershipCheck {
  bool ok = true;
  std::string failed;  // first violated condition, empty when ok

  explicit operator bool() const { return ok; }
};

/// Sortedness, ranges, masses, and the four dominance conditions.
MembershipCheck check_in_y(const StrataPoint& y);
/// check_in_y plus δ1 + max(d2, δ2) <= α1 + β1.
MembershipCheck check_admissible(const StrataPoint& y);
/// check_admissible plus h = 2g, μ = (g,g,g), δ = (r, g, 2g-r) with g <= r <= 2g.
MembershipCheck check_polarized(const StrataPoint& y);

std::vector<StrataPoint> enum_y(int h, const std::array<int, 3>& mu);
std::vector<StrataPoint> enum_yadm(int h, const std::array<int, 3>& mu);
std::vector<StrataPoint> enum_ypol(int g);

/// (Hdg(M), Hdg(M_2), Hdg(M/M_1)) of a valid e = 3 datum, on [0, h].
StrataPoint phi(const PRDatum& datum, int h);

class InadmissiblePoint : public std::invalid_argument {
 public:
  explicit InadmissiblePoint(const std::string& failed)
      : std::invalid_argument("point is not admissible: " + failed), failed_(failed) {}
  const std::string& failed() const { return failed_; }

 private:
  std::string failed_;
};

/// A datum with phi(normal_form(y)) == y, built on the Jordan-block module
/// with δ = y.delta.
PRDatum normal_form(const StrataPoint& y, PrimeField field);

}  // namespace hodge
