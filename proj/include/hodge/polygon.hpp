#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace hodge {

using Rational = boost::rational<std::int64_t>;

/// Convex polygon on [0, h] with integral breakpoints and slopes in
/// (1/N)Z ∩ [0, 1], given as P(d_1, ..., d_N)(x) = (1/N) Σ max(0, x + d_i - h).
///
/// The d-list is kept sorted non-increasing. Equality compares the underlying
/// functions, so P(2,[2,2]) == P(2,[2]).
class Polygon {
 public:
  Polygon(int h, std::vector<int> d);

  /// Builds the polygon with the given slope multiset; every slope must lie in
  /// (1/denominator)Z ∩ [0, 1] and there must be exactly h of them.
  static Polygon from_slopes(int h, int denominator, const std::vector<Rational>& slopes);

  int h() const { return h_; }
  int denominator() const { return static_cast<int>(d_.size()); }
  const std::vector<int>& d() const { return d_; }
  /// Σ d_i, i.e. N · P(h).
  int mass() const;

  Rational eval(Rational x) const;
  /// Slope -> multiplicity, zero multiplicities omitted.
  std::map<Rational, int> slopes() const;
  /// Vertices (x, P(x)) where the slope changes, including both endpoints.
  std::vector<std::pair<int, Rational>> breakpoints() const;

  Polygon refine(int k) const;

  bool operator==(const Polygon& other) const;
  std::string to_string() const;

 private:
  int h_;
  std::vector<int> d_;
};

/// d_1 >= ... >= d_N with P = P(d_1, ..., d_N) for the given denominator N.
std::vector<int> recover_d(const Polygon& p, int denominator);
inline std::vector<int> recover_d(const Polygon& p) { return recover_d(p, p.denominator()); }

Polygon star(const Polygon& a, const Polygon& b);

/// P1 >= P2 pointwise, decided with the prefix-sum criterion after refining
/// both polygons to a common denominator.
bool dominates(const Polygon& p1, const Polygon& p2);
/// Same relation, decided by evaluating at x = 0, ..., h.
bool dominates_pointwise(const Polygon& p1, const Polygon& p2);

std::string to_string(const Rational& r);

}  // namespace hodge
