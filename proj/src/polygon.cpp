#include "hodge/polygon.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hodge {

namespace {

void require_same_h(const Polygon& a, const Polygon& b) {
  if (a.h() != b.h()) {
    throw std::invalid_argument("polygons live on different intervals: h=" + std::to_string(a.h()) +
                                " vs h=" + std::to_string(b.h()));
  }
}

std::vector<std::int64_t> prefix_sums(const std::vector<int>& d) {
  std::vector<std::int64_t> out(d.size());
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < d.size(); ++i) out[i] = acc += d[i];
  return out;
}

}  // namespace

Polygon::Polygon(int h, std::vector<int> d) : h_(h), d_(std::move(d)) {
  if (h_ < 0) throw std::invalid_argument("polygon: h must be non-negative");
  if (d_.empty()) throw std::invalid_argument("polygon: empty d-list");
  for (int x : d_) {
    if (x < 0 || x > h_) {
      throw std::invalid_argument("polygon: entry " + std::to_string(x) + " outside [0," + std::to_string(h_) + "]");
    }
  }
  std::sort(d_.begin(), d_.end(), std::greater<>());
}

Polygon Polygon::from_slopes(int h, int denominator, const std::vector<Rational>& slopes) {
  if (denominator < 1) throw std::invalid_argument("from_slopes: denominator must be positive");
  if (static_cast<int>(slopes.size()) != h) throw std::invalid_argument("from_slopes: need exactly h slopes");
  std::vector<int> mult(static_cast<std::size_t>(denominator) + 1, 0);
  for (const auto& s : slopes) {
    const Rational scaled = s * Rational(denominator);
    if (scaled.denominator() != 1 || scaled < 0 || scaled > denominator) {
      throw std::invalid_argument("from_slopes: slope " + hodge::to_string(s) + " not in (1/" +
                                  std::to_string(denominator) + ")Z ∩ [0,1]");
    }
    ++mult[static_cast<std::size_t>(scaled.numerator())];
  }
  // d_i = h - (a_0 + ... + a_{i-1})
  std::vector<int> d(static_cast<std::size_t>(denominator));
  int acc = 0;
  for (int i = 1; i <= denominator; ++i) {
    acc += mult[static_cast<std::size_t>(i - 1)];
    d[static_cast<std::size_t>(i - 1)] = h - acc;
  }
  return Polygon(h, std::move(d));
}

int Polygon::mass() const { return std::accumulate(d_.begin(), d_.end(), 0); }

Rational Polygon::eval(Rational x) const {
  if (x < 0 || x > h_) throw std::out_of_range("polygon eval: x=" + hodge::to_string(x) + " outside [0,h]");
  Rational acc = 0;
  for (int di : d_) {
    const Rational t = x + Rational(di - h_);
    if (t > 0) acc += t;
  }
  return acc / Rational(denominator());
}

std::map<Rational, int> Polygon::slopes() const {
  const int n = denominator();
  std::map<Rational, int> out;
  for (int i = 0; i <= n; ++i) {
    const int upper = i == 0 ? h_ : d_[static_cast<std::size_t>(i - 1)];
    const int lower = i == n ? 0 : d_[static_cast<std::size_t>(i)];
    if (upper - lower > 0) out[Rational(i, n)] += upper - lower;
  }
  return out;
}

std::vector<std::pair<int, Rational>> Polygon::breakpoints() const {
  std::vector<std::pair<int, Rational>> out{{0, Rational(0)}};
  int x = 0;
  Rational y = 0;
  for (const auto& [slope, mult] : slopes()) {
    x += mult;
    y += slope * Rational(mult);
    out.emplace_back(x, y);
  }
  return out;
}

Polygon Polygon::refine(int k) const {
  if (k < 1) throw std::invalid_argument("refine: factor must be positive");
  std::vector<int> d;
  d.reserve(d_.size() * static_cast<std::size_t>(k));
  for (int x : d_)
    for (int j = 0; j < k; ++j) d.push_back(x);
  return Polygon(h_, std::move(d));
}

bool Polygon::operator==(const Polygon& other) const { return h_ == other.h_ && slopes() == other.slopes(); }

std::string Polygon::to_string() const {
  std::ostringstream os;
  os << "P(h=" << h_ << ";";
  for (std::size_t i = 0; i < d_.size(); ++i) os << (i ? "," : "") << d_[i];
  os << ")";
  return os.str();
}

std::vector<int> recover_d(const Polygon& p, int denominator) {
  std::vector<Rational> slopes;
  for (const auto& [s, m] : p.slopes())
    for (int i = 0; i < m; ++i) slopes.push_back(s);
  return Polygon::from_slopes(p.h(), denominator, slopes).d();
}

Polygon star(const Polygon& a, const Polygon& b) {
  require_same_h(a, b);
  std::vector<int> d = a.d();
  d.insert(d.end(), b.d().begin(), b.d().end());
  return Polygon(a.h(), std::move(d));
}

bool dominates_pointwise(const Polygon& p1, const Polygon& p2) {
  require_same_h(p1, p2);
  for (int x = 0; x <= p1.h(); ++x) {
    if (p1.eval(Rational(x)) < p2.eval(Rational(x))) return false;
  }
  return true;
}

bool dominates(const Polygon& p1, const Polygon& p2) {
  require_same_h(p1, p2);
  const int n = std::lcm(p1.denominator(), p2.denominator());
  const auto s1 = prefix_sums(p1.refine(n / p1.denominator()).d());
  const auto s2 = prefix_sums(p2.refine(n / p2.denominator()).d());
  bool verdict = true;
  for (std::size_t i = 0; i < s1.size(); ++i) {
    if (s2[i] > s1[i]) {
      verdict = false;
      break;
    }
  }
  assert(verdict == dominates_pointwise(p1, p2));
  return verdict;
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace hodge
