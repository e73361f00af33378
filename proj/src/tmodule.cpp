#include "hodge/tmodule.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hodge {

JordanType::JordanType(int e, int h, std::vector<int> parts) : e_(e), h_(h), parts_(std::move(parts)) {
  if (e_ < 1) throw std::invalid_argument("jordan type: e must be at least 1");
  if (h_ < 0) throw std::invalid_argument("jordan type: h must be non-negative");
  for (int a : parts_) {
    if (a < 0 || a > e_) throw std::invalid_argument("jordan type: part " + std::to_string(a) + " outside [0,e]");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  while (!parts_.empty() && static_cast<int>(parts_.size()) > h_ && parts_.back() == 0) parts_.pop_back();
  if (static_cast<int>(parts_.size()) > h_) {
    throw std::invalid_argument("jordan type: more than h=" + std::to_string(h_) + " nonzero parts");
  }
  parts_.resize(static_cast<std::size_t>(h_), 0);
}

JordanType JordanType::from_delta(int e, int h, const std::vector<int>& delta) {
  if (static_cast<int>(delta.size()) != e) throw std::invalid_argument("from_delta: δ must have length e");
  for (std::size_t i = 1; i < delta.size(); ++i) {
    if (delta[i] > delta[i - 1]) throw std::invalid_argument("from_delta: δ is not non-increasing");
  }
  if (!delta.empty() && delta.back() < 0) throw std::invalid_argument("from_delta: negative entry");
  std::vector<int> parts;
  const int blocks = delta.empty() ? 0 : delta.front();
  for (int j = 0; j < blocks; ++j) {
    int a = 0;
    while (a < e && delta[static_cast<std::size_t>(a)] > j) ++a;
    parts.push_back(a);
  }
  return JordanType(e, h, parts);
}

int JordanType::dim() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<int> JordanType::delta() const {
  std::vector<int> out(static_cast<std::size_t>(e_), 0);
  for (int a : parts_)
    for (int i = 0; i < a; ++i) ++out[static_cast<std::size_t>(i)];
  return out;
}

ConcreteModule::ConcreteModule(PrimeField field, int e, Matrix t) : field_(field), e_(e), t_(std::move(t)) {
  if (e_ < 1) throw std::invalid_argument("module: e must be at least 1");
  if (t_.rows() != t_.cols()) throw std::invalid_argument("module: operator is not square");
  if (!power(field_, t_, static_cast<std::size_t>(e_)).is_zero()) {
    throw std::invalid_argument("module: T^e is not zero");
  }
}

ConcreteModule realize(const JordanType& j, PrimeField field) {
  const auto n = static_cast<std::size_t>(j.dim());
  Matrix t(n, n);
  std::size_t offset = 0;
  for (int a : j.parts()) {
    for (int k = 1; k < a; ++k) t(offset + static_cast<std::size_t>(k) - 1, offset + static_cast<std::size_t>(k)) = 1;
    offset += static_cast<std::size_t>(a);
  }
  return ConcreteModule(field, j.e(), std::move(t));
}

JordanType jordan_type(const ConcreteModule& m, int h) {
  const int e = m.e();
  // ranks[i] = rank T^i; blocks of size >= i number ranks[i-1] - ranks[i].
  std::vector<int> ranks(static_cast<std::size_t>(e) + 1);
  for (int i = 0; i <= e; ++i) {
    ranks[static_cast<std::size_t>(i)] =
        static_cast<int>(rank(m.field(), power(m.field(), m.t(), static_cast<std::size_t>(i))));
  }
  std::vector<int> parts;
  for (int size = e; size >= 1; --size) {
    const auto s = static_cast<std::size_t>(size);
    const int at_least = ranks[s - 1] - ranks[s];
    const int at_least_next = size < e ? ranks[s] - ranks[s + 1] : 0;
    for (int c = 0; c < at_least - at_least_next; ++c) parts.push_back(size);
  }
  const int bound = h < 0 ? static_cast<int>(parts.size()) : h;
  return JordanType(e, bound, parts);
}

Subspace torsion_flag(const ConcreteModule& m, int i) {
  if (i < 0 || i > m.e()) throw std::out_of_range("torsion_flag: index outside [0,e]");
  return Subspace::span(m.field(), m.dim(), kernel(m.field(), power(m.field(), m.t(), static_cast<std::size_t>(i))));
}

Subspace power_image(const ConcreteModule& m, int i) {
  if (i < 0 || i > m.e()) throw std::out_of_range("power_image: index outside [0,e]");
  Subspace s = m.whole();
  for (int k = 0; k < i; ++k) s = image(m.t(), s);
  return s;
}

std::vector<int> delta_vector(const ConcreteModule& m) {
  std::vector<int> out;
  int prev = 0;
  for (int i = 1; i <= m.e(); ++i) {
    const int d = static_cast<int>(torsion_flag(m, i).dim());
    out.push_back(d - prev);
    prev = d;
  }
  return out;
}

bool is_t_stable(const ConcreteModule& m, const Subspace& s) { return s.contains(image(m.t(), s)); }

std::vector<int> submodule_delta(const ConcreteModule& m, const Subspace& s, int depth) {
  if (!is_t_stable(m, s)) throw std::invalid_argument("submodule_delta: subspace is not T-stable");
  std::vector<int> out;
  int prev = 0;
  for (int i = 1; i <= depth; ++i) {
    const Subspace ker = Subspace::span(m.field(), m.dim(),
                                        kernel(m.field(), power(m.field(), m.t(), static_cast<std::size_t>(i))));
    const int d = static_cast<int>(intersect(s, ker).dim());
    out.push_back(d - prev);
    prev = d;
  }
  if (prev != static_cast<int>(s.dim())) throw std::invalid_argument("submodule_delta: T^depth does not kill the subspace");
  return out;
}

std::vector<int> quotient_delta(const ConcreteModule& m, const Subspace& s, int depth) {
  if (!is_t_stable(m, s)) throw std::invalid_argument("quotient_delta: subspace is not T-stable");
  std::vector<int> out;
  // ker of T^i on M/S is T^{-i} S / S.
  Subspace pre = s;
  int prev = 0;
  for (int i = 1; i <= depth; ++i) {
    pre = preimage(m.t(), pre);
    const int d = static_cast<int>(pre.dim() - s.dim());
    out.push_back(d - prev);
    prev = d;
  }
  if (prev != static_cast<int>(m.dim() - s.dim())) {
    throw std::invalid_argument("quotient_delta: T^depth does not kill the quotient");
  }
  return out;
}

Polygon hodge_polygon_from_delta(int h, const std::vector<int>& delta) { return Polygon(h, delta); }

Polygon hodge_polygon(const JordanType& j) {
  std::vector<Rational> slopes;
  for (int a : j.parts()) slopes.emplace_back(a, j.e());
  Polygon from_parts = Polygon::from_slopes(j.h(), j.e(), slopes);
  if (!(from_parts == hodge_polygon_from_delta(j.h(), j.delta()))) {
    throw std::logic_error("hodge polygon: slope and δ computations disagree");
  }
  return from_parts;
}

Polygon hodge_polygon(const ConcreteModule& m, int h) { return hodge_polygon(jordan_type(m, h)); }

}  // namespace hodge
