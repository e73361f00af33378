#include "hodge/serialize.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace hodge {

Json to_json(const Polygon& p) { return Json{{"h", p.h()}, {"d", p.d()}}; }

Polygon polygon_from_json(const Json& j) { return Polygon(j.at("h").get<int>(), j.at("d").get<std::vector<int>>()); }

Json to_json(const JordanType& j) { return Json{{"e", j.e()}, {"h", j.h()}, {"parts", j.parts()}}; }

JordanType jordan_type_from_json(const Json& j) {
  return JordanType(j.at("e").get<int>(), j.at("h").get<int>(), j.at("parts").get<std::vector<int>>());
}

Json to_json(const StrataPoint& y) {
  return Json{{"delta", y.delta}, {"alpha", y.alpha}, {"beta", y.beta}};
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const PRDatum& d) {
  Json flag = Json::array();
  for (const auto& s : d.flag) flag.push_back(to_json(s.basis()));
  return Json{{"p", d.module.field().p()}, {"e", d.module.e()}, {"T", to_json(d.module.t())}, {"flag", flag}};
}

Matrix matrix_from_json(const Json& j, std::size_t cols) {
  Matrix m(j.size(), cols);
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (j[r].size() != cols) throw std::invalid_argument("matrix row has wrong length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = j[r][c].get<Elem>();
  }
  return m;
}

PRDatum pr_datum_from_json(const Json& j) {
  const PrimeField f(j.at("p").get<Elem>());
  const Json& t = j.at("T");
  const std::size_t n = t.size();
  auto reduced = [&](Matrix m) {
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) %= f.p();
    return m;
  };
  PRDatum out{ConcreteModule(f, j.at("e").get<int>(), reduced(matrix_from_json(t, n))), {}};
  for (const auto& member : j.at("flag")) {
    if (member.empty()) out.flag.push_back(Subspace(f, n));
    else out.flag.push_back(Subspace::span(f, n, reduced(matrix_from_json(member, n))));
  }
  return out;
}

Json to_json(const PolyMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).coeffs());
    out.push_back(std::move(row));
  }
  return out;
}

std::string to_csv(const std::vector<StrataPoint>& points) {
  std::ostringstream out;
  out << "h,mu1,mu2,mu3,delta1,delta2,delta3,alpha1,alpha2,beta1,beta2\n";
  for (const auto& y : points) {
    out << y.h << ',' << y.mu[0] << ',' << y.mu[1] << ',' << y.mu[2] << ',' << y.delta[0] << ',' << y.delta[1] << ','
        << y.delta[2] << ',' << y.alpha[0] << ',' << y.alpha[1] << ',' << y.beta[0] << ',' << y.beta[1] << '\n';
  }
  return out.str();
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find(',', start);
    const std::string item = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw std::invalid_argument("bad integer list: " + text);
    }
    out.push_back(value);
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

}  // namespace hodge
