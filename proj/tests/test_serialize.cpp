#include "doctest.h"

#include "hodge/serialize.hpp"

using namespace hodge;

TEST_SUITE("serialize") {
  TEST_CASE("documented JSON shapes") {
    CHECK(to_json(Polygon(2, {2, 1})).dump() == R"({"h":2,"d":[2,1]})");
    CHECK(to_json(JordanType(3, 2, {3, 1})).dump() == R"({"e":3,"h":2,"parts":[3,1]})");
    const StrataPoint y{2, {1, 1, 1}, {2, 1, 0}, {2, 0}, {1, 1}};
    CHECK(to_json(y).dump() == R"({"delta":[2,1,0],"alpha":[2,0],"beta":[1,1]})");
  }

  TEST_CASE("round trips") {
    const Polygon p(3, {3, 1, 0});
    CHECK(polygon_from_json(to_json(p)) == p);
    const JordanType j(3, 2, {3, 1});
    CHECK(jordan_type_from_json(to_json(j)) == j);
    const PrimeField f(3);
    const ConcreteModule m = realize(j, f);
    const PRDatum d = pr_construct(m, {2, 1, 1});
    const PRDatum back = pr_datum_from_json(Json::parse(to_json(d).dump()));
    CHECK(back.module.t() == m.t());
    CHECK(back.module.field().p() == 3);
    REQUIRE(back.flag.size() == d.flag.size());
    for (std::size_t i = 0; i < d.flag.size(); ++i) CHECK(back.flag[i] == d.flag[i]);
  }

  TEST_CASE("polynomial matrices as coefficient arrays") {
    const PrimeField f(2);
    PolyMatrix m(f, 1, 2);
    m(0, 0) = Poly::constant(f, 1);
    m(0, 1) = Poly::monomial(f, 1, 1);
    CHECK(to_json(m).dump() == "[[[1],[0,1]]]");
  }

  TEST_CASE("csv and integer lists") {
    const std::vector<StrataPoint> pts{{1, {1, 1, 1}, {1, 1, 1}, {1, 1}, {1, 1}}};
    CHECK(to_csv(pts) == "h,mu1,mu2,mu3,delta1,delta2,delta3,alpha1,alpha2,beta1,beta2\n1,1,1,1,1,1,1,1,1,1,1\n");
    CHECK(parse_int_list("2,1,0") == std::vector<int>{2, 1, 0});
    CHECK(parse_int_list("-1") == std::vector<int>{-1});
    CHECK(parse_int_list("").empty());
    CHECK_THROWS_AS(parse_int_list("2,x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_int_list("2,,1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_int_list("1 "), std::invalid_argument);
  }
}
