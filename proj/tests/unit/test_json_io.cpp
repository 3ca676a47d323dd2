#include "json_io.hpp"

#include "conesing/error.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace conesing;
using namespace conesing::io;
using conesing::testing::couple;
using conesing::testing::q;

TEST_CASE("rationals and integers") {
  CHECK(to_json(q("-3/4")) == "-3/4");
  CHECK(to_json(Rational(5)) == "5");
  CHECK(rational_from_json(Json("7/21")) == q("1/3"));
  CHECK(rational_from_json(Json(4)) == 4);
  CHECK_THROWS_AS(rational_from_json(Json("1/0")), Error);
  CHECK_THROWS_AS(rational_from_json(Json(true)), Error);
  CHECK(to_json(Integer(12)) == 12);
  Integer big("123456789012345678901234567890");
  CHECK(integer_from_json(to_json(big)) == big);
}

TEST_CASE("points and divisors round-trip") {
  for (const auto& p : {pt(0), pt_inf(), MarkedPoint::finite(q("-5/2")), MarkedPoint::label("p")}) {
    CHECK(point_from_json(to_json(p)) == p);
  }
  CurveCouple c = couple({{pt(0), q("1/2")}, {pt_inf(), Rational(-1)}, {pt(1), q("3/4")}});
  CHECK(couple_from_json(couple_to_json(c)).divisor() == c.divisor());
  CHECK(couple_to_json(c)["schema"] == kSchema);
  Json wrong = couple_to_json(c);
  wrong["schema"] = "other/2";
  CHECK_THROWS_AS(couple_from_json(wrong), Error);
  CHECK_THROWS_AS(couple_from_json(Json::object()), Error);
  CHECK_THROWS_AS(point_from_json(Json{{"t", "nowhere"}}), Error);
}

TEST_CASE("parse errors carry the parse kind") {
  try {
    parse_json_text("{ not json");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::parse);
  }
}

TEST_CASE("fans and toric divisors round-trip") {
  Fan f = weighted_plane(2, 3);
  Fan g = fan_from_json(to_json(f));
  CHECK(g.rank == f.rank);
  CHECK(g.rays == f.rays);
  CHECK(g.cones == f.cones);
  ToricDivisor d{{q("1/2"), Rational(0), q("5/3")}};
  CHECK(toric_divisor_from_json(to_json(d)).coefficients == d.coefficients);
  CHECK(toric_divisor_from_json(Json::array({"1/2", 1})).coefficients == std::vector<Rational>{q("1/2"), Rational(1)});
}

TEST_CASE("catalog round-trip") {
  SearchParams p{q("1/2"), Integer(3)};
  auto cat = enumerate(p, 2);
  Json j = catalog_to_json(cat, p);
  CHECK(j["schema"] == kSchema);
  CHECK(j["summary"]["count"] == cat.size());
  auto back = catalog_from_json(parse_json_text(j.dump()));
  REQUIRE(back.size() == cat.size());
  for (std::size_t i = 0; i < cat.size(); ++i) {
    CHECK(back[i].key == cat[i].key);
    CHECK(back[i].mld == cat[i].mld);
    CHECK(back[i].a_e0 == cat[i].a_e0);
    CHECK(back[i].graph.minimal_self_intersections == cat[i].graph.minimal_self_intersections);
    CHECK(back[i].hilbert_numerator == cat[i].hilbert_numerator);
  }
  SearchParams bp = catalog_params_from_json(j);
  CHECK(bp.epsilon == p.epsilon);
  CHECK(bp.isotropy_bound == p.isotropy_bound);
  CHECK(audit_catalog(back, bp).failures.empty());
}
