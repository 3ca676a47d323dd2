#include "conesing/error.hpp"
#include "conesing/resolution.hpp"
#include "conesing/toric.hpp"

#include "helpers.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace conesing;
using conesing::testing::couple;
using conesing::testing::q;

namespace {

ToricDivisor div(std::initializer_list<const char*> cs) {
  ToricDivisor d;
  for (const char* c : cs) d.coefficients.push_back(q(c));
  return d;
}

}  // namespace

TEST_CASE("fan validation") {
  CHECK_NOTHROW(validate_fan(projective_space(1)));
  CHECK_NOTHROW(validate_fan(projective_space(2)));
  CHECK_NOTHROW(validate_fan(projective_space(3)));
  CHECK_NOTHROW(validate_fan(p1_times_p1()));
  CHECK_NOTHROW(validate_fan(weighted_plane(2, 3)));

  Fan not_primitive{1, {{2}, {-1}}, {{0}, {1}}};
  CHECK_THROWS_WITH_AS(validate_fan(not_primitive), doctest::Contains("InvalidFan"), Error);
  Fan incomplete{2, {{1, 0}, {0, 1}, {-1, 0}}, {{0, 1}, {1, 2}}};
  CHECK_THROWS_WITH_AS(validate_fan(incomplete), doctest::Contains("InvalidFan"), Error);
  Fan overlapping{2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 0}, {0, 1}}};
  CHECK_THROWS_AS(validate_fan(overlapping), Error);
}

TEST_CASE("support function") {
  Fan p1 = projective_space(1);
  ToricDivisor d = div({"3/4", "1"});
  CHECK(support_value(p1, d, std::vector<std::int64_t>{2}) == q("3/2"));
  CHECK(support_value(p1, d, std::vector<std::int64_t>{-3}) == 3);
  CHECK(weil_index(p1, d, std::vector<std::int64_t>{1}) == 4);
  CHECK(weil_index(p1, d, std::vector<std::int64_t>{2}) == 2);
  CHECK(cartier_index(p1, d) == 4);

  Fan p2 = projective_space(2);
  ToricDivisor h = div({"1/2", "1/3", "1/6"});
  CHECK(support_value(p2, h, std::vector<std::int64_t>{1, 1}) == q("5/6"));
  CHECK(cartier_index(p2, h) == 6);
  std::size_t cone = containing_cone(p2, std::vector<std::int64_t>{1, 1});
  auto form = cone_linear_form(p2, h.coefficients, cone);
  CHECK(form.size() == 2);
}

TEST_CASE("ampleness") {
  CHECK(is_ample(projective_space(2), div({"0", "0", "1"})));
  CHECK_FALSE(is_ample(projective_space(2), div({"0", "0", "0"})));
  CHECK(is_ample(p1_times_p1(), div({"1", "1", "0", "0"})));
  CHECK_FALSE(is_ample(p1_times_p1(), div({"1", "0", "0", "0"})));
  CHECK_THROWS_WITH_AS(cone_of_x(projective_space(2), div({"0", "0", "0"})), doctest::Contains("NotAmple"), Error);
}

TEST_CASE("cone over P^1 with D = 1/2 [0] + 1/2 [inf]") {
  Fan p1 = projective_space(1);
  ToricDivisor d = div({"1/2", "1/2"});
  ConeOfX c = cone_of_x(p1, d);
  CHECK(c.rank == 2);
  CHECK(c.rays == std::vector<LatticeVector>{{2, 1}, {-2, 1}});
  CHECK(c.ray_weil_indices == std::vector<Integer>{2, 2});
  CHECK(vertex_valuation(c) == LatticeVector{0, 1});
  CHECK(log_discrepancy_x(c, std::vector<std::int64_t>{0, 1}) == 1);
  CHECK(degree_ratio(p1, d) == Rational(1));
  CHECK(lattice_mld(c) == 1);
  CHECK(is_interior(c, std::vector<std::int64_t>{1, 1}));
  CHECK_FALSE(is_interior(c, std::vector<std::int64_t>{2, 1}));
}

TEST_CASE("smooth and Veronese cones") {
  ConeOfX c3 = cone_of_x(projective_space(2), div({"0", "0", "1"}));
  CHECK(log_discrepancy_x(c3, vertex_valuation(c3)) == 3);
  CHECK(lattice_mld(c3) == 3);
  CHECK(degree_ratio(projective_space(2), div({"0", "0", "1"})) == Rational(3));

  ConeOfX veronese = cone_of_x(projective_space(2), div({"0", "0", "2"}));
  CHECK(log_discrepancy_x(veronese, vertex_valuation(veronese)) == q("3/2"));
  CHECK(lattice_mld(veronese) == q("3/2"));

  for (long m = 1; m <= 8; ++m) {
    ConeOfX rnc = cone_of_x(projective_space(1), ToricDivisor{{Rational(m), Rational(0)}});
    CHECK(log_discrepancy_x(rnc, vertex_valuation(rnc)) == Rational(2) / m);
    CHECK(lattice_mld(rnc) == (m == 1 ? Rational(2) : Rational(2) / m));
  }
}

TEST_CASE("log discrepancies on Y") {
  Fan p2 = projective_space(2);
  ToricDivisor b = quotient_boundary(div({"1/2", "1/3", "1"}));
  CHECK(b.coefficients == std::vector<Rational>{q("1/2"), q("2/3"), Rational(0)});
  CHECK(log_discrepancy_y(p2, b, std::vector<std::int64_t>{1, 1}) == q("1/2") + q("1/3"));
}

TEST_CASE("Q-Gorenstein failure") {
  // P1 x P1 with unequal weights on the two rulings.
  ToricDivisor d = div({"1/2", "1", "1", "2"});
  REQUIRE(is_ample(p1_times_p1(), d));
  ConeOfX c = cone_of_x(p1_times_p1(), d);
  CHECK_FALSE(c.qgorenstein_form.has_value());
  CHECK_THROWS_WITH_AS(log_discrepancy_x(c, vertex_valuation(c)), doctest::Contains("NotQGorenstein"), Error);
  CHECK_FALSE(degree_ratio(p1_times_p1(), d).has_value());
}

TEST_CASE("comparison identity on seeded instances") {
  auto instances = conesing::testing::toric_instances(17, 40);
  CHECK(instances.size() == 40);
  std::mt19937_64 rng(17);
  for (const auto& inst : instances) {
    CAPTURE(inst.family);
    auto samples = random_primitive_samples(inst.fan, 20, rng);
    CHECK(samples.size() == 20);
    for (const auto& v : samples) CHECK(is_primitive(v));
    ComparisonReport r = verify_comparison(inst.fan, inst.divisor, samples);
    CHECK(r.violations == 0);
    CHECK(r.rays_have_unit_discrepancy);
    CHECK(r.vertex_matches);
    for (const auto& s : r.samples) {
      CHECK(s.identity_holds);
      CHECK(s.weil_below_cartier);
      CHECK(s.weil_index <= s.cone_cartier_index);
    }
  }
}

TEST_CASE("toric model of a couple") {
  ToricCouple t = toric_model_of_couple(couple({{pt(0), q("1/3")}, {pt(1), Rational(1)}, {pt_inf(), q("1/2")}}));
  CHECK(t.divisor.coefficients == std::vector<Rational>{q("1/2"), q("4/3")});
  CHECK_THROWS_WITH_AS(
      toric_model_of_couple(couple({{pt(0), q("1/2")}, {pt(1), q("1/2")}, {pt_inf(), q("1/2")}})),
      doctest::Contains("TooManyFractionalPoints"), Error);

  for (auto c : {couple({{pt(0), q("2/3")}}), couple({{pt(0), q("1/2")}, {pt(1), q("1/2")}}),
                 couple({{pt(0), q("2/5")}, {pt_inf(), q("4/7")}})}) {
    ToricCouple m = toric_model_of_couple(c);
    CHECK(lattice_mld(cone_of_x(m.fan, m.divisor)) == mld_vertex(c));
  }
}
