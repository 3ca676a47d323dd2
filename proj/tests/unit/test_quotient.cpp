#include "conesing/error.hpp"
#include "conesing/quotient.hpp"
#include "conesing/resolution.hpp"

#include "helpers.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace conesing;
using conesing::testing::couple;
using conesing::testing::frac;
using conesing::testing::q;

TEST_CASE("log Fano quotient has standard coefficients") {
  CHECK(log_fano_quotient(couple({{pt(0), Rational(4)}})).boundary().empty());
  CHECK(log_fano_quotient(couple({{pt(0), q("1/2")}, {pt(1), q("2/3")}})).boundary() ==
        QDivisor{{pt(0), q("1/2")}, {pt(1), q("2/3")}});
  CHECK(log_fano_quotient(couple({{pt(0), q("5/3")}})).boundary() == QDivisor{{pt(0), q("2/3")}});
  CHECK_THROWS_WITH_AS(StandardPair(QDivisor{{pt(0), q("3/5")}}), doctest::Contains("NonStandardCoefficient"), Error);
}

TEST_CASE("curve log discrepancies and eps-lc pairs") {
  StandardPair half(QDivisor{{pt(0), q("1/2")}});
  CHECK(curve_log_discrepancy(half, pt(0)) == q("1/2"));
  CHECK(curve_log_discrepancy(half, pt(1)) == 1);
  CHECK(curve_log_discrepancy(StandardPair(QDivisor{{pt_inf(), q("6/7")}}), pt_inf()) == q("1/7"));

  CHECK(is_eps_lc_pair(StandardPair(), 1));
  CHECK(is_eps_lc_pair(half, q("1/2")));
  CHECK_FALSE(is_eps_lc_pair(StandardPair(QDivisor{{pt(0), q("2/3")}}), q("1/2")));
  CHECK_THROWS_WITH_AS(is_eps_lc_pair(half, 0), doctest::Contains("BadEpsilon"), Error);
  CHECK_THROWS_AS(is_eps_lc_pair(half, q("3/2")), Error);
}

TEST_CASE("log Fano test") {
  CHECK(is_log_fano(StandardPair(QDivisor{{pt(0), q("1/2")}, {pt(1), q("1/2")}, {pt_inf(), q("1/2")}})));
  CHECK_FALSE(is_log_fano(StandardPair(QDivisor{{pt(0), q("1/2")}, {pt(1), q("2/3")}, {pt_inf(), q("6/7")}})));
  CHECK(is_log_fano(StandardPair()));
  CHECK_THROWS_WITH_AS(require_log_fano(couple({{pt(0), q("1/2")}, {pt(1), q("2/3")}, {pt_inf(), q("6/7")}})),
                       doctest::Contains("NotLogFano"), Error);
}

TEST_CASE("vertex decomposition") {
  VertexData three = vertex_decomposition(couple({{pt(0), Rational(3)}}));
  CHECK(three.m == 3);
  CHECK(three.u == -2);
  CHECK(three.h == IntegralDivisor{{pt(0), Integer(6)}, {pt_inf(), Integer(-6)}});

  // A3 is Gorenstein: m = 1.
  VertexData a3 = vertex_decomposition(couple({{pt(0), q("1/2")}, {pt(1), q("1/2")}}));
  CHECK(a3.m == 1);
  CHECK(a3.u == -1);
  CHECK(a3.h == IntegralDivisor{{pt(0), Integer(1)}, {pt(1), Integer(1)}, {pt_inf(), Integer(-2)}});

  for (long e = 1; e <= 12; ++e) {
    VertexData v = vertex_decomposition(couple({{pt(2), Rational(e)}}));
    CHECK(Rational(v.u) / Rational(v.m) == frac(-2, e));
  }
}

TEST_CASE("vertex decomposition matches a brute-force minimality scan") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 150; ++trial) {
    CurveCouple c = conesing::testing::random_couple(rng, 3, 8, 6);
    auto oracle = conesing::testing::scan_vertex_decomposition(c, 400, 4000);
    REQUIRE(oracle.has_value());
    VertexData v = vertex_decomposition(c);
    CAPTURE(c.divisor().to_string());
    CHECK(v.m == oracle->m);
    CHECK(v.u == oracle->u);
    CHECK(to_rational(v.h) == Rational(v.m) * (canonical_divisor_p1() + log_fano_quotient(c).boundary()) -
                                  Rational(v.u) * c.divisor());
  }
}

TEST_CASE("vertex log discrepancy") {
  for (long m = 1; m <= 20; ++m) CHECK(vertex_log_discrepancy(couple({{pt(0), Rational(m)}})) == frac(2, m));
  CHECK(vertex_log_discrepancy(couple({{pt(0), Rational(1)}})) == 2);
  CurveCouple c = couple({{pt(0), q("1/2")}, {pt(1), q("1/2")}, {pt_inf(), q("1/2")}});
  CHECK(vertex_log_discrepancy(c) == q("1/3"));
  CHECK(1 + build_graph(c).central_discrepancy() == q("1/3"));
}

TEST_CASE("vertex log discrepancy is invariant under normal form and integral shifts") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    CurveCouple c = conesing::testing::random_couple(rng, 3, 9, 5);
    Rational a = vertex_log_discrepancy(c);
    CHECK(vertex_log_discrepancy(normal_form(c).couple) == a);
    QDivisor shifted = c.divisor();
    shifted.add(pt(7), Rational(2));
    shifted.add(pt(8), Rational(-2));
    CHECK(vertex_log_discrepancy(CurveCouple(shifted)) == a);
    CHECK(a * c.degree() == -(canonical_divisor_p1() + log_fano_quotient(c).boundary()).degree());
  }
}

TEST_CASE("horizontal log discrepancy is 1") {
  CHECK(horizontal_log_discrepancy(couple({{pt(0), q("1/2")}}), pt(0)) == 1);
  CHECK(horizontal_log_discrepancy(couple({{pt(0), q("2/3")}}), pt_inf()) == 1);
  CHECK(horizontal_log_discrepancy(couple({{pt(0), Rational(5)}}), pt(0)) == 1);
}

TEST_CASE("Cartier index of K_X") {
  CHECK(cartier_index_of_kx(couple({{pt(0), Rational(1)}})) == 1);
  CHECK(cartier_index_of_kx(couple({{pt(0), q("1/2")}, {pt(1), q("1/2")}})) == 1);
  // X_m = C^2 / mu_m(1,1): the index of K is m / gcd(m, 2).
  for (long m = 1; m <= 30; ++m) {
    CHECK(cartier_index_of_kx(couple({{pt(0), Rational(m)}})) == m / std::gcd(m, 2L));
  }
}

TEST_CASE("necessary eps conditions") {
  NecessaryConditions a1 = necessary_eps_conditions(couple({{pt(0), Rational(2)}}), 1, 1);
  CHECK(a1.all());
  NecessaryConditions three = necessary_eps_conditions(couple({{pt(0), Rational(3)}}), 1, 1);
  CHECK_FALSE(three.vertex_ok);
  CHECK(three.vertex_log_discrepancy == q("2/3"));
  NecessaryConditions a3 = necessary_eps_conditions(couple({{pt(0), q("1/2")}, {pt(1), q("1/2")}}), q("1/2"), 1);
  CHECK_FALSE(a3.isotropy_ok);
  CHECK(a3.max_isotropy == 2);
  CHECK(a3.quotient_ok);
  CHECK(a3.eps_over_n == q("1/2"));
  CHECK_THROWS_AS(necessary_eps_conditions(couple({{pt(0), Rational(2)}}), 0, 1), Error);
}
