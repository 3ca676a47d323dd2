#include "conesing/error.hpp"
#include "conesing/quotient.hpp"
#include "conesing/resolution.hpp"

#include "helpers.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace conesing;
using conesing::testing::couple;
using conesing::testing::frac;
using conesing::testing::q;

namespace {

std::vector<Integer> ints(std::initializer_list<long> values) { return {values.begin(), values.end()}; }

}  // namespace

TEST_CASE("local cones") {
  CHECK(local_cone_at(couple({{pt(0), q("1/2")}}), pt(0)) == LatticeCone2{2, 1});
  CHECK(local_cone_at(couple({{pt(0), q("2/3")}}), pt(0)) == LatticeCone2{3, 2});
  CHECK(local_cone_at(couple({{pt(0), q("5/3")}}), pt(0)) == LatticeCone2{3, 2});
  CHECK_THROWS_WITH_AS(local_cone_at(couple({{pt(0), Rational(1)}}), pt(0)), doctest::Contains("IntegralPoint"), Error);
}

TEST_CASE("Hirzebruch-Jung chains, E0 side first") {
  CHECK(hj_chain({2, 1}) == ints({-2}));
  CHECK(hj_chain({3, 2}) == ints({-3}));
  CHECK(hj_chain({5, 3}) == ints({-3, -2}));
  CHECK(hj_chain({3, 1}) == ints({-2, -2}));
  CHECK(hj_chain({7, 1}) == ints({-2, -2, -2, -2, -2, -2}));
  CHECK(hj_chain({7, 6}) == ints({-7}));
}

TEST_CASE("Hirzebruch-Jung chains agree with the lattice hull") {
  for (long qq = 2; qq <= 30; ++qq) {
    for (long p = 1; p < qq; ++p) {
      if (std::gcd(p, qq) != 1) continue;
      CAPTURE(qq);
      CAPTURE(p);
      std::vector<Integer> expected;
      for (auto c : conesing::testing::hull_chain(qq, p)) expected.emplace_back(static_cast<long>(c));
      CHECK(hj_chain({qq, p}) == expected);
      auto rays = hj_ray_sequence({qq, p});
      CHECK(rays.front() == LatticePoint2{Integer(0), Integer(1)});
      CHECK(rays.back() == LatticePoint2{Integer(qq), Integer(p)});
    }
  }
}

TEST_CASE("star graphs") {
  for (long m = 1; m <= 8; ++m) {
    ResolutionGraph g = build_graph(couple({{pt(0), Rational(m)}}));
    CHECK(g.central_self_intersection == -m);
    CHECK(g.chains.empty());
    CHECK(g.vertex_count() == 1);
    CHECK(g.discrepancies[0] == frac(2 - m, m));
    CHECK(link_determinant(g) == m);
  }

  ResolutionGraph a3 = build_graph(couple({{pt(0), q("1/2")}, {pt(1), q("1/2")}}));
  CHECK(a3.central_self_intersection == -2);
  CHECK(a3.chains == std::vector<std::vector<Integer>>{ints({-2}), ints({-2})});
  CHECK(a3.discrepancies == std::vector<Rational>(3, Rational(0)));
  CHECK(link_determinant(a3) == 4);

  ResolutionGraph star = build_graph(couple({{pt(0), q("1/2")}, {pt(1), q("1/2")}, {pt_inf(), q("1/2")}}));
  CHECK(star.central_self_intersection == -3);
  CHECK(star.chains.size() == 3);
  CHECK(link_determinant(star) == 12);

  CHECK_THROWS_WITH_AS(build_graph(couple({{pt(0), q("1/2")}, {pt(1), q("2/3")}, {pt_inf(), q("6/7")}})),
                       doctest::Contains("NotKlt"), Error);
}

TEST_CASE("discrepancies on explicit matrices") {
  RationalMatrix single(1, 1);
  single(0, 0) = -2;
  CHECK(discrepancies(single) == std::vector<Rational>{Rational(0)});
  CHECK(mld_of_graph(single) == 1);
  CHECK(mld_of_graph(RationalMatrix()) == 2);
}

TEST_CASE("blow-down of (-1)-curves") {
  // D = (2/3)[0]: E0^2 = -1 with a [-3] arm, contracting to an A1 point.
  CurveCouple c = couple({{pt(0), q("2/3")}});
  ResolutionGraph g = build_graph(c);
  CHECK(g.central_self_intersection == -1);
  CHECK(g.chains == std::vector<std::vector<Integer>>{ints({-3})});
  CHECK(minimal_resolution_self_intersections(c) == ints({-2}));
  CHECK(mld_vertex(c) == 1);

  CHECK(minimal_resolution_self_intersections(couple({{pt(0), Rational(1)}})).empty());
  CHECK(mld_vertex(couple({{pt(0), Rational(1)}})) == 2);
}

TEST_CASE("vertex mld") {
  CHECK(mld_vertex(couple({{pt(0), Rational(2)}})) == 1);
  for (long m = 2; m <= 12; ++m) CHECK(mld_vertex(couple({{pt(0), Rational(m)}})) == frac(2, m));
  CHECK(mld_vertex(couple({{pt(0), q("1/2")}, {pt(1), q("1/2")}})) == 1);
}

TEST_CASE("transverse types") {
  auto half = transverse_types(couple({{pt(0), q("1/2")}, {pt(1), Rational(2)}}));
  REQUIRE(half.size() == 1);
  CHECK(half[0].mld == 1);
  CHECK(half[0].point == pt(0));
  auto two_thirds = transverse_types(couple({{pt(0), q("2/3")}}));
  REQUIRE(two_thirds.size() == 1);
  CHECK(two_thirds[0].mld == q("2/3"));
  CHECK(chart_mld({5, 2}) == q("3/5"));
}

TEST_CASE("eps-lc test uses the vertex mld") {
  CHECK(is_eps_lc_x(couple({{pt(0), Rational(2)}}), 1));
  for (long m = 2; m <= 10; ++m) {
    for (const Rational& eps : {q("1/5"), q("1/3"), q("1/2"), q("2/3"), Rational(1)}) {
      CHECK(is_eps_lc_x(couple({{pt(0), Rational(m)}}), eps) == (frac(2, m) >= eps));
    }
  }
  CHECK(is_eps_lc_x(couple({{pt(0), q("1/2")}, {pt(1), q("1/2")}}), 1));
  CHECK(is_eps_lc_x(couple({{pt(0), q("2/3")}}), 1));
  CHECK_FALSE(is_eps_lc_x(couple({{pt(0), q("1/2")}, {pt(1), q("2/3")}, {pt_inf(), q("6/7")}}), q("1/100")));
  CHECK_THROWS_AS(is_eps_lc_x(couple({{pt(0), Rational(2)}}), 0), Error);
}

TEST_CASE("Artin embedding dimension") {
  CHECK(embedding_dimension_from_graph(build_graph(couple({{pt(0), Rational(1)}}))) == 2);
  for (long m = 2; m <= 8; ++m) {
    CHECK(embedding_dimension_from_graph(build_graph(couple({{pt(0), Rational(m)}}))) == m + 1);
  }
  CHECK(embedding_dimension_from_graph(build_graph(couple({{pt(0), q("1/2")}, {pt(1), q("1/2")}}))) == 3);
}

TEST_CASE("random couples: definiteness, integrality, and the vertex formula") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    CurveCouple c = conesing::testing::random_couple(rng, 3, 12, 10);
    CAPTURE(c.divisor().to_string());
    ResolutionGraph g = build_graph(c);
    CHECK(is_negative_definite(g.intersection_matrix));
    CHECK(1 + g.central_discrepancy() == vertex_log_discrepancy(c));
    for (const auto& d : g.discrepancies) CHECK(d > -1);
    Rational mld = mld_vertex(c);
    CHECK(mld == mld_of_graph(blow_down(g.intersection_matrix)));
    if (mld >= 1 && !minimal_resolution_self_intersections(c).empty()) {
      for (const auto& s : minimal_resolution_self_intersections(c)) CHECK(s == -2);
    }
  }
}
