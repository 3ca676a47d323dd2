#include "conesing/linalg.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <random>

using namespace conesing;
using conesing::testing::q;

namespace {

RationalMatrix from_ints(std::size_t r, std::size_t c, std::initializer_list<long> values) {
  std::vector<Rational> data;
  for (long v : values) data.emplace_back(v);
  return RationalMatrix(r, c, data);
}

}  // namespace

TEST_CASE("determinant and rank") {
  CHECK(determinant(from_ints(2, 2, {1, 2, 3, 4})) == -2);
  CHECK(determinant(from_ints(3, 3, {-2, 1, 0, 1, -2, 1, 0, 1, -2})) == -4);
  CHECK(determinant(from_ints(2, 2, {1, 2, 2, 4})) == 0);
  CHECK(rank(from_ints(2, 3, {1, 2, 3, 2, 4, 6})) == 1);
  CHECK(rank(RationalMatrix::identity(4)) == 4);
}

TEST_CASE("solve_square and solve_any") {
  auto x = solve_square(from_ints(2, 2, {2, 1, 1, 3}), std::vector<Rational>{Rational(1), Rational(2)});
  REQUIRE(x);
  CHECK((*x)[0] == q("1/5"));
  CHECK((*x)[1] == q("3/5"));
  CHECK_FALSE(solve_square(from_ints(2, 2, {1, 2, 2, 4}), std::vector<Rational>{Rational(1), Rational(0)}));

  auto y = solve_any(from_ints(3, 2, {1, 0, 0, 1, 1, 1}), std::vector<Rational>{Rational(1), Rational(2), Rational(3)});
  REQUIRE(y);
  CHECK(*y == std::vector<Rational>{Rational(1), Rational(2)});
  CHECK_FALSE(solve_any(from_ints(3, 2, {1, 0, 0, 1, 1, 1}), std::vector<Rational>{Rational(1), Rational(2), Rational(4)}));
}

TEST_CASE("null space vectors are annihilated") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> entry(-4, 4);
  for (int trial = 0; trial < 50; ++trial) {
    RationalMatrix m(3, 5);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 5; ++c) m(r, c) = entry(rng);
    auto basis = null_space(m);
    CHECK(basis.size() + rank(m) == 5);
    for (const auto& v : basis) {
      for (const auto& value : m.multiply(v)) CHECK(value == 0);
    }
  }
}

TEST_CASE("negative definiteness") {
  CHECK(is_negative_definite(from_ints(3, 3, {-2, 1, 0, 1, -2, 1, 0, 1, -2})));
  CHECK_FALSE(is_negative_definite(from_ints(2, 2, {-1, 1, 1, -1})));
  CHECK_FALSE(is_negative_definite(from_ints(1, 1, {1})));
}

TEST_CASE("transpose and row reduce") {
  RationalMatrix m = from_ints(2, 3, {1, 2, 3, 4, 5, 6});
  CHECK(m.transposed().transposed() == m);
  EchelonForm e = row_reduce(m);
  CHECK(e.rank() == 2);
  CHECK(e.pivots == std::vector<std::size_t>{0, 1});
  CHECK(e.matrix(0, 2) == -1);
  CHECK(e.matrix(1, 2) == 2);
}
