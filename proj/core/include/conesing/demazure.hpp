#pragma once

// The graded ring  R = sum_{n >= 0} H^0(P^1, floor(nD))  of a cone surface
// singularity: Hilbert data, explicit section bases, multiplication maps and
// a minimal presentation.

#include "conesing/divisor.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace conesing {

/// Coefficients in increasing degree.
using Polynomial = std::vector<Rational>;

struct HilbertData {
  std::vector<Integer> values;     // h(0), h(1), ... as far as computed
  Integer period;                  // L = lcm(q_i)
  std::vector<Integer> numerator;  // series = numerator / ((1 - T)(1 - T^L))

  /// First `terms` coefficients of numerator / ((1 - T)(1 - T^L)).
  std::vector<Integer> expand(std::size_t terms) const;
};

/// dim H^0(P^1, floor(nD)) = max(0, deg floor(nD) + 1).
Integer h0(const CurveCouple& c, std::int64_t n);

HilbertData hilbert_series(const CurveCouple& c);

/// Basis of H^0(floor(nD)): the functions g t^j, 0 <= j <= deg E, where
/// E = floor(nD) and g = prod over finite points (t - y_i)^(-E_i). Each element
/// is stored as its polynomial factor t^j against the shared pole datum E.
struct SectionBasis {
  std::int64_t degree = 0;
  IntegralDivisor pole_datum;
  std::vector<Polynomial> elements;
};

/// Label points are given coordinates first (assign_coordinates).
SectionBasis section_basis(const CurveCouple& c, std::int64_t n);

struct MultiplicationRank {
  std::size_t rank = 0;
  std::size_t cokernel = 0;
};

/// Rank of H^0(floor(aD)) (x) H^0(floor(bD)) -> H^0(floor((a+b)D)).
MultiplicationRank multiplication_rank(const CurveCouple& c, std::int64_t a, std::int64_t b);

struct Presentation {
  std::vector<std::int64_t> generator_degrees;
  std::vector<std::int64_t> relation_degrees;
  /// Minimal relations in the generators x0, x1, ... (only with <= 4 generators).
  std::vector<std::string> equations;
  std::int64_t search_bound = 0;
  std::int64_t relation_bound = 0;
  std::int64_t verified_through = 0;
};

/// 4 * L * max(1, ceil(1 / deg D)).
std::int64_t default_presentation_bound(const CurveCouple& c);

/// Minimal homogeneous generators up to degree gen_bound and minimal relations up to
/// rel_bound. The generated subalgebra is checked to fill every degree up to
/// 2 * max(gen_bound, rel_bound); otherwise throws Error(precondition, "BoundTooSmall").
/// Throws Error(precondition, "SearchTooLarge") when a relation degree has more
/// monomials than the search can handle.
Presentation presentation(const CurveCouple& c, std::int64_t gen_bound, std::int64_t rel_bound);

/// Number of minimal generators, using the default bound and no relation search.
std::int64_t embedding_dimension(const CurveCouple& c);
bool is_smooth(const CurveCouple& c);

}  // namespace conesing
