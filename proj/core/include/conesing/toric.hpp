#pragma once

// Toric verification of the log discrepancy comparison: for a complete
// simplicial fan with an ample invariant Q-divisor D, the cone singularity X
// is the affine toric variety of the cone sigma_X over the graph of the
// support function of D, and every quantity on both sides of
//
//     a_{E_X}(K_X) = W_E(D) * a_E(K_Y + B)
//
// can be computed by lattice arithmetic.

#include "conesing/divisor.hpp"
#include "conesing/rational.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

namespace conesing {

using LatticeVector = std::vector<std::int64_t>;

struct Fan {
  std::size_t rank = 0;
  std::vector<LatticeVector> rays;
  std::vector<std::vector<std::size_t>> cones;  // maximal cones as ray indices
};

/// Throws Error(precondition, "InvalidFan") unless rays are primitive and
/// distinct, every maximal cone is simplicial and full-dimensional, and the
/// fan is complete.
void validate_fan(const Fan& fan);

Fan projective_space(std::size_t dim);
Fan p1_times_p1();
/// Rays (1,0), (0,1), (-a,-b) with gcd(a,b) = 1: the weighted plane P(a,b,1).
Fan weighted_plane(std::int64_t a, std::int64_t b);

struct ToricDivisor {
  std::vector<Rational> coefficients;  // aligned with fan rays
};

bool is_primitive(std::span<const std::int64_t> v);

/// Index of a maximal cone containing v (the first one, in cone order).
std::size_t containing_cone(const Fan& fan, std::span<const std::int64_t> v);

/// The linear form on `cone` taking value values[rho] at each of its rays.
std::vector<Rational> cone_linear_form(const Fan& fan, std::span<const Rational> values, std::size_t cone);

/// Piecewise-linear extension of D with support_value(v_rho) = c_rho.
Rational support_value(const Fan& fan, const ToricDivisor& d, std::span<const std::int64_t> v);

/// Denominator of support_value(v).
Integer weil_index(const Fan& fan, const ToricDivisor& d, std::span<const std::int64_t> v);

/// Least mu with mu * (linear form of D on the cone) integral.
Integer cartier_index_on_cone(const Fan& fan, const ToricDivisor& d, std::size_t cone);
/// lcm over maximal cones.
Integer cartier_index(const Fan& fan, const ToricDivisor& d);

/// Strict convexity of the support function across every wall.
bool is_ample(const Fan& fan, const ToricDivisor& d);

/// b_rho = 1 - 1/q_rho.
ToricDivisor quotient_boundary(const ToricDivisor& d);

/// Piecewise-linear function with value 1 - b_rho at rays, evaluated at v.
Rational log_discrepancy_y(const Fan& fan, const ToricDivisor& boundary, std::span<const std::int64_t> v);

/// sigma_X = cone over the graph of the support function, in N x Z.
struct ConeOfX {
  std::size_t rank = 0;
  std::vector<LatticeVector> rays;                  // primitive, W_rho * (v_rho, c_rho)
  std::vector<Integer> ray_weil_indices;            // W_rho
  std::vector<std::vector<Rational>> facets;        // inner normals (-l_tau, 1)
  std::optional<std::vector<Rational>> qgorenstein_form;  // value 1 on every ray
};

/// Throws Error(precondition, "NotAmple") unless D is ample.
ConeOfX cone_of_x(const Fan& fan, const ToricDivisor& d);

bool is_interior(const ConeOfX& cone, std::span<const std::int64_t> w);

/// <m_sigma, w>. Throws Error(precondition, "NotQGorenstein") when no covector
/// takes value 1 on every ray.
Rational log_discrepancy_x(const ConeOfX& cone, std::span<const std::int64_t> w);

/// The lattice point (0, ..., 0, 1), i.e. the valuation E0.
LatticeVector vertex_valuation(const ConeOfX& cone);

/// beta with -(K_Y + B) ~_Q beta D, computed from the linear relations among the
/// rays (independent of sigma_X); nullopt when the classes are not proportional.
std::optional<Rational> degree_ratio(const Fan& fan, const ToricDivisor& d);

/// Minimum of the Q-Gorenstein form over interior lattice points of sigma_X.
/// The search is confined to {A <= number of rays}, which contains the sum of the rays.
Rational lattice_mld(const ConeOfX& cone);

struct SampleCheck {
  LatticeVector v;
  LatticeVector w;          // primitive lift of (v, support_value(v))
  Integer weil_index;
  Integer cone_cartier_index;
  Rational a_x;             // a_{E_X}(K_X)
  Rational a_y;             // a_E(K_Y + B)
  bool identity_holds = false;     // a_x == weil_index * a_y
  bool weil_below_cartier = false; // weil_index divides cone_cartier_index
};

struct ComparisonReport {
  std::vector<SampleCheck> samples;
  bool rays_have_unit_discrepancy = false;
  Rational vertex_a_x;
  std::optional<Rational> degree_ratio;
  bool vertex_matches = false;  // vertex_a_x == degree_ratio (when proportional)
  std::size_t violations = 0;
};

/// Throws Error(precondition, "NotQGorenstein") when sigma_X is not Q-Gorenstein.
ComparisonReport verify_comparison(const Fan& fan, const ToricDivisor& d, std::span<const LatticeVector> samples);

/// Primitive nonzero vectors with coordinates in [-bound, bound].
std::vector<LatticeVector> random_primitive_samples(const Fan& fan, std::size_t count, std::mt19937_64& rng,
                                                    std::int64_t bound = 12);

/// P^1 with D placed on the two torus-fixed points (ray +1 <-> [0], ray -1 <-> [inf]).
struct ToricCouple {
  Fan fan;
  ToricDivisor divisor;
};

/// Linearly equivalent toric model of a couple with at most two fractional points.
/// Throws Error(precondition, "TooManyFractionalPoints") otherwise.
ToricCouple toric_model_of_couple(const CurveCouple& c);

}  // namespace conesing
