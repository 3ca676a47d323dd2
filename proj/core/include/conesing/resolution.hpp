#pragma once

// Star-shaped resolution of a cone surface singularity: a central rational
// curve E0 with one Hirzebruch-Jung chain per fractional point of D.
//
// This module is the discrepancy oracle. Nothing here reads the log Fano
// quotient formulas; everything comes from intersection numbers.

#include "conesing/divisor.hpp"
#include "conesing/linalg.hpp"

#include <array>
#include <vector>

namespace conesing {

/// Local chart of X~ over a point with coefficient p/q: the cone spanned by
/// (0,1) and (q,p), with 0 < p <= q and gcd(p,q) = 1. p = q = 1 is smooth.
struct LatticeCone2 {
  Integer q;
  Integer p;

  bool is_smooth() const { return q == 1; }
  friend bool operator==(const LatticeCone2&, const LatticeCone2&) = default;
};

using LatticePoint2 = std::array<Integer, 2>;

/// Throws Error(precondition, "IntegralPoint") when the coefficient at p is an integer.
LatticeCone2 local_cone_at(const CurveCouple& c, const MarkedPoint& p);

/// Self-intersections [-c_1, ..., -c_k] of the Hirzebruch-Jung chain, listed
/// from the (0,1) ray (the E0 side). Empty for a smooth cone.
std::vector<Integer> hj_chain(const LatticeCone2& cone);

/// The ray generators (0,1) = v_0, v_1, ..., v_{k+1} = (q,p) on the compact
/// faces of the convex hull of the nonzero lattice points of the cone.
std::vector<LatticePoint2> hj_ray_sequence(const LatticeCone2& cone);

struct ResolutionGraph {
  Integer central_self_intersection;           // -b0
  std::vector<MarkedPoint> chain_points;       // point of P^1 carrying each chain
  std::vector<std::vector<Integer>> chains;    // self-intersections, E0 side first
  RationalMatrix intersection_matrix;          // vertex 0 is E0, then chains in order
  std::vector<Rational> discrepancies;         // d with M d = k, k_j = -E_j^2 - 2
  Integer determinant;                         // |det M|

  std::size_t vertex_count() const { return intersection_matrix.rows(); }
  /// Discrepancy of E0.
  const Rational& central_discrepancy() const { return discrepancies.front(); }
};

/// Throws Error(precondition, "NotKlt") unless the log Fano quotient is log Fano.
ResolutionGraph build_graph(const CurveCouple& c);

/// Solves M d = k for k_j = -M_jj - 2. Throws Error(internal, "SingularMatrix")
/// when M is singular.
std::vector<Rational> discrepancies(const RationalMatrix& intersection_matrix);

/// Repeatedly contracts (-1)-curves, lowest index first. The result may be empty.
RationalMatrix blow_down(const RationalMatrix& intersection_matrix);

/// 1 + min_j d_j over the curves of the graph, or 2 if the graph is empty.
Rational mld_of_graph(const RationalMatrix& intersection_matrix);

/// Minimal log discrepancy of X at the vertex. Computed on the star graph and
/// on its blow-down; the two must agree.
Rational mld_vertex(const CurveCouple& c);

/// Diagonal of the fully blown-down graph (the minimal resolution).
std::vector<Integer> minimal_resolution_self_intersections(const CurveCouple& c);

struct TransverseType {
  MarkedPoint point;
  LatticeCone2 cone;
  Rational mld;  // toric mld of the chart germ, min over nonzero lattice points
};

/// Cyclic quotient charts of X~ along E0, one per fractional point.
std::vector<TransverseType> transverse_types(const CurveCouple& c);

/// Toric mld of a chart germ: min of the linear form that is 1 on both ray
/// generators, over nonzero lattice points of the cone.
Rational chart_mld(const LatticeCone2& cone);

/// True iff min(mld_vertex, 1) >= eps. Non-klt couples are not eps-lc.
/// Throws Error(precondition, "BadEpsilon") unless 0 < eps <= 1.
bool is_eps_lc_x(const CurveCouple& c, const Rational& eps);

Integer link_determinant(const ResolutionGraph& g);

/// Artin's fundamental cycle Z on the star graph (Laufer's algorithm).
std::vector<Integer> fundamental_cycle(const RationalMatrix& intersection_matrix);

/// 1 - Z^2, the embedding dimension of a rational surface singularity (2 when smooth).
Integer embedding_dimension_from_graph(const ResolutionGraph& g);

}  // namespace conesing
