#pragma once

// The three families showing that none of the bounds d, eps, N can be dropped.

#include "conesing/rational.hpp"

#include <cstdint>
#include <tuple>
#include <vector>

namespace conesing {

struct AnActionParams {
  std::int64_t n = 1;
  std::int64_t a = 0;
  std::int64_t b = 0;
};

/// Weights (a + bn, -a + bn, 2b) on x, y, z of xy = z^n.
std::tuple<std::int64_t, std::int64_t, std::int64_t> an_action_weights(const AnActionParams& p);

/// The action is a good (cone) action iff b != 0.
bool an_is_cone_action(const AnActionParams& p);

struct AnScanResult {
  std::int64_t n = 0;
  std::int64_t box = 0;
  std::int64_t value = 0;  // min over the box of max(|a + bn|, |-a + bn|)
  std::int64_t witness_a = 0;
  std::int64_t witness_b = 0;
  bool bound_holds = false;  // value >= n
};

/// Exhaustive scan over |a|, |b| <= box with b != 0. Scan order: |b| ascending
/// with b > 0 first, then |a| ascending with a >= 0 first; the first minimiser wins.
/// Throws Error(precondition, "BadBox") when box < 1.
AnScanResult an_min_over_actions(std::int64_t n, std::int64_t box);

struct RncRow {
  std::int64_t m = 0;
  Rational a_e0;
  Integer cartier_index_kx;
  Integer max_isotropy;
  Rational mld;
};

/// Cones over rational normal curves of degree m = 1..m_max, D = m[pt].
std::vector<RncRow> rnc_family_report(std::int64_t m_max);

struct DiagonalConeReport {
  std::int64_t d = 0;
  Rational a_e0;
  Integer max_isotropy;       // Cartier index of D on the fan
  bool smooth = false;        // sigma_X is generated by part of a lattice basis
  std::size_t violations = 0; // comparison-identity violations at the rays
};

/// Cone over P^d embedded by the hyperplane class, via the toric model. Throws
/// Error(precondition, "BadDimension") unless 1 <= d <= 3.
DiagonalConeReport diagonal_cone_report(std::int64_t d);

}  // namespace conesing
