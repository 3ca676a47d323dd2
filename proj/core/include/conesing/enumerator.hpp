#pragma once

// Exhaustive enumeration of eps-lc cone surface singularities with isotropy
// orders bounded by N, up to isomorphism.

#include "conesing/divisor.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace conesing {

/// Throws Error(precondition, "BadEpsilon") unless 0 < epsilon <= 1, and
/// Error(precondition, "BadIsotropyBound") unless isotropy_bound >= 1.
struct SearchParams {
  Rational epsilon;
  Integer isotropy_bound;

  void validate() const;
};

struct SearchBounds {
  int k_max = 3;            // fractional points allowed by sum (1 - 1/q) < 2
  int effective_k_max = 3;  // 0 when no denominator q >= 2 is admissible
  Integer q_min = 2;
  Integer q_max;            // min(N, floor(N / eps))
  Rational degree_max;      // 2 / eps
};

SearchBounds search_bounds(const SearchParams& params);

struct GraphSummary {
  Integer central_self_intersection;
  std::vector<std::vector<Integer>> chains;
  std::vector<Integer> minimal_self_intersections;  // after contracting (-1)-curves
};

struct CatalogEntry {
  NormalFormKey key;
  Rational degree;
  std::vector<Rational> fractional_parts;  // descending, at 0, 1, inf
  Rational a_e0;
  Rational mld;
  Integer cartier_index_kx;
  Integer max_isotropy;
  Integer link_determinant;
  std::vector<Integer> hilbert_numerator;
  Integer hilbert_period;
  Integer embedding_dimension;
  GraphSummary graph;

  bool is_smooth() const { return graph.minimal_self_intersections.empty(); }
};

/// The couple with the given fractional parts at 0, 1, inf (in order) and the
/// integral part at inf.
CurveCouple couple_from_fractional_data(const std::vector<Rational>& fractional_parts, const Rational& degree);

/// All invariants of one couple, as stored in a catalog.
CatalogEntry make_entry(const CurveCouple& c);

/// Canonical catalog order: degree, then number of fractional points, then
/// fractional parts lexicographically.
bool catalog_less(const CatalogEntry& a, const CatalogEntry& b);

/// Sorted by catalog_less, keys unique. `jobs` = 0 uses the hardware concurrency;
/// the result does not depend on it.
std::vector<CatalogEntry> enumerate(const SearchParams& params, unsigned jobs = 0);

std::set<Rational> mld_spectrum(const std::vector<CatalogEntry>& catalog);

struct AuditFailure {
  std::size_t index = 0;
  std::string key;
  std::vector<std::string> reasons;
};

struct AuditReport {
  std::size_t checked = 0;
  std::vector<AuditFailure> failures;
};

/// Recomputes every entry from its fractional data and degree and checks the
/// necessary conditions, eps-lc membership, isotropy bound, key uniqueness, and
/// a_E0 = 1 + (central discrepancy) against the stored values.
AuditReport audit_catalog(const std::vector<CatalogEntry>& catalog, const SearchParams& params);

}  // namespace conesing
