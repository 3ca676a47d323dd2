#pragma once

// The log Fano quotient (P^1, B) of a cone surface singularity and the log
// discrepancies of X that it controls.

#include "conesing/divisor.hpp"

namespace conesing {

/// (P^1, B) with B = sum (1 - 1/q_i) D_i.
class StandardPair {
 public:
  StandardPair() = default;
  /// Throws Error(precondition, "NonStandardCoefficient") unless every
  /// coefficient is 1 - 1/q for an integer q >= 2.
  explicit StandardPair(QDivisor boundary);

  const QDivisor& boundary() const noexcept { return boundary_; }

 private:
  QDivisor boundary_;
};

/// m (K + B) - u D = H with H integral of degree 0, m > 0 minimal, u < 0.
struct VertexData {
  Integer m;
  Integer u;
  IntegralDivisor h;
};

/// K_{P^1} as the fixed representative -2[inf].
QDivisor canonical_divisor_p1();

StandardPair log_fano_quotient(const CurveCouple& c);

Rational curve_log_discrepancy(const StandardPair& pair, const MarkedPoint& p);

/// Throws Error(precondition, "BadEpsilon") unless 0 < eps <= 1.
void check_epsilon(const Rational& eps);

bool is_eps_lc_pair(const StandardPair& pair, const Rational& eps);

/// klt (automatic for standard coefficients) and deg(K + B) < 0.
bool is_log_fano(const StandardPair& pair);

/// Throws Error(precondition, "NotLogFano") when the quotient is not log Fano.
void require_log_fano(const CurveCouple& c);

VertexData vertex_decomposition(const CurveCouple& c);

/// a_{E0}(K_X) = -u/m = deg(-(K + B)) / deg D.
Rational vertex_log_discrepancy(const CurveCouple& c);

/// W_P(D) (1 - b_P); identically 1 on a curve base.
Rational horizontal_log_discrepancy(const CurveCouple& c, const MarkedPoint& p);

/// Least m with m K_X principal, i.e. the m of vertex_decomposition.
Integer cartier_index_of_kx(const CurveCouple& c);

/// Necessary conditions for membership in the class of eps-lc cone surface
/// singularities with isotropies bounded by N, with the numbers that decide them.
struct NecessaryConditions {
  bool vertex_ok = false;     // a_E0 >= eps
  bool quotient_ok = false;   // (P^1, B) is eps/N-lc
  bool isotropy_ok = false;   // max isotropy <= N
  Rational vertex_log_discrepancy;
  Rational quotient_min_log_discrepancy;  // min over points of 1 - b_P (1 if B = 0)
  Rational eps_over_n;
  Integer max_isotropy;

  bool all() const { return vertex_ok && quotient_ok && isotropy_ok; }
};

NecessaryConditions necessary_eps_conditions(const CurveCouple& c, const Rational& eps, const Integer& n);

}  // namespace conesing
