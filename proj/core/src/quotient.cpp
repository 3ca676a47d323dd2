#include "conesing/quotient.hpp"

#include "conesing/error.hpp"

namespace conesing {

StandardPair::StandardPair(QDivisor boundary) : boundary_(std::move(boundary)) {
  for (const auto& [p, b] : boundary_.terms()) {
    Rational gap = 1 - b;
    if (gap <= 0 || numerator(gap) != 1) {
      fail_precondition("NonStandardCoefficient", "coefficient " + to_string(b) + " at " + p.to_string());
    }
  }
}

QDivisor canonical_divisor_p1() { return QDivisor{{pt_inf(), Rational(-2)}}; }

StandardPair log_fano_quotient(const CurveCouple& c) {
  QDivisor b;
  for (const auto& [p, coeff] : c.divisor().terms()) {
    Integer q = denominator(coeff);
    if (q >= 2) b.add(p, 1 - Rational(1, q));
  }
  return StandardPair(std::move(b));
}

Rational curve_log_discrepancy(const StandardPair& pair, const MarkedPoint& p) {
  return 1 - pair.boundary().coefficient(p);
}

void check_epsilon(const Rational& eps) {
  if (eps <= 0 || eps > 1) fail_precondition("BadEpsilon", "epsilon " + to_string(eps) + " outside (0,1]");
}

bool is_eps_lc_pair(const StandardPair& pair, const Rational& eps) {
  check_epsilon(eps);
  for (const auto& [p, b] : pair.boundary().terms()) {
    if (b > 1 - eps) return false;
  }
  return true;
}

bool is_log_fano(const StandardPair& pair) {
  for (const auto& [p, b] : pair.boundary().terms()) {
    if (b >= 1) return false;
  }
  return pair.boundary().degree() - 2 < 0;
}

void require_log_fano(const CurveCouple& c) {
  if (!is_log_fano(log_fano_quotient(c))) {
    fail_precondition("NotLogFano", "deg(K + B) >= 0 for D = " + c.divisor().to_string());
  }
}

VertexData vertex_decomposition(const CurveCouple& c) {
  require_log_fano(c);
  const QDivisor& d = c.divisor();
  QDivisor k_plus_b = canonical_divisor_p1() + log_fano_quotient(c).boundary();
  Rational ratio = k_plus_b.degree() / d.degree();  // u/m, negative

  // Scan m = 1, 2, ... ; m = period(D) * den(ratio) always works.
  Integer cap = period(d) * denominator(ratio);
  for (Integer m = 1; m <= cap; ++m) {
    Rational u = Rational(m) * ratio;
    if (!is_integral(u)) continue;
    QDivisor h = Rational(m) * k_plus_b - u * d;
    bool integral = true;
    for (const auto& [p, coeff] : h.terms()) {
      if (!is_integral(coeff)) {
        integral = false;
        break;
      }
    }
    if (!integral) continue;
    IntegralDivisor h_int;
    for (const auto& [p, coeff] : h.terms()) h_int.add(p, numerator(coeff));
    ensure(h_int.degree() == 0, "vertex decomposition H has nonzero degree");
    ensure(numerator(u) < 0, "vertex decomposition u is not negative");
    return {m, numerator(u), std::move(h_int)};
  }
  fail_internal("InternalNoDecomposition", "no m <= " + to_string(cap) + " clears denominators");
}

Rational vertex_log_discrepancy(const CurveCouple& c) {
  VertexData v = vertex_decomposition(c);
  Rational a(-v.u, v.m);
  a.canonicalize();
  QDivisor k_plus_b = canonical_divisor_p1() + log_fano_quotient(c).boundary();
  ensure(a == -k_plus_b.degree() / c.degree(), "-u/m differs from the degree ratio");
  ensure(a > 0, "vertex log discrepancy is not positive");
  return a;
}

Rational horizontal_log_discrepancy(const CurveCouple& c, const MarkedPoint& p) {
  require_log_fano(c);
  Rational value = Rational(weil_index_at(c.divisor(), p)) * curve_log_discrepancy(log_fano_quotient(c), p);
  ensure(value == 1, "horizontal log discrepancy differs from 1");
  return value;
}

Integer cartier_index_of_kx(const CurveCouple& c) { return vertex_decomposition(c).m; }

NecessaryConditions necessary_eps_conditions(const CurveCouple& c, const Rational& eps, const Integer& n) {
  check_epsilon(eps);
  NecessaryConditions out;
  StandardPair quotient = log_fano_quotient(c);
  out.vertex_log_discrepancy = vertex_log_discrepancy(c);
  out.eps_over_n = eps / Rational(n);
  out.quotient_min_log_discrepancy = 1;
  for (const auto& [p, b] : quotient.boundary().terms()) {
    out.quotient_min_log_discrepancy = std::min(out.quotient_min_log_discrepancy, Rational(1 - b));
  }
  out.max_isotropy = max_isotropy(c);
  out.vertex_ok = out.vertex_log_discrepancy >= eps;
  out.quotient_ok = is_eps_lc_pair(quotient, out.eps_over_n);
  out.isotropy_ok = out.max_isotropy <= n;
  return out;
}

}  // namespace conesing
