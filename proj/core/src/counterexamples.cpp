#include "conesing/counterexamples.hpp"

#include "conesing/divisor.hpp"
#include "conesing/error.hpp"
#include "conesing/linalg.hpp"
#include "conesing/quotient.hpp"
#include "conesing/resolution.hpp"
#include "conesing/toric.hpp"

#include <cstdlib>
#include <limits>

namespace conesing {

std::tuple<std::int64_t, std::int64_t, std::int64_t> an_action_weights(const AnActionParams& p) {
  return {p.a + p.b * p.n, -p.a + p.b * p.n, 2 * p.b};
}

bool an_is_cone_action(const AnActionParams& p) { return p.b != 0; }

AnScanResult an_min_over_actions(std::int64_t n, std::int64_t box) {
  if (box < 1) fail_precondition("BadBox", "scan box must be positive");
  if (n < 1) fail_precondition("BadBox", "n must be positive");
  AnScanResult r;
  r.n = n;
  r.box = box;
  r.value = std::numeric_limits<std::int64_t>::max();
  for (std::int64_t abs_b = 1; abs_b <= box; ++abs_b) {
    for (std::int64_t b : {abs_b, -abs_b}) {
      for (std::int64_t abs_a = 0; abs_a <= box; ++abs_a) {
        for (std::int64_t a : {abs_a, -abs_a}) {
          if (abs_a == 0 && a != 0) continue;
          auto [wx, wy, wz] = an_action_weights({n, a, b});
          (void)wz;
          std::int64_t v = std::max(std::llabs(wx), std::llabs(wy));
          if (v < r.value) {
            r.value = v;
            r.witness_a = a;
            r.witness_b = b;
          }
          if (abs_a == 0) break;
        }
      }
    }
  }
  r.bound_holds = r.value >= n;
  return r;
}

std::vector<RncRow> rnc_family_report(std::int64_t m_max) {
  std::vector<RncRow> rows;
  for (std::int64_t m = 1; m <= m_max; ++m) {
    CurveCouple c(QDivisor{{pt(0), Rational(m)}});
    RncRow row;
    row.m = m;
    row.a_e0 = vertex_log_discrepancy(c);
    row.cartier_index_kx = cartier_index_of_kx(c);
    row.max_isotropy = max_isotropy(c);
    row.mld = mld_vertex(c);
    rows.push_back(std::move(row));
  }
  return rows;
}

DiagonalConeReport diagonal_cone_report(std::int64_t d) {
  if (d < 1 || d > 3) fail_precondition("BadDimension", "toric check supports 1 <= d <= 3");
  Fan fan = projective_space(static_cast<std::size_t>(d));
  ToricDivisor h;
  h.coefficients.assign(fan.rays.size(), Rational(0));
  h.coefficients.back() = 1;
  ConeOfX k = cone_of_x(fan, h);

  DiagonalConeReport out;
  out.d = d;
  out.a_e0 = log_discrepancy_x(k, vertex_valuation(k));
  out.max_isotropy = cartier_index(fan, h);
  RationalMatrix m(0, k.rank);
  for (const auto& r : k.rays) {
    std::vector<Rational> row;
    for (auto x : r) row.push_back(Rational(static_cast<long>(x)));
    m.append_row(row);
  }
  out.smooth = k.rays.size() == k.rank && abs(determinant(m)) == 1;
  out.violations = verify_comparison(fan, h, {}).violations;
  return out;
}

}  // namespace conesing
