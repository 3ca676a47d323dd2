#include "conesing/resolution.hpp"

#include "conesing/error.hpp"
#include "conesing/quotient.hpp"

#include <algorithm>

namespace conesing {

LatticeCone2 local_cone_at(const CurveCouple& c, const MarkedPoint& p) {
  Rational coeff = c.divisor().coefficient(p);
  Integer q = denominator(coeff);
  if (q == 1) fail_precondition("IntegralPoint", "coefficient at " + p.to_string() + " is integral");
  Integer p_mod = numerator(fractional_part(coeff));
  return {q, p_mod};
}

std::vector<LatticePoint2> hj_ray_sequence(const LatticeCone2& cone) {
  std::vector<LatticePoint2> rays{{Integer(0), Integer(1)}};
  if (cone.is_smooth()) {
    rays.push_back({cone.q, cone.p});
    return rays;
  }
  // (1,1) always follows (0,1) because p <= q; afterwards each step takes the
  // largest multiple that keeps the new vector inside the cone, i.e. the
  // Hirzebruch-Jung expansion of q/(q-p).
  rays.push_back({Integer(1), Integer(1)});
  while (!(rays.back()[0] == cone.q && rays.back()[1] == cone.p)) {
    const auto& prev = rays[rays.size() - 2];
    const auto& cur = rays.back();
    // Next generator w = c*cur - prev must satisfy q*w_y - p*w_x >= 0; take the least c >= 2
    // with that slack minimal and nonnegative. Slack is linear in c.
    Integer slack_cur = cone.q * cur[1] - cone.p * cur[0];
    Integer slack_prev = cone.q * prev[1] - cone.p * prev[0];
    ensure(slack_cur > 0, "Hirzebruch-Jung walk left the cone");
    // slack(c) = c*slack_cur - slack_prev >= 0 with c as small as possible.
    Integer c_step;
    mpz_cdiv_q(c_step.get_mpz_t(), slack_prev.get_mpz_t(), slack_cur.get_mpz_t());
    if (c_step < 2) c_step = 2;
    rays.push_back({c_step * cur[0] - prev[0], c_step * cur[1] - prev[1]});
    ensure(rays.back()[0] <= cone.q, "Hirzebruch-Jung walk overshot the second ray");
  }
  return rays;
}

std::vector<Integer> hj_chain(const LatticeCone2& cone) {
  std::vector<LatticePoint2> rays = hj_ray_sequence(cone);
  std::vector<Integer> chain;
  for (std::size_t j = 1; j + 1 < rays.size(); ++j) {
    // v_{j-1} + v_{j+1} = c_j v_j; v_j is primitive so read c_j from a nonzero coordinate.
    Integer sum_x = rays[j - 1][0] + rays[j + 1][0];
    Integer sum_y = rays[j - 1][1] + rays[j + 1][1];
    Integer c = rays[j][1] != 0 ? Integer(sum_y / rays[j][1]) : Integer(sum_x / rays[j][0]);
    ensure(sum_x == c * rays[j][0] && sum_y == c * rays[j][1], "ray relation v_{j-1}+v_{j+1}=c v_j fails");
    ensure(c >= 2, "Hirzebruch-Jung entry below 2");
    chain.push_back(-c);
  }
  return chain;
}

namespace {

RationalMatrix chain_matrix(const std::vector<Integer>& chain) {
  RationalMatrix m(chain.size(), chain.size());
  for (std::size_t j = 0; j < chain.size(); ++j) {
    m(j, j) = Rational(chain[j]);
    if (j + 1 < chain.size()) m(j, j + 1) = m(j + 1, j) = 1;
  }
  return m;
}

}  // namespace

std::vector<Rational> discrepancies(const RationalMatrix& m) {
  std::vector<Rational> k(m.rows());
  for (std::size_t j = 0; j < m.rows(); ++j) k[j] = -m(j, j) - 2;
  auto d = solve_square(m, k);
  if (!d) fail_internal("SingularMatrix", "intersection matrix is singular");
  return *d;
}

ResolutionGraph build_graph(const CurveCouple& c) {
  if (!is_log_fano(log_fano_quotient(c))) {
    fail_precondition("NotKlt", "log Fano quotient of " + c.divisor().to_string() + " is not log Fano");
  }
  ResolutionGraph g;
  Rational b0 = c.degree();
  for (const auto& [p, coeff] : c.divisor().terms()) {
    if (is_integral(coeff)) continue;
    std::vector<Integer> chain = hj_chain(local_cone_at(c, p));
    // Pull E0 back across the chain: M a = -e_1, correction a_1.
    std::vector<Rational> rhs(chain.size());
    rhs[0] = -1;
    auto a = solve_square(chain_matrix(chain), rhs);
    if (!a) fail_internal("SingularMatrix", "chain matrix is singular");
    b0 += (*a)[0];
    g.chain_points.push_back(p);
    g.chains.push_back(std::move(chain));
  }
  if (!is_integral(b0)) fail_internal("InternalNonIntegral", "central self-intersection " + to_string(b0));
  g.central_self_intersection = -numerator(b0);

  std::size_t n = 1;
  for (const auto& chain : g.chains) n += chain.size();
  RationalMatrix m(n, n);
  m(0, 0) = Rational(g.central_self_intersection);
  std::size_t next = 1;
  for (const auto& chain : g.chains) {
    m(0, next) = m(next, 0) = 1;
    for (std::size_t j = 0; j < chain.size(); ++j) {
      m(next + j, next + j) = Rational(chain[j]);
      if (j + 1 < chain.size()) m(next + j, next + j + 1) = m(next + j + 1, next + j) = 1;
    }
    next += chain.size();
  }
  ensure(is_negative_definite(m), "intersection matrix is not negative definite");
  g.discrepancies = discrepancies(m);
  g.determinant = abs(numerator(determinant(m)));
  g.intersection_matrix = std::move(m);
  return g;
}

RationalMatrix blow_down(const RationalMatrix& input) {
  RationalMatrix m = input;
  for (;;) {
    std::size_t target = m.rows();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (m(i, i) == -1) {
        target = i;
        break;
      }
    }
    if (target == m.rows()) return m;
    // E_j' . E_l' = E_j . E_l + (E_j . C)(E_l . C)
    RationalMatrix next(m.rows() - 1, m.cols() - 1);
    for (std::size_t r = 0, rr = 0; r < m.rows(); ++r) {
      if (r == target) continue;
      for (std::size_t c = 0, cc = 0; c < m.cols(); ++c) {
        if (c == target) continue;
        next(rr, cc) = m(r, c) + m(r, target) * m(target, c);
        ++cc;
      }
      ++rr;
    }
    m = std::move(next);
  }
}

Rational mld_of_graph(const RationalMatrix& m) {
  if (m.rows() == 0) return 2;
  std::vector<Rational> d = discrepancies(m);
  return 1 + *std::min_element(d.begin(), d.end());
}

Rational mld_vertex(const CurveCouple& c) {
  ResolutionGraph g = build_graph(c);
  Rational raw = mld_of_graph(g.intersection_matrix);
  Rational reduced = mld_of_graph(blow_down(g.intersection_matrix));
  ensure(raw == reduced, "mld changed under blow-down");
  return raw;
}

std::vector<Integer> minimal_resolution_self_intersections(const CurveCouple& c) {
  RationalMatrix m = blow_down(build_graph(c).intersection_matrix);
  std::vector<Integer> diag;
  for (std::size_t i = 0; i < m.rows(); ++i) diag.push_back(numerator(m(i, i)));
  return diag;
}

Rational chart_mld(const LatticeCone2& cone) {
  // A(x, y) = (1 - p)/q * x + y is 1 on (0,1) and (q,p). Every lattice point of
  // the cone is a fundamental-parallelogram point plus a nonnegative integer
  // combination of the rays, so scanning the parallelogram suffices.
  Rational best = 1;
  Rational slope(Integer(1) - cone.p, cone.q);
  slope.canonicalize();
  for (Integer x = 1; x < cone.q; ++x) {
    Integer y;
    Integer xp = x * cone.p;
    mpz_cdiv_q(y.get_mpz_t(), xp.get_mpz_t(), cone.q.get_mpz_t());
    best = std::min(best, Rational(slope * x + y));
  }
  return best;
}

std::vector<TransverseType> transverse_types(const CurveCouple& c) {
  require_log_fano(c);
  std::vector<TransverseType> out;
  for (const auto& [p, coeff] : c.divisor().terms()) {
    if (is_integral(coeff)) continue;
    LatticeCone2 cone = local_cone_at(c, p);
    out.push_back({p, cone, chart_mld(cone)});
  }
  return out;
}

bool is_eps_lc_x(const CurveCouple& c, const Rational& eps) {
  check_epsilon(eps);
  if (!is_log_fano(log_fano_quotient(c))) return false;
  return std::min(mld_vertex(c), Rational(1)) >= eps;
}

Integer link_determinant(const ResolutionGraph& g) { return g.determinant; }

std::vector<Integer> fundamental_cycle(const RationalMatrix& m) {
  std::vector<Integer> z(m.rows(), Integer(1));
  for (;;) {
    bool changed = false;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Rational dot = 0;
      for (std::size_t j = 0; j < m.cols(); ++j) dot += m(i, j) * Rational(z[j]);
      if (dot > 0) {
        z[i] += 1;
        changed = true;
        break;
      }
    }
    if (!changed) return z;
  }
}

Integer embedding_dimension_from_graph(const ResolutionGraph& g) {
  const RationalMatrix& m = g.intersection_matrix;
  std::vector<Integer> z = fundamental_cycle(m);
  Rational z_squared = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) z_squared += Rational(z[i] * z[j]) * m(i, j);
  }
  ensure(is_integral(z_squared), "fundamental cycle has non-integral self-intersection");
  return 1 - numerator(z_squared);
}

}  // namespace conesing
