#include "conesing/toric.hpp"

#include "conesing/error.hpp"
#include "conesing/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace conesing {

namespace {

[[noreturn]] void invalid_fan(const std::string& why) { fail_precondition("InvalidFan", why); }

RationalMatrix rows_of(const Fan& fan, const std::vector<std::size_t>& ray_ids) {
  RationalMatrix m(ray_ids.size(), fan.rank);
  for (std::size_t r = 0; r < ray_ids.size(); ++r) {
    for (std::size_t c = 0; c < fan.rank; ++c) m(r, c) = Rational(static_cast<long>(fan.rays[ray_ids[r]][c]));
  }
  return m;
}

Rational dot(std::span<const Rational> a, std::span<const std::int64_t> b) {
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * Rational(static_cast<long>(b[i]));
  return acc;
}

std::int64_t gcd_of(std::span<const std::int64_t> v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x);
  return g;
}

// Half-plane then cross-product order, counterclockwise from the positive x axis.
bool angle_less(const LatticeVector& a, const LatticeVector& b) {
  auto half = [](const LatticeVector& v) { return (v[1] < 0 || (v[1] == 0 && v[0] < 0)) ? 1 : 0; };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return a[0] * b[1] - a[1] * b[0] > 0;
}

void validate_rank2(const Fan& fan) {
  std::vector<std::size_t> order(fan.rays.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto i, auto j) { return angle_less(fan.rays[i], fan.rays[j]); });
  std::set<std::pair<std::size_t, std::size_t>> expected;
  for (std::size_t k = 0; k < order.size(); ++k) {
    std::size_t a = order[k], b = order[(k + 1) % order.size()];
    const auto& u = fan.rays[a];
    const auto& v = fan.rays[b];
    if (u[0] * v[1] - u[1] * v[0] <= 0) invalid_fan("consecutive rays span an angle of at least pi");
    expected.insert({std::min(a, b), std::max(a, b)});
  }
  std::set<std::pair<std::size_t, std::size_t>> actual;
  for (const auto& cone : fan.cones) actual.insert({std::min(cone[0], cone[1]), std::max(cone[0], cone[1])});
  if (actual != expected || actual.size() != fan.cones.size()) {
    invalid_fan("maximal cones are not the consecutive ray pairs of a complete fan");
  }
}

void validate_higher_rank(const Fan& fan) {
  // Every wall lies in exactly two maximal cones, on opposite sides.
  std::map<std::vector<std::size_t>, std::vector<std::pair<std::size_t, std::size_t>>> walls;
  for (std::size_t c = 0; c < fan.cones.size(); ++c) {
    std::vector<std::size_t> cone = fan.cones[c];
    std::sort(cone.begin(), cone.end());
    for (std::size_t skip = 0; skip < cone.size(); ++skip) {
      std::vector<std::size_t> wall;
      for (std::size_t k = 0; k < cone.size(); ++k) {
        if (k != skip) wall.push_back(cone[k]);
      }
      walls[wall].push_back({c, cone[skip]});
    }
  }
  for (const auto& [wall, owners] : walls) {
    if (owners.size() != 2) invalid_fan("a wall is not shared by exactly two maximal cones");
    // Sign of det(wall rays, opposite ray) must differ.
    auto side = [&](std::size_t opposite) {
      std::vector<std::size_t> ids = wall;
      ids.push_back(opposite);
      return sgn(determinant(rows_of(fan, ids)));
    };
    if (side(owners[0].second) * side(owners[1].second) >= 0) invalid_fan("two cones on the same side of a wall");
  }
}

}  // namespace

bool is_primitive(std::span<const std::int64_t> v) { return gcd_of(v) == 1; }

void validate_fan(const Fan& fan) {
  if (fan.rank == 0) invalid_fan("rank must be positive");
  std::set<LatticeVector> seen;
  for (const auto& r : fan.rays) {
    if (r.size() != fan.rank) invalid_fan("ray of the wrong length");
    if (!is_primitive(r)) invalid_fan("ray is not primitive");
    if (!seen.insert(r).second) invalid_fan("duplicate ray");
  }
  if (fan.cones.empty()) invalid_fan("no maximal cones");
  for (const auto& cone : fan.cones) {
    if (cone.size() != fan.rank) invalid_fan("maximal cone is not simplicial of full dimension");
    for (auto id : cone) {
      if (id >= fan.rays.size()) invalid_fan("cone refers to a missing ray");
    }
    if (determinant(rows_of(fan, cone)) == 0) invalid_fan("maximal cone is not full-dimensional");
  }
  if (fan.rank == 1) {
    if (fan.rays.size() != 2 || fan.cones.size() != 2) invalid_fan("complete rank-1 fan needs rays 1 and -1");
    return;
  }
  if (fan.rank == 2) {
    validate_rank2(fan);
  } else {
    validate_higher_rank(fan);
  }
}

Fan projective_space(std::size_t dim) {
  Fan fan;
  fan.rank = dim;
  for (std::size_t i = 0; i < dim; ++i) {
    LatticeVector e(dim, 0);
    e[i] = 1;
    fan.rays.push_back(e);
  }
  fan.rays.push_back(LatticeVector(dim, -1));
  for (std::size_t skip = 0; skip <= dim; ++skip) {
    std::vector<std::size_t> cone;
    for (std::size_t i = 0; i <= dim; ++i) {
      if (i != skip) cone.push_back(i);
    }
    fan.cones.push_back(cone);
  }
  return fan;
}

Fan p1_times_p1() {
  Fan fan;
  fan.rank = 2;
  fan.rays = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  fan.cones = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  return fan;
}

Fan weighted_plane(std::int64_t a, std::int64_t b) {
  Fan fan;
  fan.rank = 2;
  fan.rays = {{1, 0}, {0, 1}, {-a, -b}};
  fan.cones = {{0, 1}, {1, 2}, {2, 0}};
  return fan;
}

std::size_t containing_cone(const Fan& fan, std::span<const std::int64_t> v) {
  std::vector<Rational> target(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) target[i] = Rational(static_cast<long>(v[i]));
  for (std::size_t c = 0; c < fan.cones.size(); ++c) {
    auto coeffs = solve_square(rows_of(fan, fan.cones[c]).transposed(), target);
    if (!coeffs) continue;
    if (std::all_of(coeffs->begin(), coeffs->end(), [](const Rational& x) { return x >= 0; })) return c;
  }
  fail_precondition("InvalidFan", "vector lies in no maximal cone");
}

std::vector<Rational> cone_linear_form(const Fan& fan, std::span<const Rational> values, std::size_t cone) {
  const auto& ids = fan.cones[cone];
  std::vector<Rational> rhs;
  for (auto id : ids) rhs.push_back(values[id]);
  auto form = solve_square(rows_of(fan, ids), rhs);
  if (!form) fail_precondition("NonCartierOnCone", "no linear form on a degenerate cone");
  return *form;
}

Rational support_value(const Fan& fan, const ToricDivisor& d, std::span<const std::int64_t> v) {
  if (std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; })) return 0;
  std::size_t cone = containing_cone(fan, v);
  return dot(cone_linear_form(fan, d.coefficients, cone), v);
}

Integer weil_index(const Fan& fan, const ToricDivisor& d, std::span<const std::int64_t> v) {
  return denominator(support_value(fan, d, v));
}

Integer cartier_index_on_cone(const Fan& fan, const ToricDivisor& d, std::size_t cone) {
  Integer mu = 1;
  for (const auto& x : cone_linear_form(fan, d.coefficients, cone)) mu = lcm(mu, denominator(x));
  return mu;
}

Integer cartier_index(const Fan& fan, const ToricDivisor& d) {
  Integer mu = 1;
  for (std::size_t c = 0; c < fan.cones.size(); ++c) mu = lcm(mu, cartier_index_on_cone(fan, d, c));
  return mu;
}

bool is_ample(const Fan& fan, const ToricDivisor& d) {
  for (std::size_t c = 0; c < fan.cones.size(); ++c) {
    std::vector<Rational> form = cone_linear_form(fan, d.coefficients, c);
    const auto& ids = fan.cones[c];
    for (std::size_t r = 0; r < fan.rays.size(); ++r) {
      if (std::find(ids.begin(), ids.end(), r) != ids.end()) continue;
      if (!(dot(form, fan.rays[r]) < d.coefficients[r])) return false;
    }
  }
  return true;
}

ToricDivisor quotient_boundary(const ToricDivisor& d) {
  ToricDivisor b;
  for (const auto& c : d.coefficients) b.coefficients.push_back(1 - Rational(1, denominator(c)));
  return b;
}

Rational log_discrepancy_y(const Fan& fan, const ToricDivisor& boundary, std::span<const std::int64_t> v) {
  std::vector<Rational> values;
  for (const auto& b : boundary.coefficients) values.push_back(1 - b);
  std::size_t cone = containing_cone(fan, v);
  std::vector<Rational> form;
  try {
    form = cone_linear_form(fan, values, cone);
  } catch (const Error&) {
    fail_precondition("NotQCartierPair", "K_Y + B has no linear form on a maximal cone");
  }
  return dot(form, v);
}

ConeOfX cone_of_x(const Fan& fan, const ToricDivisor& d) {
  validate_fan(fan);
  if (d.coefficients.size() != fan.rays.size()) fail_precondition("InvalidDivisor", "one coefficient per ray required");
  if (!is_ample(fan, d)) fail_precondition("NotAmple", "support function is not strictly convex");

  ConeOfX k;
  k.rank = fan.rank + 1;
  for (std::size_t r = 0; r < fan.rays.size(); ++r) {
    const Rational& c = d.coefficients[r];
    Integer w = weil_index(fan, d, fan.rays[r]);
    ensure(w == denominator(c), "Weil index at a ray differs from the coefficient denominator");
    // Primitive generator of (v, c), computed by clearing denominators and dividing by the gcd.
    LatticeVector raw;
    for (auto x : fan.rays[r]) raw.push_back(x * to_int64(denominator(c)));
    raw.push_back(to_int64(numerator(c)));
    std::int64_t g = gcd_of(raw);
    for (auto& x : raw) x /= g;
    LatticeVector lifted;
    for (auto x : fan.rays[r]) lifted.push_back(x * to_int64(w));
    lifted.push_back(to_int64(w * numerator(c) / denominator(c)));
    ensure(raw == lifted, "primitive ray generator differs from W * (v, c)");
    k.rays.push_back(raw);
    k.ray_weil_indices.push_back(w);
  }
  for (std::size_t c = 0; c < fan.cones.size(); ++c) {
    std::vector<Rational> normal;
    for (const auto& x : cone_linear_form(fan, d.coefficients, c)) normal.push_back(-x);
    normal.push_back(1);
    k.facets.push_back(std::move(normal));
  }
  ensure(is_interior(k, vertex_valuation(k)), "(0,...,0,1) is not interior to sigma_X");

  RationalMatrix m(0, k.rank);
  for (const auto& r : k.rays) {
    std::vector<Rational> row;
    for (auto x : r) row.push_back(Rational(static_cast<long>(x)));
    m.append_row(row);
  }
  std::vector<Rational> ones(k.rays.size(), Rational(1));
  k.qgorenstein_form = solve_any(m, ones);
  return k;
}

bool is_interior(const ConeOfX& cone, std::span<const std::int64_t> w) {
  return std::all_of(cone.facets.begin(), cone.facets.end(), [&](const auto& f) { return dot(f, w) > 0; });
}

Rational log_discrepancy_x(const ConeOfX& cone, std::span<const std::int64_t> w) {
  if (!cone.qgorenstein_form) fail_precondition("NotQGorenstein", "K_X is not Q-Cartier on sigma_X");
  return dot(*cone.qgorenstein_form, w);
}

LatticeVector vertex_valuation(const ConeOfX& cone) {
  LatticeVector e(cone.rank, 0);
  e.back() = 1;
  return e;
}

std::optional<Rational> degree_ratio(const Fan& fan, const ToricDivisor& d) {
  std::vector<std::size_t> all(fan.rays.size());
  std::iota(all.begin(), all.end(), 0);
  // Linear functionals on divisors that vanish on principal divisors are the
  // relations sum lambda_rho v_rho = 0.
  std::vector<std::vector<Rational>> relations = null_space(rows_of(fan, all).transposed());
  std::optional<Rational> beta;
  std::vector<std::pair<Rational, Rational>> classes;
  for (const auto& lambda : relations) {
    Rational class_d = 0, class_anti = 0;
    for (std::size_t r = 0; r < fan.rays.size(); ++r) {
      class_d += lambda[r] * d.coefficients[r];
      class_anti += lambda[r] / Rational(denominator(d.coefficients[r]));
    }
    classes.emplace_back(class_d, class_anti);
    if (!beta && class_d != 0) beta = class_anti / class_d;
  }
  if (!beta) return std::nullopt;
  for (const auto& [cd, ca] : classes) {
    if (ca != *beta * cd) return std::nullopt;
  }
  return beta;
}

Rational lattice_mld(const ConeOfX& cone) {
  if (!cone.qgorenstein_form) fail_precondition("NotQGorenstein", "lattice mld needs a Q-Gorenstein cone");
  const std::int64_t scale = static_cast<std::int64_t>(cone.rays.size());
  LatticeVector lo(cone.rank, 0), hi(cone.rank, 0);
  for (const auto& r : cone.rays) {
    for (std::size_t i = 0; i < cone.rank; ++i) {
      lo[i] = std::min(lo[i], scale * r[i]);
      hi[i] = std::max(hi[i], scale * r[i]);
    }
  }
  std::optional<Rational> best;
  LatticeVector p = lo;
  for (;;) {
    if (is_interior(cone, p)) {
      Rational a = log_discrepancy_x(cone, p);
      if (a <= scale && (!best || a < *best)) best = a;
    }
    std::size_t i = 0;
    while (i < cone.rank && p[i] == hi[i]) {
      p[i] = lo[i];
      ++i;
    }
    if (i == cone.rank) break;
    ++p[i];
  }
  ensure(best.has_value(), "no interior lattice point below the search level");
  return *best;
}

ComparisonReport verify_comparison(const Fan& fan, const ToricDivisor& d, std::span<const LatticeVector> samples) {
  ConeOfX k = cone_of_x(fan, d);
  if (!k.qgorenstein_form) fail_precondition("NotQGorenstein", "sigma_X is not Q-Gorenstein");
  ToricDivisor b = quotient_boundary(d);
  ComparisonReport report;

  report.rays_have_unit_discrepancy = std::all_of(k.rays.begin(), k.rays.end(),
                                                  [&](const auto& r) { return log_discrepancy_x(k, r) == 1; });
  if (!report.rays_have_unit_discrepancy) ++report.violations;

  std::vector<LatticeVector> all(fan.rays.begin(), fan.rays.end());
  all.insert(all.end(), samples.begin(), samples.end());
  for (const auto& v : all) {
    if (!is_primitive(v)) fail_precondition("NotPrimitive", "sample vectors must be primitive");
    SampleCheck s;
    s.v = v;
    Rational value = support_value(fan, d, v);
    s.weil_index = denominator(value);
    for (auto x : v) s.w.push_back(x * to_int64(s.weil_index));
    s.w.push_back(to_int64(numerator(value)));
    ensure(is_primitive(s.w), "lifted valuation is not primitive");
    s.cone_cartier_index = cartier_index_on_cone(fan, d, containing_cone(fan, v));
    s.a_x = log_discrepancy_x(k, s.w);
    s.a_y = log_discrepancy_y(fan, b, v);
    s.identity_holds = s.a_x == Rational(s.weil_index) * s.a_y;
    s.weil_below_cartier = s.cone_cartier_index % s.weil_index == 0 && s.weil_index <= s.cone_cartier_index;
    if (!s.identity_holds) ++report.violations;
    if (!s.weil_below_cartier) ++report.violations;
    report.samples.push_back(std::move(s));
  }

  report.vertex_a_x = log_discrepancy_x(k, vertex_valuation(k));
  report.degree_ratio = degree_ratio(fan, d);
  report.vertex_matches = report.degree_ratio && *report.degree_ratio == report.vertex_a_x;
  if (report.degree_ratio && !report.vertex_matches) ++report.violations;
  return report;
}

std::vector<LatticeVector> random_primitive_samples(const Fan& fan, std::size_t count, std::mt19937_64& rng,
                                                    std::int64_t bound) {
  std::vector<LatticeVector> out;
  if (fan.rank == 1) bound = 1;
  std::uniform_int_distribution<std::int64_t> coord(-bound, bound);
  while (out.size() < count) {
    LatticeVector v(fan.rank);
    for (auto& x : v) x = coord(rng);
    if (is_primitive(v)) out.push_back(std::move(v));
  }
  return out;
}

ToricCouple toric_model_of_couple(const CurveCouple& c) {
  NormalForm nf = normal_form(c);
  if (nf.key.fractional_parts.size() > 2) {
    fail_precondition("TooManyFractionalPoints", "toric model needs at most two fractional points");
  }
  Rational at_zero = nf.key.fractional_parts.empty() ? Rational(0) : nf.key.fractional_parts.front();
  ToricCouple out;
  out.fan = projective_space(1);
  out.divisor.coefficients = {at_zero, Rational(nf.key.degree - at_zero)};
  return out;
}

}  // namespace conesing
