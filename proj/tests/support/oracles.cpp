#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace conesing::testing {

namespace {

using P = std::pair<std::int64_t, std::int64_t>;

std::int64_t cross(P a, P b) { return a.first * b.second - a.second * b.first; }
P minus(P a, P b) { return {a.first - b.first, a.second - b.second}; }

Rational random_fraction(std::mt19937_64& rng, std::int64_t den_max, std::int64_t lo, std::int64_t hi) {
  std::int64_t den = std::uniform_int_distribution<std::int64_t>(1, den_max)(rng);
  std::int64_t num = std::uniform_int_distribution<std::int64_t>(lo * den, hi * den)(rng);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

std::vector<std::int64_t> hull_chain(std::int64_t q, std::int64_t p) {
  if (q == 1) return {};
  std::vector<P> pts;
  for (std::int64_t x = 0; x <= q; ++x) {
    for (std::int64_t y = 0; y <= p + 1; ++y) {
      if ((x != 0 || y != 0) && q * y - p * x >= 0) pts.push_back({x, y});
    }
  }
  std::vector<P> boundary{{0, 1}};
  while (boundary.back() != P{q, p}) {
    P v = boundary.back();
    std::optional<P> best;
    for (P w : pts) {
      if (w == v) continue;
      bool all_left = std::all_of(pts.begin(), pts.end(), [&](P u) { return cross(minus(w, v), minus(u, v)) >= 0; });
      if (!all_left) continue;
      auto dist = [&](P a) { return (a.first - v.first) * (a.first - v.first) + (a.second - v.second) * (a.second - v.second); };
      if (!best || dist(w) < dist(*best)) best = w;
    }
    if (!best) throw std::logic_error("hull walk stalled");
    boundary.push_back(*best);
  }
  std::vector<std::int64_t> chain;
  for (std::size_t j = 1; j + 1 < boundary.size(); ++j) {
    P s{boundary[j - 1].first + boundary[j + 1].first, boundary[j - 1].second + boundary[j + 1].second};
    P v = boundary[j];
    std::int64_t c = v.second != 0 ? s.second / v.second : s.first / v.first;
    if (s.first != c * v.first || s.second != c * v.second) throw std::logic_error("not a chain");
    chain.push_back(-c);
  }
  return chain;
}

std::optional<MinimalDecomposition> scan_vertex_decomposition(const CurveCouple& c, std::int64_t m_cap,
                                                              std::int64_t u_cap) {
  QDivisor k_plus_b{{pt_inf(), Rational(-2)}};
  for (const auto& [p, coeff] : c.divisor().terms()) {
    if (coeff.get_den() > 1) k_plus_b.add(p, 1 - Rational(1) / Rational(coeff.get_den()));
  }
  for (std::int64_t m = 1; m <= m_cap; ++m) {
    // Degree zero pins u down.
    Rational u = Rational(m) * k_plus_b.degree() / c.divisor().degree();
    if (u.get_den() != 1 || u > -1 || u < -u_cap) continue;
    QDivisor h = Rational(m) * k_plus_b - u * c.divisor();
    bool ok = h.degree() == 0;
    for (const auto& [p, coeff] : h.terms()) ok = ok && coeff.get_den() == 1;
    if (ok) return MinimalDecomposition{m, u.get_num().get_si()};
  }
  return std::nullopt;
}

std::int64_t an_monoid_count(std::int64_t n, std::int64_t k) {
  // Basis: z^c, x^a z^c, y^b z^c with a, b >= 1.
  std::int64_t count = 0;
  for (std::int64_t a = 0; a * n <= k; ++a) {
    count += a == 0 ? 1 : 2;
  }
  return count;
}

CurveCouple random_couple(std::mt19937_64& rng, int max_points, std::int64_t q_max, std::int64_t deg_max) {
  static const std::vector<MarkedPoint> positions = {pt_inf(), pt(0), pt(1), pt(2), pt(-1), pt(3),
                                                     MarkedPoint::finite(Rational(1, 2))};
  for (;;) {
    int k = std::uniform_int_distribution<int>(0, max_points)(rng);
    std::vector<MarkedPoint> pos = positions;
    std::shuffle(pos.begin(), pos.end(), rng);
    QDivisor d;
    Rational frac_sum = 0, boundary = 0;
    for (int i = 0; i < k; ++i) {
      std::int64_t q = std::uniform_int_distribution<std::int64_t>(2, q_max)(rng);
      std::int64_t p;
      do {
        p = std::uniform_int_distribution<std::int64_t>(1, q - 1)(rng);
      } while (std::gcd(p, q) != 1);
      Rational f(p, q);
      d.add(pos[static_cast<std::size_t>(i)], f);
      frac_sum += f;
      boundary += 1 - Rational(1, q);
    }
    if (boundary >= 2) continue;
    std::int64_t lo = floor(-frac_sum).get_si() + 1;
    std::int64_t hi = floor(Rational(deg_max) - frac_sum).get_si();
    if (lo > hi) continue;
    std::int64_t total = std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
    std::int64_t split = std::uniform_int_distribution<std::int64_t>(-2, 2)(rng);
    std::uniform_int_distribution<std::size_t> pick(0, pos.size() - 1);
    d.add(pos[pick(rng)], Rational(split));
    d.add(pos[pick(rng)], Rational(total - split));
    if (d.degree() <= 0) continue;
    return CurveCouple(std::move(d));
  }
}

std::vector<ToricInstance> toric_instances(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<ToricInstance> out;
  const std::int64_t den_max = 6;
  auto accept = [&](ToricInstance inst) {
    if (!is_ample(inst.fan, inst.divisor)) return false;
    if (!cone_of_x(inst.fan, inst.divisor).qgorenstein_form) return false;
    out.push_back(std::move(inst));
    return true;
  };
  std::size_t round = 0;
  while (out.size() < count) {
    switch (round++ % 4) {
      case 0: {
        Fan f{1, {{1}, {-1}}, {{0}, {1}}};
        accept({"P1", f, {{random_fraction(rng, den_max, -2, 3), random_fraction(rng, den_max, -2, 3)}}});
        break;
      }
      case 1: {
        ToricDivisor d;
        for (int i = 0; i < 3; ++i) d.coefficients.push_back(random_fraction(rng, den_max, -1, 2));
        accept({"P2", projective_space(2), d});
        break;
      }
      case 2: {
        // Q-Gorenstein needs (1/W0 + 1/W2)/(c0 + c2) = (1/W1 + 1/W3)/(c1 + c3); solve for c3
        // over all fractions with denominator <= 6 in range.
        for (int attempt = 0; attempt < 50; ++attempt) {
          Rational c0 = random_fraction(rng, den_max, -1, 2);
          Rational c1 = random_fraction(rng, den_max, -1, 2);
          Rational c2 = random_fraction(rng, den_max, -1, 2);
          if (c0 + c2 <= 0) continue;
          Rational t = (1 / Rational(c0.get_den()) + 1 / Rational(c2.get_den())) / (c0 + c2);
          std::vector<Rational> options;
          for (std::int64_t den = 1; den <= den_max; ++den) {
            for (std::int64_t num = -2 * den; num <= 3 * den; ++num) {
              Rational c3(num, den);
              c3.canonicalize();
              if (c3.get_den() != den || c1 + c3 <= 0) continue;
              if ((1 / Rational(c1.get_den()) + 1 / Rational(c3.get_den())) / (c1 + c3) == t) options.push_back(c3);
            }
          }
          if (options.empty()) continue;
          Rational c3 = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
          if (accept({"P1xP1", p1_times_p1(), {{c0, c1, c2, c3}}})) break;
        }
        break;
      }
      default: {
        static const std::vector<std::pair<std::int64_t, std::int64_t>> weights = {
            {1, 1}, {1, 2}, {2, 1}, {1, 3}, {2, 3}, {3, 2}, {1, 4}, {3, 4}};
        auto [a, b] = weights[std::uniform_int_distribution<std::size_t>(0, weights.size() - 1)(rng)];
        ToricDivisor d;
        for (int i = 0; i < 3; ++i) d.coefficients.push_back(random_fraction(rng, den_max, -1, 2));
        accept({"P(" + std::to_string(a) + "," + std::to_string(b) + ",1)", weighted_plane(a, b), d});
        break;
      }
    }
  }
  return out;
}

}  // namespace conesing::testing
