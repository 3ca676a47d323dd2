#include "conesing/demazure.hpp"

#include "conesing/error.hpp"
#include "conesing/linalg.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>

namespace conesing {

namespace {

// ---------------------------------------------------------------------------
// Polynomials over Q

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  if (a.empty() || b.empty()) return {};
  Polynomial out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// p * (t - y)^k
Polynomial multiply_linear_power(Polynomial p, const Rational& y, std::int64_t k) {
  for (std::int64_t step = 0; step < k; ++step) {
    Polynomial next(p.size() + 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
      next[i + 1] += p[i];
      next[i] -= y * p[i];
    }
    p = std::move(next);
  }
  return p;
}

std::size_t effective_size(const Polynomial& p) {
  std::size_t n = p.size();
  while (n > 0 && p[n - 1] == 0) --n;
  return n;
}

Polynomial monomial_t(std::size_t j) {
  Polynomial p(j + 1);
  p[j] = 1;
  return p;
}

// ---------------------------------------------------------------------------
// Arithmetic modulo the Mersenne prime 2^61 - 1, used only to certify full rank.

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  __extension__ using u128 = unsigned __int128;
  u128 prod = static_cast<u128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(prod & kPrime);
  std::uint64_t hi = static_cast<std::uint64_t>(prod >> 61);
  std::uint64_t s = lo + hi;
  if (s >= kPrime) s -= kPrime;
  return s;
}

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s >= kPrime ? s - kPrime : s;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t result = 1;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base);
    base = mul_mod(base, base);
    exp >>= 1;
  }
  return result;
}

std::uint64_t inv_mod(std::uint64_t a) { return pow_mod(a, kPrime - 2); }

std::optional<std::uint64_t> reduce_mod(const Rational& q) {
  Integer p(kPrime);
  Integer num = q.get_num() % p;
  if (num < 0) num += p;
  Integer den = q.get_den() % p;
  if (den == 0) return std::nullopt;
  return mul_mod(static_cast<std::uint64_t>(num.get_ui()), inv_mod(static_cast<std::uint64_t>(den.get_ui())));
}

using PolyMod = std::vector<std::uint64_t>;

// Incremental row echelon basis mod p; reports when it spans the whole space.
class ModRankTracker {
 public:
  explicit ModRankTracker(std::size_t dim) : dim_(dim), pivot_rows_(dim) {}

  std::size_t rank() const noexcept { return rank_; }
  bool full() const noexcept { return rank_ == dim_; }

  void add(PolyMod row) {
    for (std::size_t col = dim_; col-- > 0;) {
      if (row[col] == 0) continue;
      if (pivot_rows_[col].empty()) {
        std::uint64_t inv = inv_mod(row[col]);
        for (std::size_t c = 0; c <= col; ++c) row[c] = mul_mod(row[c], inv);
        pivot_rows_[col] = std::move(row);
        ++rank_;
        return;
      }
      std::uint64_t factor = row[col];
      const PolyMod& pivot = pivot_rows_[col];
      for (std::size_t c = 0; c <= col; ++c) {
        if (pivot[c]) row[c] = sub_mod(row[c], mul_mod(factor, pivot[c]));
      }
    }
  }

 private:
  std::size_t dim_;
  std::size_t rank_ = 0;
  std::vector<PolyMod> pivot_rows_;
};

// ---------------------------------------------------------------------------
// The section ring in coordinates.

class SectionRing {
 public:
  explicit SectionRing(const CurveCouple& c) : divisor_(assign_coordinates(c.divisor())) {
    for (const auto& [p, coeff] : divisor_.terms()) {
      if (p.is_finite()) {
        coords_.push_back(p.coordinate());
        coeffs_.push_back(coeff);
      } else {
        inf_coeff_ = coeff;
      }
    }
  }

  const QDivisor& divisor() const noexcept { return divisor_; }
  std::size_t finite_count() const noexcept { return coords_.size(); }
  const Rational& coordinate(std::size_t i) const { return coords_[i]; }

  /// floor(n c_i) at each finite point.
  std::vector<std::int64_t> finite_floors(std::int64_t n) const {
    std::vector<std::int64_t> e(coords_.size());
    for (std::size_t i = 0; i < coords_.size(); ++i) e[i] = to_int64(floor(coeffs_[i] * n));
    return e;
  }

  std::int64_t floor_degree(std::int64_t n) const {
    std::int64_t total = to_int64(floor(inf_coeff_ * n));
    for (auto e : finite_floors(n)) total += e;
    return total;
  }

  std::size_t dim(std::int64_t n) const {
    std::int64_t d = floor_degree(n) + 1;
    return d > 0 ? static_cast<std::size_t>(d) : 0;
  }

  /// Exponents delta_i >= 0 with floor(nD) = sum floor(a_k D) + delta at finite points.
  std::vector<std::int64_t> excess(std::int64_t n, const std::vector<std::int64_t>& parts) const {
    std::vector<std::int64_t> delta = finite_floors(n);
    for (auto a : parts) {
      std::vector<std::int64_t> e = finite_floors(a);
      for (std::size_t i = 0; i < delta.size(); ++i) delta[i] -= e[i];
    }
    for (auto v : delta) ensure(v >= 0, "floors are not superadditive");
    return delta;
  }

  /// Polynomial factor of a product, in degree-n coordinates.
  Polynomial embed(Polynomial product, const std::vector<std::int64_t>& delta, std::int64_t n) const {
    for (std::size_t i = 0; i < delta.size(); ++i) product = multiply_linear_power(std::move(product), coords_[i], delta[i]);
    std::size_t size = effective_size(product);
    ensure(size <= dim(n), "product of sections is not a section");
    product.resize(dim(n));
    return product;
  }

  std::optional<PolyMod> embed_mod(const Polynomial& factor, const std::vector<std::int64_t>& delta, std::int64_t n) const {
    PolyMod p;
    for (const auto& coeff : factor) {
      auto r = reduce_mod(coeff);
      if (!r) return std::nullopt;
      p.push_back(*r);
    }
    for (std::size_t i = 0; i < delta.size(); ++i) {
      auto y = reduce_mod(coords_[i]);
      if (!y) return std::nullopt;
      for (std::int64_t step = 0; step < delta[i]; ++step) {
        PolyMod next(p.size() + 1, 0);
        for (std::size_t k = 0; k < p.size(); ++k) {
          next[k + 1] = add_mod(next[k + 1], p[k]);
          next[k] = sub_mod(next[k], mul_mod(*y, p[k]));
        }
        p = std::move(next);
      }
    }
    while (!p.empty() && p.back() == 0) p.pop_back();
    ensure(p.size() <= dim(n), "product of sections is not a section (mod p)");
    p.resize(dim(n), 0);
    return p;
  }

 private:
  QDivisor divisor_;
  std::vector<Rational> coords_;
  std::vector<Rational> coeffs_;
  Rational inf_coeff_ = 0;
};

struct Generator {
  std::int64_t degree;
  Polynomial factor;
};

std::size_t cokernel_mod_p(const SectionRing& ring, const std::vector<Generator>& gens, std::int64_t n, bool& reliable) {
  const std::size_t dim = ring.dim(n);
  reliable = true;
  if (dim == 0) return 0;
  ModRankTracker tracker(dim);
  for (const auto& g : gens) {
    if (g.degree >= n) continue;
    const std::size_t other = ring.dim(n - g.degree);
    if (other == 0) continue;
    std::vector<std::int64_t> delta = ring.excess(n, {g.degree, n - g.degree});
    auto base = ring.embed_mod(g.factor, delta, n);
    if (!base) {
      reliable = false;
      return dim;
    }
    for (std::size_t shift = 0; shift < other && !tracker.full(); ++shift) {
      PolyMod row(dim, 0);
      for (std::size_t k = 0; k + shift < dim; ++k) row[k + shift] = (*base)[k];
      tracker.add(std::move(row));
    }
    if (tracker.full()) return 0;
  }
  return dim - tracker.rank();
}

// Exact cokernel; returns the non-pivot columns (a complement of the decomposables).
std::vector<std::size_t> cokernel_exact(const SectionRing& ring, const std::vector<Generator>& gens, std::int64_t n) {
  const std::size_t dim = ring.dim(n);
  RationalMatrix rows(0, dim);
  for (const auto& g : gens) {
    if (g.degree >= n) continue;
    const std::size_t other = ring.dim(n - g.degree);
    if (other == 0) continue;
    std::vector<std::int64_t> delta = ring.excess(n, {g.degree, n - g.degree});
    Polynomial base = ring.embed(g.factor, delta, n);
    for (std::size_t shift = 0; shift < other; ++shift) {
      std::vector<Rational> row(dim);
      for (std::size_t k = 0; k + shift < dim; ++k) row[k + shift] = base[k];
      rows.append_row(row);
    }
  }
  EchelonForm e = row_reduce(std::move(rows));
  std::vector<bool> pivot(dim, false);
  for (auto p : e.pivots) pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < dim; ++c) {
    if (!pivot[c]) free.push_back(c);
  }
  return free;
}

// ---------------------------------------------------------------------------
// Relations

using Exponents = std::vector<std::int64_t>;

constexpr std::size_t kMonomialCap = 4000;

void enumerate_monomials(const std::vector<Generator>& gens, std::int64_t n, std::size_t index, Exponents& current,
                         std::vector<Exponents>& out) {
  if (index == gens.size()) {
    if (n == 0) {
      out.push_back(current);
      if (out.size() > kMonomialCap) {
        fail_precondition("SearchTooLarge", "more than " + std::to_string(kMonomialCap) +
                                                " monomials in one degree; lower the relation bound");
      }
    }
    return;
  }
  for (std::int64_t e = n / gens[index].degree; e >= 0; --e) {
    current[index] = e;
    enumerate_monomials(gens, n - e * gens[index].degree, index + 1, current, out);
  }
  current[index] = 0;
}

// Lexicographically descending exponent vectors.
std::vector<Exponents> monomials_of_degree(const std::vector<Generator>& gens, std::int64_t n) {
  std::vector<Exponents> out;
  Exponents current(gens.size(), 0);
  enumerate_monomials(gens, n, 0, current, out);
  return out;
}

Polynomial evaluate_monomial(const SectionRing& ring, const std::vector<Generator>& gens, const Exponents& e,
                             std::int64_t n) {
  Polynomial product{Rational(1)};
  std::vector<std::int64_t> parts;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    for (std::int64_t k = 0; k < e[g]; ++k) {
      product = multiply(product, gens[g].factor);
      parts.push_back(gens[g].degree);
    }
  }
  return ring.embed(std::move(product), ring.excess(n, parts), n);
}

struct Relation {
  std::int64_t degree;
  std::map<Exponents, Rational> terms;
};

std::vector<Rational> normalized(std::vector<Rational> v) {
  Integer common_den = 1;
  for (const auto& x : v) common_den = lcm(common_den, denominator(x));
  Integer common_num = 0;
  for (auto& x : v) {
    x *= Rational(common_den);
    common_num = gcd(common_num, numerator(x));
  }
  if (common_num == 0) return v;
  Rational scale(1, common_num);
  for (const auto& x : v) {
    if (x != 0) {
      if (x < 0) scale = -scale;
      break;
    }
  }
  for (auto& x : v) x *= scale;
  return v;
}

std::string format_equation(const std::vector<Exponents>& monomials, const std::vector<Rational>& coeffs) {
  std::string out;
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    const Rational& c = coeffs[i];
    if (c == 0) continue;
    std::string mono;
    for (std::size_t g = 0; g < monomials[i].size(); ++g) {
      std::int64_t e = monomials[i][g];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(g);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    Rational magnitude = abs(c);
    std::string term = magnitude == 1 ? mono : (mono.empty() ? to_string(magnitude) : to_string(magnitude) + "*" + mono);
    if (mono.empty() && magnitude == 1) term = "1";
    if (out.empty()) {
      out = (c < 0 ? "-" : "") + term;
    } else {
      out += (c < 0 ? " - " : " + ") + term;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<Integer> HilbertData::expand(std::size_t terms) const {
  // Divide by (1 - T) then by (1 - T^L): running sums.
  std::vector<Integer> a(terms, Integer(0));
  for (std::size_t i = 0; i < terms && i < numerator.size(); ++i) a[i] = numerator[i];
  for (std::size_t i = 1; i < terms; ++i) a[i] += a[i - 1];
  const std::size_t l = static_cast<std::size_t>(to_int64(period));
  for (std::size_t i = l; i < terms; ++i) a[i] += a[i - l];
  return a;
}

Integer h0(const CurveCouple& c, std::int64_t n) {
  ensure(n >= 0, "h0 of a negative degree");
  Integer d = floor_multiple(c.divisor(), Integer(static_cast<long>(n))).degree() + 1;
  return d > 0 ? d : Integer(0);
}

HilbertData hilbert_series(const CurveCouple& c) {
  HilbertData out;
  out.period = period(c.divisor());
  const std::int64_t l = to_int64(out.period);
  // Beyond n0 = ceil(#points / deg D) no clamping happens and h is quasi-linear,
  // so the numerator has degree at most n0 + L + 1.
  const std::int64_t n0 = to_int64(ceil(Rational(static_cast<long>(c.divisor().size())) / c.degree()));
  const std::int64_t top = n0 + 2 * l + 2;
  for (std::int64_t n = 0; n <= top; ++n) out.values.push_back(h0(c, n));
  auto h = [&](std::int64_t n) { return n < 0 ? Integer(0) : out.values[static_cast<std::size_t>(n)]; };
  for (std::int64_t j = 0; j <= top; ++j) {
    out.numerator.push_back(h(j) - h(j - 1) - h(j - l) + h(j - l - 1));
  }
  for (std::int64_t j = n0 + l + 2; j <= top; ++j) {
    ensure(out.numerator[static_cast<std::size_t>(j)] == 0, "Hilbert numerator does not terminate");
  }
  while (out.numerator.size() > 1 && out.numerator.back() == 0) out.numerator.pop_back();
  return out;
}

SectionBasis section_basis(const CurveCouple& c, std::int64_t n) {
  ensure(n >= 0, "section basis of a negative degree");
  SectionBasis out;
  out.degree = n;
  QDivisor d = assign_coordinates(c.divisor());
  out.pole_datum = floor_multiple(d, Integer(static_cast<long>(n)));
  Integer top = out.pole_datum.degree();
  for (Integer j = 0; j <= top; ++j) out.elements.push_back(monomial_t(static_cast<std::size_t>(to_int64(j))));
  return out;
}

MultiplicationRank multiplication_rank(const CurveCouple& c, std::int64_t a, std::int64_t b) {
  SectionRing ring(c);
  const std::size_t dim = ring.dim(a + b);
  std::vector<std::int64_t> delta = ring.excess(a + b, {a, b});
  RationalMatrix rows(0, dim);
  for (std::size_t i = 0; i < ring.dim(a); ++i) {
    for (std::size_t j = 0; j < ring.dim(b); ++j) {
      rows.append_row(ring.embed(monomial_t(i + j), delta, a + b));
    }
  }
  MultiplicationRank out;
  out.rank = rows.rows() == 0 ? 0 : rank(rows);
  ensure(out.rank <= dim, "multiplication rank exceeds the target dimension");
  out.cokernel = dim - out.rank;
  return out;
}

std::int64_t default_presentation_bound(const CurveCouple& c) {
  Integer l = period(c.divisor());
  Integer inv = ceil(1 / c.degree());
  return to_int64(4 * l * std::max(Integer(1), inv));
}

Presentation presentation(const CurveCouple& c, std::int64_t gen_bound, std::int64_t rel_bound) {
  ensure(gen_bound >= 1 && rel_bound >= 0, "presentation bounds must be positive");
  SectionRing ring(c);
  Presentation out;
  out.search_bound = gen_bound;
  out.relation_bound = rel_bound;
  out.verified_through = 2 * std::max(gen_bound, rel_bound);

  std::vector<Generator> gens;
  for (std::int64_t n = 1; n <= out.verified_through; ++n) {
    bool reliable = true;
    std::size_t cok = cokernel_mod_p(ring, gens, n, reliable);
    if (reliable && cok == 0) continue;
    std::vector<std::size_t> fresh = cokernel_exact(ring, gens, n);
    if (fresh.empty()) continue;
    if (n > gen_bound) {
      fail_precondition("BoundTooSmall", "new generators needed in degree " + std::to_string(n) +
                                             " beyond the generator bound " + std::to_string(gen_bound));
    }
    for (auto col : fresh) {
      gens.push_back({n, monomial_t(col)});
      out.generator_degrees.push_back(n);
    }
  }

  std::vector<Relation> relations;
  for (std::int64_t n = 1; n <= rel_bound && !gens.empty(); ++n) {
    std::vector<Exponents> monos = monomials_of_degree(gens, n);
    if (monos.size() < 2) continue;
    std::map<Exponents, std::size_t> index;
    for (std::size_t i = 0; i < monos.size(); ++i) index[monos[i]] = i;

    RationalMatrix values(0, ring.dim(n));
    for (const auto& m : monos) values.append_row(evaluate_monomial(ring, gens, m, n));
    std::vector<std::vector<Rational>> kernel = null_space(values.transposed());
    if (kernel.empty()) continue;

    RationalMatrix span(0, monos.size());
    for (const auto& r : relations) {
      for (const auto& mu : monomials_of_degree(gens, n - r.degree)) {
        std::vector<Rational> row(monos.size());
        for (const auto& [e, coeff] : r.terms) {
          Exponents sum = e;
          for (std::size_t g = 0; g < sum.size(); ++g) sum[g] += mu[g];
          row[index.at(sum)] += coeff;
        }
        span.append_row(row);
      }
    }
    std::size_t span_rank = span.rows() == 0 ? 0 : rank(span);
    ensure(span_rank <= kernel.size(), "lower relations exceed the kernel");
    for (const auto& k : kernel) {
      if (span_rank == kernel.size()) break;
      RationalMatrix trial = span;
      trial.append_row(k);
      std::size_t trial_rank = rank(trial);
      if (trial_rank == span_rank) continue;
      std::vector<Rational> rel = normalized(k);
      span = std::move(trial);
      span_rank = trial_rank;
      Relation r{n, {}};
      for (std::size_t i = 0; i < monos.size(); ++i) {
        if (rel[i] != 0) r.terms[monos[i]] = rel[i];
      }
      relations.push_back(std::move(r));
      out.relation_degrees.push_back(n);
      if (gens.size() <= 4) out.equations.push_back(format_equation(monos, rel));
    }
  }
  return out;
}

std::int64_t embedding_dimension(const CurveCouple& c) {
  return static_cast<std::int64_t>(presentation(c, default_presentation_bound(c), 0).generator_degrees.size());
}

bool is_smooth(const CurveCouple& c) { return embedding_dimension(c) == 2; }

}  // namespace conesing
