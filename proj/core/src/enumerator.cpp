#include "conesing/enumerator.hpp"

#include "conesing/demazure.hpp"
#include "conesing/error.hpp"
#include "conesing/quotient.hpp"
#include "conesing/resolution.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <thread>

namespace conesing {

void SearchParams::validate() const {
  check_epsilon(epsilon);
  if (isotropy_bound < 1) fail_precondition("BadIsotropyBound", "isotropy bound must be positive");
}

SearchBounds search_bounds(const SearchParams& params) {
  params.validate();
  SearchBounds b;
  Integer by_eps = floor(Rational(params.isotropy_bound) / params.epsilon);
  b.q_max = std::min(params.isotropy_bound, by_eps);
  b.effective_k_max = b.q_max >= 2 ? b.k_max : 0;
  b.degree_max = 2 / params.epsilon;
  return b;
}

CurveCouple couple_from_fractional_data(const std::vector<Rational>& fractional_parts, const Rational& degree) {
  if (fractional_parts.size() > 3) fail_precondition("TooManyFractionalPoints", "at most three fractional points");
  static const MarkedPoint canonical[3] = {pt(0), pt(1), pt_inf()};
  QDivisor d;
  Rational sum = 0;
  for (std::size_t i = 0; i < fractional_parts.size(); ++i) {
    const Rational& f = fractional_parts[i];
    if (f <= 0 || f >= 1) fail_precondition("BadFractionalPart", to_string(f) + " is not in (0,1)");
    d.add(canonical[i], f);
    sum += f;
  }
  Rational integral = degree - sum;
  if (!is_integral(integral)) fail_precondition("BadDegree", "degree minus fractional parts is not an integer");
  d.add(pt_inf(), integral);
  return CurveCouple(std::move(d));
}

CatalogEntry make_entry(const CurveCouple& input) {
  NormalForm nf = normal_form(input);
  const CurveCouple& c = nf.couple;
  ResolutionGraph g = build_graph(c);
  HilbertData hilbert = hilbert_series(c);

  CatalogEntry e;
  e.key = nf.key;
  e.degree = c.degree();
  e.fractional_parts = nf.key.fractional_parts;
  e.a_e0 = vertex_log_discrepancy(c);
  e.mld = mld_vertex(c);
  e.cartier_index_kx = cartier_index_of_kx(c);
  e.max_isotropy = max_isotropy(c);
  e.link_determinant = link_determinant(g);
  e.hilbert_numerator = hilbert.numerator;
  e.hilbert_period = hilbert.period;
  e.embedding_dimension = embedding_dimension_from_graph(g);
  e.graph.central_self_intersection = g.central_self_intersection;
  e.graph.chains = g.chains;
  e.graph.minimal_self_intersections = minimal_resolution_self_intersections(c);
  return e;
}

bool catalog_less(const CatalogEntry& a, const CatalogEntry& b) {
  if (a.degree != b.degree) return a.degree < b.degree;
  if (a.fractional_parts.size() != b.fractional_parts.size()) {
    return a.fractional_parts.size() < b.fractional_parts.size();
  }
  return std::lexicographical_compare(a.fractional_parts.begin(), a.fractional_parts.end(),
                                      b.fractional_parts.begin(), b.fractional_parts.end(),
                                      [](const Rational& x, const Rational& y) { return x > y; });
}

namespace {

struct Candidate {
  std::vector<Rational> fractions;
  Rational degree;
};

std::vector<Rational> admissible_fractions(const SearchBounds& b) {
  std::vector<Rational> out;
  for (Integer q = b.q_min; q <= b.q_max; ++q) {
    for (Integer p = 1; p < q; ++p) {
      if (gcd(p, q) == 1) out.emplace_back(p, q);
    }
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

void extend_types(const std::vector<Rational>& fractions, std::size_t start, std::vector<Rational>& current,
                  const Rational& boundary_degree, int k_max, std::vector<std::vector<Rational>>& out) {
  out.push_back(current);
  if (static_cast<int>(current.size()) == k_max) return;
  for (std::size_t i = start; i < fractions.size(); ++i) {
    Rational b = boundary_degree + 1 - Rational(1, denominator(fractions[i]));
    if (b >= 2) continue;
    current.push_back(fractions[i]);
    extend_types(fractions, i, current, b, k_max, out);
    current.pop_back();
  }
}

std::vector<Candidate> candidates(const SearchBounds& b) {
  std::vector<std::vector<Rational>> types;
  std::vector<Rational> current;
  extend_types(admissible_fractions(b), 0, current, 0, b.effective_k_max, types);
  std::vector<Candidate> out;
  for (const auto& type : types) {
    Rational sum = 0;
    for (const auto& f : type) sum += f;
    // degree = sum + I > 0 with I integral.
    Integer first = floor(-sum) + 1;
    for (Integer i = first;; ++i) {
      Rational degree = sum + Rational(i);
      if (degree > b.degree_max) break;
      out.push_back({type, degree});
    }
  }
  return out;
}

}  // namespace

std::vector<CatalogEntry> enumerate(const SearchParams& params, unsigned jobs) {
  SearchBounds bounds = search_bounds(params);
  std::vector<Candidate> work = candidates(bounds);
  std::vector<std::optional<CatalogEntry>> results(work.size());

  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, std::max<std::size_t>(1, work.size()));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= work.size()) return;
      try {
        CurveCouple c = couple_from_fractional_data(work[i].fractions, work[i].degree);
        if (max_isotropy(c) > params.isotropy_bound) continue;
        if (!is_eps_lc_x(c, params.epsilon)) continue;
        results[i] = make_entry(c);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = work.size();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  std::vector<CatalogEntry> catalog;
  for (auto& r : results) {
    if (r) catalog.push_back(std::move(*r));
  }
  std::sort(catalog.begin(), catalog.end(), catalog_less);
  catalog.erase(std::unique(catalog.begin(), catalog.end(),
                            [](const CatalogEntry& a, const CatalogEntry& b) { return a.key == b.key; }),
                catalog.end());
  return catalog;
}

std::set<Rational> mld_spectrum(const std::vector<CatalogEntry>& catalog) {
  std::set<Rational> out;
  for (const auto& e : catalog) out.insert(e.mld);
  return out;
}

AuditReport audit_catalog(const std::vector<CatalogEntry>& catalog, const SearchParams& params) {
  params.validate();
  AuditReport report;
  std::map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    const CatalogEntry& e = catalog[i];
    ++report.checked;
    AuditFailure f;
    f.index = i;
    f.key = e.key.to_string();
    auto fail = [&](const std::string& reason) { f.reasons.push_back(reason); };

    if (!seen.emplace(f.key, i).second) fail("duplicate key");
    try {
      CurveCouple c = couple_from_fractional_data(e.fractional_parts, e.degree);
      if (normal_form(c).key != e.key) fail("key does not match fractional data");
      NecessaryConditions nc = necessary_eps_conditions(c, params.epsilon, params.isotropy_bound);
      if (!nc.vertex_ok) fail("vertex log discrepancy below epsilon");
      if (!nc.quotient_ok) fail("log Fano quotient is not eps/N-lc");
      if (!nc.isotropy_ok) fail("isotropy order exceeds N");
      if (!is_eps_lc_x(c, params.epsilon)) fail("resolution oracle: not eps-lc");
      ResolutionGraph g = build_graph(c);
      Rational a = vertex_log_discrepancy(c);
      if (a != 1 + g.central_discrepancy()) fail("a_E0 differs from 1 + central discrepancy");
      if (a != e.a_e0) fail("stored a_E0 is stale");
      if (mld_vertex(c) != e.mld) fail("stored mld is stale");
      if (nc.max_isotropy != e.max_isotropy) fail("stored max isotropy is stale");
      if (e.a_e0 * e.degree > 2) fail("a_E0 * degree exceeds 2");
    } catch (const Error& err) {
      fail(err.what());
    }
    if (!f.reasons.empty()) report.failures.push_back(std::move(f));
  }
  return report;
}

}  // namespace conesing
