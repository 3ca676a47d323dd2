#include "json_io.hpp"

#include "conesing/error.hpp"

#include <fstream>
#include <sstream>

namespace conesing::io {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) fail_parse(std::string("expected an object with field '") + name + "'");
  auto it = j.find(name);
  if (it == j.end()) fail_parse(std::string("missing field '") + name + "'");
  return *it;
}

std::int64_t int_from_json(const Json& j) {
  if (!j.is_number_integer()) fail_parse("expected an integer, got " + j.dump());
  return j.get<std::int64_t>();
}

Json integer_list(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const auto& z : v) out.push_back(to_json(z));
  return out;
}

Json rational_list(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_json(q));
  return out;
}

Json lattice_vector(const LatticeVector& v) {
  Json out = Json::array();
  for (auto x : v) out.push_back(x);
  return out;
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail_parse("cannot read " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json_text(buffer.str());
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail_parse(std::string("malformed JSON: ") + e.what());
  }
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Integer& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return to_string(z);
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  fail_parse("expected a rational \"p/q\", got " + j.dump());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    Rational q = parse_rational(j.get<std::string>());
    if (!is_integral(q)) fail_parse("expected an integer, got " + j.dump());
    return numerator(q);
  }
  fail_parse("expected an integer, got " + j.dump());
}

Json to_json(const MarkedPoint& p) {
  switch (p.kind()) {
    case MarkedPoint::Kind::finite:
      return Json{{"t", "fin"}, {"x", to_string(p.coordinate())}};
    case MarkedPoint::Kind::infinity:
      return Json{{"t", "inf"}};
    case MarkedPoint::Kind::label:
      return Json{{"t", "lbl"}, {"name", p.name()}};
  }
  fail_internal("InvariantViolation", "unknown point kind");
}

MarkedPoint point_from_json(const Json& j) {
  const Json& t = field(j, "t");
  if (!t.is_string()) fail_parse("point tag must be a string");
  const std::string tag = t.get<std::string>();
  if (tag == "fin") return MarkedPoint::finite(rational_from_json(field(j, "x")));
  if (tag == "inf") return MarkedPoint::infinity();
  if (tag == "lbl") {
    const Json& name = field(j, "name");
    if (!name.is_string()) fail_parse("label name must be a string");
    return MarkedPoint::label(name.get<std::string>());
  }
  fail_parse("unknown point tag '" + tag + "'");
}

Json to_json(const QDivisor& d) {
  Json out = Json::array();
  for (const auto& [p, c] : d.terms()) out.push_back(Json{{"point", to_json(p)}, {"coeff", to_json(c)}});
  return out;
}

Json to_json(const IntegralDivisor& d) { return to_json(to_rational(d)); }

QDivisor divisor_from_json(const Json& j) {
  if (!j.is_array()) fail_parse("divisor must be an array of {point, coeff}");
  QDivisor d;
  for (const auto& term : j) d.add(point_from_json(field(term, "point")), rational_from_json(field(term, "coeff")));
  return d;
}

Json couple_to_json(const CurveCouple& c) {
  return Json{{"schema", kSchema}, {"divisor", to_json(c.divisor())}, {"meta", Json::object()}};
}

CurveCouple couple_from_json(const Json& j) {
  if (j.contains("schema") && j["schema"] != kSchema) fail_parse("unsupported schema " + j["schema"].dump());
  return CurveCouple(divisor_from_json(field(j, "divisor")));
}

Json to_json(const Fan& fan) {
  Json rays = Json::array();
  for (const auto& r : fan.rays) rays.push_back(lattice_vector(r));
  Json cones = Json::array();
  for (const auto& c : fan.cones) cones.push_back(c);
  return Json{{"schema", kSchema}, {"rank", fan.rank}, {"rays", rays}, {"cones", cones}};
}

Fan fan_from_json(const Json& j) {
  Fan fan;
  std::int64_t rank = int_from_json(field(j, "rank"));
  if (rank < 1) fail_parse("fan rank must be positive");
  fan.rank = static_cast<std::size_t>(rank);
  const Json& rays = field(j, "rays");
  const Json& cones = field(j, "cones");
  if (!rays.is_array() || !cones.is_array()) fail_parse("rays and cones must be arrays");
  for (const auto& r : rays) {
    if (!r.is_array()) fail_parse("ray must be an array of integers");
    LatticeVector v;
    for (const auto& x : r) v.push_back(int_from_json(x));
    fan.rays.push_back(std::move(v));
  }
  for (const auto& c : cones) {
    if (!c.is_array()) fail_parse("cone must be an array of ray indices");
    std::vector<std::size_t> ids;
    for (const auto& x : c) {
      std::int64_t id = int_from_json(x);
      if (id < 0) fail_parse("negative ray index");
      ids.push_back(static_cast<std::size_t>(id));
    }
    fan.cones.push_back(std::move(ids));
  }
  return fan;
}

Json to_json(const ToricDivisor& d) { return rational_list(d.coefficients); }

ToricDivisor toric_divisor_from_json(const Json& input) {
  const Json& j = input.is_object() ? field(input, "coefficients") : input;
  if (!j.is_array()) fail_parse("toric divisor must be an array of \"p/q\" strings");
  ToricDivisor d;
  for (const auto& x : j) d.coefficients.push_back(rational_from_json(x));
  return d;
}

Json to_json(const CatalogEntry& e) {
  Json fractional = Json::array();
  for (const auto& f : e.fractional_parts) {
    fractional.push_back(Json{{"p", to_json(numerator(f))}, {"q", to_json(denominator(f))}});
  }
  Json chains = Json::array();
  for (const auto& c : e.graph.chains) chains.push_back(integer_list(c));
  return Json{
      {"key", e.key.to_string()},
      {"degree", to_json(e.degree)},
      {"fractional_data", fractional},
      {"a_e0", to_json(e.a_e0)},
      {"mld", to_json(e.mld)},
      {"cartier_index_kx", to_json(e.cartier_index_kx)},
      {"max_isotropy", to_json(e.max_isotropy)},
      {"link_determinant", to_json(e.link_determinant)},
      {"hilbert", Json{{"numerator", integer_list(e.hilbert_numerator)}, {"L", to_json(e.hilbert_period)}}},
      {"embedding_dimension", to_json(e.embedding_dimension)},
      {"graph", Json{{"center", to_json(e.graph.central_self_intersection)},
                     {"chains", chains},
                     {"minimal", integer_list(e.graph.minimal_self_intersections)}}},
  };
}

CatalogEntry catalog_entry_from_json(const Json& j) {
  CatalogEntry e;
  e.degree = rational_from_json(field(j, "degree"));
  const Json& fractional = field(j, "fractional_data");
  if (!fractional.is_array()) fail_parse("fractional_data must be an array");
  for (const auto& f : fractional) {
    Integer q = integer_from_json(field(f, "q"));
    if (q == 0) fail_parse("zero denominator in fractional_data");
    Rational value(integer_from_json(field(f, "p")), q);
    value.canonicalize();
    e.fractional_parts.push_back(value);
  }
  e.key.fractional_parts = e.fractional_parts;
  e.key.degree = e.degree;
  e.key.moduli_present = e.fractional_parts.size() > 3;
  e.a_e0 = rational_from_json(field(j, "a_e0"));
  e.mld = rational_from_json(field(j, "mld"));
  e.cartier_index_kx = integer_from_json(field(j, "cartier_index_kx"));
  e.max_isotropy = integer_from_json(field(j, "max_isotropy"));
  e.link_determinant = integer_from_json(field(j, "link_determinant"));
  const Json& hilbert = field(j, "hilbert");
  for (const auto& x : field(hilbert, "numerator")) e.hilbert_numerator.push_back(integer_from_json(x));
  e.hilbert_period = integer_from_json(field(hilbert, "L"));
  e.embedding_dimension = integer_from_json(field(j, "embedding_dimension"));
  const Json& graph = field(j, "graph");
  e.graph.central_self_intersection = integer_from_json(field(graph, "center"));
  for (const auto& chain : field(graph, "chains")) {
    std::vector<Integer> c;
    for (const auto& x : chain) c.push_back(integer_from_json(x));
    e.graph.chains.push_back(std::move(c));
  }
  for (const auto& x : field(graph, "minimal")) e.graph.minimal_self_intersections.push_back(integer_from_json(x));
  return e;
}

Json catalog_to_json(const std::vector<CatalogEntry>& catalog, const SearchParams& params) {
  SearchBounds bounds = search_bounds(params);
  std::size_t singular = 0;
  std::vector<std::size_t> by_points(4, 0);
  for (const auto& e : catalog) {
    if (!e.is_smooth()) ++singular;
    ++by_points[std::min<std::size_t>(e.fractional_parts.size(), 3)];
  }
  Json entries = Json::array();
  for (const auto& e : catalog) entries.push_back(to_json(e));
  return Json{
      {"schema", kSchema},
      {"params", Json{{"epsilon", to_json(params.epsilon)}, {"isotropy_bound", to_json(params.isotropy_bound)}}},
      {"bounds", Json{{"k_max", bounds.effective_k_max},
                      {"q_min", to_json(bounds.q_min)},
                      {"q_max", to_json(bounds.q_max)},
                      {"degree_max", to_json(bounds.degree_max)}}},
      {"summary", Json{{"count", catalog.size()},
                       {"singular", singular},
                       {"by_fractional_points", by_points},
                       {"mld_spectrum", to_json(mld_spectrum(catalog))}}},
      {"entries", entries},
  };
}

std::vector<CatalogEntry> catalog_from_json(const Json& j) {
  const Json& entries = j.is_array() ? j : field(j, "entries");
  if (!entries.is_array()) fail_parse("catalog entries must be an array");
  std::vector<CatalogEntry> out;
  for (const auto& e : entries) out.push_back(catalog_entry_from_json(e));
  return out;
}

SearchParams catalog_params_from_json(const Json& j) {
  const Json& params = field(j, "params");
  return {rational_from_json(field(params, "epsilon")), integer_from_json(field(params, "isotropy_bound"))};
}

Json to_json(const std::set<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_json(v));
  return out;
}

Json to_json(const HilbertData& h) {
  return Json{{"numerator", integer_list(h.numerator)}, {"L", to_json(h.period)}};
}

Json to_json(const Presentation& p) {
  return Json{{"generators", p.generator_degrees},
              {"relations", p.relation_degrees},
              {"equations", p.equations},
              {"search_bound", p.search_bound},
              {"relation_bound", p.relation_bound},
              {"verified_through", p.verified_through}};
}

Json to_json(const ResolutionGraph& g, const Rational& mld) {
  Json chains = Json::array();
  Json points = Json::array();
  for (std::size_t i = 0; i < g.chains.size(); ++i) {
    chains.push_back(integer_list(g.chains[i]));
    points.push_back(to_json(g.chain_points[i]));
  }
  return Json{{"center", to_json(g.central_self_intersection)},
              {"chains", chains},
              {"chain_points", points},
              {"discrepancies", rational_list(g.discrepancies)},
              {"mld", to_json(mld)},
              {"det", to_json(g.determinant)}};
}

Json to_json(const ComparisonReport& r) {
  Json samples = Json::array();
  for (const auto& s : r.samples) {
    samples.push_back(Json{{"v", lattice_vector(s.v)},
                           {"w", lattice_vector(s.w)},
                           {"weil_index", to_json(s.weil_index)},
                           {"cone_cartier_index", to_json(s.cone_cartier_index)},
                           {"a_x", to_json(s.a_x)},
                           {"a_y", to_json(s.a_y)},
                           {"identity_holds", s.identity_holds},
                           {"weil_below_cartier", s.weil_below_cartier}});
  }
  return Json{{"rays_have_unit_discrepancy", r.rays_have_unit_discrepancy},
              {"vertex_a_x", to_json(r.vertex_a_x)},
              {"degree_ratio", r.degree_ratio ? to_json(*r.degree_ratio) : Json()},
              {"vertex_matches", r.vertex_matches},
              {"violations", r.violations},
              {"samples", samples}};
}

Json to_json(const AuditReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    failures.push_back(Json{{"index", f.index}, {"key", f.key}, {"reasons", f.reasons}});
  }
  return Json{{"checked", r.checked}, {"failure_count", r.failures.size()}, {"failures", failures}};
}

Json to_json(const NecessaryConditions& n) {
  return Json{{"vertex_ok", n.vertex_ok},
              {"quotient_ok", n.quotient_ok},
              {"isotropy_ok", n.isotropy_ok},
              {"all", n.all()},
              {"vertex_log_discrepancy", to_json(n.vertex_log_discrepancy)},
              {"quotient_min_log_discrepancy", to_json(n.quotient_min_log_discrepancy)},
              {"eps_over_n", to_json(n.eps_over_n)},
              {"max_isotropy", to_json(n.max_isotropy)}};
}

}  // namespace conesing::io
