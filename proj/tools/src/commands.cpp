#include "commands.hpp"

#include "json_io.hpp"

#include "conesing/error.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <random>

namespace conesing::cli {

namespace {

using io::Json;

constexpr std::uint64_t kDefaultSeed = 1;

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

Json with_schema(Json body) {
  Json out{{"schema", io::kSchema}};
  for (auto& [k, v] : body.items()) out[k] = std::move(v);
  return out;
}

CurveCouple load_couple(const std::string& path) { return io::couple_from_json(io::read_json_file(path)); }

Rational parse_epsilon(const std::string& text) {
  Rational eps = parse_rational(text);
  check_epsilon(eps);
  return eps;
}

Integer parse_bound(std::int64_t n) {
  if (n < 1) fail_precondition("BadIsotropyBound", "isotropy bound must be positive");
  return Integer(static_cast<long>(n));
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("CONESING_SEED")) {
    try {
      std::size_t used = 0;
      std::uint64_t seed = std::stoull(env, &used);
      if (used == std::string(env).size()) return seed;
    } catch (const std::exception&) {
    }
    fail_parse(std::string("CONESING_SEED is not an unsigned integer: ") + env);
  }
  return kDefaultSeed;
}

Json describe(const CurveCouple& c) {
  require_log_fano(c);
  NormalForm nf = normal_form(c);
  StandardPair quotient = log_fano_quotient(c);
  VertexData vd = vertex_decomposition(c);
  ResolutionGraph g = build_graph(c);
  Rational mld = mld_vertex(c);

  Json horizontal = Json::array();
  Json isotropy = Json::array();
  for (const auto& [p, coeff] : c.divisor().terms()) {
    horizontal.push_back(Json{{"point", io::to_json(p)},
                              {"weil_index", io::to_json(weil_index_at(c.divisor(), p))},
                              {"a", io::to_json(horizontal_log_discrepancy(c, p))}});
    isotropy.push_back(Json{{"point", io::to_json(p)}, {"order", io::to_json(isotropy_order(c, p))}});
  }
  Json transverse = Json::array();
  for (const auto& t : transverse_types(c)) {
    transverse.push_back(Json{{"point", io::to_json(t.point)},
                              {"q", io::to_json(t.cone.q)},
                              {"p", io::to_json(t.cone.p)},
                              {"mld", io::to_json(t.mld)}});
  }
  Json graph = io::to_json(g, mld);
  Json minimal = Json::array();
  for (const auto& x : minimal_resolution_self_intersections(c)) minimal.push_back(io::to_json(x));
  graph["minimal"] = minimal;

  return with_schema(Json{
      {"divisor", io::to_json(c.divisor())},
      {"degree", io::to_json(c.degree())},
      {"normal_form", Json{{"key", nf.key.to_string()}, {"divisor", io::to_json(nf.couple.divisor())}}},
      {"quotient", Json{{"boundary", io::to_json(quotient.boundary())}, {"log_fano", is_log_fano(quotient)}}},
      {"vertex", Json{{"m", io::to_json(vd.m)},
                      {"u", io::to_json(vd.u)},
                      {"H", io::to_json(vd.h)},
                      {"a_e0", io::to_json(vertex_log_discrepancy(c))}}},
      {"horizontal", horizontal},
      {"isotropy", isotropy},
      {"max_isotropy", io::to_json(max_isotropy(c))},
      {"cartier_index_kx", io::to_json(cartier_index_of_kx(c))},
      {"mld", io::to_json(mld)},
      {"graph", graph},
      {"transverse", transverse},
      {"hilbert", io::to_json(hilbert_series(c))},
      {"embedding_dimension", io::to_json(embedding_dimension_from_graph(g))},
  });
}

Json discrepancy(const CurveCouple& c, const std::optional<Rational>& eps, const std::optional<Integer>& n) {
  require_log_fano(c);
  StandardPair quotient = log_fano_quotient(c);
  VertexData vd = vertex_decomposition(c);
  Json horizontal = Json::array();
  for (const auto& [p, coeff] : c.divisor().terms()) {
    horizontal.push_back(Json{{"point", io::to_json(p)},
                              {"curve_log_discrepancy", io::to_json(curve_log_discrepancy(quotient, p))},
                              {"weil_index", io::to_json(weil_index_at(c.divisor(), p))},
                              {"a", io::to_json(horizontal_log_discrepancy(c, p))}});
  }
  Json out = with_schema(Json{
      {"quotient", io::to_json(quotient.boundary())},
      {"vertex", Json{{"m", io::to_json(vd.m)}, {"u", io::to_json(vd.u)}, {"H", io::to_json(vd.h)}}},
      {"a_e0", io::to_json(vertex_log_discrepancy(c))},
      {"horizontal", horizontal},
      {"cartier_index_kx", io::to_json(cartier_index_of_kx(c))},
  });
  if (eps) {
    out["epsilon"] = io::to_json(*eps);
    out["eps_lc"] = is_eps_lc_x(c, *eps);
    if (n) out["necessary"] = io::to_json(necessary_eps_conditions(c, *eps, *n));
  }
  return out;
}

struct VerifyOptions {
  std::int64_t an_n = 200;
  std::int64_t an_box = 500;
  std::int64_t rnc_max = 50;
};

Json verify_examples(const VerifyOptions& o, bool& pass) {
  if (o.an_n < 1 || o.an_box < 1 || o.rnc_max < 1) fail_precondition("BadBox", "scan sizes must be positive");

  bool an_pass = true;
  std::int64_t tight = 0;
  Json an_rows = Json::array();
  for (std::int64_t n = 1; n <= o.an_n; ++n) {
    AnScanResult r = an_min_over_actions(n, o.an_box);
    an_pass = an_pass && r.bound_holds;
    if (r.value == n) ++tight;
    if (n <= 5 || n == o.an_n || !r.bound_holds) {
      an_rows.push_back(Json{{"n", n}, {"min", r.value}, {"a", r.witness_a}, {"b", r.witness_b}});
    }
  }
  an_pass = an_pass && !an_is_cone_action({1, 1, 0}) && an_is_cone_action({1, 0, 1});

  bool rnc_pass = true;
  Json rnc_rows = Json::array();
  Json index_differs = Json::array();
  std::vector<RncRow> rows = rnc_family_report(o.rnc_max);
  for (const auto& r : rows) {
    Rational expected_mld = r.m == 1 ? Rational(2) : Rational(2) / r.m;
    rnc_pass = rnc_pass && r.a_e0 * r.m == 2 && r.mld == expected_mld && r.max_isotropy == 1;
    if (r.cartier_index_kx != r.m) index_differs.push_back(r.m);
    rnc_rows.push_back(Json{{"m", r.m},
                            {"a_e0", io::to_json(r.a_e0)},
                            {"cartier_index_kx", io::to_json(r.cartier_index_kx)},
                            {"max_isotropy", io::to_json(r.max_isotropy)},
                            {"mld", io::to_json(r.mld)}});
  }
  // Unboundedness: along odd m the index is m itself.
  const RncRow& top_odd = rows[(o.rnc_max - 1) / 2 * 2];
  bool unbounded = top_odd.cartier_index_kx == top_odd.m;
  rnc_pass = rnc_pass && unbounded;

  bool diag_pass = true;
  Json diag_rows = Json::array();
  for (std::int64_t d = 1; d <= 3; ++d) {
    DiagonalConeReport r = diagonal_cone_report(d);
    diag_pass = diag_pass && r.a_e0 == d + 1 && r.max_isotropy == 1 && r.smooth && r.violations == 0;
    diag_rows.push_back(Json{{"d", d},
                             {"a_e0", io::to_json(r.a_e0)},
                             {"max_isotropy", io::to_json(r.max_isotropy)},
                             {"smooth", r.smooth},
                             {"violations", r.violations}});
  }

  pass = an_pass && rnc_pass && diag_pass;
  return with_schema(Json{
      {"an_series", Json{{"pass", an_pass},
                         {"n_max", o.an_n},
                         {"box", o.an_box},
                         {"bound_attained", tight},
                         {"rows", an_rows}}},
      {"rational_normal_curves", Json{{"pass", rnc_pass},
                                      {"cartier_index_unbounded", unbounded},
                                      {"cartier_index_differs_from_m", index_differs},
                                      {"rows", rnc_rows}}},
      {"diagonal_cones", Json{{"pass", diag_pass}, {"rows", diag_rows}}},
      {"pass", pass},
  });
}

Json toric_check(const Fan& fan, const ToricDivisor& d, std::size_t samples, std::uint64_t seed) {
  validate_fan(fan);
  std::mt19937_64 rng(seed);
  std::vector<LatticeVector> vs = random_primitive_samples(fan, samples, rng);
  ComparisonReport report = verify_comparison(fan, d, vs);
  ConeOfX k = cone_of_x(fan, d);
  Json out = with_schema(io::to_json(report));
  out["seed"] = seed;
  out["cartier_index"] = io::to_json(cartier_index(fan, d));
  Json weil = Json::array();
  for (const auto& w : k.ray_weil_indices) weil.push_back(io::to_json(w));
  out["ray_weil_indices"] = weil;
  out["lattice_mld"] = k.rank <= 3 ? io::to_json(lattice_mld(k)) : Json();
  return out;
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::parse:
      return kParseError;
    case ErrorKind::precondition:
      return kPreconditionError;
    case ErrorKind::internal:
      return kInternalError;
  }
  return kInternalError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants of cone surface singularities", "conesing"};
  app.require_subcommand(1);

  std::string couple_path;
  auto add_couple = [&](CLI::App* cmd) { cmd->add_option("couple", couple_path, "Couple JSON file")->required(); };

  auto* describe_cmd = app.add_subcommand("describe", "Full invariant report of a couple");
  add_couple(describe_cmd);

  std::int64_t terms = 20;
  auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert series of the section ring");
  add_couple(hilbert_cmd);
  hilbert_cmd->add_option("--terms", terms, "Number of h(n) values to print")->check(CLI::Range(1, 100000));

  std::optional<std::int64_t> gen_bound, rel_bound;
  auto* presentation_cmd = app.add_subcommand("presentation", "Minimal generators and relations");
  add_couple(presentation_cmd);
  presentation_cmd->add_option("--gen-bound", gen_bound, "Generator degree bound")->check(CLI::PositiveNumber);
  presentation_cmd->add_option("--rel-bound", rel_bound, "Relation degree bound")->check(CLI::NonNegativeNumber);

  std::optional<std::string> eps_text;
  std::optional<std::int64_t> isotropy_bound;
  auto* discrepancy_cmd = app.add_subcommand("discrepancy", "Log Fano quotient and log discrepancies");
  add_couple(discrepancy_cmd);
  discrepancy_cmd->add_option("--epsilon", eps_text, "Test eps-lc membership");
  discrepancy_cmd->add_option("--isotropy-bound", isotropy_bound, "Also evaluate the necessary conditions");

  auto* resolve_cmd = app.add_subcommand("resolve", "Star-shaped resolution graph");
  add_couple(resolve_cmd);

  std::string eps_required;
  std::int64_t bound_required = 1;
  std::string out_path;
  unsigned jobs = 0;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Catalog of eps-lc cone surface singularities");
  enumerate_cmd->add_option("--epsilon", eps_required, "epsilon in (0,1] as p/q")->required();
  enumerate_cmd->add_option("--isotropy-bound", bound_required, "Isotropy bound N")->required();
  enumerate_cmd->add_option("--out", out_path, "Write the catalog here instead of stdout");
  enumerate_cmd->add_option("--jobs", jobs, "Worker threads (0 = all cores)");

  std::string catalog_path;
  auto* mld_cmd = app.add_subcommand("mld-set", "Minimal log discrepancies of a catalog");
  mld_cmd->add_option("--epsilon", eps_text, "epsilon in (0,1] as p/q");
  mld_cmd->add_option("--isotropy-bound", isotropy_bound, "Isotropy bound N");
  mld_cmd->add_option("--catalog", catalog_path, "Read an enumerated catalog instead");
  mld_cmd->add_option("--jobs", jobs, "Worker threads (0 = all cores)");

  std::string fan_path, divisor_path;
  std::size_t samples = 20;
  std::optional<std::uint64_t> seed;
  auto* toric_cmd = app.add_subcommand("toric-check", "Toric verification of the comparison formula");
  toric_cmd->add_option("--fan", fan_path, "Fan JSON file")->required();
  toric_cmd->add_option("--divisor", divisor_path, "Divisor JSON file")->required();
  toric_cmd->add_option("--samples", samples, "Random lattice valuations");
  toric_cmd->add_option("--seed", seed, "RNG seed (default: CONESING_SEED or 1)");

  VerifyOptions vo;
  auto* verify_cmd = app.add_subcommand("verify-examples", "Check the three counterexample families");
  verify_cmd->add_option("--an-n", vo.an_n, "Largest n of the A-series scan");
  verify_cmd->add_option("--an-box", vo.an_box, "Scan box for (a, b)");
  verify_cmd->add_option("--rnc-max", vo.rnc_max, "Largest rational normal curve degree");

  auto* audit_cmd = app.add_subcommand("audit", "Re-check a catalog against all necessary conditions");
  audit_cmd->add_option("catalog", catalog_path, "Catalog JSON file")->required();
  audit_cmd->add_option("--epsilon", eps_text, "Override the catalog epsilon");
  audit_cmd->add_option("--isotropy-bound", isotropy_bound, "Override the catalog isotropy bound");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

  try {
    if (describe_cmd->parsed()) {
      emit(out, describe(load_couple(couple_path)));
    } else if (hilbert_cmd->parsed()) {
      CurveCouple c = load_couple(couple_path);
      HilbertData h = hilbert_series(c);
      Json values = Json::array();
      for (std::int64_t n = 0; n < terms; ++n) values.push_back(io::to_json(h0(c, n)));
      emit(out, with_schema(Json{{"series", io::to_json(h)}, {"values", values}}));
    } else if (presentation_cmd->parsed()) {
      CurveCouple c = load_couple(couple_path);
      std::int64_t g = gen_bound.value_or(default_presentation_bound(c));
      std::int64_t r = rel_bound.value_or(g);
      Json body = with_schema(Json{{"series", io::to_json(hilbert_series(c))}});
      body.update(io::to_json(presentation(c, g, r)));
      emit(out, body);
    } else if (discrepancy_cmd->parsed()) {
      std::optional<Rational> eps;
      std::optional<Integer> n;
      if (eps_text) eps = parse_epsilon(*eps_text);
      if (isotropy_bound) n = parse_bound(*isotropy_bound);
      if (n && !eps) fail_parse("--isotropy-bound requires --epsilon");
      emit(out, discrepancy(load_couple(couple_path), eps, n));
    } else if (resolve_cmd->parsed()) {
      CurveCouple c = load_couple(couple_path);
      ResolutionGraph g = build_graph(c);
      Json body = io::to_json(g, mld_vertex(c));
      Json minimal = Json::array();
      for (const auto& x : minimal_resolution_self_intersections(c)) minimal.push_back(io::to_json(x));
      body["minimal"] = minimal;
      emit(out, with_schema(body));
    } else if (enumerate_cmd->parsed()) {
      SearchParams params{parse_epsilon(eps_required), parse_bound(bound_required)};
      Json catalog = io::catalog_to_json(enumerate(params, jobs), params);
      if (out_path.empty()) {
        emit(out, catalog);
      } else {
        std::ofstream file(out_path);
        if (!file) fail_parse("cannot write " + out_path);
        file << catalog.dump(2) << '\n';
        emit(out, with_schema(Json{{"out", out_path}, {"summary", catalog["summary"]}}));
      }
    } else if (mld_cmd->parsed()) {
      std::vector<CatalogEntry> catalog;
      Json params_json;
      if (!catalog_path.empty()) {
        if (eps_text || isotropy_bound) fail_parse("--catalog excludes --epsilon/--isotropy-bound");
        Json j = io::read_json_file(catalog_path);
        catalog = io::catalog_from_json(j);
        if (j.is_object() && j.contains("params")) params_json = j["params"];
      } else {
        if (!eps_text || !isotropy_bound) fail_parse("mld-set needs --catalog or both --epsilon and --isotropy-bound");
        SearchParams params{parse_epsilon(*eps_text), parse_bound(*isotropy_bound)};
        catalog = enumerate(params, jobs);
        params_json = Json{{"epsilon", io::to_json(params.epsilon)},
                           {"isotropy_bound", io::to_json(params.isotropy_bound)}};
      }
      emit(out, with_schema(Json{{"params", params_json},
                                 {"count", catalog.size()},
                                 {"mld_set", io::to_json(mld_spectrum(catalog))}}));
    } else if (toric_cmd->parsed()) {
      Fan fan = io::fan_from_json(io::read_json_file(fan_path));
      ToricDivisor d = io::toric_divisor_from_json(io::read_json_file(divisor_path));
      Json report = toric_check(fan, d, samples, resolve_seed(seed));
      emit(out, report);
      if (report["violations"].get<std::size_t>() != 0) return kVerificationFailed;
    } else if (verify_cmd->parsed()) {
      bool pass = false;
      emit(out, verify_examples(vo, pass));
      if (!pass) return kVerificationFailed;
    } else if (audit_cmd->parsed()) {
      Json j = io::read_json_file(catalog_path);
      std::vector<CatalogEntry> catalog = io::catalog_from_json(j);
      SearchParams params;
      if (j.is_object() && j.contains("params")) params = io::catalog_params_from_json(j);
      if (eps_text) params.epsilon = parse_epsilon(*eps_text);
      if (isotropy_bound) params.isotropy_bound = parse_bound(*isotropy_bound);
      if (params.epsilon == 0) fail_parse("catalog has no params; pass --epsilon and --isotropy-bound");
      AuditReport report = audit_catalog(catalog, params);
      emit(out, with_schema(io::to_json(report)));
      if (!report.failures.empty()) return kVerificationFailed;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInternalError;
  }
  return kOk;
}

}  // namespace conesing::cli
