#pragma once

// JSON schema "conesing/1": rationals are reduced "p/q" strings, points are
// {"t":"fin","x":"p/q"} | {"t":"inf"} | {"t":"lbl","name":"..."}, divisors are
// arrays of {"point", "coeff"}.

#include "conesing/counterexamples.hpp"
#include "conesing/demazure.hpp"
#include "conesing/divisor.hpp"
#include "conesing/enumerator.hpp"
#include "conesing/quotient.hpp"
#include "conesing/resolution.hpp"
#include "conesing/toric.hpp"

#include <json.hpp>

#include <filesystem>
#include <set>
#include <string>

namespace conesing::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "conesing/1";

/// Parses a file as JSON; throws Error(parse) on I/O or syntax errors.
Json read_json_file(const std::filesystem::path& path);
Json parse_json_text(const std::string& text);

Json to_json(const Rational& q);
Json to_json(const Integer& z);
Rational rational_from_json(const Json& j);
Integer integer_from_json(const Json& j);

Json to_json(const MarkedPoint& p);
MarkedPoint point_from_json(const Json& j);

Json to_json(const QDivisor& d);
Json to_json(const IntegralDivisor& d);
QDivisor divisor_from_json(const Json& j);

/// {"schema", "divisor": [...], "meta": {...}}
Json couple_to_json(const CurveCouple& c);
/// Accepts {"divisor": [...], "meta": optional}. Throws Error(parse) on schema
/// violations and Error(precondition, "NotAmple") when deg D <= 0.
CurveCouple couple_from_json(const Json& j);

Json to_json(const Fan& fan);
Fan fan_from_json(const Json& j);
Json to_json(const ToricDivisor& d);
ToricDivisor toric_divisor_from_json(const Json& j);

Json to_json(const CatalogEntry& e);
CatalogEntry catalog_entry_from_json(const Json& j);

Json catalog_to_json(const std::vector<CatalogEntry>& catalog, const SearchParams& params);
std::vector<CatalogEntry> catalog_from_json(const Json& j);
SearchParams catalog_params_from_json(const Json& j);

Json to_json(const std::set<Rational>& values);

Json to_json(const HilbertData& h);
Json to_json(const Presentation& p);
Json to_json(const ResolutionGraph& g, const Rational& mld);
Json to_json(const ComparisonReport& r);
Json to_json(const AuditReport& r);
Json to_json(const NecessaryConditions& n);

}  // namespace conesing::io
