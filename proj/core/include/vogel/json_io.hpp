#pragma once

// JSON encodings. Rationals are ["num", "den"] pairs of decimal strings. Parsers throw
// ParseError carrying a JSON-pointer location.

#include "vogel/configs.hpp"
#include "vogel/formula.hpp"
#include "vogel/identity.hpp"
#include "vogel/qsearch.hpp"
#include "vogel/search144.hpp"
#include "vogel/sketch.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace vogel {

using Json = nlohmann::json;

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j, const std::string& where = "");

Json point_to_json(const ProjPoint& p);
ProjPoint point_from_json(const Json& j, const std::string& where = "");
Json form_to_json(const LinearForm& f);
LinearForm form_from_json(const Json& j, const std::string& where = "");

Json formula_to_json(const FactorProduct& f);
FactorProduct formula_from_json(const Json& j, const std::string& where = "");

Json table_to_json(const ConfigurationTable& t);
ConfigurationTable table_from_json(const Json& j, const std::string& where = "");
Json coloring_to_json(const Coloring& c);
Coloring coloring_from_json(const Json& j, const std::string& where = "");

Json perms_to_json(const PermTriple& p);
Json report_to_json(const IdentityReport& r);
Json eval_to_json(const EvalResult& r);
Json family_to_json(const SolutionFamily& f);
Json enumeration_to_json(const EnumerationResult& r);
Json sketch_to_json(const IncidenceSketch& s);
Json search144_to_json(const Search144Report& r);

/// Parses text, converting syntax errors to ParseError.
Json parse_json(const std::string& text, const std::string& where = "");

}  // namespace vogel
