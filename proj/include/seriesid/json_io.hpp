#pragma once

#include <json.hpp>

#include "seriesid/ledger.hpp"

namespace seriesid {

// JSON spellings shared by the ledger document and CLI --json output.
// Rationals are "p/q" strings, polynomials constant-first arrays, factors
// [a, b] pairs.

nlohmann::json rational_json(const Rational& r);
nlohmann::json constants_json(const ConstantVector& v);
nlohmann::json approx_json(const ApproxValue& v);
/// Series fields without name/claimed/source.
nlohmann::json series_json(const SeriesDef& s);
nlohmann::json record_json(const IdentityRecord& r);
nlohmann::json rule_json(const CombinationRule& r);
nlohmann::json formula_json(const AffineFormula& f);

Rational rational_from_json(const nlohmann::json& j, std::string_view where);
ConstantVector constants_from_json(const nlohmann::json& j, std::string_view where);
IdentityRecord record_from_json(const nlohmann::json& j);
CombinationRule rule_from_json(const nlohmann::json& j);
AffineFormula formula_from_json(const nlohmann::json& j);

}  // namespace seriesid
