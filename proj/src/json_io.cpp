#include "seriesid/json_io.hpp"

#include <set>

#include "seriesid/error.hpp"

namespace seriesid {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(std::string_view where, const std::string& what) {
  throw SeriesError(ErrorKind::SchemaError, std::string(where) + ": " + what);
}

void require_object(const json& j, std::string_view where, std::initializer_list<const char*> required,
                    std::initializer_list<const char*> optional) {
  if (!j.is_object()) schema_error(where, "expected an object");
  std::set<std::string> known;
  for (const char* k : required) {
    known.insert(k);
    if (!j.contains(k)) schema_error(where, std::string("missing field '") + k + "'");
  }
  for (const char* k : optional) known.insert(k);
  for (const auto& [key, value] : j.items()) {
    if (!known.contains(key)) schema_error(where, "unknown field '" + key + "'");
  }
}

std::string string_field(const json& j, const char* key, std::string_view where) {
  if (!j.at(key).is_string()) schema_error(where, std::string("'") + key + "' must be a string");
  return j.at(key).get<std::string>();
}

std::int64_t integer_from_json(const json& j, std::string_view where) {
  if (!j.is_number_integer()) schema_error(where, "expected an integer");
  return j.get<std::int64_t>();
}

}  // namespace

json rational_json(const Rational& r) { return r.str(); }

json constants_json(const ConstantVector& v) {
  return {{"one", v.one.str()}, {"pi", v.pi.str()}, {"ln2", v.ln2.str()}, {"gamma", v.gamma.str()}};
}

json approx_json(const ApproxValue& v) {
  return {{"midpoint", v.midpoint.str()}, {"radius", v.radius.str()}};
}

json series_json(const SeriesDef& s) {
  json numerator = json::array();
  for (const auto& c : s.numerator().coefficients()) {
    if (c.is_integer() && c.numerator().fits_slong_p()) {
      numerator.push_back(c.numerator().get_si());
    } else {
      numerator.push_back(c.str());
    }
  }
  json factors = json::array();
  for (const auto& f : s.factors()) factors.push_back({f.a(), f.b()});
  return {{"sign", s.sign() == Sign::positive ? "positive" : "alternating"},
          {"numerator", numerator},
          {"factors", factors},
          {"scale", s.scale().str()}};
}

json record_json(const IdentityRecord& r) {
  json j = series_json(r.series);
  j["name"] = r.name;
  j["claimed"] = constants_json(r.claimed);
  j["source"] = r.source;
  return j;
}

json rule_json(const CombinationRule& r) {
  json combo = json::array();
  for (const auto& [coef, name] : r.combo) combo.push_back({{"coef", coef.str()}, {"name", name}});
  return {{"target", r.target}, {"combo", combo}, {"source", r.source}};
}

json formula_json(const AffineFormula& f) {
  return {{"name", f.name},     {"r0", f.r0.str()},  {"r1", f.r1.str()},
          {"series", f.series_name}, {"target", constants_json(f.target)}, {"source", f.source}};
}

Rational rational_from_json(const json& j, std::string_view where) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  if (!j.is_string()) schema_error(where, "rational must be a \"p/q\" string");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const SeriesError& e) {
    schema_error(where, e.what());
  }
}

ConstantVector constants_from_json(const json& j, std::string_view where) {
  require_object(j, where, {"one", "pi", "ln2", "gamma"}, {});
  return {rational_from_json(j.at("one"), where), rational_from_json(j.at("pi"), where),
          rational_from_json(j.at("ln2"), where), rational_from_json(j.at("gamma"), where)};
}

IdentityRecord record_from_json(const json& j) {
  const std::string where = j.is_object() && j.contains("name") && j["name"].is_string()
                                ? "series '" + j["name"].get<std::string>() + "'"
                                : std::string("series entry");
  require_object(j, where, {"name", "sign", "numerator", "factors", "claimed"}, {"scale", "source"});
  const std::string sign_text = string_field(j, "sign", where);
  if (sign_text != "positive" && sign_text != "alternating") {
    schema_error(where, "sign must be \"positive\" or \"alternating\"");
  }
  const Sign sign = sign_text == "positive" ? Sign::positive : Sign::alternating;
  if (!j["numerator"].is_array()) schema_error(where, "numerator must be an array");
  std::vector<Rational> coeffs;
  for (const auto& c : j["numerator"]) coeffs.push_back(rational_from_json(c, where));
  if (!j["factors"].is_array()) schema_error(where, "factors must be an array");
  std::vector<LinearFactor> factors;
  for (const auto& f : j["factors"]) {
    if (!f.is_array() || f.size() != 2) schema_error(where, "factor must be an [a, b] pair");
    factors.emplace_back(integer_from_json(f[0], where), integer_from_json(f[1], where));
  }
  const Rational scale = j.contains("scale") ? rational_from_json(j["scale"], where) : Rational(1);
  return {string_field(j, "name", where),
          SeriesDef(sign, Polynomial(std::move(coeffs)), std::move(factors), scale),
          constants_from_json(j["claimed"], where),
          j.contains("source") ? string_field(j, "source", where) : std::string()};
}

CombinationRule rule_from_json(const json& j) {
  const std::string where = "rule";
  require_object(j, where, {"target", "combo"}, {"source"});
  CombinationRule rule;
  rule.target = string_field(j, "target", where);
  if (!j["combo"].is_array() || j["combo"].empty()) schema_error(where, "combo must be a nonempty array");
  for (const auto& c : j["combo"]) {
    require_object(c, where, {"coef", "name"}, {});
    rule.combo.emplace_back(rational_from_json(c["coef"], where), string_field(c, "name", where));
  }
  if (j.contains("source")) rule.source = string_field(j, "source", where);
  return rule;
}

AffineFormula formula_from_json(const json& j) {
  const std::string where = "formula";
  require_object(j, where, {"name", "r0", "r1", "series", "target"}, {"source"});
  return {string_field(j, "name", where),
          rational_from_json(j["r0"], where),
          rational_from_json(j["r1"], where),
          string_field(j, "series", where),
          constants_from_json(j["target"], where),
          j.contains("source") ? string_field(j, "source", where) : std::string()};
}

}  // namespace seriesid
