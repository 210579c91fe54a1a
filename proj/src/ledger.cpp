#include "seriesid/ledger.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "seriesid/constants.hpp"
#include "seriesid/error.hpp"
#include "seriesid/json_io.hpp"

namespace seriesid {

extern const char* const kBuiltinLedgerJson;

Ledger::Ledger(std::vector<IdentityRecord> series, std::vector<CombinationRule> rules,
               std::vector<AffineFormula> formulas)
    : series_(std::move(series)), rules_(std::move(rules)), formulas_(std::move(formulas)) {
  std::set<std::string> names;
  for (const auto& r : series_) {
    if (!names.insert(r.name).second) {
      throw SeriesError(ErrorKind::SchemaError, "duplicate series name '" + r.name + "'");
    }
    if (!r.claimed.gamma.is_zero()) {
      throw SeriesError(ErrorKind::SchemaError, "claimed value of '" + r.name + "' has a gamma term");
    }
  }
  for (const auto& rule : rules_) {
    find(rule.target);
    for (const auto& [coef, name] : rule.combo) {
      find(name);
      if (name == rule.target) {
        throw SeriesError(ErrorKind::SchemaError, "rule for '" + rule.target + "' refers to itself");
      }
    }
  }
  std::set<std::string> formula_names;
  for (const auto& f : formulas_) {
    if (!formula_names.insert(f.name).second) {
      throw SeriesError(ErrorKind::SchemaError, "duplicate formula name '" + f.name + "'");
    }
    if (f.r1.is_zero()) throw SeriesError(ErrorKind::SchemaError, "formula '" + f.name + "' has r1 = 0");
    find(f.series_name);
  }
}

const IdentityRecord& Ledger::find(std::string_view name) const {
  auto it = std::find_if(series_.begin(), series_.end(), [&](const auto& r) { return r.name == name; });
  if (it == series_.end()) throw SeriesError(ErrorKind::UnknownName, "no series named '" + std::string(name) + "'");
  return *it;
}

const AffineFormula& Ledger::formula(std::string_view name) const {
  auto it = std::find_if(formulas_.begin(), formulas_.end(), [&](const auto& f) { return f.name == name; });
  if (it == formulas_.end()) {
    throw SeriesError(ErrorKind::UnknownName, "no formula named '" + std::string(name) + "'");
  }
  return *it;
}

Ledger parse_ledger(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SeriesError(ErrorKind::SchemaError, std::string("ledger is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SeriesError(ErrorKind::SchemaError, "ledger must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "series" && key != "rules" && key != "formulas") {
      throw SeriesError(ErrorKind::SchemaError, "unknown top-level field '" + key + "'");
    }
    if (!value.is_array()) throw SeriesError(ErrorKind::SchemaError, "'" + key + "' must be an array");
  }
  std::vector<IdentityRecord> series;
  std::vector<CombinationRule> rules;
  std::vector<AffineFormula> formulas;
  if (doc.contains("series")) {
    for (const auto& j : doc["series"]) series.push_back(record_from_json(j));
  }
  if (doc.contains("rules")) {
    for (const auto& j : doc["rules"]) rules.push_back(rule_from_json(j));
  }
  if (doc.contains("formulas")) {
    for (const auto& j : doc["formulas"]) formulas.push_back(formula_from_json(j));
  }
  return {std::move(series), std::move(rules), std::move(formulas)};
}

Ledger load_ledger(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SeriesError(ErrorKind::SchemaError, "cannot read ledger file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_ledger(buffer.str());
}

std::string dump_ledger(const Ledger& ledger) {
  nlohmann::json doc = {{"series", nlohmann::json::array()},
                        {"rules", nlohmann::json::array()},
                        {"formulas", nlohmann::json::array()}};
  for (const auto& r : ledger.series()) doc["series"].push_back(record_json(r));
  for (const auto& r : ledger.rules()) doc["rules"].push_back(rule_json(r));
  for (const auto& f : ledger.formulas()) doc["formulas"].push_back(formula_json(f));
  return doc.dump(2);
}

const Ledger& builtin_ledger() {
  static const Ledger ledger = parse_ledger(kBuiltinLedgerJson);
  return ledger;
}

RationalFunction signed_general_term(const SeriesDef& s) {
  if (s.sign() == Sign::alternating) return signed_general_term(alternating_split(s));
  return s.scale() * s.general_term();
}

TermwiseReport verify_termwise(const CombinationRule& rule, const Ledger& ledger) {
  TermwiseReport report;
  report.target = rule.target;
  const IdentityRecord& target = ledger.find(rule.target);
  std::vector<std::pair<Rational, RationalFunction>> terms;
  std::vector<std::pair<Rational, ConstantVector>> claims;
  for (const auto& [coef, name] : rule.combo) {
    const IdentityRecord& part = ledger.find(name);
    terms.emplace_back(coef, signed_general_term(part.series));
    claims.emplace_back(coef, part.claimed);
  }
  report.combined = ratfunc_combine(terms);
  report.target_term = signed_general_term(target.series);
  report.pass = ratfunc_equal(report.combined, report.target_term);
  report.constants_consistent = cv_combine(claims) == target.claimed;
  return report;
}

ClosedFormReport verify_closedform(const IdentityRecord& record) {
  ClosedFormReport report{record.name, false, closed_form(record.series), record.claimed};
  report.pass = report.derived == report.claimed;
  return report;
}

NumericReport verify_numeric(const IdentityRecord& record, unsigned digits) {
  if (digits < 10) throw SeriesError(ErrorKind::PreconditionViolated, "numeric verification needs >= 10 digits");
  NumericReport report{record.name, false, evaluate(record.series, digits), cv_eval(record.claimed, digits)};
  report.pass = agree(report.series_value, report.claimed_value);
  return report;
}

namespace {

Integer pow_ui(unsigned long base, unsigned long e) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, e);
  return out;
}

Integer floor_scaled(const Rational& x, unsigned bits) { return (x * Rational(pow_ui(2, bits))).floor(); }

}  // namespace

ScanResult accuracy_scan(const AffineFormula& formula, const Ledger& ledger, unsigned digits,
                         std::uint64_t max_n, std::vector<std::uint64_t> checkpoints,
                         std::optional<unsigned> working_digits) {
  if (max_n == 0 || max_n > kMaxScanTerms) {
    throw SeriesError(ErrorKind::PreconditionViolated,
                      "max terms must be in 1.." + std::to_string(kMaxScanTerms));
  }
  for (auto c : checkpoints) {
    if (c == 0 || c > max_n) {
      throw SeriesError(ErrorKind::PreconditionViolated,
                        "checkpoint " + std::to_string(c) + " outside 1.." + std::to_string(max_n));
    }
  }
  std::sort(checkpoints.begin(), checkpoints.end());
  checkpoints.erase(std::unique(checkpoints.begin(), checkpoints.end()), checkpoints.end());

  const unsigned wdigits = working_digits.value_or(digits + 10);
  if (wdigits > kMaxDigits || wdigits <= digits) {
    throw SeriesError(ErrorKind::PrecisionOverflow, "working precision must exceed the target digits");
  }
  const unsigned bits = bits_for_digits(wdigits);
  const SeriesDef& series = ledger.find(formula.series_name).series;
  const BallTermEvaluator ball_term(series, bits);

  const ApproxValue target = cv_eval(formula.target, wdigits);
  const Integer target_lo = floor_scaled(target.lower(), bits);
  const Integer target_hi = ceil_scaled(target.upper(), bits);
  const Integer one = pow_ui(2, bits);
  // dist < 0.5 * 10^-digits  <=>  dist_fixed * 2 * 10^digits < 2^bits
  const Integer tolerance_scale = 2 * pow_ui(10, digits);
  const Ball offset = Ball::from_rational(formula.r0, bits);

  ScanResult result;
  bool found = false;
  std::size_t next_checkpoint = 0;
  Ball sum(bits);
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    sum += ball_term(n);
    const Ball value = sum.scaled(formula.r1) + offset;
    Integer dist = std::max(Integer(value.upper() - target_lo), Integer(target_hi - value.lower()));
    const bool holds = dist * tolerance_scale < one;
    const bool is_checkpoint = next_checkpoint < checkpoints.size() && checkpoints[next_checkpoint] == n;
    const bool first_hit = holds && !found;
    if (first_hit) {
      found = true;
      result.minimal_n = n;
    }
    if (is_checkpoint) ++next_checkpoint;
    if (first_hit || is_checkpoint) {
      result.samples.push_back({n, value.approx(), Rational(dist, one)});
    }
    if (found && next_checkpoint == checkpoints.size()) break;
  }
  if (!found) {
    throw SeriesError(ErrorKind::NoConvergence, "formula '" + formula.name + "' not within 0.5e-" +
                                                    std::to_string(digits) + " by N = " +
                                                    std::to_string(max_n));
  }
  return result;
}

int accuracy_digits(const Rational& bound) {
  int d = -1;
  Rational threshold(1, 2);
  while (bound < threshold && d < static_cast<int>(kMaxDigits)) {
    ++d;
    threshold /= Rational(10);
  }
  return d;
}

}  // namespace seriesid
