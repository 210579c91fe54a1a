#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "seriesid/closed_form.hpp"
#include "seriesid/series.hpp"

namespace seriesid {

struct IdentityRecord {
  std::string name;
  SeriesDef series;
  ConstantVector claimed;
  std::string source;
};

struct CombinationRule {
  std::string target;
  std::vector<std::pair<Rational, std::string>> combo;
  std::string source;
};

/// r0 + r1 * series approximates target.
struct AffineFormula {
  std::string name;
  Rational r0;
  Rational r1;
  std::string series_name;
  ConstantVector target;
  std::string source;
};

class Ledger {
 public:
  Ledger() = default;
  /// Validates names, references and claims; throws SchemaError or UnknownName.
  Ledger(std::vector<IdentityRecord> series, std::vector<CombinationRule> rules,
         std::vector<AffineFormula> formulas);

  const std::vector<IdentityRecord>& series() const { return series_; }
  const std::vector<CombinationRule>& rules() const { return rules_; }
  const std::vector<AffineFormula>& formulas() const { return formulas_; }

  const IdentityRecord& find(std::string_view name) const;
  const AffineFormula& formula(std::string_view name) const;

 private:
  std::vector<IdentityRecord> series_;
  std::vector<CombinationRule> rules_;
  std::vector<AffineFormula> formulas_;
};

/// Reads the ledger JSON document. Unknown fields are rejected.
Ledger parse_ledger(std::string_view json_text);
Ledger load_ledger(const std::filesystem::path& path);
std::string dump_ledger(const Ledger& ledger);

/// The identities, rules and pi formulas shipped with the library.
const Ledger& builtin_ledger();

struct TermwiseReport {
  std::string target;
  bool pass = false;
  RationalFunction combined;
  RationalFunction target_term;
  /// The same coefficients applied to the claimed constants reproduce the
  /// target's claim.
  bool constants_consistent = false;
};

struct ClosedFormReport {
  std::string name;
  bool pass = false;
  ConstantVector derived;
  ConstantVector claimed;
};

struct NumericReport {
  std::string name;
  bool pass = false;
  ApproxValue series_value;
  ApproxValue claimed_value;
};

/// scale * summand as a rational function of n; alternating series are paired first.
RationalFunction signed_general_term(const SeriesDef& s);

TermwiseReport verify_termwise(const CombinationRule& rule, const Ledger& ledger);
ClosedFormReport verify_closedform(const IdentityRecord& record);
NumericReport verify_numeric(const IdentityRecord& record, unsigned digits);

struct ScanSample {
  std::uint64_t n = 0;
  ApproxValue value;
  /// Upper bound on |value - target| over both enclosures.
  Rational error_bound;
};

struct ScanResult {
  std::uint64_t minimal_n = 0;
  std::vector<ScanSample> samples;
};

inline constexpr std::uint64_t kMaxScanTerms = 10000000;

/**
 * Forward scan for the least N <= max_n at which every point of the
 * enclosure of r0 + r1 * partial_sum(series, N) is within 0.5 * 10^-digits
 * of every point of the target's enclosure.
 *
 * Samples are returned for the minimal N and every checkpoint, in order.
 * Working precision defaults to digits + 10. Throws NoConvergence.
 */
ScanResult accuracy_scan(const AffineFormula& formula, const Ledger& ledger, unsigned digits,
                         std::uint64_t max_n, std::vector<std::uint64_t> checkpoints = {},
                         std::optional<unsigned> working_digits = std::nullopt);

/// Largest d >= 0 with bound < 0.5 * 10^-d, or -1 if bound >= 1/2.
int accuracy_digits(const Rational& bound);

}  // namespace seriesid
