#include <doctest.h>

#include <json.hpp>
#include <string>
#include <vector>

#include "reference_values.hpp"
#include "seriesid/closed_form.hpp"
#include "seriesid/decimal.hpp"
#include "seriesid/error.hpp"
#include "seriesid/ledger.hpp"

using namespace seriesid;

namespace {

ConstantVector cv(Rational one, Rational pi, Rational ln2) {
  return {std::move(one), std::move(pi), std::move(ln2), Rational(0)};
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const SeriesError& e) {
    return e.kind();
  }
  FAIL("no SeriesError thrown");
  return ErrorKind::ParseError;
}

const CombinationRule& rule_for(const std::string& target) {
  for (const auto& r : builtin_ledger().rules())
    if (r.target == target) return r;
  throw std::logic_error("missing rule " + target);
}

// exact |2 + 16 * partial(S19, N) - pi| from exact partial sums and the frozen decimal
Rational s19pi_error(std::uint64_t N) {
  const Rational x = Rational(2) + Rational(16) * partial_sum_exact(builtin_ledger().find("S19").series, N);
  return (x - reference::decimal(reference::kPi).midpoint).abs();
}

}  // namespace

TEST_CASE("builtin ledger contents") {
  const Ledger& L = builtin_ledger();
  CHECK(L.series().size() == 13);
  CHECK(L.rules().size() == 6);
  CHECK(L.find("S17").claimed == cv(Rational(0), Rational(0), Rational(1, 2)));
  CHECK(L.find("S19").claimed == cv(Rational(-1, 8), Rational(1, 16), Rational(0)));
  CHECK(L.find("S_e").claimed == cv(Rational(-1, 3), Rational(-1, 6), Rational(4, 3)));
  CHECK(L.find("OG").claimed == cv(Rational(0), Rational(1, 3), Rational(0)));
  CHECK(L.formula("s19pi").r0 == Rational(2));
  CHECK(L.formula("s19pi").r1 == Rational(16));
  CHECK(kind_of([&] { L.find("S99"); }) == ErrorKind::UnknownName);
  CHECK(kind_of([&] { L.formula("nope"); }) == ErrorKind::UnknownName);
}

TEST_CASE("verify_termwise") {
  const Ledger& L = builtin_ledger();
  for (const auto& rule : L.rules()) {
    const TermwiseReport r = verify_termwise(rule, L);
    CAPTURE(rule.target);
    CHECK(r.pass);
    CHECK(r.constants_consistent);
    CHECK(ratfunc_equal(r.combined, r.target_term));
  }
  const TermwiseReport d = verify_termwise(rule_for("S_d"), L);
  CHECK(d.pass);
  CHECK(verify_termwise(rule_for("S1"), L).pass);

  CombinationRule corrupted = rule_for("S_d");
  corrupted.combo[0].first = Rational(7);
  const TermwiseReport bad = verify_termwise(corrupted, L);
  CHECK_FALSE(bad.pass);
  CHECK_FALSE(bad.constants_consistent);
}

TEST_CASE("verify_closedform") {
  const Ledger& L = builtin_ledger();
  const ClosedFormReport s1 = verify_closedform(L.find("S1"));
  CHECK(s1.pass);
  CHECK(s1.derived == cv(Rational(0), Rational(1, 3), Rational(-1)));
  const ClosedFormReport sa = verify_closedform(L.find("S_a"));
  CHECK(sa.pass);
  CHECK(sa.derived == cv(Rational(0), Rational(-1, 3), Rational(2)));

  IdentityRecord perturbed = L.find("S1");
  perturbed.claimed.pi += Rational(1, 1000);
  CHECK_FALSE(verify_closedform(perturbed).pass);
}

TEST_CASE("verify_numeric") {
  const Ledger& L = builtin_ledger();
  const NumericReport s19 = verify_numeric(L.find("S19"), 50);
  CHECK(s19.pass);
  CHECK(agree(s19.series_value, reference::decimal(reference::kS19)));

  const NumericReport og = verify_numeric(L.find("OG"), 50);
  CHECK(og.pass);
  CHECK(to_decimal(og.series_value.midpoint, 10) == "1.0471975512");
  CHECK(to_decimal(og.claimed_value.midpoint, 10) == "1.0471975512");

  IdentityRecord perturbed = L.find("S19");
  perturbed.claimed.one += Rational(1, 1000000);
  CHECK_FALSE(verify_numeric(perturbed, 50).pass);
  // a perturbation far below the tolerance of a 10-digit check is invisible there,
  // but not at 50 digits
  perturbed.claimed.one = L.find("S19").claimed.one + reference::pow10_neg(30);
  CHECK(verify_numeric(perturbed, 20).pass);
  CHECK_FALSE(verify_numeric(perturbed, 50).pass);
}

TEST_CASE("property: claimed constants are closed under the rules") {
  const Ledger& L = builtin_ledger();
  for (const auto& rule : L.rules()) {
    std::vector<std::pair<Rational, ConstantVector>> terms;
    for (const auto& [c, name] : rule.combo) terms.emplace_back(c, L.find(name).claimed);
    CAPTURE(rule.target);
    CHECK(cv_combine(terms) == L.find(rule.target).claimed);
    CHECK(cv_combine(terms) == closed_form(L.find(rule.target).series));
  }
}

TEST_CASE("accuracy_scan on the fast formula") {
  const Ledger& L = builtin_ledger();
  const AffineFormula& f = L.formula("s19pi");

  const ScanResult two = accuracy_scan(f, L, 2, 1000, {9});
  CHECK(two.minimal_n == 5);
  REQUIRE(two.samples.size() == 2);
  CHECK(two.samples[0].n == 5);
  CHECK(two.samples[1].n == 9);
  CHECK(to_decimal(two.samples[1].value.midpoint, 6) == "3.140134");
  CHECK(to_decimal(two.samples[1].value.midpoint, 12).starts_with("3.140133"));
  CHECK(two.samples[1].error_bound < Rational(5, 1000));
  CHECK(accuracy_digits(two.samples[1].error_bound) == 2);

  const ScanResult five = accuracy_scan(f, L, 5, 1000, {217});
  CHECK(five.minimal_n == 158);
  REQUIRE(five.samples.size() == 2);
  CHECK(five.samples[1].n == 217);
  CHECK(to_decimal(five.samples[1].value.midpoint, 12).starts_with("3.141590"));
  CHECK(five.samples[1].error_bound < Rational(5, 1000000));

  // Exact partial sums confirm both minima: the error crosses 0.5e-d right there.
  CHECK(s19pi_error(4) >= Rational(5, 1000));
  CHECK(s19pi_error(5) < Rational(5, 1000));
  CHECK(s19pi_error(157) >= Rational(5, 1000000));
  CHECK(s19pi_error(158) < Rational(5, 1000000));

  // Every enclosure bounds the exact error.
  CHECK(s19pi_error(9) <= two.samples[1].error_bound);
  CHECK(s19pi_error(217) <= five.samples[1].error_bound);
}

TEST_CASE("property: scan predicate stays true past the minimum") {
  const Ledger& L = builtin_ledger();
  const AffineFormula& f = L.formula("s19pi");
  const unsigned digits = 5;
  const std::uint64_t start = accuracy_scan(f, L, digits, 1000).minimal_n;
  std::vector<std::uint64_t> checkpoints;
  for (std::uint64_t n = start; n <= start + 100; ++n) checkpoints.push_back(n);
  const ScanResult r = accuracy_scan(f, L, digits, 1000, checkpoints);
  REQUIRE(r.samples.size() == checkpoints.size());
  Rational previous = r.samples.front().error_bound;
  for (const auto& s : r.samples) {
    CAPTURE(s.n);
    CHECK(s.error_bound < Rational(5, 1000000));
    CHECK(s.error_bound <= previous);
    previous = s.error_bound;
  }
}

TEST_CASE("accuracy_scan errors") {
  const Ledger& L = builtin_ledger();
  CHECK(kind_of([&] { accuracy_scan(L.formula("s19pi"), L, 5, 100); }) == ErrorKind::NoConvergence);
  CHECK(kind_of([&] { accuracy_scan(L.formula("s19pi"), L, 5, 100, {101}); }) ==
        ErrorKind::PreconditionViolated);
  CHECK(kind_of([&] { accuracy_scan(L.formula("s19pi"), L, 5, 0); }) == ErrorKind::PreconditionViolated);
}

TEST_CASE("accuracy_digits") {
  CHECK(accuracy_digits(Rational(1)) == -1);
  CHECK(accuracy_digits(Rational(4, 10)) == 0);
  CHECK(accuracy_digits(Rational(15, 10000)) == 2);
  CHECK(accuracy_digits(Rational(5, 1000)) == 1);
  CHECK(accuracy_digits(Rational(51, 10000)) == 1);
}

TEST_CASE("ledger document") {
  const std::string text = dump_ledger(builtin_ledger());
  const Ledger again = parse_ledger(text);
  CHECK(again.series().size() == 13);
  for (const auto& rec : builtin_ledger().series()) {
    CAPTURE(rec.name);
    CHECK(again.find(rec.name).series == rec.series);
    CHECK(again.find(rec.name).claimed == rec.claimed);
  }
  CHECK(dump_ledger(again) == text);

  SUBCASE("unknown fields are rejected") {
    auto doc = nlohmann::json::parse(text);
    doc["series"][0]["colour"] = "red";
    CHECK(kind_of([&] { parse_ledger(doc.dump()); }) == ErrorKind::SchemaError);
    doc = nlohmann::json::parse(text);
    doc["extra"] = 1;
    CHECK(kind_of([&] { parse_ledger(doc.dump()); }) == ErrorKind::SchemaError);
  }
  SUBCASE("structural errors") {
    auto doc = nlohmann::json::parse(text);
    doc["series"].push_back(doc["series"][0]);
    CHECK(kind_of([&] { parse_ledger(doc.dump()); }) == ErrorKind::SchemaError);

    doc = nlohmann::json::parse(text);
    doc["series"][0]["claimed"]["gamma"] = "1";
    CHECK(kind_of([&] { parse_ledger(doc.dump()); }) == ErrorKind::SchemaError);

    doc = nlohmann::json::parse(text);
    doc["rules"][0]["combo"][0]["name"] = "missing";
    CHECK(kind_of([&] { parse_ledger(doc.dump()); }) == ErrorKind::UnknownName);

    doc = nlohmann::json::parse(text);
    doc["formulas"][0]["r1"] = "0";
    CHECK(kind_of([&] { parse_ledger(doc.dump()); }) == ErrorKind::SchemaError);

    CHECK(kind_of([&] { parse_ledger("{not json"); }) == ErrorKind::SchemaError);
  }
  SUBCASE("minimal user document") {
    const Ledger mine = parse_ledger(R"({
      "series": [{"name": "T", "sign": "positive", "numerator": [1], "factors": [[1,0],[2,-1]],
                  "claimed": {"one": "0", "pi": "0", "ln2": "2", "gamma": "0"}}],
      "rules": [], "formulas": []})");
    CHECK(verify_closedform(mine.find("T")).pass);
    CHECK(mine.find("T").series.scale() == Rational(1));
  }
}
