#include "seriesid/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <future>
#include <ostream>
#include <set>
#include <sstream>

#include "seriesid/closed_form.hpp"
#include "seriesid/constants.hpp"
#include "seriesid/decimal.hpp"
#include "seriesid/discover.hpp"
#include "seriesid/error.hpp"
#include "seriesid/json_io.hpp"
#include "seriesid/ledger.hpp"
#include "seriesid/parser.hpp"

namespace seriesid {

namespace {

using nlohmann::json;

struct Options {
  bool json = false;
  std::string expr;
  unsigned digits = 30;
  std::uint64_t terms = 0;
  std::string ledger = "builtin";
  std::string formula;
  std::string checkpoints;
  std::uint64_t max_terms = 1000000;
  bool csv = false;
  std::string pool;
  std::size_t min_size = 2;
  std::size_t max_size = 2;
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::SchemaError:
    case ErrorKind::UnknownName:
    case ErrorKind::DuplicateFactor:
    case ErrorKind::InvalidFactor:
    case ErrorKind::DivergentSeries:
    case ErrorKind::DegreeTooHigh:
    case ErrorKind::PreconditionViolated:
    case ErrorKind::PrecisionOverflow:
      return kExitUsage;
    default:
      return kExitFail;
  }
}

Ledger load(const std::string& where) {
  return where == "builtin" ? builtin_ledger() : load_ledger(where);
}

std::string approx_text(const ApproxValue& v, unsigned digits) {
  return to_decimal(v.midpoint, covered_digits(v.radius, digits)) + " +/- " + format_bound(v.radius);
}

std::vector<std::uint64_t> parse_checkpoints(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw SeriesError(ErrorKind::ParseError, "checkpoint '" + item + "' is not a positive integer");
    }
    out.push_back(v);
  }
  return out;
}

int cmd_eval(const Options& o, std::ostream& out) {
  const SeriesDef s = parse_series(o.expr);
  const Evaluation ev = evaluate_detailed(s, o.digits);
  if (o.json) {
    out << json{{"command", "eval"},
                {"expr", render_series(s)},
                {"series", series_json(s)},
                {"digits", o.digits},
                {"value", to_decimal(ev.value.midpoint, covered_digits(ev.value.radius, o.digits))},
                {"radius", format_bound(ev.value.radius)},
                {"enclosure", approx_json(ev.value)},
                {"direct_terms", ev.direct_terms}}
               .dump()
        << "\n";
  } else {
    out << approx_text(ev.value, o.digits) << "\n";
  }
  return kExitOk;
}

int cmd_sum(const Options& o, std::ostream& out) {
  const SeriesDef s = parse_series(o.expr);
  const Rational exact = partial_sum_exact(s, o.terms);
  if (o.json) {
    out << json{{"command", "sum"}, {"expr", render_series(s)}, {"N", o.terms},
                {"exact", exact.str()}, {"decimal", to_decimal(exact, o.digits)}}
               .dump()
        << "\n";
  } else {
    out << exact.str() << "\n" << to_decimal(exact, o.digits) << "\n";
  }
  return kExitOk;
}

int cmd_closed_form(const Options& o, std::ostream& out) {
  const SeriesDef s = parse_series(o.expr);
  const ConstantVector v = closed_form(s);
  if (o.json) {
    out << json{{"command", "closed-form"}, {"expr", render_series(s)}, {"series", series_json(s)},
                {"value", constants_json(v)}, {"rendered", cv_render(v)}}
               .dump()
        << "\n";
  } else {
    out << cv_render(v) << "\n";
  }
  return kExitOk;
}

struct IdentityOutcome {
  ClosedFormReport symbolic;
  NumericReport numeric;
};

std::string rule_text(const CombinationRule& rule) {
  std::string out = rule.target + " =";
  bool first = true;
  for (const auto& [coef, name] : rule.combo) {
    const bool negative = coef.sign() < 0;
    out += first ? (negative ? " -" : " ") : (negative ? " - " : " + ");
    if (coef.abs() != Rational(1)) out += coef.abs().str() + "*";
    out += name;
    first = false;
  }
  return out;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Ledger ledger = load(o.ledger);
  // One task per record; output order follows the ledger regardless of scheduling.
  std::vector<std::future<IdentityOutcome>> tasks;
  for (const auto& record : ledger.series()) {
    tasks.push_back(std::async(std::launch::async, [&record, digits = o.digits] {
      return IdentityOutcome{verify_closedform(record), verify_numeric(record, digits)};
    }));
  }
  bool all_pass = true;
  json identities = json::array();
  std::size_t index = 0;
  for (auto& task : tasks) {
    const IdentityOutcome r = task.get();
    const IdentityRecord& record = ledger.series()[index++];
    const bool pass = r.symbolic.pass && r.numeric.pass;
    all_pass = all_pass && pass;
    if (o.json) {
      identities.push_back({{"name", record.name},
                            {"pass", pass},
                            {"closed_form_pass", r.symbolic.pass},
                            {"derived", constants_json(r.symbolic.derived)},
                            {"claimed", constants_json(r.symbolic.claimed)},
                            {"numeric_pass", r.numeric.pass},
                            {"series_value", approx_json(r.numeric.series_value)},
                            {"claimed_value", approx_json(r.numeric.claimed_value)}});
    } else {
      out << (pass ? "PASS" : "FAIL") << "  identity " << record.name << ": "
          << render_series(record.series) << " = " << cv_render(record.claimed)
          << "  [closed form " << (r.symbolic.pass ? "ok" : "got " + cv_render(r.symbolic.derived))
          << "; numeric " << o.digits << " digits " << (r.numeric.pass ? "ok" : "mismatch") << "]\n";
    }
  }
  json rules = json::array();
  for (const auto& rule : ledger.rules()) {
    const TermwiseReport r = verify_termwise(rule, ledger);
    const bool pass = r.pass && r.constants_consistent;
    all_pass = all_pass && pass;
    if (o.json) {
      rules.push_back({{"target", rule.target},
                       {"pass", pass},
                       {"termwise_pass", r.pass},
                       {"constants_consistent", r.constants_consistent},
                       {"combined", r.combined.str()},
                       {"target_term", r.target_term.str()}});
    } else {
      out << (pass ? "PASS" : "FAIL") << "  rule " << rule_text(rule) << "  [term-wise "
          << (r.pass ? "ok" : "differs: " + r.combined.str() + " vs " + r.target_term.str())
          << "; constants " << (r.constants_consistent ? "ok" : "mismatch") << "]\n";
    }
  }
  if (o.json) {
    out << json{{"command", "verify"}, {"digits", o.digits}, {"pass", all_pass},
                {"identities", identities}, {"rules", rules}}
               .dump()
        << "\n";
  }
  return all_pass ? kExitOk : kExitFail;
}

int cmd_benchmark(const Options& o, std::ostream& out) {
  const Ledger ledger = load(o.ledger);
  const AffineFormula& formula = ledger.formula(o.formula);
  const ScanResult scan =
      accuracy_scan(formula, ledger, o.digits, o.max_terms, parse_checkpoints(o.checkpoints));
  const unsigned shown = o.digits + 10;
  if (o.csv) {
    out << "N,approx,radius,abs_error_bound,accuracy_digits\n";
    for (const auto& s : scan.samples) {
      out << s.n << "," << to_decimal(s.value.midpoint, covered_digits(s.value.radius, shown)) << ","
          << format_bound(s.value.radius) << "," << format_bound(s.error_bound) << ","
          << accuracy_digits(s.error_bound) << "\n";
    }
  } else if (o.json) {
    json samples = json::array();
    for (const auto& s : scan.samples) {
      samples.push_back({{"N", s.n},
                         {"approx", to_decimal(s.value.midpoint, covered_digits(s.value.radius, shown))},
                         {"radius", format_bound(s.value.radius)},
                         {"abs_error_bound", format_bound(s.error_bound)},
                         {"accuracy_digits", accuracy_digits(s.error_bound)}});
    }
    out << json{{"command", "benchmark"}, {"formula", formula_json(formula)}, {"digits", o.digits},
                {"minimal_n", scan.minimal_n}, {"samples", samples}}
               .dump()
        << "\n";
  } else {
    out << "formula " << formula.name << " (" << formula.source << "): within 0.5e-" << o.digits
        << " of " << cv_render(formula.target) << " from N = " << scan.minimal_n << "\n";
    for (const auto& s : scan.samples) {
      out << "  N = " << s.n << "  " << approx_text(s.value, shown) << "  |error| <= "
          << format_bound(s.error_bound) << "  (" << accuracy_digits(s.error_bound) << " digits)\n";
    }
  }
  return kExitOk;
}

int cmd_discover(const Options& o, std::ostream& out) {
  const auto entries = discover(parse_factor_list(o.pool), o.min_size, o.max_size);
  const Ledger& known = builtin_ledger();
  const auto known_name = [&known](const IdentityRecord& r) -> std::string {
    const std::set<LinearFactor> mine(r.series.factors().begin(), r.series.factors().end());
    for (const auto& k : known.series()) {
      const std::set<LinearFactor> theirs(k.series.factors().begin(), k.series.factors().end());
      if (k.series.sign() == Sign::positive && mine == theirs &&
          k.series.numerator() == r.series.numerator() && k.series.scale() == r.series.scale()) {
        return k.name;
      }
    }
    return {};
  };
  json records = json::array();
  for (const auto& e : entries) {
    if (o.json) {
      if (e.record) {
        json j = record_json(*e.record);
        if (auto name = known_name(*e.record); !name.empty()) j["ledger_name"] = name;
        records.push_back(j);
      } else {
        json factors = json::array();
        for (const auto& f : e.factors) factors.push_back({f.a(), f.b()});
        records.push_back({{"factors", factors}, {"error", e.error}});
      }
      continue;
    }
    if (e.record) {
      out << e.record->name << " = " << cv_render(e.record->claimed);
      if (auto name = known_name(*e.record); !name.empty()) out << "  [" << name << "]";
      out << "\n";
    } else {
      std::string text;
      for (const auto& f : e.factors) text += (text.empty() ? "" : ",") + render_factor(f);
      out << "{" << text << "}: " << e.error << "\n";
    }
  }
  if (o.json) out << json{{"command", "discover"}, {"records", records}}.dump() << "\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact evaluation, closed forms and verification of rational-term series", "seriesid"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Emit one JSON object per command");

  const auto add_digits = [&o](CLI::App* sub) {
    sub->add_option("--digits", o.digits, "Decimal digits")->check(CLI::Range(1u, kMaxDigits));
  };
  auto* eval = app.add_subcommand("eval", "Enclose the full sum of a series");
  eval->add_option("series", o.expr, "Series expression, e.g. \"1/(n(4n-1)(4n-3))\"")->required();
  add_digits(eval);

  auto* sum = app.add_subcommand("sum", "Exact partial sum of the first N terms");
  sum->add_option("series", o.expr, "Series expression")->required();
  sum->add_option("-N", o.terms, "Number of terms")->required();
  add_digits(sum);

  auto* cf = app.add_subcommand("closed-form", "Exact value over {1, pi, ln2, gamma}");
  cf->add_option("series", o.expr, "Series expression")->required();

  auto* verify = app.add_subcommand("verify", "Check every identity and combination rule of a ledger");
  verify->add_option("--ledger", o.ledger, "Ledger JSON path, or 'builtin'");
  add_digits(verify);

  auto* bench = app.add_subcommand("benchmark", "Terms needed by a pi formula for a given accuracy");
  bench->add_option("--formula", o.formula, "Formula name from the ledger")->required();
  bench->add_option("--ledger", o.ledger, "Ledger JSON path, or 'builtin'");
  bench->add_option("--checkpoints", o.checkpoints, "Comma-separated term counts to report");
  bench->add_option("--max-terms", o.max_terms, "Scan limit")->check(CLI::Range(std::uint64_t{1}, kMaxScanTerms));
  bench->add_flag("--csv", o.csv, "CSV output");
  add_digits(bench);

  auto* disc = app.add_subcommand("discover", "Closed forms for all subsets of a factor pool");
  disc->add_option("--pool", o.pool, "Comma-separated factors, e.g. \"n,2n-1,4n-3\"")->required();
  disc->add_option("--min-size", o.min_size, "Smallest subset size (>= 2)");
  disc->add_option("--max-size", o.max_size, "Largest subset size");

  std::vector<const char*> argv{"seriesid"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }
  if (o.csv && !bench->parsed()) {
    err << "--csv applies to benchmark only\n";
    return kExitUsage;
  }

  try {
    if (eval->parsed()) return cmd_eval(o, out);
    if (sum->parsed()) return cmd_sum(o, out);
    if (cf->parsed()) return cmd_closed_form(o, out);
    if (verify->parsed()) {
      if (o.digits < 10) {
        err << "verify needs --digits >= 10\n";
        return kExitUsage;
      }
      return cmd_verify(o, out);
    }
    if (bench->parsed()) return cmd_benchmark(o, out);
    if (disc->parsed()) {
      if (o.max_size < o.min_size) o.max_size = o.min_size;
      return cmd_discover(o, out);
    }
  } catch (const SeriesError& e) {
    err << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return kExitUsage;
}

}  // namespace seriesid
