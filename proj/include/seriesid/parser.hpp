#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "seriesid/series.hpp"

namespace seriesid {

/**
 * Parses a series expression:
 *
 *   series := ["alt:"] [rational "*"] poly "/" "(" factor { ["*"] factor } ")"
 *   factor := "(" term ")" | term
 *   term   := [int] "n" [("+" | "-") int] | int
 *   poly   := int | "(" polynomial in n with integer coefficients ")"
 *
 * Whitespace is ignored. Integer factors are folded into the scale.
 * Throws ParseError with the offending position; validation errors from
 * SeriesDef (DuplicateFactor, InvalidFactor, DivergentSeries) propagate.
 */
SeriesDef parse_series(std::string_view text);

/// Parses a single factor such as "4n-1" or "(2n + 3)".
LinearFactor parse_factor(std::string_view text);

/// Comma-separated factor list, e.g. "n,2n-1,4n+1".
std::vector<LinearFactor> parse_factor_list(std::string_view text);

/// Canonical expression accepted by parse_series; round-trips exactly for
/// integer numerators.
std::string render_series(const SeriesDef& s);

/// "4n-1" style, no spaces.
std::string render_factor(const LinearFactor& f);

}  // namespace seriesid
