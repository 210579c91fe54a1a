#pragma once

#include <string>

#include "seriesid/rational.hpp"

namespace seriesid {

/// x rounded half-to-even to `digits` places after the decimal point.
std::string to_decimal(const Rational& x, unsigned digits);

/// Largest k <= max_digits with radius <= 10^-k (0 if radius > 1).
unsigned covered_digits(const Rational& radius, unsigned max_digits);

/// Upward-rounded two-significant-digit scientific form, e.g. "1.3e-06"; "0" for zero.
std::string format_bound(const Rational& x);

}  // namespace seriesid
