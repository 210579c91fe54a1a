#pragma once

#include "seriesid/ball.hpp"
#include "seriesid/closed_form.hpp"

namespace seriesid {

// Reference values that share no code path with the series under test.
// Both are memoized per digit count.

/// pi = 16 atan(1/5) - 4 atan(1/239), radius <= 10^-digits.
ApproxValue pi_approx(unsigned digits);

/// ln 2 = sum 1/(n 2^n), radius <= 10^-digits.
ApproxValue ln2_approx(unsigned digits);

/// one + pi*pi + ln2*ln 2 with radius <= 10^-digits. Throws GammaUnsupported
/// for a nonzero gamma coordinate.
ApproxValue cv_eval(const ConstantVector& v, unsigned digits);

}  // namespace seriesid
