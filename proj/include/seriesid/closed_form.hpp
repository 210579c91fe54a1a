#pragma once

#include <span>
#include <string>
#include <utility>

#include "seriesid/series.hpp"

namespace seriesid {

/// one + pi*pi_coef + ln2*ln 2 + gamma*euler_gamma, all coordinates exact.
struct ConstantVector {
  Rational one;
  Rational pi;
  Rational ln2;
  Rational gamma;

  bool is_zero() const {
    return one.is_zero() && pi.is_zero() && ln2.is_zero() && gamma.is_zero();
  }

  friend ConstantVector operator+(const ConstantVector& a, const ConstantVector& b) {
    return {a.one + b.one, a.pi + b.pi, a.ln2 + b.ln2, a.gamma + b.gamma};
  }
  friend ConstantVector operator-(const ConstantVector& a, const ConstantVector& b) {
    return {a.one - b.one, a.pi - b.pi, a.ln2 - b.ln2, a.gamma - b.gamma};
  }
  friend ConstantVector operator*(const Rational& c, const ConstantVector& v) {
    return {c * v.one, c * v.pi, c * v.ln2, c * v.gamma};
  }
  friend bool operator==(const ConstantVector&, const ConstantVector&) = default;
};

/// psi(x) for x > 0 whose fractional part is 0, 1/2, 1/4 or 3/4.
/// Throws UnsupportedConstantBasis for any other argument.
ConstantVector digamma_cv(const Rational& x);

/**
 * Exact value of a convergent series in the basis {1, pi, ln 2, gamma}.
 *
 * With partial fractions c_i/(a_i n + b_i) the sum is
 *   -scale * sum_i (c_i / a_i) psi(1 + b_i / a_i),
 * the ln N divergences cancelling because sum c_i/a_i = 0. Alternating
 * series are first paired into positive ones. The gamma coordinate of the
 * result is always zero; a nonzero value is reported as a logic error.
 */
ConstantVector closed_form(const SeriesDef& s);

ConstantVector cv_combine(std::span<const std::pair<Rational, ConstantVector>> terms);

/// "1/2 + pi/12 - ln2"; zero is "0".
std::string cv_render(const ConstantVector& v);

}  // namespace seriesid
