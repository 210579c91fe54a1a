#include "seriesid/closed_form.hpp"

#include <stdexcept>

#include "seriesid/error.hpp"

namespace seriesid {

namespace {

// Gauss digamma theorem at the quarter-integer base points.
ConstantVector digamma_base(const Rational& frac) {
  const Rational half(1, 2);
  if (frac == Rational(1, 4)) return {0, -half, -3, -1};
  if (frac == half) return {0, 0, -2, -1};
  if (frac == Rational(3, 4)) return {0, half, -3, -1};
  throw SeriesError(ErrorKind::UnsupportedConstantBasis,
                    "digamma at fractional part " + frac.str() + " leaves the {1, pi, ln2, gamma} basis");
}

}  // namespace

ConstantVector digamma_cv(const Rational& x) {
  if (x.sign() <= 0) throw SeriesError(ErrorKind::UnsupportedConstantBasis, "digamma needs x > 0");
  const Integer whole = x.floor();
  const Rational frac = x - Rational(whole);
  // psi(x) = psi(base) + sum_{j=0}^{steps-1} 1/(base + j)
  Rational base = frac;
  ConstantVector out;
  if (frac.is_zero()) {
    base = Rational(1);
    out = {0, 0, 0, -1};
  } else {
    out = digamma_base(frac);
  }
  for (Rational y = base; y < x; y += Rational(1)) out.one += y.inverse();
  return out;
}

ConstantVector closed_form(const SeriesDef& s) {
  if (s.sign() == Sign::alternating) return closed_form(alternating_split(s));
  if (s.is_zero()) return {};
  const auto pfd = partial_fractions(s.numerator(), s.factors());
  ConstantVector acc;
  for (const auto& [c, f] : pfd.parts) {
    const Rational weight = c / Rational(f.a());
    acc = acc - weight * digamma_cv(Rational(1) + Rational(f.b(), f.a()));
  }
  if (!acc.gamma.is_zero()) {
    // Cannot happen for a convergent series: sum c_i/a_i = 0.
    throw std::logic_error("euler gamma failed to cancel in closed form");
  }
  return s.scale() * acc;
}

ConstantVector cv_combine(std::span<const std::pair<Rational, ConstantVector>> terms) {
  ConstantVector acc;
  for (const auto& [c, v] : terms) acc = acc + c * v;
  return acc;
}

namespace {

void append_term(std::string& out, const Rational& c, std::string_view symbol) {
  if (c.is_zero()) return;
  if (out.empty()) {
    if (c.sign() < 0) out += "-";
  } else {
    out += c.sign() < 0 ? " - " : " + ";
  }
  const Integer num = abs(c.numerator());
  const Integer den = c.denominator();
  if (symbol.empty()) {
    out += c.abs().str();
    return;
  }
  if (num != 1) out += num.get_str();
  out += symbol;
  if (den != 1) out += "/" + den.get_str();
}

}  // namespace

std::string cv_render(const ConstantVector& v) {
  std::string out;
  append_term(out, v.one, "");
  append_term(out, v.pi, "pi");
  append_term(out, v.ln2, "ln2");
  append_term(out, v.gamma, "gamma");
  return out.empty() ? "0" : out;
}

}  // namespace seriesid
