#include "seriesid/rational_function.hpp"

#include <stdexcept>

#include "seriesid/error.hpp"

namespace seriesid {

LinearFactor::LinearFactor(std::int64_t a, std::int64_t b) : a_(a), b_(b) {
  if (a < 1 || a + b < 1) {
    throw SeriesError(ErrorKind::InvalidFactor,
                      "factor " + std::to_string(a) + "n" + (b < 0 ? "" : "+") +
                          std::to_string(b) + " must have a >= 1 and be positive at n = 1");
  }
}

Integer LinearFactor::at(std::int64_t n) const {
  Integer v(static_cast<long>(a_));
  v *= static_cast<long>(n);
  v += static_cast<long>(b_);
  return v;
}

std::string LinearFactor::str() const {
  std::string out = (a_ == 1 ? "" : std::to_string(a_)) + "n";
  if (b_ > 0) out += " + " + std::to_string(b_);
  if (b_ < 0) out += " - " + std::to_string(-b_);
  return out;
}

void require_distinct(std::span<const LinearFactor> factors) {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (std::size_t j = i + 1; j < factors.size(); ++j) {
      if (factors[i].proportional_to(factors[j])) {
        throw SeriesError(ErrorKind::DuplicateFactor, "factors " + factors[i].str() + " and " +
                                                          factors[j].str() + " share a root");
      }
    }
  }
}

Polynomial product(std::span<const LinearFactor> factors) {
  Polynomial acc = Polynomial::constant(1);
  for (const auto& f : factors) acc = acc * f.polynomial();
  return acc;
}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator) {
  if (denominator.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (numerator.is_zero()) {
    den_ = Polynomial::constant(1);
    return;
  }
  const Polynomial g = gcd(numerator, denominator);
  num_ = numerator.divmod(g).first;
  den_ = denominator.divmod(g).first;
  const Rational lead = den_.leading();
  num_ = lead.inverse() * num_;
  den_ = lead.inverse() * den_;
}

Rational RationalFunction::eval(const Rational& x) const {
  const Rational d = den_.eval(x);
  if (d.is_zero()) throw std::domain_error("rational function evaluated at a pole");
  return num_.eval(x) / d;
}

RationalFunction operator+(const RationalFunction& f, const RationalFunction& g) {
  return {f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_};
}

RationalFunction operator*(const Rational& c, const RationalFunction& f) {
  return {c * f.num_, f.den_};
}

std::string RationalFunction::str() const {
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

RationalFunction ratfunc_combine(std::span<const std::pair<Rational, RationalFunction>> terms) {
  if (terms.empty()) throw std::invalid_argument("ratfunc_combine needs at least one term");
  RationalFunction acc;
  for (const auto& [coef, f] : terms) acc = acc + coef * f;
  return acc;
}

bool ratfunc_equal(const RationalFunction& f, const RationalFunction& g) {
  return f.numerator() * g.denominator() == g.numerator() * f.denominator();
}

PartialFractionDecomposition partial_fractions(const Polynomial& numerator,
                                               std::span<const LinearFactor> factors) {
  require_distinct(factors);
  if (numerator.degree() >= static_cast<int>(factors.size())) {
    throw SeriesError(ErrorKind::DegreeTooHigh,
                      "numerator degree " + std::to_string(numerator.degree()) +
                          " needs fewer than " + std::to_string(factors.size()) + " factors");
  }
  PartialFractionDecomposition out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const Rational root = factors[i].root();
    Rational others(1);
    for (std::size_t j = 0; j < factors.size(); ++j) {
      if (j != i) others *= factors[j].at(root);
    }
    Rational c = numerator.eval(root) / others;
    if (!c.is_zero()) out.parts.push_back({std::move(c), factors[i]});
  }
  return out;
}

RationalFunction pfd_recombine(const PartialFractionDecomposition& d) {
  RationalFunction acc(d.polynomial_part, Polynomial::constant(1));
  for (const auto& part : d.parts) {
    acc = acc + RationalFunction(Polynomial::constant(part.coefficient), part.factor.polynomial());
  }
  return acc;
}

}  // namespace seriesid
