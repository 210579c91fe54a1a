#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "seriesid/polynomial.hpp"

namespace seriesid {

/// a*n + b with a >= 1 and a + b >= 1, i.e. positive for every n >= 1.
class LinearFactor {
 public:
  /// Throws SeriesError(InvalidFactor) when the invariants fail.
  LinearFactor(std::int64_t a, std::int64_t b);

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  Rational root() const { return Rational(-b_, a_); }
  Rational at(const Rational& n) const { return Rational(a_) * n + Rational(b_); }
  Integer at(std::int64_t n) const;
  Polynomial polynomial() const { return Polynomial::linear(a_, b_); }

  /// Same root, possibly different slope.
  bool proportional_to(const LinearFactor& other) const { return a_ * other.b_ == other.a_ * b_; }

  /// "n", "4n - 1", "2n": the factor as it reads in a formula.
  std::string str() const;

  friend bool operator==(const LinearFactor&, const LinearFactor&) = default;
  friend auto operator<=>(const LinearFactor&, const LinearFactor&) = default;

 private:
  std::int64_t a_;
  std::int64_t b_;
};

/// Throws SeriesError(DuplicateFactor) if any two factors share a root.
void require_distinct(std::span<const LinearFactor> factors);

Polynomial product(std::span<const LinearFactor> factors);

/// numerator/denominator in normal form: coprime, denominator monic.
class RationalFunction {
 public:
  RationalFunction() : den_(Polynomial::constant(1)) {}
  RationalFunction(Polynomial numerator, Polynomial denominator);
  static RationalFunction from_factors(const Polynomial& numerator,
                                       std::span<const LinearFactor> factors) {
    return {numerator, product(factors)};
  }

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// Undefined (throws std::domain_error) at a pole.
  Rational eval(const Rational& x) const;

  friend RationalFunction operator+(const RationalFunction& f, const RationalFunction& g);
  friend RationalFunction operator*(const Rational& c, const RationalFunction& f);

  std::string str() const;

  // Normal form makes structural equality coincide with functional equality.
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

 private:
  Polynomial num_;
  Polynomial den_;
};

/// Normalized sum of coef_i * f_i. Throws std::invalid_argument on an empty list.
RationalFunction ratfunc_combine(std::span<const std::pair<Rational, RationalFunction>> terms);

/// Decides f == g by cross-multiplication; independent of the normal form.
bool ratfunc_equal(const RationalFunction& f, const RationalFunction& g);

struct PartialFraction {
  Rational coefficient;
  LinearFactor factor;
  friend bool operator==(const PartialFraction&, const PartialFraction&) = default;
};

struct PartialFractionDecomposition {
  std::vector<PartialFraction> parts;
  Polynomial polynomial_part;
};

/// numerator / prod(factors) as sum of c_i/(a_i n + b_i), by the cover-up rule.
/// Requires distinct factors and deg(numerator) < factors.size().
PartialFractionDecomposition partial_fractions(const Polynomial& numerator,
                                               std::span<const LinearFactor> factors);

RationalFunction pfd_recombine(const PartialFractionDecomposition& d);

}  // namespace seriesid
