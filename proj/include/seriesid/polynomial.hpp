#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "seriesid/rational.hpp"

namespace seriesid {

/// Univariate polynomial in n with rational coefficients, constant term
/// first. Trailing zeros are always stripped, so the zero polynomial has
/// no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients)
      : Polynomial(std::vector<Rational>(coefficients)) {}

  static Polynomial constant(const Rational& c) { return Polynomial({c}); }
  /// a*n + b
  static Polynomial linear(const Rational& a, const Rational& b) { return Polynomial({b, a}); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const Rational> coefficients() const { return coeffs_; }
  /// Coefficient of n^i; zero beyond the degree.
  Rational coefficient(std::size_t i) const;
  Rational leading() const;

  Rational eval(const Rational& x) const;
  Polynomial derivative() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);

  /// Euclidean division; throws std::domain_error for a zero divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

  /// p(c*n + d), used when re-indexing series.
  Polynomial substitute_linear(const Rational& c, const Rational& d) const;

  /// Rescaled to leading coefficient one; zero stays zero.
  Polynomial monic() const;

  /// Human-readable form in the variable n, e.g. "4n^2 - 1".
  std::string str() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Monic greatest common divisor (zero if both inputs are zero).
Polynomial gcd(Polynomial a, Polynomial b);

/// Whether p has a real root in [lo, infinity), decided with a Sturm sequence.
bool has_real_root_at_or_above(const Polynomial& p, const Rational& lo);

/// p(x) at x, free-function spelling.
inline Rational poly_eval(const Polynomial& p, const Rational& x) { return p.eval(x); }

}  // namespace seriesid
