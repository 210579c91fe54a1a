#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "seriesid/ball.hpp"
#include "seriesid/rational_function.hpp"

namespace seriesid {

enum class Sign { positive, alternating };

/**
 * sum_{n>=1} scale * s(n) * numerator(n) / prod(a_i n + b_i), where s(n) is
 * 1 for positive series and (-1)^(n+1) for alternating ones.
 *
 * Construction validates the factor family and the convergence condition:
 * deg(numerator) <= k - 2 (positive) or <= k - 1 (alternating), k = #factors.
 */
class SeriesDef {
 public:
  SeriesDef(Sign sign, Polynomial numerator, std::vector<LinearFactor> factors,
            Rational scale = Rational(1));

  Sign sign() const { return sign_; }
  const Polynomial& numerator() const { return numerator_; }
  std::span<const LinearFactor> factors() const { return factors_; }
  const Rational& scale() const { return scale_; }

  bool is_zero() const { return scale_.is_zero() || numerator_.is_zero(); }

  /// The unsigned summand numerator(n)/prod(factors), without scale.
  RationalFunction general_term() const {
    return RationalFunction::from_factors(numerator_, factors_);
  }

  SeriesDef with_scale(const Rational& scale) const {
    return SeriesDef(sign_, numerator_, factors_, scale);
  }

  friend bool operator==(const SeriesDef&, const SeriesDef&) = default;

 private:
  Sign sign_;
  Polynomial numerator_;
  std::vector<LinearFactor> factors_;
  Rational scale_;
};

inline SeriesDef make_series(Sign sign, Polynomial numerator, std::vector<LinearFactor> factors,
                             Rational scale = Rational(1)) {
  return {sign, std::move(numerator), std::move(factors), std::move(scale)};
}

inline constexpr std::uint64_t kDefaultExactSumCap = 100000;
inline constexpr unsigned kMaxDigits = 10000;

/// Exact n-th summand, n >= 1.
Rational term(const SeriesDef& s, std::uint64_t n);

/// sum_{n=1..N} term(s, n). Throws CapExceeded above `cap` terms.
Rational partial_sum_exact(const SeriesDef& s, std::uint64_t N,
                           std::uint64_t cap = kDefaultExactSumCap);

/// Rigorous B with |S - partial_sum_exact(s, N)| <= B.
Rational tail_bound(const SeriesDef& s, std::uint64_t N);

/// Fixed-point summands at one precision, with integer-only inner work.
class BallTermEvaluator {
 public:
  BallTermEvaluator(const SeriesDef& s, unsigned bits);
  Ball operator()(std::uint64_t n) const;

 private:
  SeriesDef series_;
  unsigned bits_;
  std::vector<Integer> coeffs_;  // numerator * common denominator
  Integer scale_num_;            // scale / common denominator
  Integer scale_den_;
};

struct Evaluation {
  ApproxValue value;
  /// Terms of the original series added one by one; the rest of the sum is
  /// enclosed by a tail estimate.
  std::uint64_t direct_terms = 0;
  bool euler_maclaurin_tail = false;
};

/// Enclosure of the full sum with radius <= 10^-digits.
Evaluation evaluate_detailed(const SeriesDef& s, unsigned digits);
inline ApproxValue evaluate(const SeriesDef& s, unsigned digits) {
  return evaluate_detailed(s, digits).value;
}

/// Pairs terms 2m-1 and 2m of an alternating series into one positive-sign
/// series over m. Common factors between the combined numerator and the
/// doubled-slope factors are cancelled.
SeriesDef alternating_split(const SeriesDef& s);

}  // namespace seriesid
