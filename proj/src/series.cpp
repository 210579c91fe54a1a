#include "seriesid/series.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "seriesid/error.hpp"

namespace seriesid {

SeriesDef::SeriesDef(Sign sign, Polynomial numerator, std::vector<LinearFactor> factors,
                     Rational scale)
    : sign_(sign),
      numerator_(std::move(numerator)),
      factors_(std::move(factors)),
      scale_(std::move(scale)) {
  require_distinct(factors_);
  const int k = static_cast<int>(factors_.size());
  const int max_degree = sign_ == Sign::positive ? k - 2 : k - 1;
  if (numerator_.degree() > max_degree) {
    throw SeriesError(ErrorKind::DivergentSeries,
                      "numerator degree " + std::to_string(numerator_.degree()) + " with " +
                          std::to_string(k) + " factors diverges");
  }
}

namespace {

Integer denominator_at(const SeriesDef& s, std::uint64_t n) {
  Integer d = 1;
  for (const auto& f : s.factors()) d *= f.at(static_cast<std::int64_t>(n));
  return d;
}

bool negative_at(const SeriesDef& s, std::uint64_t n) {
  return s.sign() == Sign::alternating && n % 2 == 0;
}

Rational max_root_or_zero(const SeriesDef& s) {
  Rational out;
  for (const auto& f : s.factors()) out = std::max(out, f.root());
  return out;
}

Rational pow10_neg(unsigned digits) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, digits);
  return Rational(Integer(1), p);
}

// |R(n)| is nonincreasing on [x0, inf) when R R' <= 0 there; with Q > 0
// that is P (P'Q - PQ') <= 0, which holds if the polynomial has no root
// at or above x0 and is negative at x0.
bool magnitude_decreasing_from(const SeriesDef& s, const Rational& x0) {
  const Polynomial& p = s.numerator();
  const Polynomial q = product(s.factors());
  const Polynomial w = p * (p.derivative() * q - p * q.derivative());
  return !has_real_root_at_or_above(w, x0) && w.eval(x0).sign() < 0;
}

// Bernoulli numbers B_0..B_m, cached across calls.
Rational bernoulli(std::size_t m) {
  static std::mutex mutex;
  static std::vector<Rational> cache;
  std::lock_guard lock(mutex);
  while (cache.size() <= m) {
    const std::size_t k = cache.size();
    if (k == 0) {
      cache.emplace_back(1);
      continue;
    }
    // B_k = -1/(k+1) sum_{j<k} C(k+1, j) B_j
    Rational acc;
    Integer binom = 1;
    for (std::size_t j = 0; j < k; ++j) {
      acc += Rational(binom) * cache[j];
      binom = binom * static_cast<long>(k + 1 - j) / static_cast<long>(j + 1);
    }
    cache.push_back(-acc / Rational(static_cast<long>(k + 1)));
  }
  return cache[m];
}

struct WeightedFactor {
  Rational weight;  // scale * partial fraction coefficient
  LinearFactor factor;
};

// Upper bound for the Euler-Maclaurin remainder after q correction terms,
// |B_2q| sum |w| a^(2q-1) / (2q (aM + b)^(2q)).
Rational em_remainder(const std::vector<WeightedFactor>& parts, std::uint64_t M, unsigned q) {
  Rational acc;
  for (const auto& [w, f] : parts) {
    const Rational base(f.at(static_cast<std::int64_t>(M)));
    acc += w.abs() * pow(Rational(f.a()), 2 * q - 1) / pow(base, 2 * q);
  }
  return bernoulli(2 * q).abs() * acc / Rational(static_cast<long>(2 * q));
}

Evaluation evaluate_positive(const SeriesDef& s, unsigned digits) {
  const Rational target = pow10_neg(digits);
  const unsigned bits = bits_for_digits(digits + 10);
  const BallTermEvaluator ball_term(s, bits);

  // Plain summation when the rational tail bound gets small quickly enough.
  constexpr std::uint64_t kDirectLimit = 20000;
  for (std::uint64_t n_direct = 16; n_direct <= kDirectLimit; n_direct *= 2) {
    const Rational tail = tail_bound(s, n_direct);
    if (tail > target / Rational(2)) continue;
    Ball sum(bits);
    for (std::uint64_t n = 1; n <= n_direct; ++n) sum += ball_term(n);
    sum.add_error(tail);
    return {sum.approx(), n_direct, false};
  }

  // Head sum up to M - 1, then Euler-Maclaurin from M onwards on the partial
  // fraction form f(x) = sum w_i / (a_i x + b_i), whose integral is a sum of
  // logarithms of rationals close to one.
  std::vector<WeightedFactor> parts;
  for (const auto& [c, f] : partial_fractions(s.numerator(), s.factors()).parts) {
    parts.push_back({s.scale() * c, f});
  }
  const Rational budget = target / Rational(4);
  std::uint64_t M = std::max<std::uint64_t>(16, digits + 16);
  unsigned q = 1;
  for (;;) {
    bool found = false;
    Rational previous;
    for (q = 1; q <= 4 * (digits + 16); ++q) {
      const Rational r = em_remainder(parts, M, q);
      if (r <= budget) {
        found = true;
        break;
      }
      if (q > 1 && r > previous) break;  // past the asymptotic minimum
      previous = r;
    }
    if (found) break;
    M *= 2;
  }

  Ball sum(bits);
  for (std::uint64_t n = 1; n < M; ++n) sum += ball_term(n);

  Rational corrections;
  for (const auto& [w, f] : parts) {
    corrections += w / Rational(f.at(static_cast<std::int64_t>(M))) / Rational(2);
  }
  for (unsigned k = 1; k <= q; ++k) {
    Rational inner;
    for (const auto& [w, f] : parts) {
      const Rational base(f.at(static_cast<std::int64_t>(M)));
      inner += w * pow(Rational(f.a()), 2 * k - 1) / pow(base, 2 * k);
    }
    corrections += bernoulli(2 * k) / Rational(static_cast<long>(2 * k)) * inner;
  }
  sum += Ball::from_rational(corrections, bits);

  // integral_M^inf f = -sum (w_i / a_i) ln(1 + b_i / (a_i M)), using sum w_i/a_i = 0.
  for (const auto& [w, f] : parts) {
    const Rational u = Rational(f.b()) / Rational(f.a() * static_cast<std::int64_t>(M));
    sum -= ln1p_ball(u, bits).scaled(w / Rational(f.a()));
  }
  sum.add_error(em_remainder(parts, M, q));
  return {sum.approx(), M - 1, true};
}

}  // namespace

Rational term(const SeriesDef& s, std::uint64_t n) {
  if (n == 0) throw SeriesError(ErrorKind::PreconditionViolated, "series index starts at 1");
  Rational t = s.scale() * s.numerator().eval(Rational(Integer(static_cast<unsigned long>(n)))) /
               Rational(denominator_at(s, n));
  return negative_at(s, n) ? -t : t;
}

Rational partial_sum_exact(const SeriesDef& s, std::uint64_t N, std::uint64_t cap) {
  if (N > cap) {
    throw SeriesError(ErrorKind::CapExceeded, std::to_string(N) + " terms exceeds the exact-sum cap " +
                                                  std::to_string(cap) + "; use ball evaluation");
  }
  Rational acc;
  if (s.is_zero()) return acc;
  for (std::uint64_t n = 1; n <= N; ++n) acc += term(s, n);
  return acc;
}

Rational tail_bound(const SeriesDef& s, std::uint64_t N) {
  if (N == 0) throw SeriesError(ErrorKind::PreconditionViolated, "tail bound needs N >= 1");
  if (s.is_zero()) return Rational(0);
  const Rational n_after(Integer(static_cast<unsigned long>(N + 1)));
  if (s.sign() == Sign::alternating) {
    if (!magnitude_decreasing_from(s, n_after)) {
      throw SeriesError(ErrorKind::PreconditionViolated,
                        "terms are not decreasing in magnitude from n = " + std::to_string(N + 1));
    }
    return term(s, N + 1).abs();
  }
  const Rational n_last(Integer(static_cast<unsigned long>(N)));
  const Rational shift = max_root_or_zero(s);
  if (n_last <= shift) {
    throw SeriesError(ErrorKind::PreconditionViolated, "N must exceed every factor root");
  }
  const int d = std::max(0, s.numerator().degree());
  const int m = static_cast<int>(s.factors().size()) - d;  // >= 2 by convergence
  Rational coeff_sum;
  for (const auto& c : s.numerator().coefficients()) coeff_sum += c.abs();
  Rational slope_product(1);
  for (const auto& f : s.factors()) slope_product *= Rational(f.a());
  // |term(n)| <= C (n/(n - s*))^d / (prod a (n - s*)^m), then integral comparison.
  const Rational ratio = n_after / (n_after - shift);
  return s.scale().abs() * coeff_sum * pow(ratio, static_cast<unsigned long>(d)) /
         (slope_product * Rational(m - 1) * pow(n_last - shift, static_cast<unsigned long>(m - 1)));
}

BallTermEvaluator::BallTermEvaluator(const SeriesDef& s, unsigned bits) : series_(s), bits_(bits) {
  Integer common = 1;
  for (const auto& c : s.numerator().coefficients()) {
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.denominator().get_mpz_t());
  }
  for (const auto& c : s.numerator().coefficients()) {
    coeffs_.push_back(c.numerator() * (common / c.denominator()));
  }
  const Rational reduced_scale = s.scale() / Rational(common);
  scale_num_ = reduced_scale.numerator();
  scale_den_ = reduced_scale.denominator();
}

Ball BallTermEvaluator::operator()(std::uint64_t n) const {
  const Integer x(static_cast<unsigned long>(n));
  Integer p;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) p = p * x + *it;
  if (negative_at(series_, n)) p = -p;
  return Ball::from_fraction(scale_num_ * p, scale_den_ * denominator_at(series_, n), bits_);
}

Evaluation evaluate_detailed(const SeriesDef& s, unsigned digits) {
  if (digits == 0 || digits > kMaxDigits) {
    throw SeriesError(ErrorKind::PrecisionOverflow,
                      "digits must be in 1.." + std::to_string(kMaxDigits));
  }
  if (s.is_zero()) return {};
  Evaluation out;
  if (s.sign() == Sign::alternating) {
    out = evaluate_positive(alternating_split(s), digits);
    out.direct_terms *= 2;
  } else {
    out = evaluate_positive(s, digits);
  }
  if (out.value.radius > pow10_neg(digits)) {
    throw std::logic_error("series enclosure wider than requested");
  }
  return out;
}

SeriesDef alternating_split(const SeriesDef& s) {
  if (s.sign() != Sign::alternating) {
    throw SeriesError(ErrorKind::PreconditionViolated, "alternating_split needs an alternating series");
  }
  // term(2m-1) + term(2m) = scale (P(2m-1)/Q(2m-1) - P(2m)/Q(2m))
  std::vector<LinearFactor> odd;
  std::vector<LinearFactor> even;
  for (const auto& f : s.factors()) {
    odd.emplace_back(2 * f.a(), f.b() - f.a());
    even.emplace_back(2 * f.a(), f.b());
  }
  const Polynomial p_odd = s.numerator().substitute_linear(2, -1);
  const Polynomial p_even = s.numerator().substitute_linear(2, 0);
  Polynomial numerator = p_odd * product(even) - p_even * product(odd);
  std::vector<LinearFactor> factors = odd;
  factors.insert(factors.end(), even.begin(), even.end());
  if (numerator.is_zero()) {
    return SeriesDef(Sign::positive, Polynomial{}, odd, s.scale());
  }
  for (bool cancelled = true; cancelled;) {
    cancelled = false;
    for (auto it = factors.begin(); it != factors.end(); ++it) {
      if (!numerator.eval(it->root()).is_zero()) continue;
      numerator = numerator.divmod(it->polynomial()).first;
      factors.erase(it);
      cancelled = true;
      break;
    }
  }
  return SeriesDef(Sign::positive, std::move(numerator), std::move(factors), s.scale());
}

}  // namespace seriesid
