#include "seriesid/constants.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <string>

#include "seriesid/error.hpp"
#include "seriesid/series.hpp"

namespace seriesid {

namespace {

Integer pow_ui(unsigned long base, unsigned long e) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, e);
  return out;
}

void check_digits(unsigned digits) {
  if (digits == 0 || digits > kMaxDigits) {
    throw SeriesError(ErrorKind::PrecisionOverflow,
                      "digits must be in 1.." + std::to_string(kMaxDigits));
  }
}

// Guard bits so that accumulated rounding stays far below 10^-digits.
unsigned working_bits(unsigned digits) {
  return bits_for_digits(digits) + 32 + static_cast<unsigned>(std::log2(digits + 1.0));
}

// atan(1/x) = sum (-1)^j / ((2j+1) x^(2j+1)); alternating with decreasing
// terms, so the first omitted term bounds the tail.
Ball atan_inverse(unsigned long x, unsigned bits) {
  const Rational inv_x2 = Rational(Integer(1), Integer(x) * Integer(x));
  const Rational ulp(Integer(1), pow_ui(2, bits));
  Ball power = Ball::from_fraction(1, Integer(x), bits);
  Rational power_exact(Integer(1), Integer(x));
  Ball sum(bits);
  for (unsigned long j = 0;; ++j) {
    const Ball t = power.scaled(Rational(Integer(1), Integer(2 * j + 1)));
    if (j % 2 == 0) {
      sum += t;
    } else {
      sum -= t;
    }
    power = power.scaled(inv_x2);
    power_exact *= inv_x2;
    const Rational next = power_exact / Rational(Integer(2 * j + 3));
    if (next <= ulp) {
      sum.add_error(next);
      return sum;
    }
  }
}

class Memo {
 public:
  ApproxValue get(unsigned digits, const std::function<ApproxValue(unsigned)>& compute) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = cache_.find(digits); it != cache_.end()) return it->second;
    }
    // Concurrent misses compute the same value; last writer wins.
    ApproxValue v = compute(digits);
    std::lock_guard lock(mutex_);
    cache_[digits] = v;
    return v;
  }

 private:
  std::mutex mutex_;
  std::map<unsigned, ApproxValue> cache_;
};

ApproxValue compute_pi(unsigned digits) {
  const unsigned bits = working_bits(digits);
  Ball pi = atan_inverse(5, bits).scaled(16);
  pi -= atan_inverse(239, bits).scaled(4);
  return pi.approx();
}

ApproxValue compute_ln2(unsigned digits) {
  const unsigned bits = working_bits(digits);
  const Rational ulp(Integer(1), pow_ui(2, bits));
  Ball sum(bits);
  for (unsigned long n = 1;; ++n) {
    // 2^(bits - n) / n, exact shift then one rounding
    sum += Ball::from_fraction(1, Integer(n) * pow_ui(2, n), bits);
    // sum_{m > n} 1/(m 2^m) <= 1/((n+1) 2^n)
    const Rational tail(Integer(1), Integer(n + 1) * pow_ui(2, n));
    if (tail <= ulp) {
      sum.add_error(tail);
      return sum.approx();
    }
  }
}

}  // namespace

ApproxValue pi_approx(unsigned digits) {
  check_digits(digits);
  static Memo memo;
  return memo.get(digits, compute_pi);
}

ApproxValue ln2_approx(unsigned digits) {
  check_digits(digits);
  static Memo memo;
  return memo.get(digits, compute_ln2);
}

ApproxValue cv_eval(const ConstantVector& v, unsigned digits) {
  check_digits(digits);
  if (!v.gamma.is_zero()) {
    throw SeriesError(ErrorKind::GammaUnsupported, "no numeric oracle for Euler's gamma");
  }
  // Extra digits absorb the coefficient magnitudes.
  const double magnitude = v.pi.abs().to_double() + v.ln2.abs().to_double();
  const unsigned extra = 2 + static_cast<unsigned>(std::max(0.0, std::ceil(std::log10(magnitude + 1.0))));
  const unsigned inner = std::min(kMaxDigits, digits + extra);
  ApproxValue out{v.one, Rational(0)};
  if (!v.pi.is_zero()) {
    const ApproxValue pi = pi_approx(inner);
    out.midpoint += v.pi * pi.midpoint;
    out.radius += v.pi.abs() * pi.radius;
  }
  if (!v.ln2.is_zero()) {
    const ApproxValue ln2 = ln2_approx(inner);
    out.midpoint += v.ln2 * ln2.midpoint;
    out.radius += v.ln2.abs() * ln2.radius;
  }
  if (out.radius > Rational(Integer(1), pow_ui(10, digits))) {
    throw SeriesError(ErrorKind::PrecisionOverflow, "coefficients too large for requested digits");
  }
  return out;
}

}  // namespace seriesid
