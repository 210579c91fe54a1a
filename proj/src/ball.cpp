#include "seriesid/ball.hpp"

#include <cmath>
#include <stdexcept>

namespace seriesid {

namespace {

Integer pow2(unsigned bits) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, bits);
  return out;
}

// Round num/den to the nearest integer (ties away from zero); reports
// whether the division was exact.
Integer round_div(const Integer& num, const Integer& den, bool& exact) {
  Integer q;
  Integer r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  exact = r == 0;
  if (2 * abs(r) >= abs(den)) q += 1;
  return q;
}

}  // namespace

unsigned bits_for_digits(unsigned digits) {
  return static_cast<unsigned>(std::ceil(digits * 3.3219280948873623)) + 4;
}

Integer ceil_scaled(const Rational& x, unsigned bits) {
  Integer num = x.numerator() * pow2(bits);
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), num.get_mpz_t(), x.denominator().get_mpz_t());
  return out;
}

Ball Ball::from_fraction(const Integer& num, const Integer& den, unsigned bits) {
  if (den == 0) throw std::domain_error("ball from fraction with zero denominator");
  Ball b(bits);
  Integer n = num;
  Integer d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), bits);
  bool exact = false;
  b.mid_ = round_div(n, d, exact);
  b.rad_ = exact ? 0 : 1;
  return b;
}

Ball& Ball::operator+=(const Ball& other) {
  if (other.bits_ != bits_) throw std::logic_error("ball precision mismatch");
  mid_ += other.mid_;
  rad_ += other.rad_;
  return *this;
}

Ball& Ball::operator-=(const Ball& other) {
  if (other.bits_ != bits_) throw std::logic_error("ball precision mismatch");
  mid_ -= other.mid_;
  rad_ += other.rad_;
  return *this;
}

Ball Ball::scaled(const Rational& c) const {
  Ball out(bits_);
  const Integer p = c.numerator();
  const Integer q = c.denominator();
  bool exact = false;
  out.mid_ = round_div(mid_ * p, q, exact);
  Integer r;
  Integer scaled_rad = rad_ * abs(p);
  mpz_cdiv_q(r.get_mpz_t(), scaled_rad.get_mpz_t(), q.get_mpz_t());
  out.rad_ = r + (exact ? 0 : 1);
  return out;
}

Ball& Ball::add_error(const Rational& bound) {
  rad_ += ceil_scaled(bound.abs(), bits_);
  return *this;
}

ApproxValue Ball::approx() const {
  const Integer one = pow2(bits_);
  return {Rational(mid_, one), Rational(rad_, one)};
}

Ball ln1p_ball(const Rational& u, unsigned bits) {
  if (u <= Rational(-1)) throw std::domain_error("ln1p of a value <= -1");
  Ball sum(bits);
  if (u.is_zero()) return sum;
  const Rational z = u / (Rational(2) + u);
  const Rational z2 = z * z;
  const Rational tail_factor = (Rational(1) - z2).inverse();
  const Rational ulp(Integer(1), pow2(bits));
  Ball power = Ball::from_rational(z, bits);  // z^(2j+1)
  Rational power_bound = z.abs();
  for (unsigned long j = 0;; ++j) {
    const Rational odd(static_cast<long>(2 * j + 1));
    sum += power.scaled(odd.inverse());
    power = power.scaled(z2);
    power_bound *= z2;
    // remaining sum_{i > j} |z|^(2i+1)/(2i+1) <= |z|^(2j+3) / ((2j+3)(1 - z^2))
    const Rational tail = power_bound / Rational(static_cast<long>(2 * j + 3)) * tail_factor;
    if (tail <= ulp) {
      sum.add_error(tail);
      break;
    }
  }
  return sum.scaled(Rational(2));
}

}  // namespace seriesid
