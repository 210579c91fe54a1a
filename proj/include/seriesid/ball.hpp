#pragma once

#include <string>

#include "seriesid/rational.hpp"

namespace seriesid {

/// Exact enclosure: the true value lies in [midpoint - radius, midpoint + radius].
struct ApproxValue {
  Rational midpoint;
  Rational radius;

  Rational lower() const { return midpoint - radius; }
  Rational upper() const { return midpoint + radius; }
  bool contains(const Rational& x) const { return lower() <= x && x <= upper(); }
  bool overlaps(const ApproxValue& other) const {
    return lower() <= other.upper() && other.lower() <= upper();
  }

  friend bool operator==(const ApproxValue&, const ApproxValue&) = default;
};

/// |a.midpoint - b.midpoint| <= a.radius + b.radius
inline bool agree(const ApproxValue& a, const ApproxValue& b) { return a.overlaps(b); }

/// Binary precision giving at least `digits` decimal digits after the point.
unsigned bits_for_digits(unsigned digits);

/**
 * Fixed-point ball: value = (mid +- rad) * 2^-bits with integer mid and rad.
 *
 * Every rounding step widens rad by one unit in the last place, so the
 * enclosure stays rigorous through long summations. Balls combined with
 * each other must share the same precision.
 */
class Ball {
 public:
  explicit Ball(unsigned bits) : bits_(bits) {}

  /// Nearest fixed-point value; rad 0 when exactly representable, else 1 ulp.
  static Ball from_fraction(const Integer& num, const Integer& den, unsigned bits);
  static Ball from_rational(const Rational& r, unsigned bits) {
    return from_fraction(r.numerator(), r.denominator(), bits);
  }

  unsigned bits() const { return bits_; }
  const Integer& mid() const { return mid_; }
  const Integer& rad() const { return rad_; }
  Integer lower() const { return mid_ - rad_; }
  Integer upper() const { return mid_ + rad_; }

  Ball& operator+=(const Ball& other);
  Ball& operator-=(const Ball& other);
  friend Ball operator+(Ball a, const Ball& b) { return a += b; }
  friend Ball operator-(Ball a, const Ball& b) { return a -= b; }

  /// c * this, rounded to nearest with outward radius growth.
  Ball scaled(const Rational& c) const;

  /// Widen by a rigorous bound given in absolute terms.
  Ball& add_error(const Rational& bound);
  Ball& add_error_ulps(const Integer& ulps) {
    rad_ += ulps;
    return *this;
  }

  ApproxValue approx() const;

 private:
  unsigned bits_;
  Integer mid_;
  Integer rad_;
};

/// Enclosure of ln(1 + u) for rational u > -1, by the atanh expansion
/// ln(1 + u) = 2 atanh(u / (2 + u)) with a geometric tail bound.
Ball ln1p_ball(const Rational& u, unsigned bits);

/// Ceiling of x * 2^bits for x >= 0.
Integer ceil_scaled(const Rational& x, unsigned bits);

}  // namespace seriesid
