#include "seriesid/decimal.hpp"

#include <cstdio>

namespace seriesid {

namespace {

Integer pow10(unsigned long e) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, e);
  return out;
}

}  // namespace

std::string to_decimal(const Rational& x, unsigned digits) {
  const Rational scaled = x * Rational(pow10(digits));
  Integer q = scaled.floor();
  const Rational rest = scaled - Rational(q);
  const Rational half(1, 2);
  if (rest > half || (rest == half && mpz_odd_p(q.get_mpz_t()))) q += 1;

  const bool negative = q < 0;
  std::string body = Integer(abs(q)).get_str();
  if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
  if (digits > 0) body.insert(body.size() - digits, ".");
  return negative ? "-" + body : body;
}

unsigned covered_digits(const Rational& radius, unsigned max_digits) {
  unsigned k = 0;
  Rational unit(1);
  while (k < max_digits && radius <= unit / Rational(10)) {
    unit /= Rational(10);
    ++k;
  }
  return k;
}

std::string format_bound(const Rational& x) {
  if (x.is_zero()) return "0";
  const Rational mag = x.abs();
  long exponent = 0;
  Rational m = mag;
  while (m >= Rational(10)) {
    m /= Rational(10);
    ++exponent;
  }
  while (m < Rational(1)) {
    m *= Rational(10);
    --exponent;
  }
  // ceil to one decimal of the mantissa
  const Rational tenths = m * Rational(10);
  Integer t = tenths.floor();
  if (Rational(t) != tenths) t += 1;
  if (t >= 100) {
    t = 10;
    ++exponent;
  }
  const long ti = t.get_si();
  char buf[48];
  std::snprintf(buf, sizeof buf, "%s%ld.%lde%+03ld", x.sign() < 0 ? "-" : "", ti / 10, ti % 10, exponent);
  return buf;
}

}  // namespace seriesid
