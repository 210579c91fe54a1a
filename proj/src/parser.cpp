#include "seriesid/parser.hpp"

#include <cctype>
#include <limits>
#include <optional>

#include "seriesid/error.hpp"

namespace seriesid {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  std::size_t pos() { skip_ws(); return pos_; }
  bool at_end() { return peek() == '\0'; }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  // Character after the next non-blank one, skipping blanks in between.
  char peek_second() {
    skip_ws();
    std::size_t p = pos_ + 1;
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    return p < text_.size() ? text_[p] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  bool accept(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool digit_next() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  std::int64_t unsigned_int() {
    if (!digit_next()) fail("expected an integer");
    std::int64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const int d = text_[pos_] - '0';
      if (value > (std::numeric_limits<std::int64_t>::max() - d) / 10) fail("integer too large");
      value = value * 10 + d;
      ++pos_;
    }
    return value;
  }

  std::int64_t signed_int() {
    const bool negative = accept('-');
    if (!negative) accept('+');
    const std::int64_t v = unsigned_int();
    return negative ? -v : v;
  }

  [[noreturn]] void fail(const std::string& what) { throw ParseError(pos(), what); }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// [int] "n" [("+"|"-") int] | int.  Returns nullopt for a bare integer and
// stores it in `constant`.
std::optional<LinearFactor> parse_term(Cursor& c, std::int64_t& constant) {
  const std::size_t start = c.pos();
  std::int64_t a = 1;
  bool have_int = false;
  if (c.digit_next()) {
    a = c.unsigned_int();
    have_int = true;
  }
  if (!c.accept('n')) {
    if (!have_int) c.fail("expected a factor");
    constant = a;
    return std::nullopt;
  }
  std::int64_t b = 0;
  if (c.peek() == '+' || c.peek() == '-') {
    const bool negative = c.accept('-');
    if (!negative) c.accept('+');
    b = c.unsigned_int();
    if (negative) b = -b;
  }
  try {
    return LinearFactor(a, b);
  } catch (const SeriesError& e) {
    if (e.kind() == ErrorKind::InvalidFactor) throw;
    throw ParseError(start, e.what());
  }
}

// Polynomial with integer coefficients between parentheses; the opening
// parenthesis has been consumed.
Polynomial parse_poly_body(Cursor& c) {
  std::vector<Rational> coeffs;
  bool first = true;
  while (c.peek() != ')') {
    if (c.at_end()) c.fail("unterminated polynomial");
    bool negative = false;
    if (c.accept('-')) {
      negative = true;
    } else if (!c.accept('+') && !first) {
      c.fail("expected '+' or '-'");
    }
    first = false;
    std::int64_t coef = 1;
    bool have_coef = false;
    if (c.digit_next()) {
      coef = c.unsigned_int();
      have_coef = true;
    }
    std::size_t power = 0;
    if (c.accept('n')) {
      power = 1;
      if (c.accept('^')) power = static_cast<std::size_t>(c.unsigned_int());
      if (power > 64) c.fail("polynomial degree too large");
    } else if (!have_coef) {
      c.fail("expected a monomial");
    }
    if (coeffs.size() <= power) coeffs.resize(power + 1);
    coeffs[power] += Rational(static_cast<long>(negative ? -coef : coef));
  }
  c.expect(')');
  return Polynomial(std::move(coeffs));
}

std::string compact(std::string s) {
  std::string out;
  for (char ch : s) {
    if (ch != ' ') out += ch;
  }
  return out;
}

}  // namespace

SeriesDef parse_series(std::string_view text) {
  Cursor c(text);
  const Sign sign = c.accept("alt:") ? Sign::alternating : Sign::positive;

  const auto parse_numerator = [&c] {
    if (c.accept('(')) return parse_poly_body(c);
    return Polynomial::constant(static_cast<long>(c.signed_int()));
  };
  Rational scale(1);
  Polynomial numerator;
  if (c.peek() == '(') {
    numerator = parse_numerator();
  } else {
    const std::int64_t first = c.signed_int();
    if (c.accept('*')) {
      scale = Rational(static_cast<long>(first));
      numerator = parse_numerator();
    } else if (c.peek() == '/' && c.peek_second() != '(') {
      c.expect('/');
      const std::int64_t den = c.unsigned_int();
      if (den == 0) c.fail("zero denominator");
      scale = Rational(static_cast<long>(first), static_cast<long>(den));
      c.expect('*');
      numerator = parse_numerator();
    } else {
      numerator = Polynomial::constant(static_cast<long>(first));
    }
  }
  c.expect('/');
  c.expect('(');
  std::vector<LinearFactor> factors;
  for (bool first_factor = true; !c.accept(')'); first_factor = false) {
    if (c.at_end()) c.fail("unterminated denominator");
    if (!first_factor) c.accept('*');
    std::int64_t constant = 0;
    std::optional<LinearFactor> f;
    if (c.accept('(')) {
      f = parse_term(c, constant);
      c.expect(')');
    } else {
      f = parse_term(c, constant);
    }
    if (f) {
      factors.push_back(*f);
    } else {
      if (constant == 0) c.fail("zero factor in denominator");
      scale /= Rational(static_cast<long>(constant));
    }
  }
  if (!c.at_end()) c.fail("unexpected trailing input");
  if (factors.empty()) c.fail("denominator needs at least one factor in n");
  return SeriesDef(sign, std::move(numerator), std::move(factors), scale);
}

LinearFactor parse_factor(std::string_view text) {
  Cursor c(text);
  const bool paren = c.accept('(');
  std::int64_t constant = 0;
  auto f = parse_term(c, constant);
  if (paren) c.expect(')');
  if (!f) c.fail("factor must involve n");
  if (!c.at_end()) c.fail("unexpected trailing input");
  return *f;
}

std::vector<LinearFactor> parse_factor_list(std::string_view text) {
  std::vector<LinearFactor> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    try {
      out.push_back(parse_factor(text.substr(start, end - start)));
    } catch (const ParseError& e) {
      throw ParseError(start + e.position(), "malformed factor in list");
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string render_factor(const LinearFactor& f) { return compact(f.str()); }

std::string render_series(const SeriesDef& s) {
  // Clear rational coefficients into the scale so the numerator is integral.
  Integer common = 1;
  for (const auto& c : s.numerator().coefficients()) {
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.denominator().get_mpz_t());
  }
  const Polynomial numerator = Rational(common) * s.numerator();
  const Rational scale = s.scale() / Rational(common);

  std::string out = s.sign() == Sign::alternating ? "alt: " : "";
  if (scale != Rational(1)) out += scale.str() + "*";
  if (numerator.degree() <= 0) {
    out += numerator.coefficient(0).str();
  } else {
    out += "(" + compact(numerator.str()) + ")";
  }
  out += "/(";
  if (s.factors().size() == 1) {
    out += render_factor(s.factors().front());
  } else {
    for (const auto& f : s.factors()) {
      out += (f.a() == 1 && f.b() == 0) ? std::string("n") : "(" + render_factor(f) + ")";
    }
  }
  out += ")";
  return out;
}

}  // namespace seriesid
