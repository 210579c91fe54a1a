#include <doctest.h>

#include <vector>

#include "reference_values.hpp"
#include "seriesid/error.hpp"
#include "seriesid/ledger.hpp"
#include "seriesid/series.hpp"

using namespace seriesid;

namespace {

SeriesDef s1() {
  return make_series(Sign::positive, Polynomial::constant(1),
                     {LinearFactor(1, 0), LinearFactor(4, -1), LinearFactor(4, -3)});
}

SeriesDef s19() {
  return make_series(Sign::positive, Polynomial::constant(1),
                     {LinearFactor(4, 1), LinearFactor(4, -1), LinearFactor(4, -3)});
}

SeriesDef mgl() {
  return make_series(Sign::alternating, Polynomial::constant(1), {LinearFactor(2, -1)});
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const SeriesError& e) {
    return e.kind();
  }
  FAIL("no SeriesError thrown");
  return ErrorKind::SchemaError;
}

}  // namespace

TEST_CASE("make_series") {
  CHECK(s1().factors().size() == 3);
  CHECK(mgl().sign() == Sign::alternating);
  CHECK(kind_of([] { make_series(Sign::positive, Polynomial::constant(1), {LinearFactor(1, 0)}); }) ==
        ErrorKind::DivergentSeries);
  CHECK(kind_of([] {
          make_series(Sign::alternating, Polynomial::linear(1, 0), {LinearFactor(2, -1)});
        }) == ErrorKind::DivergentSeries);
  CHECK(kind_of([] {
          make_series(Sign::positive, Polynomial::constant(1), {LinearFactor(1, 0), LinearFactor(3, 0)});
        }) == ErrorKind::DuplicateFactor);
  // deg <= k - 2 with a linear numerator over three factors is accepted
  CHECK_NOTHROW(make_series(Sign::positive, Polynomial::linear(1, 1),
                            {LinearFactor(1, 0), LinearFactor(4, -1), LinearFactor(4, -3)}));
}

TEST_CASE("term") {
  CHECK(term(s1(), 1) == Rational(1, 3));
  CHECK(term(s1(), 2) == Rational(1, 70));
  CHECK(term(mgl(), 1) == Rational(1));
  CHECK(term(mgl(), 2) == Rational(-1, 3));
  CHECK(term(s1().with_scale(Rational(3)), 1) == Rational(1));
}

TEST_CASE("partial_sum_exact") {
  CHECK(partial_sum_exact(s19(), 2) == Rational(22, 315));
  CHECK(partial_sum_exact(s19(), 0) == Rational(0));
  CHECK(partial_sum_exact(mgl(), 0) == Rational(0));
  CHECK(partial_sum_exact(s1(), 1) == Rational(1, 3));
  CHECK(partial_sum_exact(mgl(), 3) == Rational(13, 15));
  CHECK(kind_of([] { partial_sum_exact(s1(), 11, 10); }) == ErrorKind::CapExceeded);
}

TEST_CASE("tail_bound") {
  CHECK(tail_bound(s1(), 1) == Rational(1, 2));
  CHECK(tail_bound(mgl(), 1) == Rational(1, 3));
  CHECK(tail_bound(s19(), 9) == Rational(1, 8712));
  CHECK(kind_of([] { tail_bound(s1(), 0); }) == ErrorKind::PreconditionViolated);

  // True tail of S1 after one term is about 0.0207.
  const ApproxValue ref = reference::decimal(reference::kS1);
  const Rational tail = ref.midpoint - Rational(1, 3);
  CHECK(tail > Rational(20, 1000));
  CHECK(tail < Rational(21, 1000));
  CHECK(tail <= tail_bound(s1(), 1));
}

TEST_CASE("evaluate") {
  SUBCASE("S1 at 10 digits") {
    const ApproxValue v = evaluate(s1(), 10);
    CHECK(v.radius <= reference::pow10_neg(10));
    CHECK(v.overlaps(reference::decimal("0.3540503706")));
    CHECK((v.midpoint - reference::decimal(reference::kS1).midpoint).abs() <= reference::pow10_neg(10));
  }
  SUBCASE("zero series") {
    const ApproxValue v = evaluate(s1().with_scale(Rational(0)), 25);
    CHECK(v.midpoint == Rational(0));
    CHECK(v.radius == Rational(0));
  }
  SUBCASE("S19 at 15 digits") {
    const ApproxValue v = evaluate(s19(), 15);
    CHECK(v.radius <= reference::pow10_neg(15));
    CHECK(agree(v, reference::decimal(reference::kS19)));
  }
  SUBCASE("precision limits") {
    CHECK(kind_of([] { evaluate(s1(), 0); }) == ErrorKind::PrecisionOverflow);
    CHECK(kind_of([] { evaluate(s1(), kMaxDigits + 1); }) == ErrorKind::PrecisionOverflow);
  }
  SUBCASE("alternating sum at 50 digits") {
    const ApproxValue quarter_pi = evaluate(mgl(), 50);
    const ApproxValue pi = reference::decimal(reference::kPi);
    CHECK(agree(quarter_pi, ApproxValue{pi.midpoint / Rational(4), pi.radius / Rational(4)}));
  }
  SUBCASE("50 digits matches the frozen reference") {
    const ApproxValue v = evaluate(s1(), 50);
    CHECK(v.radius <= reference::pow10_neg(50));
    CHECK(agree(v, reference::decimal(reference::kS1)));
  }
}

TEST_CASE("property: tail bounds are sound for every ledger series") {
  for (const auto& rec : builtin_ledger().series()) {
    const ApproxValue full = evaluate(rec.series, 50);
    for (std::uint64_t N : {1u, 10u, 100u}) {
      CAPTURE(rec.name);
      CAPTURE(N);
      const Rational bound = tail_bound(rec.series, N);
      const Rational partial = partial_sum_exact(rec.series, N);
      // |S - partial| <= |S - mid| + |mid - partial| <= radius + |mid - partial|
      CHECK((full.midpoint - partial).abs() - full.radius <= bound);
    }
  }
}

TEST_CASE("property: bounds decrease and evaluations nest across precision") {
  for (const auto& rec : builtin_ledger().series()) {
    CAPTURE(rec.name);
    CHECK(tail_bound(rec.series, 100) <= tail_bound(rec.series, 10));
    const ApproxValue a = evaluate(rec.series, 20);
    const ApproxValue b = evaluate(rec.series, 40);
    CHECK(agree(a, b));
    CHECK(b.radius <= reference::pow10_neg(40));
  }
}

TEST_CASE("property: direct sums agree with exact partial sums") {
  for (const auto& rec : builtin_ledger().series()) {
    const Evaluation e = evaluate_detailed(rec.series, 30);
    CAPTURE(rec.name);
    if (!e.euler_maclaurin_tail) {
      // The tail bound after direct_terms covers the rest of the sum.
      const std::uint64_t N = e.direct_terms;
      const Rational partial = partial_sum_exact(rec.series, N);
      CHECK((e.value.midpoint - partial).abs() <= e.value.radius + tail_bound(rec.series, N));
    }
    // Ball summation of the leading terms encloses the exact partial sum.
    const unsigned bits = bits_for_digits(40);
    const BallTermEvaluator at(rec.series, bits);
    Ball sum(bits);
    for (std::uint64_t n = 1; n <= 200; ++n) sum += at(n);
    CHECK(sum.approx().contains(partial_sum_exact(rec.series, 200)));
  }
}

TEST_CASE("property: evaluate is linear in the scale") {
  const Rational c(-7, 3);
  for (const auto& rec : builtin_ledger().series()) {
    CAPTURE(rec.name);
    const ApproxValue base = evaluate(rec.series, 30);
    const ApproxValue scaled = evaluate(rec.series.with_scale(rec.series.scale() * c), 30);
    const ApproxValue expect{c * base.midpoint, c.abs() * base.radius};
    CHECK(agree(scaled, expect));
  }
}

TEST_CASE("property: alternating partial sums enclose pi/4") {
  const ApproxValue pi = reference::decimal(reference::kPi);
  const Rational quarter = pi.midpoint / Rational(4);
  for (std::uint64_t N = 1; N <= 20; ++N) {
    const Rational sN = partial_sum_exact(mgl(), N);
    const Rational next = partial_sum_exact(mgl(), N + 1);
    const Rational lo = sN < next ? sN : next;
    const Rational hi = sN < next ? next : sN;
    CAPTURE(N);
    CHECK(lo < quarter);
    CHECK(quarter < hi);
    CHECK((quarter - sN).abs() <= tail_bound(mgl(), N));
  }
}

TEST_CASE("alternating_split") {
  SUBCASE("odd reciprocals") {
    const SeriesDef p = alternating_split(mgl());
    CHECK(p.sign() == Sign::positive);
    CHECK(p.numerator() == Polynomial::constant(2));
    REQUIRE(p.factors().size() == 2);
    CHECK(p.factors()[0] == LinearFactor(4, -3));
    CHECK(p.factors()[1] == LinearFactor(4, -1));
  }
  SUBCASE("alternating harmonic") {
    const SeriesDef ah = make_series(Sign::alternating, Polynomial::constant(1), {LinearFactor(1, 0)});
    const SeriesDef p = alternating_split(ah);
    CHECK(p.numerator() == Polynomial::constant(1));
    REQUIRE(p.factors().size() == 2);
    CHECK(p.factors()[0] == LinearFactor(2, -1));
    CHECK(p.factors()[1] == LinearFactor(2, 0));
  }
  SUBCASE("zero scale") { CHECK(alternating_split(mgl().with_scale(Rational(0))).is_zero()); }
}
