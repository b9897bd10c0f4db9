#include <random>

#include "doctest.h"
#include "qcapelli/error.hpp"
#include "qcapelli/laurent.hpp"

using namespace qcapelli;

namespace {

KSeries poly(int val, std::vector<std::int64_t> c, int trunc) {
  std::vector<FieldElement> v;
  for (auto x : c) v.emplace_back(x);
  return KSeries::from_coeffs(val, std::move(v), trunc);
}

// binom(1/2, k) by the product formula, independent of the series recurrence.
Rational half_binomial(int k) {
  Rational r(1);
  for (int j = 0; j < k; ++j) r = r * (Rational(1, 2) - Rational(j)) / Rational(j + 1);
  return r;
}

KSeries random_series(std::mt19937& rng, int trunc) {
  std::uniform_int_distribution<int> val(-3, 2), len(1, 6), c(-5, 5), rad(0, 3);
  static const std::int64_t rads[] = {1, 2, 3, -1};
  int v = val(rng);
  std::vector<FieldElement> cs;
  int l = len(rng);
  for (int k = 0; k < l; ++k) cs.push_back(FieldElement::radical(rads[rad(rng)], Rational(c(rng))));
  if (cs[0].is_zero()) cs[0] = FieldElement(1);
  return KSeries::from_coeffs(v, std::move(cs), trunc);
}

}  // namespace

TEST_CASE("multiplication examples") {
  KSeries a = poly(0, {1, 1}, 10), b = poly(0, {1, -1}, 10);
  KSeries p = a * b;
  CHECK(p.coefficient(0) == FieldElement(1));
  CHECK(p.coefficient(1).is_zero());
  CHECK(p.coefficient(2) == FieldElement(-1));
  CHECK(p.truncation() == 10);

  KSeries inv_d = KSeries::monomial(FieldElement(1), -1), d = KSeries::monomial(FieldElement(1), 1);
  KSeries one = inv_d * d;
  CHECK(one.valuation() == 0);
  CHECK(one.coeffs().size() == 1);

  KSeries q = poly(-2, {1, 0, 1}, 5) * KSeries::monomial(FieldElement(1), 2);
  CHECK(q.valuation() == 0);
  CHECK(q.coefficient(0) == FieldElement(1));
  CHECK(q.coefficient(2) == FieldElement(1));
  CHECK(q.truncation() == 7);
}

TEST_CASE("truncation propagation") {
  KSeries a = poly(-1, {1, 2}, 4), b = poly(2, {3}, 6);
  KSeries p = a * b;
  CHECK(p.valuation() == 1);
  CHECK(p.truncation() == std::min(-1 + 6, 2 + 4));
}

TEST_CASE("inversion") {
  KSeries a = poly(1, {1, -1}, 8);  // d - d^2
  KSeries b = invert(a);
  CHECK(b.valuation() == -1);
  CHECK(b.truncation() == 6);
  for (int k = -1; k < 6; ++k) CHECK(b.coefficient(k) == FieldElement(1));

  KSeries s = KSeries::from_coeffs(0, {sqrt_int(2)}, 5);
  KSeries si = invert(s);
  CHECK(si.coefficient(0) == FieldElement::radical(2, Rational(1, 2)));
  CHECK(si.coefficient(3).is_zero());

  KSeries t = invert(poly(2, {2}, 10));
  CHECK(t.valuation() == -2);
  CHECK(t.coefficient(-2) == FieldElement(Rational(1, 2)));
  CHECK_THROWS_AS(invert(KSeries::zero(5)), PoleError);
}

TEST_CASE("square roots") {
  KSeries s = sqrt(poly(0, {1, 0, 1}, 12));
  for (int k = 0; k < 6; ++k) CHECK(s.coefficient(2 * k) == FieldElement(half_binomial(k)));
  CHECK(s.coefficient(4) == FieldElement(Rational(-1, 8)));

  KSeries t = sqrt(poly(2, {4}, 10));
  CHECK(t.valuation() == 1);
  CHECK(t.coefficient(1) == FieldElement(2));

  KSeries r = sqrt(poly(0, {2, 0, 3}, 10));
  CHECK(r.coefficient(0) == sqrt_int(2));
  CHECK(r.coefficient(2) == FieldElement::radical(2, Rational(3, 4)));
  CHECK((r * r).agrees_with(poly(0, {2, 0, 3}, 10)));

  CHECK_THROWS_AS(sqrt(poly(1, {1}, 10)), SeriesError);
}

TEST_CASE("u_series examples and squares") {
  KSeries u0 = u_series(0, 1, 12);
  CHECK(u0.valuation() == 1);
  CHECK(u0.truncation() == 12);
  CHECK(u0.coefficient(1) == FieldElement(1));
  CHECK(u0.coefficient(3) == FieldElement(Rational(1, 2)));
  CHECK(u0.coefficient(5) == FieldElement(Rational(-1, 8)));

  KSeries u1 = u_series(1, 1, 12);
  CHECK(u1.coefficient(0) == sqrt_int(2));
  CHECK(u1.coefficient(2) == FieldElement::radical(2, Rational(3, 4)));
  CHECK(u_series(3, 2, 6).coefficient(0) == FieldElement::radical(3, 2));

  for (int c = 0; c <= 6; ++c) {
    for (int r = 1; r <= 4; ++r) {
      KSeries u = u_series(c, r, 16);
      std::int64_t r2 = static_cast<std::int64_t>(r) * r;
      KSeries target = poly(0, {c * (c + 1), 0, (2 * c + 1) * r2, 0, r2 * r2}, 40);
      KSeries sq = u * u;
      CHECK(sq.truncation() >= 16);
      CHECK(sq.agrees_with(target));
    }
  }
}

TEST_CASE("ring laws on random series") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    KSeries a = random_series(rng, 8), b = random_series(rng, 9), c = random_series(rng, 7);
    CHECK((a * b).agrees_with(b * a));
    CHECK(((a * b) * c).agrees_with(a * (b * c)));
    CHECK((a * (b + c)).agrees_with(a * b + a * c));
    KSeries ii = invert(invert(a));
    CHECK(ii.agrees_with(a));
    CHECK((a * invert(a)).agrees_with(KSeries::constant(FieldElement(1))));
  }
}
