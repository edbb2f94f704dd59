#include "refsev/chrecursion.hpp"
#include "refsev/invariants.hpp"

#include <doctest.h>

using namespace refsev;

namespace {
LaurentPoly Y(int n, long c = 1) { return LaurentPoly::y_pow(n, BigInt(c)); }
}  // namespace

TEST_CASE("irreducible degrees of small curves") {
  CHECK(irreducible_severi(3, 1) == Y(-1) + 10 + Y(1));
  CHECK(irreducible_severi(3, 2).is_zero());
  CHECK(irreducible_severi(2, 1).is_zero());
  CHECK(irreducible_severi(1, 0) == LaurentPoly(1L));
  // Rational quartics at y = 1.
  CHECK(irreducible_severi(4, 3).sum_of_coefficients() == 620);
  // Rational quintics at y = 1.
  CHECK(irreducible_severi(5, 6).sum_of_coefficients() == 87304);
}

TEST_CASE("irreducible equals all curves when few nodes") {
  for (int d = 1; d <= 7; ++d)
    for (long delta = 0; delta <= d - 2; ++delta) CHECK(irreducible_severi(d, delta) == severi(Surface::p2(d), delta));
}

TEST_CASE("irreducible degrees vanish beyond the genus and are non-negative") {
  for (int d = 1; d <= 5; ++d) {
    const long genus = (d - 1) * (d - 2) / 2;
    for (long delta = 0; delta <= genus + 2; ++delta) {
      const LaurentPoly p = irreducible_severi(d, delta);
      CHECK(p.all_nonnegative());
      if (delta > genus) CHECK(p.is_zero());
    }
  }
}

TEST_CASE("logarithm and partition routes agree") {
  for (int d = 1; d <= 5; ++d)
    for (long delta = 0; delta <= 4; ++delta) CHECK(irreducible_severi(d, delta) == irreducible_severi_partition(d, delta));
}

TEST_CASE("leading coefficients") {
  for (int d = 1; d <= 8; ++d) {
    for (long delta = 0; delta <= 5; ++delta) {
      const LaurentPoly p = severi(Surface::p2(d), delta);
      CHECK(coefficient(p, delta, 0) == leading_formula(d, delta));
      CHECK(leading_formula(d, delta) == binomial(binomial(d - 1, 2).convert_to<long>(), delta));
    }
  }
  CHECK(coefficient(Y(-1) + 10 + Y(1), 1, 1) == 10);
  CHECK(coefficient(Y(-1) + 10 + Y(1), 1, 0) == 1);
}

TEST_CASE("log of one plus a series inverts the exponential") {
  BiSeries f(3, 3);
  f.add(1, 1, RatLaurent(2L));
  f.add(2, 0, RatLaurent::y_pow(1));
  const BiSeries l = log1p(f);
  // log(1+F) = F - F^2/2 + F^3/3 up to the truncation.
  const BiSeries f2 = f * f;
  const BiSeries f3 = f2 * f;
  const BiSeries expected = f + f2.scaled(Rational(-1, 2)) + f3.scaled(Rational(1, 3));
  CHECK(l.terms() == expected.terms());
}

TEST_CASE("threshold report rows") {
  const auto rows = threshold_report(2, 8);
  CHECK_FALSE(rows.empty());
  for (const auto& r : rows) {
    CHECK(r.i >= 0);
    CHECK(r.i <= r.delta);
  }
}
