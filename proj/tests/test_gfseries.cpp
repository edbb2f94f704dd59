#include "refsev/chrecursion.hpp"
#include "refsev/engines.hpp"
#include "refsev/gfseries.hpp"

#include <doctest.h>

using namespace refsev;

namespace {

RatLaurent R(int n, long c = 1) { return RatLaurent::y_pow(n, Rational(c)); }

// q prod (1-q^n)^20 (1-yq^n)^2 (1-q^n/y)^2 multiplied out factor by factor.
QSeries naive_delta(int order) {
  QSeries f = QSeries::constant(order, RatLaurent(1L));
  for (int n = 1; n <= order; ++n) {
    auto factor = [&](const RatLaurent& c) {
      QSeries g = QSeries::constant(order, RatLaurent(1L));
      g.set_coeff(n, -c);
      return g;
    };
    for (int k = 0; k < 20; ++k) f = f * factor(RatLaurent(1L));
    for (int k = 0; k < 2; ++k) f = f * factor(R(1)) * factor(R(-1));
  }
  return series_shift_up(f, 1).truncated(order);
}

}  // namespace

TEST_CASE("divisor series and its inverse") {
  const QSeries g2 = dg2(6);
  CHECK(g2.coeff(0).is_zero());
  CHECK(g2.coeff(1) == RatLaurent(1L));
  CHECK(g2.coeff(2) == R(-1) + RatLaurent(4L) + R(1));
  // n = 3: divisors 1 and 3 give 3 + [3]^2.
  CHECK(g2.coeff(3) == R(-2) + R(-1, 2) + RatLaurent(6L) + R(1, 2) + R(2));
  const QSeries g = dg2_inverse(6);
  CHECK(g.coeff(1) == RatLaurent(1L));
  CHECK(g.coeff(2) == -(R(-1) + RatLaurent(4L) + R(1)));
  CHECK(g.coeff(3) == R(-2) + R(-1, 14) + RatLaurent(30L) + R(1, 14) + R(2));
  CHECK(series_compose(g2, g) == QSeries::variable(6));
}

TEST_CASE("discriminant from its product") {
  const QSeries d = delta_tilde(6);
  CHECK(d == naive_delta(6));
  CHECK(d.coeff(1) == RatLaurent(1L));
  CHECK(d.coeff(2) == R(-1, -2) + RatLaurent(-20L) + R(1, -2));
}

TEST_CASE("plane generating function matches the recursion") {
  CHECK(refined_invariant_gf(p2_data(3), 1)[1] == LaurentPoly::y_pow(-1) + 10 + LaurentPoly::y_pow(1));
  for (int d = 1; d <= 8; ++d) {
    const auto gf = refined_invariant_gf(p2_data(d), 5);
    CHECK(gf[0] == LaurentPoly(1L));
    for (long delta = 0; delta <= 5; ++delta) {
      CHECK(gf[static_cast<std::size_t>(delta)].is_symmetric());
      if (2 * d >= delta + 2) CHECK(gf[static_cast<std::size_t>(delta)] == severi(Surface::p2(d), delta));
    }
  }
}

TEST_CASE("quadric generating function matches the recursion") {
  for (int c = 0; c <= 5; ++c)
    for (int d = 0; d <= 5; ++d) {
      const auto gf = refined_invariant_gf(hirzebruch_data(0, c, d), 4);
      for (long delta = 0; delta <= 4; ++delta)
        if (2 * c >= delta && 2 * d >= delta)
          CHECK(gf[static_cast<std::size_t>(delta)] == severi(Surface::hirzebruch(0, c, d), delta));
    }
}

TEST_CASE("Hirzebruch generating function inside the reported region") {
  for (int m = 1; m <= 2; ++m)
    for (int c = 0; c <= 5; ++c)
      for (int d = 0; d <= 4; ++d)
        for (long delta = 1; delta <= 3; ++delta) {
          const Surface s = Surface::hirzebruch(m, c, d);
          if (gf_region_violation(s, delta)) continue;
          CHECK(severi_by(Engine::GF, s, delta) == severi(s, delta));
        }
}

TEST_CASE("P(1,1,m) prediction") {
  CHECK(p11m_prediction(4, 3, 3)[0] == LaurentPoly(1L));
  CHECK(p11m_prediction(4, 3, 2)[2] == severi(Surface::wps(3, 4), 2));
  CHECK(p11m_prediction(5, 4, 3)[3] == severi(Surface::wps(4, 5), 3));
  for (int m = 4; m <= 5; ++m)
    for (int d = 2; d <= 5; ++d) {
      const auto pred = p11m_prediction(d, m, 5);
      for (long delta = 0; delta <= std::min<long>(5, 2 * d - 2); ++delta)
        CHECK(pred[static_cast<std::size_t>(delta)] == severi(Surface::wps(m, d), delta));
    }
}

TEST_CASE("resummation inverts the change of variables") {
  const auto values = refined_invariant_gf(p2_data(4), 5);
  const QSeries in_q = resum_in_dg2(values, 5);
  const QSeries back = series_compose(in_q, dg2_inverse(5));
  for (int k = 0; k <= 5; ++k) CHECK(back.coeff(k) == to_rational(values[static_cast<std::size_t>(k)]));
}

TEST_CASE("embedded series leave no silent truncation") {
  CHECK_THROWS_AS(refined_invariant_gf(p2_data(4), 6), std::invalid_argument);
  CHECK_THROWS_AS(severi_by(Engine::GF, Surface::p2(9), 6), DomainError);
  CHECK_THROWS_AS(severi_by(Engine::GF, Surface::p2(2), 4), DomainError);
}
