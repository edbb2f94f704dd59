#include "refsev/gfseries.hpp"

#include <initializer_list>
#include <stdexcept>

namespace refsev {

ChernData p2_data(int d) {
  ChernData cd;
  cd.chiL = static_cast<long>(d + 1) * (d + 2) / 2;
  cd.KK = 9;
  cd.LK = -3L * d;
  cd.chiO = 1;
  return cd;
}

ChernData hirzebruch_data(int m, int c, int d) {
  const long L2 = 2L * c * d + static_cast<long>(d) * d * m;
  ChernData cd;
  cd.LK = -2L * c - static_cast<long>(d) * (m + 2);
  cd.KK = 8;
  cd.chiO = 1;
  cd.chiL = cd.chiO + (L2 - cd.LK) / 2;
  return cd;
}

QSeries dg2(int order) {
  QSeries s(order);
  for (int n = 1; n <= order; ++n) {
    LaurentPoly acc;
    for (int k = 1; k <= n; ++k) {
      if (n % k != 0) continue;
      const LaurentPoly q = quantum(k);
      acc += (q * q) * BigInt(n / k);
    }
    s.set_coeff(n, to_rational(acc));
  }
  return s;
}

QSeries delta_tilde(int order) {
  // Product truncated mod q^order, then shifted by the leading q.
  const int inner = std::max(order - 1, 0);
  QSeries prod = QSeries::constant(inner, RatLaurent(1L));
  for (int n = 1; n <= inner; ++n) {
    auto factor = [&](const RatLaurent& c) {
      QSeries f = QSeries::constant(inner, RatLaurent(1L));
      f.set_coeff(n, -c);
      return f;
    };
    prod = prod * series_int_pow(factor(RatLaurent(1L)), 20);
    prod = prod * series_int_pow(factor(RatLaurent::y_pow(1)), 2);
    prod = prod * series_int_pow(factor(RatLaurent::y_pow(-1)), 2);
  }
  return series_shift_up(prod, 1).truncated(order);
}

QSeries dg2_inverse(int order) { return series_comp_inverse(dg2(order)); }

namespace {

// (sign) * (a_0 y^{n} + a_1 y^{n-1} + ... + a_n) / y^{shift}
RatLaurent numerator_over_power(int sign, std::initializer_list<long> a, int shift) {
  std::vector<RatLaurent::Term> terms;
  int p = static_cast<int>(a.size()) - 1;
  for (long x : a) {
    terms.emplace_back(2 * (p - shift), Rational(sign * x));
    --p;
  }
  return RatLaurent::from_terms(std::move(terms));
}

QSeries table(std::initializer_list<RatLaurent> rows) {
  return QSeries(kEmbeddedOrder, std::vector<RatLaurent>(rows));
}

// 1 / ((1 - yq)(1 - q/y))
QSeries boundary_prefactor() {
  QSeries f = QSeries::constant(kEmbeddedOrder, RatLaurent(1L));
  f.set_coeff(1, -(RatLaurent::y_pow(1) + RatLaurent::y_pow(-1)));
  f.set_coeff(2, RatLaurent(1L));
  return series_inverse(f);
}

}  // namespace

// Printed truncations mod q^6.
QSeries series_B1() {
  return table({
      RatLaurent(1L),
      RatLaurent(-1L),
      numerator_over_power(-1, {1, 3, 1}, 1),
      numerator_over_power(1, {1, 10, 17, 10, 1}, 2),
      numerator_over_power(-1, {18, 87, 135, 87, 18}, 2),
      numerator_over_power(1, {12, 210, 728, 1061, 728, 210, 12}, 3),
  });
}

QSeries series_B2() {
  return boundary_prefactor() * table({
                                    RatLaurent(1L),
                                    RatLaurent(3L),
                                    numerator_over_power(-1, {3, 1, 3}, 1),
                                    numerator_over_power(1, {1, 8, 18, 8, 1}, 2),
                                    numerator_over_power(-1, {13, 53, 76, 53, 13}, 2),
                                    numerator_over_power(1, {7, 100, 316, 455, 316, 100, 7}, 3),
                                });
}

QSeries series_C1() {
  return table({
      RatLaurent(1L),
      numerator_over_power(-1, {1, 3, 1}, 1),
      numerator_over_power(1, {6, 11, 6}, 1),
      numerator_over_power(-1, {4, 36, 60, 36, 4}, 2),
      numerator_over_power(1, {1, 54, 243, 373, 243, 54, 1}, 3),
      numerator_over_power(-1, {41, 525, 1723, 2478, 1723, 525, 41}, 3),
  });
}

QSeries series_C2() {
  return boundary_prefactor() * table({
                                    RatLaurent(1L),
                                    RatLaurent(2L),
                                    numerator_over_power(-1, {2, 2, 2}, 1),
                                    numerator_over_power(1, {1, 6, 11, 6, 1}, 2),
                                    numerator_over_power(-1, {10, 38, 56, 38, 10}, 2),
                                    numerator_over_power(1, {7, 79, 241, 339, 241, 79, 7}, 3),
                                });
}

QSeries series_C3() {
  return table({
      RatLaurent(1L),
      RatLaurent(2L),
      numerator_over_power(-1, {4, 6, 4}, 1),
      numerator_over_power(1, {20, 32, 20}, 1),
      numerator_over_power(-1, {19, 100, 170, 100, 19}, 2),
      numerator_over_power(1, {4, 154, 564, 824, 564, 154, 4}, 3),
  });
}

QSeries universal_factor(const ChernData& data, int order) {
  if (order > kEmbeddedOrder)
    throw std::invalid_argument("embedded series only known mod q^" + std::to_string(kEmbeddedOrder + 1));
  const QSeries disc = series_shift_down(delta_tilde(order + 2) * series_D(dg2(order + 2)), 2);
  QSeries f = series_int_pow(series_B1().truncated(order), data.KK) *
              series_int_pow(series_B2().truncated(order), data.LK);
  return f * series_rat_pow(disc, Rational(-data.chiO, 2));
}

namespace {

std::vector<LaurentPoly> evaluate_at_inverse(const QSeries& in_q, long chiL, int delta_max) {
  const QSeries g = dg2_inverse(delta_max + 1);
  const QSeries t_over_g = series_int_pow(series_shift_down(g, 1), -chiL);
  const QSeries result = t_over_g * series_compose(in_q, g);
  std::vector<LaurentPoly> out;
  for (int k = 0; k <= delta_max; ++k) out.push_back(to_integral(result.coeff(k)));
  return out;
}

}  // namespace

std::vector<LaurentPoly> refined_invariant_gf(const ChernData& data, int delta_max) {
  if (delta_max < 0) throw std::invalid_argument("delta_max must be >= 0");
  return evaluate_at_inverse(universal_factor(data, delta_max), data.chiL, delta_max);
}

std::vector<LaurentPoly> p11m_prediction(int d, int m, int delta_max) {
  if (delta_max < 0) throw std::invalid_argument("delta_max must be >= 0");
  // The resolution's invariants, resummed in dg2, times the correction
  // series; C1 enters with exponent m+2 (the d-linear exponent disagrees
  // with the recursion already at one node).
  const std::vector<LaurentPoly> resolution = refined_invariant_gf(hirzebruch_data(m, 0, d), delta_max);
  QSeries f = resum_in_dg2(resolution, delta_max);
  f = f * series_int_pow(series_C1().truncated(delta_max), m + 2);
  f = f * series_int_pow(series_C2().truncated(delta_max), m + 2);
  f = f * series_C3().truncated(delta_max);
  const QSeries in_t = series_compose(f, dg2_inverse(delta_max));
  std::vector<LaurentPoly> out;
  for (int k = 0; k <= delta_max; ++k) out.push_back(to_integral(in_t.coeff(k)));
  return out;
}

QSeries resum_in_dg2(const std::vector<LaurentPoly>& values, int order) {
  std::vector<RatLaurent> coeffs;
  for (const auto& v : values) coeffs.push_back(to_rational(v));
  const int n = std::min(order, static_cast<int>(values.size()) - 1);
  return series_compose(QSeries(n, coeffs), dg2(n));
}

}  // namespace refsev
