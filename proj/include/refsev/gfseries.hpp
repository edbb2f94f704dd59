#pragma once

// Generating-function side: the refined divisor series, the refined
// discriminant, and evaluation of the universal-series formula with the
// printed correction series truncated mod q^6.

#include "refsev/series.hpp"

#include <vector>

namespace refsev {

struct ChernData {
  long chiL = 0;
  long KK = 0;
  long LK = 0;
  long chiO = 0;
};

/// L = dH on the projective plane.
ChernData p2_data(int d);
/// L = cF + dH on the Hirzebruch surface with H^2 = m.
ChernData hirzebruch_data(int m, int c, int d);

/// Highest q-power known in the embedded correction series.
inline constexpr int kEmbeddedOrder = 5;

/// sum_{n>=1} q^n sum_{k|n} [k]_y^2 (n/k).
QSeries dg2(int order);
/// q prod_{n>=1} (1-q^n)^20 (1-yq^n)^2 (1-q^n/y)^2, from the product.
QSeries delta_tilde(int order);
/// Compositional inverse of dg2.
QSeries dg2_inverse(int order);

/// Embedded series (order kEmbeddedOrder), prefactors included.
QSeries series_B1();
QSeries series_B2();
QSeries series_C1();
QSeries series_C2();
QSeries series_C3();

/// Right-hand side in q: B1^{K^2} B2^{LK} (Delta DG2' / q^2)^{-chiO/2}, without
/// the (DG2/q)^{chiL} factor.
QSeries universal_factor(const ChernData& data, int order);

/// Coefficients of t^0..t^{delta_max}; throws std::invalid_argument for
/// delta_max > kEmbeddedOrder.
std::vector<LaurentPoly> refined_invariant_gf(const ChernData& data, int delta_max);

/// Predicted refined degrees of P(1,1,m) with L = dH, delta <= delta_max.
std::vector<LaurentPoly> p11m_prediction(int d, int m, int delta_max);

/// sum_delta values[delta] * dg2^delta, as a q-series of the given order.
QSeries resum_in_dg2(const std::vector<LaurentPoly>& values, int order);

}  // namespace refsev
