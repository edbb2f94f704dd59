#pragma once

// Truncated power series in one variable (q or t) over Laurent polynomials
// in y^{1/2}. A series of order N is known modulo q^{N+1}; binary operations
// return the smaller of the two orders.

#include "refsev/laurent.hpp"

#include <vector>

namespace refsev {

class QSeries {
 public:
  QSeries() = default;
  /// Zero series of the given order.
  explicit QSeries(int order);
  QSeries(int order, std::vector<RatLaurent> coeffs);

  static QSeries constant(int order, const RatLaurent& c);
  /// The series q (or t) itself.
  static QSeries variable(int order);
  static QSeries from_integral(int order, const std::vector<LaurentPoly>& coeffs);

  int order() const { return order_; }
  const RatLaurent& coeff(int k) const;
  void set_coeff(int k, RatLaurent c);
  const std::vector<RatLaurent>& coeffs() const { return coeffs_; }

  /// Drops information above q^order.
  QSeries truncated(int order) const;

  QSeries operator-() const;
  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const RatLaurent& s);
  friend bool operator==(const QSeries& a, const QSeries& b);

 private:
  int order_ = 0;
  std::vector<RatLaurent> coeffs_;  // size order_ + 1
};

/// 1/f; constant term of f must be 1.
QSeries series_inverse(const QSeries& f);
/// f^e for any integer e; e < 0 needs constant term 1.
QSeries series_int_pow(const QSeries& f, long e);
/// The square root with constant term 1; f must have constant term 1.
QSeries series_sqrt(const QSeries& f);
/// f^a for rational a; constant term 1 required.
QSeries series_rat_pow(const QSeries& f, const Rational& a);
/// q d/dq.
QSeries series_D(const QSeries& f);
/// f(g); g must have zero constant term.
QSeries series_compose(const QSeries& f, const QSeries& g);
/// The g with f(g(t)) = t; f = t + O(t^2) required.
QSeries series_comp_inverse(const QSeries& f);
/// f / q^k; the first k coefficients must vanish. Order drops by k.
QSeries series_shift_down(const QSeries& f, int k);
/// f * q^k. Order grows by k.
QSeries series_shift_up(const QSeries& f, int k);

}  // namespace refsev
