#include "refsev/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace refsev {

namespace {

void require_unit_constant(const QSeries& f, const char* what) {
  if (f.coeff(0) != RatLaurent(1L))
    throw std::invalid_argument(std::string(what) + ": constant term must be 1");
}

}  // namespace

QSeries::QSeries(int order) : order_(order), coeffs_(static_cast<std::size_t>(order + 1)) {
  if (order < 0) throw std::invalid_argument("series order must be >= 0");
}

QSeries::QSeries(int order, std::vector<RatLaurent> coeffs) : QSeries(order) {
  for (std::size_t k = 0; k < coeffs.size() && k < coeffs_.size(); ++k) coeffs_[k] = std::move(coeffs[k]);
}

QSeries QSeries::constant(int order, const RatLaurent& c) {
  QSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

QSeries QSeries::variable(int order) {
  QSeries s(order);
  if (order >= 1) s.coeffs_[1] = RatLaurent(1L);
  return s;
}

QSeries QSeries::from_integral(int order, const std::vector<LaurentPoly>& coeffs) {
  QSeries s(order);
  for (std::size_t k = 0; k < coeffs.size() && k < s.coeffs_.size(); ++k) s.coeffs_[k] = to_rational(coeffs[k]);
  return s;
}

const RatLaurent& QSeries::coeff(int k) const {
  static const RatLaurent zero;
  if (k < 0 || k > order_) return zero;
  return coeffs_[static_cast<std::size_t>(k)];
}

void QSeries::set_coeff(int k, RatLaurent c) {
  if (k < 0 || k > order_) throw std::out_of_range("coefficient index beyond series order");
  coeffs_[static_cast<std::size_t>(k)] = std::move(c);
}

QSeries QSeries::truncated(int order) const {
  if (order > order_) throw std::invalid_argument("cannot extend a truncated series");
  QSeries r(order);
  std::copy(coeffs_.begin(), coeffs_.begin() + order + 1, r.coeffs_.begin());
  return r;
}

QSeries QSeries::operator-() const {
  QSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  QSeries r(std::min(a.order_, b.order_));
  for (int k = 0; k <= r.order_; ++k) r.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
  return r;
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

QSeries operator*(const QSeries& a, const QSeries& b) {
  QSeries r(std::min(a.order_, b.order_));
  for (int i = 0; i <= r.order_; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (int j = 0; i + j <= r.order_; ++j) {
      if (!b.coeffs_[j].is_zero()) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return r;
}

QSeries operator*(const QSeries& a, const RatLaurent& s) {
  QSeries r = a;
  for (auto& c : r.coeffs_) c = c * s;
  return r;
}

bool operator==(const QSeries& a, const QSeries& b) { return a.order_ == b.order_ && a.coeffs_ == b.coeffs_; }

QSeries series_inverse(const QSeries& f) {
  require_unit_constant(f, "series inverse");
  const int n = f.order();
  QSeries g(n);
  g.set_coeff(0, RatLaurent(1L));
  for (int k = 1; k <= n; ++k) {
    RatLaurent acc;
    for (int j = 1; j <= k; ++j) acc += f.coeff(j) * g.coeff(k - j);
    g.set_coeff(k, -acc);
  }
  return g;
}

QSeries series_int_pow(const QSeries& f, long e) {
  if (e < 0) return series_int_pow(series_inverse(f), -e);
  QSeries result = QSeries::constant(f.order(), RatLaurent(1L));
  QSeries base = f;
  while (e != 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

QSeries series_sqrt(const QSeries& f) {
  require_unit_constant(f, "series sqrt");
  const int n = f.order();
  QSeries g(n);
  g.set_coeff(0, RatLaurent(1L));
  const Rational half(1, 2);
  // 2 g_k = f_k - sum_{0<j<k} g_j g_{k-j}
  for (int k = 1; k <= n; ++k) {
    RatLaurent acc = f.coeff(k);
    for (int j = 1; j < k; ++j) acc -= g.coeff(j) * g.coeff(k - j);
    g.set_coeff(k, acc * half);
  }
  return g;
}

QSeries series_rat_pow(const QSeries& f, const Rational& a) {
  require_unit_constant(f, "series power");
  const int n = f.order();
  QSeries g(n);
  g.set_coeff(0, RatLaurent(1L));
  // n g_n = sum_{k=1}^n ((a+1)k - n) f_k g_{n-k}
  for (int m = 1; m <= n; ++m) {
    RatLaurent acc;
    for (int k = 1; k <= m; ++k) {
      const Rational w = (a + 1) * k - m;
      if (w != 0 && !f.coeff(k).is_zero()) acc += (f.coeff(k) * g.coeff(m - k)) * w;
    }
    g.set_coeff(m, acc * Rational(1, m));
  }
  return g;
}

QSeries series_D(const QSeries& f) {
  QSeries r(f.order());
  for (int k = 1; k <= f.order(); ++k) r.set_coeff(k, f.coeff(k) * Rational(k));
  return r;
}

QSeries series_compose(const QSeries& f, const QSeries& g) {
  if (!g.coeff(0).is_zero()) throw std::invalid_argument("series compose: inner series needs zero constant term");
  const int n = std::min(f.order(), g.order());
  const QSeries inner = g.truncated(n);
  QSeries r = QSeries::constant(n, f.coeff(n));
  for (int k = n - 1; k >= 0; --k) r = r * inner + QSeries::constant(n, f.coeff(k));
  return r;
}

QSeries series_comp_inverse(const QSeries& f) {
  if (!f.coeff(0).is_zero() || (f.order() >= 1 && f.coeff(1) != RatLaurent(1L)))
    throw std::invalid_argument("compositional inverse needs f = t + O(t^2)");
  const int n = f.order();
  QSeries g = QSeries::variable(n);
  for (int k = 2; k <= n; ++k) {
    const QSeries fg = series_compose(f.truncated(k), g.truncated(k));
    g.set_coeff(k, g.coeff(k) - fg.coeff(k));
  }
  return g;
}

QSeries series_shift_down(const QSeries& f, int k) {
  if (k < 0 || k > f.order()) throw std::invalid_argument("shift exceeds series order");
  for (int j = 0; j < k; ++j) {
    if (!f.coeff(j).is_zero()) throw std::invalid_argument("series not divisible by q^k");
  }
  QSeries r(f.order() - k);
  for (int j = 0; j <= r.order(); ++j) r.set_coeff(j, f.coeff(j + k));
  return r;
}

QSeries series_shift_up(const QSeries& f, int k) {
  if (k < 0) throw std::invalid_argument("negative shift");
  QSeries r(f.order() + k);
  for (int j = 0; j <= f.order(); ++j) r.set_coeff(j + k, f.coeff(j));
  return r;
}

}  // namespace refsev
