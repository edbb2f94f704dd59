#pragma once

// Irreducible refined Severi degrees of the projective plane, coefficient
// extraction and leading-coefficient reports.

#include "refsev/laurent.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace refsev {

/// Truncated series in v (degree marker) and z (point marker).
class BiSeries {
 public:
  BiSeries(int v_max, int z_max) : v_max_(v_max), z_max_(z_max) {}
  int v_max() const { return v_max_; }
  int z_max() const { return z_max_; }
  const RatLaurent& coeff(int v, int z) const;
  void add(int v, int z, const RatLaurent& c);
  const std::map<std::pair<int, int>, RatLaurent>& terms() const { return terms_; }

  friend BiSeries operator*(const BiSeries& a, const BiSeries& b);
  friend BiSeries operator+(const BiSeries& a, const BiSeries& b);
  BiSeries scaled(const Rational& s) const;

 private:
  int v_max_;
  int z_max_;
  std::map<std::pair<int, int>, RatLaurent> terms_;
};

/// log(1 + F) for F without constant term.
BiSeries log1p(const BiSeries& F);

/// Irreducible refined Severi degree via the logarithm of the exponential
/// generating function.
LaurentPoly irreducible_severi(int d, long delta);
/// The same number via the recursive partition formula over reducible curves.
LaurentPoly irreducible_severi_partition(int d, long delta);

/// Coefficient of y^{delta - i} in p.
BigInt coefficient(const LaurentPoly& p, long delta, long i);

/// C(C(d-1,2), delta).
BigInt leading_formula(int d, long delta);

struct ThresholdRow {
  long delta = 0;
  long i = 0;
  /// Least d from which the coefficient matches the node polynomial for every
  /// d up to d_max; empty when it never stabilizes inside the range.
  std::optional<int> threshold;
};
std::vector<ThresholdRow> threshold_report(long delta_max, int d_max);

}  // namespace refsev
