#pragma once

// Polynomials in one or several integer variables with Laurent coefficients,
// and exact interpolation through sampled values.

#include "refsev/laurent.hpp"

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace refsev {

/// Polynomial in one variable d; coeffs[k] multiplies d^k.
class DPoly {
 public:
  DPoly() = default;
  explicit DPoly(std::vector<RatLaurent> coeffs);

  const std::vector<RatLaurent>& coeffs() const { return coeffs_; }
  /// Highest power of d with a nonzero coefficient; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const RatLaurent& coeff(int k) const;
  RatLaurent evaluate(const Rational& d) const;
  /// Largest y-exponent (in half units) over all coefficients.
  int max_half_exp() const;

  friend bool operator==(const DPoly& a, const DPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void normalize();
  std::vector<RatLaurent> coeffs_;
};

/// Interpolates through (d, value) nodes with a polynomial of degree <= bound.
/// Nodes beyond the first bound+1 are checked; a mismatch throws
/// ConsistencyError. Too few nodes or repeated abscissae throw
/// std::invalid_argument.
DPoly interpolate(const std::vector<std::pair<long, RatLaurent>>& nodes, int degree_bound);
DPoly interpolate(const std::vector<std::pair<long, LaurentPoly>>& nodes, int degree_bound);

/// Sparse polynomial in several variables: exponent vector -> coefficient.
using MultiPoly = std::map<std::vector<int>, RatLaurent>;

RatLaurent evaluate(const MultiPoly& p, const std::vector<long>& point);

/// Tensor-grid interpolation. grid[v] lists the sample abscissae of variable
/// v (its length fixes the degree bound in that variable); value(point)
/// returns the sampled value at a grid point.
MultiPoly interpolate_grid(const std::vector<std::vector<long>>& grid,
                           const std::function<RatLaurent(const std::vector<long>&)>& value);

/// Renders a DPoly like "(1/2)y d^2 - ..." grouped by power of d.
std::string to_string(const DPoly& p, const std::string& var = "d");

}  // namespace refsev
