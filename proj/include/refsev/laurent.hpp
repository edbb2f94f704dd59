#pragma once

// Exact Laurent polynomials in u = y^{1/2}.
//
// Exponents are stored in half-units: the term (e, c) is c * y^{e/2}. Terms are
// kept sorted by exponent and no zero coefficient is ever stored, so two
// polynomials are equal iff their term vectors are equal.

#include "refsev/numeric.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace refsev {

template <class C>
class BasicLaurent {
 public:
  using Coeff = C;
  using Term = std::pair<int, C>;

  BasicLaurent() = default;
  BasicLaurent(long constant) {  // NOLINT(google-explicit-constructor)
    if (constant != 0) terms_.emplace_back(0, C(constant));
  }
  explicit BasicLaurent(const C& constant) {
    if (constant != 0) terms_.emplace_back(0, constant);
  }

  static BasicLaurent monomial(int half_exp, const C& c = C(1)) {
    BasicLaurent p;
    if (c != 0) p.terms_.emplace_back(half_exp, c);
    return p;
  }
  /// y^n for integer n.
  static BasicLaurent y_pow(int n, const C& c = C(1)) { return monomial(2 * n, c); }

  /// Builds from arbitrary (exponent, coefficient) pairs; repeated exponents add up.
  static BasicLaurent from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    BasicLaurent p;
    for (auto& [e, c] : terms) {
      if (!p.terms_.empty() && p.terms_.back().first == e) {
        p.terms_.back().second += c;
        if (p.terms_.back().second == 0) p.terms_.pop_back();
      } else if (c != 0) {
        p.terms_.emplace_back(e, std::move(c));
      }
    }
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  int min_exp() const { return terms_.empty() ? 0 : terms_.front().first; }
  int max_exp() const { return terms_.empty() ? 0 : terms_.back().first; }

  C coeff(int half_exp) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), half_exp,
                               [](const Term& t, int e) { return t.first < e; });
    if (it != terms_.end() && it->first == half_exp) return it->second;
    return C(0);
  }

  /// coeff(e) == coeff(-e) for all e.
  bool is_symmetric() const {
    const std::size_t n = terms_.size();
    for (std::size_t i = 0; i < n; ++i) {
      const auto& a = terms_[i];
      const auto& b = terms_[n - 1 - i];
      if (a.first != -b.first || a.second != b.second) return false;
    }
    return true;
  }

  /// True when every exponent is an integer power of y.
  bool has_integer_powers() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const Term& t) { return t.first % 2 == 0; });
  }

  bool all_nonnegative() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const Term& t) { return t.second >= 0; });
  }

  /// Value at y = 1, i.e. the coefficient sum.
  C sum_of_coefficients() const {
    C s = 0;
    for (const auto& t : terms_) s += t.second;
    return s;
  }

  /// y^{e/2} -> y^{-e/2}.
  BasicLaurent mirrored() const {
    BasicLaurent r;
    r.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) r.terms_.emplace_back(-it->first, it->second);
    return r;
  }

  /// Multiplies by y^{shift/2}.
  BasicLaurent shifted(int half_shift) const {
    BasicLaurent r = *this;
    for (auto& t : r.terms_) t.first += half_shift;
    return r;
  }

  BasicLaurent operator-() const {
    BasicLaurent r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  BasicLaurent& operator+=(const BasicLaurent& o) { return *this = merge(*this, o, false); }
  BasicLaurent& operator-=(const BasicLaurent& o) { return *this = merge(*this, o, true); }
  BasicLaurent& operator*=(const BasicLaurent& o) { return *this = (*this) * o; }
  BasicLaurent& operator*=(const C& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& t : terms_) t.second *= s;
    }
    return *this;
  }

  friend BasicLaurent operator+(const BasicLaurent& a, const BasicLaurent& b) { return merge(a, b, false); }
  friend BasicLaurent operator-(const BasicLaurent& a, const BasicLaurent& b) { return merge(a, b, true); }

  friend BasicLaurent operator*(const BasicLaurent& a, const BasicLaurent& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.size() == 1 && a.terms_[0].second == 1) return b.shifted(a.terms_[0].first);
    if (b.size() == 1 && b.terms_[0].second == 1) return a.shifted(b.terms_[0].first);
    const int lo = a.min_exp() + b.min_exp();
    const int hi = a.max_exp() + b.max_exp();
    std::vector<C> dense(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) dense[static_cast<std::size_t>(ea + eb - lo)] += ca * cb;
    }
    BasicLaurent r;
    for (std::size_t i = 0; i < dense.size(); ++i) {
      if (dense[i] != 0) r.terms_.emplace_back(lo + static_cast<int>(i), std::move(dense[i]));
    }
    return r;
  }
  friend BasicLaurent operator*(BasicLaurent a, const C& s) { return a *= s; }
  friend BasicLaurent operator*(const C& s, BasicLaurent a) { return a *= s; }

  friend bool operator==(const BasicLaurent& a, const BasicLaurent& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const BasicLaurent& a, const BasicLaurent& b) { return !(a == b); }

  BasicLaurent pow(unsigned e) const {
    BasicLaurent result(1L);
    BasicLaurent base = *this;
    while (e != 0) {
      if (e & 1U) result *= base;
      e >>= 1U;
      if (e != 0) base *= base;
    }
    return result;
  }

 private:
  static BasicLaurent merge(const BasicLaurent& a, const BasicLaurent& b, bool subtract) {
    BasicLaurent r;
    r.terms_.reserve(a.size() + b.size());
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
      if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
        r.terms_.push_back(*ia++);
      } else if (ia == a.terms_.end() || ib->first < ia->first) {
        r.terms_.emplace_back(ib->first, subtract ? C(-ib->second) : ib->second);
        ++ib;
      } else {
        C c = subtract ? C(ia->second - ib->second) : C(ia->second + ib->second);
        if (c != 0) r.terms_.emplace_back(ia->first, std::move(c));
        ++ia;
        ++ib;
      }
    }
    return r;
  }

  std::vector<Term> terms_;
};

using LaurentPoly = BasicLaurent<BigInt>;
using RatLaurent = BasicLaurent<Rational>;

/// The quantum number [n]_y = y^{(n-1)/2} + y^{(n-3)/2} + ... + y^{-(n-1)/2}.
/// Throws std::invalid_argument for n <= 0.
LaurentPoly quantum(int n);

/// Exact value at y = +1 or y = -1. At y = -1 the square root y^{1/2} is sent
/// to i, so y^{e/2} contributes i^e; the polynomial must be symmetric so the
/// value is real. Throws std::invalid_argument on a bad point or a
/// non-symmetric polynomial at -1.
BigInt eval_special(const LaurentPoly& p, int point);

RatLaurent to_rational(const LaurentPoly& p);

/// Converts when every coefficient is an integer; throws ConsistencyError otherwise.
LaurentPoly to_integral(const RatLaurent& p);
bool is_integral(const RatLaurent& p);

/// Exact quotient num / den in the Laurent ring over Z. Throws
/// ConsistencyError when the division leaves a remainder or needs fractions.
LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den);

/// Text rendering in ascending exponent order, e.g. "y^-1 + 10 + y".
/// Odd half-exponents print as y^(k/2).
std::string to_string(const LaurentPoly& p);
std::string to_string(const RatLaurent& p);

}  // namespace refsev
