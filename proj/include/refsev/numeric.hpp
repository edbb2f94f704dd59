#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace refsev {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when a request lies outside the region where an engine is valid
/// (for example the template formula on Hirzebruch surfaces with c + m < 2δ).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when two routes that must agree do not (interpolation consistency,
/// reconstruction vs. recursion).
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

BigInt factorial(long n);

/// C(n, k); zero when k < 0 or k > n, and for n < 0.
BigInt binomial(long n, long k);

inline std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace refsev
