#include "refsev/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace refsev {

LaurentPoly quantum(int n) {
  if (n <= 0) throw std::invalid_argument("quantum number needs n >= 1, got " + std::to_string(n));
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(static_cast<std::size_t>(n));
  for (int e = -(n - 1); e <= n - 1; e += 2) terms.emplace_back(e, BigInt(1));
  return LaurentPoly::from_terms(std::move(terms));
}

BigInt eval_special(const LaurentPoly& p, int point) {
  if (point == 1) return p.sum_of_coefficients();
  if (point != -1) throw std::invalid_argument("evaluation point must be +1 or -1");
  if (!p.is_symmetric()) throw std::invalid_argument("y=-1 needs a symmetric polynomial");
  // y^{e/2} -> i^e; odd e cancel in symmetric pairs.
  BigInt v = 0;
  for (const auto& [e, c] : p.terms()) {
    const int r = ((e % 4) + 4) % 4;
    if (r == 0) v += c;
    else if (r == 2) v -= c;
  }
  return v;
}

RatLaurent to_rational(const LaurentPoly& p) {
  std::vector<RatLaurent::Term> terms;
  terms.reserve(p.size());
  for (const auto& [e, c] : p.terms()) terms.emplace_back(e, Rational(c));
  return RatLaurent::from_terms(std::move(terms));
}

bool is_integral(const RatLaurent& p) {
  for (const auto& t : p.terms()) {
    if (boost::multiprecision::denominator(t.second) != 1) return false;
  }
  return true;
}

LaurentPoly to_integral(const RatLaurent& p) {
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(p.size());
  for (const auto& [e, c] : p.terms()) {
    if (boost::multiprecision::denominator(c) != 1)
      throw ConsistencyError("non-integral coefficient " + c.str() + " at half-exponent " + std::to_string(e));
    terms.emplace_back(e, boost::multiprecision::numerator(c));
  }
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw std::invalid_argument("division by zero polynomial");
  if (num.is_zero()) return {};
  const int qmin = num.min_exp() - den.min_exp();
  const BigInt& lead = den.terms().back().second;
  LaurentPoly rem = num;
  std::vector<LaurentPoly::Term> quot;
  while (!rem.is_zero()) {
    const int e = rem.max_exp() - den.max_exp();
    const BigInt& top = rem.terms().back().second;
    if (e < qmin || top % lead != 0) throw ConsistencyError("inexact Laurent division");
    LaurentPoly step = LaurentPoly::monomial(e, top / lead);
    rem -= step * den;
    quot.emplace_back(e, step.terms().front().second);
  }
  return LaurentPoly::from_terms(std::move(quot));
}

namespace {

std::string power_text(int e) {
  if (e == 0) return "";
  if (e % 2 != 0) return "y^(" + std::to_string(e) + "/2)";
  if (e == 2) return "y";
  return "y^" + std::to_string(e / 2);
}

template <class C>
std::string render(const BasicLaurent<C>& p, std::string (*coeff_text)(const C&)) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool neg = c < 0;
    const C mag = neg ? C(-c) : c;
    if (first) {
      if (neg) out << '-';
    } else {
      out << (neg ? " - " : " + ");
    }
    first = false;
    const std::string pw = power_text(e);
    if (pw.empty()) {
      out << mag;
    } else {
      if (mag != 1) out << coeff_text(mag);
      out << pw;
    }
  }
  return out.str();
}

std::string int_coeff(const BigInt& c) { return c.str(); }

std::string rat_coeff(const Rational& c) {
  if (boost::multiprecision::denominator(c) == 1) return boost::multiprecision::numerator(c).str();
  return "(" + c.str() + ")";
}

}  // namespace

std::string to_string(const LaurentPoly& p) { return render(p, &int_coeff); }
std::string to_string(const RatLaurent& p) { return render(p, &rat_coeff); }

}  // namespace refsev
