#include "refsev/invariants.hpp"

#include "refsev/chrecursion.hpp"
#include "refsev/engines.hpp"

#include <functional>
#include <stdexcept>

namespace refsev {

const RatLaurent& BiSeries::coeff(int v, int z) const {
  static const RatLaurent zero;
  auto it = terms_.find({v, z});
  return it == terms_.end() ? zero : it->second;
}

void BiSeries::add(int v, int z, const RatLaurent& c) {
  if (v > v_max_ || z > z_max_ || c.is_zero()) return;
  auto& slot = terms_[{v, z}];
  slot += c;
  if (slot.is_zero()) terms_.erase({v, z});
}

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
  BiSeries r(std::min(a.v_max_, b.v_max_), std::min(a.z_max_, b.z_max_));
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      const int v = ka.first + kb.first;
      const int z = ka.second + kb.second;
      if (v <= r.v_max_ && z <= r.z_max_) r.add(v, z, ca * cb);
    }
  }
  return r;
}

BiSeries operator+(const BiSeries& a, const BiSeries& b) {
  BiSeries r(std::min(a.v_max_, b.v_max_), std::min(a.z_max_, b.z_max_));
  for (const auto& [k, c] : a.terms_) r.add(k.first, k.second, c);
  for (const auto& [k, c] : b.terms_) r.add(k.first, k.second, c);
  return r;
}

BiSeries BiSeries::scaled(const Rational& s) const {
  BiSeries r(v_max_, z_max_);
  for (const auto& [k, c] : terms_) r.add(k.first, k.second, c * s);
  return r;
}

BiSeries log1p(const BiSeries& F) {
  if (!F.coeff(0, 0).is_zero()) throw std::invalid_argument("log1p needs a series without constant term");
  // Every term of F has v-degree >= 1, so F^k vanishes for k > v_max.
  BiSeries result(F.v_max(), F.z_max());
  BiSeries power = F;
  for (int k = 1; k <= F.v_max(); ++k) {
    result = result + power.scaled(Rational(k % 2 == 1 ? 1 : -1, k));
    power = power * F;
  }
  return result;
}

namespace {

long dim_p2(long d) { return d * (d + 3) / 2; }

}  // namespace

LaurentPoly irreducible_severi(int d, long delta) {
  if (d < 1 || delta < 0) throw std::invalid_argument("irreducible degrees need d >= 1, delta >= 0");
  const long n = dim_p2(d) - delta;
  if (n < 0) return {};
  BiSeries F(d, static_cast<int>(n));
  for (int dp = 1; dp <= d; ++dp) {
    // A component of degree dp in a reducible curve of degree d meets the rest
    // in dp(d-dp) nodes, which bounds its own node count.
    const long top = dp == d ? delta : delta - static_cast<long>(dp) * (d - dp);
    for (long dl = 0; dl <= top; ++dl) {
      const long np = dim_p2(dp) - dl;
      if (np < 0 || np > n) continue;
      const LaurentPoly N = severi(Surface::p2(dp), dl);
      if (N.is_zero()) continue;
      F.add(dp, static_cast<int>(np), to_rational(N) * Rational(1, factorial(np)));
    }
  }
  const BiSeries L = log1p(F);
  return to_integral(L.coeff(d, static_cast<int>(n)) * Rational(factorial(n)));
}

LaurentPoly irreducible_severi_partition(int d, long delta) {
  if (d < 1 || delta < 0) throw std::invalid_argument("irreducible degrees need d >= 1, delta >= 0");
  const long n = dim_p2(d) - delta;
  if (n < 0) return {};
  thread_local std::map<std::pair<int, long>, LaurentPoly> memo;
  if (auto it = memo.find({d, delta}); it != memo.end()) return it->second;
  LaurentPoly reducible;
  // Parts (d_i, delta_i) in non-increasing order; at least two parts.
  std::vector<std::pair<int, long>> parts;
  std::function<void(int, long, int, long)> rec = [&](int deg_left, long node_left, int max_d, long max_dl) {
    if (deg_left == 0) {
      if (node_left != 0 || parts.size() < 2) return;
      BigInt ways = factorial(n);
      LaurentPoly prod(1L);
      std::size_t run = 1;
      for (std::size_t k = 0; k < parts.size(); ++k) {
        const long nk = dim_p2(parts[k].first) - parts[k].second;
        ways /= factorial(nk);
        if (k + 1 < parts.size() && parts[k + 1] == parts[k]) {
          ++run;
        } else {
          ways /= factorial(static_cast<long>(run));
          run = 1;
        }
        prod *= irreducible_severi_partition(parts[k].first, parts[k].second);
        if (prod.is_zero()) return;
      }
      reducible += prod * ways;
      return;
    }
    const int done = d - deg_left;
    for (int di = std::min(deg_left, max_d); di >= 1; --di) {
      // New intersections with the parts already chosen.
      const long cross = static_cast<long>(di) * done;
      if (cross > node_left) continue;
      const long cap = di == max_d ? std::min(max_dl, node_left - cross) : node_left - cross;
      for (long dl = cap; dl >= 0; --dl) {
        if (dim_p2(di) - dl < 0) continue;
        parts.emplace_back(di, dl);
        rec(deg_left - di, node_left - cross - dl, di, dl);
        parts.pop_back();
      }
    }
  };
  rec(d, delta, d, delta);
  LaurentPoly result = severi(Surface::p2(d), delta) - reducible;
  memo.emplace(std::make_pair(d, delta), result);
  return result;
}

BigInt coefficient(const LaurentPoly& p, long delta, long i) {
  return p.coeff(static_cast<int>(2 * (delta - i)));
}

BigInt leading_formula(int d, long delta) {
  return binomial(static_cast<long>(binomial(d - 1, 2)), delta);
}

std::vector<ThresholdRow> threshold_report(long delta_max, int d_max) {
  std::vector<ThresholdRow> rows;
  for (long dl = 1; dl <= delta_max; ++dl) {
    const DPoly np = node_polynomial_p2(static_cast<int>(dl));
    std::vector<LaurentPoly> actual(static_cast<std::size_t>(d_max + 1));
    std::vector<RatLaurent> predicted(static_cast<std::size_t>(d_max + 1));
    for (int d = 1; d <= d_max; ++d) {
      actual[static_cast<std::size_t>(d)] = severi(Surface::p2(d), dl);
      predicted[static_cast<std::size_t>(d)] = np.evaluate(Rational(d));
    }
    for (long i = 0; i <= dl; ++i) {
      ThresholdRow row{dl, i, std::nullopt};
      const int e = static_cast<int>(2 * (dl - i));
      for (int d = d_max; d >= 1; --d) {
        if (Rational(actual[static_cast<std::size_t>(d)].coeff(e)) != predicted[static_cast<std::size_t>(d)].coeff(e)) break;
        row.threshold = d;
      }
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace refsev
