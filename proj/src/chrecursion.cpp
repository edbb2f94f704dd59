#include "refsev/chrecursion.hpp"

#include <boost/functional/hash.hpp>

#include <stdexcept>

namespace refsev {

CHKey::CHKey(Surface s, TangencySeq a, TangencySeq b, long dl)
    : surface(s), alpha(std::move(a)), beta(std::move(b)), delta(dl) {
  surface.validate();
  if (alpha.weighted() + beta.weighted() != invariants(surface).HL)
    throw std::invalid_argument("tangency data must satisfy I alpha + I beta = " +
                                std::to_string(invariants(surface).HL));
  if (delta < 0) throw std::invalid_argument("delta must be >= 0");
}

std::size_t CHRecursion::VecHash::operator()(const std::vector<int>& v) const noexcept {
  return boost::hash_range(v.begin(), v.end());
}

std::vector<int> encode_key(const Surface& s, const TangencySeq& alpha, const TangencySeq& beta, long delta) {
  std::vector<int> k{static_cast<int>(s.kind), s.m, s.c, s.d, static_cast<int>(delta), alpha.max_order()};
  k.insert(k.end(), alpha.entries().begin(), alpha.entries().end());
  k.insert(k.end(), beta.entries().begin(), beta.entries().end());
  return k;
}

const LaurentPoly& CHRecursion::quantum_power(int i, int e) {
  if (static_cast<int>(qpow_.size()) <= i) qpow_.resize(static_cast<std::size_t>(i + 1));
  auto& row = qpow_[static_cast<std::size_t>(i)];
  if (row.empty()) row.emplace_back(1L);
  while (static_cast<int>(row.size()) <= e) row.push_back(row.back() * quantum(i));
  return row[static_cast<std::size_t>(e)];
}

namespace {

bool is_base_case(const Surface& s, const TangencySeq& alpha, const TangencySeq& beta, long delta) {
  if (delta != 0 || !beta.empty()) return false;
  switch (s.kind) {
    case SurfaceKind::P2:
      return s.d == 1 && alpha == TangencySeq{1};
    case SurfaceKind::Hirzebruch:
      return s.d == 0 && alpha.weighted() == s.c && alpha.at(1) == s.c;
    case SurfaceKind::WPS:
      // A degree-one curve is y = f(x) with deg f = m; fixing all m roots
      // (with multiplicities) and one point leaves exactly one curve.
      return s.d == 1 && alpha.weighted() == s.m;
  }
  return false;
}

}  // namespace

LaurentPoly CHRecursion::eval(const Surface& s, const TangencySeq& alpha, const TangencySeq& beta, long delta) {
  std::vector<int> key;
  if (memoize_) {
    key = encode_key(s, alpha, beta, delta);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }

  LaurentPoly result;
  if (is_base_case(s, alpha, beta, delta)) {
    result = LaurentPoly(1L);
  } else if (gamma(s, beta, delta) > 0) {
    for (int k = 1; k <= beta.max_order(); ++k) {
      if (beta.at(k) == 0) continue;
      LaurentPoly sub = eval(s, alpha.plus_unit(k), beta.minus_unit(k), delta);
      if (!sub.is_zero()) result += quantum_power(k, 1) * sub;
    }
    if (auto lower = step_down(s)) {
      const SurfaceInvariants inv = invariants(s);
      for (const auto& [ap, bp] : enumerate_splits(alpha, beta, static_cast<int>(inv.HLmH))) {
        const long dprime = delta - inv.HLmH + (bp.total() - beta.total());
        if (dprime < 0) continue;
        LaurentPoly sub = eval(*lower, ap, bp, dprime);
        if (sub.is_zero()) continue;
        LaurentPoly weight(1L);
        for (int i = 1; i <= bp.max_order(); ++i) {
          const int extra = bp.at(i) - beta.at(i);
          if (extra > 0) weight *= quantum_power(i, extra);
        }
        const BigInt scalar = BigInt(seq_binomial(alpha, ap)) * BigInt(seq_binomial(bp, beta));
        result += (weight * sub) * scalar;
      }
    }
  }

  if (memoize_) memo_.emplace(std::move(key), result);
  return result;
}

LaurentPoly CHRecursion::relative(const CHKey& key) { return eval(key.surface, key.alpha, key.beta, key.delta); }

LaurentPoly CHRecursion::severi(const Surface& s, long delta) {
  TangencySeq beta;
  const long hl = invariants(s).HL;
  if (hl > 0) beta.set(1, static_cast<int>(hl));
  return relative(CHKey(s, TangencySeq{}, beta, delta));
}

std::vector<CHRecursion::Record> CHRecursion::export_records() const {
  std::vector<Record> out;
  out.reserve(memo_.size());
  for (const auto& [k, v] : memo_) out.push_back({k, v});
  return out;
}

void CHRecursion::import_records(const std::vector<Record>& records) {
  for (const auto& r : records) memo_.emplace(r.key, r.value);
}

CHRecursion& shared_ch_engine() {
  thread_local CHRecursion engine;
  return engine;
}

LaurentPoly relative_severi(const CHKey& key) { return shared_ch_engine().relative(key); }
LaurentPoly severi(const Surface& s, long delta) { return shared_ch_engine().severi(s, delta); }
BigInt welschinger(const Surface& s, long delta) { return eval_special(severi(s, delta), -1); }
BigInt classical(const Surface& s, long delta) { return eval_special(severi(s, delta), 1); }

}  // namespace refsev
