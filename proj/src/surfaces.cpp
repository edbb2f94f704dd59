#include "refsev/surfaces.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace refsev {

Surface Surface::p2(int d) {
  Surface s{SurfaceKind::P2, 1, 0, d};
  s.validate();
  return s;
}

Surface Surface::hirzebruch(int m, int c, int d) {
  Surface s{SurfaceKind::Hirzebruch, m, c, d};
  s.validate();
  return s;
}

Surface Surface::wps(int m, int d) {
  Surface s{SurfaceKind::WPS, m, 0, d};
  s.validate();
  return s;
}

void Surface::validate() const {
  switch (kind) {
    case SurfaceKind::P2:
      if (d < 0 || m != 1 || c != 0) throw std::invalid_argument("P2 needs d >= 0");
      break;
    case SurfaceKind::Hirzebruch:
      if (c < 0 || d < 0) throw std::invalid_argument("Hirzebruch needs c, d >= 0");
      if (c + static_cast<long>(d) * m < 0) throw std::invalid_argument("Hirzebruch needs c + d*m >= 0");
      break;
    case SurfaceKind::WPS:
      if (m < 1 || d < 0 || c != 0) throw std::invalid_argument("P(1,1,m) needs m >= 1, d >= 0");
      break;
  }
}

std::string Surface::describe() const {
  std::ostringstream out;
  switch (kind) {
    case SurfaceKind::P2: out << "P2{d=" << d << "}"; break;
    case SurfaceKind::Hirzebruch: out << "Hirzebruch{m=" << m << ",c=" << c << ",d=" << d << "}"; break;
    case SurfaceKind::WPS: out << "WPS{m=" << m << ",d=" << d << "}"; break;
  }
  return out.str();
}

SurfaceInvariants invariants(const Surface& s) {
  const long d = s.d;
  const long m = s.m;
  const long c = s.c;
  SurfaceInvariants inv;
  switch (s.kind) {
    case SurfaceKind::P2:
      inv.dimL = d * (d + 3) / 2;
      inv.gL = (d - 1) * (d - 2) / 2;
      inv.HL = d;
      inv.HLmH = d - 1;
      break;
    case SurfaceKind::Hirzebruch:
      inv.dimL = (d + 1) * (c + 1) + m * d * (d + 1) / 2 - 1;
      inv.gL = (d - 1) * (2 * c + m * d - 2) / 2;
      inv.HL = c + d * m;
      inv.HLmH = c + (d - 1) * m;
      break;
    case SurfaceKind::WPS:
      inv.dimL = m * d * (d + 1) / 2 + d;
      inv.gL = (d - 1) * (d * m - 2) / 2;
      inv.HL = d * m;
      inv.HLmH = (d - 1) * m;
      break;
  }
  return inv;
}

std::optional<Surface> step_down(const Surface& s) {
  Surface t = s;
  switch (s.kind) {
    case SurfaceKind::P2:
    case SurfaceKind::WPS:
      if (s.d < 2) return std::nullopt;
      break;
    case SurfaceKind::Hirzebruch:
      if (s.d < 1) return std::nullopt;
      break;
  }
  t.d = s.d - 1;
  return t;
}

std::vector<std::pair<long, long>> polygon(const Surface& s) {
  if (s.m < 0) throw std::invalid_argument("no polygon for negative m");
  const long d = s.d;
  switch (s.kind) {
    case SurfaceKind::P2: return {{0, 0}, {d, 0}, {0, d}};
    case SurfaceKind::WPS: return {{0, 0}, {d * s.m, 0}, {0, d}};
    case SurfaceKind::Hirzebruch: return {{0, 0}, {s.c + d * s.m, 0}, {s.c, d}, {0, d}};
  }
  return {};
}

TangencySeq::TangencySeq(std::initializer_list<int> entries) : v_(entries) { trim(); }
TangencySeq::TangencySeq(std::vector<int> entries) : v_(std::move(entries)) { trim(); }

void TangencySeq::trim() {
  for (int x : v_) {
    if (x < 0) throw std::invalid_argument("tangency sequence entries must be >= 0");
  }
  while (!v_.empty() && v_.back() == 0) v_.pop_back();
}

int TangencySeq::at(int i) const {
  if (i < 1 || i > static_cast<int>(v_.size())) return 0;
  return v_[static_cast<std::size_t>(i - 1)];
}

void TangencySeq::set(int i, int value) {
  if (i < 1) throw std::invalid_argument("tangency order starts at 1");
  if (i > static_cast<int>(v_.size())) v_.resize(static_cast<std::size_t>(i), 0);
  v_[static_cast<std::size_t>(i - 1)] = value;
  trim();
}

long TangencySeq::total() const {
  long s = 0;
  for (int x : v_) s += x;
  return s;
}

long TangencySeq::weighted() const {
  long s = 0;
  for (std::size_t i = 0; i < v_.size(); ++i) s += static_cast<long>(i + 1) * v_[i];
  return s;
}

TangencySeq TangencySeq::plus_unit(int k) const {
  TangencySeq r = *this;
  r.set(k, at(k) + 1);
  return r;
}

TangencySeq TangencySeq::minus_unit(int k) const {
  if (at(k) == 0) throw std::invalid_argument("no tangency of that order to remove");
  TangencySeq r = *this;
  r.set(k, at(k) - 1);
  return r;
}

bool TangencySeq::leq(const TangencySeq& o) const {
  for (int i = 1; i <= max_order(); ++i) {
    if (at(i) > o.at(i)) return false;
  }
  return true;
}

std::string TangencySeq::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v_[i]);
  }
  return s + ")";
}

long gamma(const Surface& s, const TangencySeq& beta, long delta) {
  const SurfaceInvariants inv = invariants(s);
  return inv.dimL - inv.HL + beta.total() - delta;
}

namespace {

// Sequences with weighted sum n using orders <= max_part, in lexicographic order of construction.
void partitions(int n, int max_part, std::vector<int>& cur, std::vector<TangencySeq>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int part = std::min(n, max_part); part >= 1; --part) {
    if (static_cast<int>(cur.size()) < part) cur.resize(static_cast<std::size_t>(part), 0);
    ++cur[static_cast<std::size_t>(part - 1)];
    partitions(n - part, part, cur, out);
    --cur[static_cast<std::size_t>(part - 1)];
  }
}

}  // namespace

std::vector<TangencySeq> sequences_with_weight(int n) {
  std::vector<TangencySeq> out;
  if (n < 0) return out;
  std::vector<int> cur;
  partitions(n, n, cur, out);
  return out;
}

std::vector<std::pair<TangencySeq, TangencySeq>> enumerate_splits(const TangencySeq& alpha,
                                                                  const TangencySeq& beta, int target) {
  std::vector<std::pair<TangencySeq, TangencySeq>> out;
  if (target < 0) return out;
  const long base = beta.weighted();
  if (base > target) return out;
  std::vector<int> sub(alpha.entries().size(), 0);
  std::function<void(std::size_t, long)> walk = [&](std::size_t i, long used) {
    if (i == sub.size()) {
      const long rest = target - used - base;
      if (rest < 0) return;
      TangencySeq ap(sub);
      for (const TangencySeq& extra : sequences_with_weight(static_cast<int>(rest))) {
        std::vector<int> bp(std::max(beta.entries().size(), extra.entries().size()), 0);
        for (std::size_t k = 0; k < bp.size(); ++k) {
          bp[k] = beta.at(static_cast<int>(k + 1)) + extra.at(static_cast<int>(k + 1));
        }
        out.emplace_back(ap, TangencySeq(std::move(bp)));
      }
      return;
    }
    const long order = static_cast<long>(i + 1);
    for (int x = 0; x <= alpha.entries()[i] && used + order * x + base <= target; ++x) {
      sub[i] = x;
      walk(i + 1, used + order * x);
    }
    sub[i] = 0;
  };
  walk(0, 0);
  return out;
}

long long seq_binomial(const TangencySeq& a, const TangencySeq& b) {
  long long r = 1;
  const int n = std::max(a.max_order(), b.max_order());
  for (int i = 1; i <= n; ++i) {
    const int top = a.at(i);
    const int k = b.at(i);
    if (k < 0 || k > top) return 0;
    long long c = 1;
    for (int j = 1; j <= k; ++j) c = c * (top - k + j) / j;
    r *= c;
  }
  return r;
}

}  // namespace refsev
