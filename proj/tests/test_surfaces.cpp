#include "oracles.hpp"

#include "refsev/surfaces.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

using namespace refsev;

namespace {

std::vector<Surface> sample_surfaces() {
  std::vector<Surface> out;
  for (int d = 1; d <= 8; ++d) out.push_back(Surface::p2(d));
  for (int m = 0; m <= 3; ++m)
    for (int c = 0; c <= 5; ++c)
      for (int d = 0; d <= 5; ++d) out.push_back(Surface::hirzebruch(m, c, d));
  for (int m = 1; m <= 4; ++m)
    for (int d = 1; d <= 5; ++d) out.push_back(Surface::wps(m, d));
  return out;
}

// Every (a', b') with a' <= a, b' >= b and I a' + I b' = target, by blind search.
std::set<std::pair<TangencySeq, TangencySeq>> brute_splits(const TangencySeq& a, const TangencySeq& b, int target) {
  std::set<std::pair<TangencySeq, TangencySeq>> out;
  const int len = std::max({a.max_order(), b.max_order(), target, 1});
  std::vector<int> ap(static_cast<std::size_t>(len), 0), bp(static_cast<std::size_t>(len), 0);
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (used > target) return;
    if (i > len) {
      if (used == target) out.insert({TangencySeq(ap), TangencySeq(bp)});
      return;
    }
    for (int x = 0; x <= a.at(i); ++x) {
      for (int y = b.at(i); used + i * (x + y) <= target; ++y) {
        ap[static_cast<std::size_t>(i - 1)] = x;
        bp[static_cast<std::size_t>(i - 1)] = y;
        rec(i + 1, used + i * (x + y));
      }
    }
    ap[static_cast<std::size_t>(i - 1)] = 0;
    bp[static_cast<std::size_t>(i - 1)] = 0;
  };
  rec(1, 0);
  return out;
}

}  // namespace

TEST_CASE("invariants agree with a lattice-point scan") {
  for (const Surface& s : sample_surfaces()) {
    CAPTURE(s.describe());
    const oracle::LatticeCount lc = oracle::scan_polygon(polygon(s));
    const SurfaceInvariants inv = invariants(s);
    CHECK(inv.dimL == lc.total - 1);
    // A segment stands for disjoint parallel lines, of arithmetic genus 1 - #lines.
    CHECK(inv.gL == (lc.twice_area == 0 ? 2 - lc.total : lc.interior));
    CHECK(inv.HL == lc.bottom - 1);
    if (auto lower = step_down(s)) CHECK(inv.HLmH == invariants(*lower).HL);
  }
}

TEST_CASE("family constraints") {
  CHECK_THROWS_AS(Surface::wps(0, 2).validate(), std::invalid_argument);
  CHECK_THROWS_AS(Surface::hirzebruch(-2, 1, 1).validate(), std::invalid_argument);
  CHECK_NOTHROW(Surface::hirzebruch(-1, 2, 2).validate());
  CHECK_FALSE(step_down(Surface::p2(1)).has_value());
  CHECK_FALSE(step_down(Surface::hirzebruch(1, 2, 0)).has_value());
  CHECK(step_down(Surface::hirzebruch(1, 2, 1))->d == 0);
}

TEST_CASE("tangency sequences") {
  TangencySeq a{1, 0, 2, 0, 0};
  CHECK(a.max_order() == 3);
  CHECK(a.total() == 3);
  CHECK(a.weighted() == 7);
  CHECK(a.plus_unit(2) == TangencySeq{1, 1, 2});
  CHECK(a.minus_unit(3) == TangencySeq{1, 0, 1});
  CHECK(TangencySeq{1}.leq(a));
  CHECK_FALSE(a.leq(TangencySeq{1}));
  CHECK(TangencySeq{}.weighted() == 0);
  CHECK_THROWS(TangencySeq({-1}));
}

TEST_CASE("splits agree with blind search") {
  const std::vector<TangencySeq> seqs{TangencySeq{}, TangencySeq{1}, TangencySeq{2}, TangencySeq{0, 1},
                                      TangencySeq{1, 1}, TangencySeq{3}, TangencySeq{0, 0, 1}, TangencySeq{2, 1}};
  for (const auto& a : seqs) {
    for (const auto& b : seqs) {
      for (int target = 0; target <= 6; ++target) {
        const auto got = enumerate_splits(a, b, target);
        const std::set<std::pair<TangencySeq, TangencySeq>> as_set(got.begin(), got.end());
        CHECK(as_set.size() == got.size());
        CHECK(as_set == brute_splits(a, b, target));
      }
    }
  }
}

TEST_CASE("sequences with given weight are partitions") {
  const std::vector<std::size_t> partitions{1, 1, 2, 3, 5, 7, 11, 15};
  for (int n = 0; n < 8; ++n) {
    const auto seqs = sequences_with_weight(n);
    CHECK(seqs.size() == partitions[static_cast<std::size_t>(n)]);
    for (const auto& s : seqs) CHECK(s.weighted() == n);
  }
}

TEST_CASE("point-condition count") {
  const Surface s = Surface::p2(4);
  CHECK(gamma(s, TangencySeq{4}, 0) == invariants(s).dimL - 4 + 4);
  CHECK(gamma(s, TangencySeq{4}, 3) == 11);
  CHECK(seq_binomial(TangencySeq{3, 2}, TangencySeq{1, 1}) == 6);
}
