#include "oracles.hpp"

#include "refsev/chrecursion.hpp"
#include "refsev/engines.hpp"
#include "refsev/templates.hpp"

#include <doctest.h>

#include <functional>
#include <map>
#include <set>

using namespace refsev;

namespace {

LaurentPoly Y(int n, long c = 1) { return LaurentPoly::y_pow(n, BigInt(c)); }

// Linear extensions of the completed, subdivided template, divided by the
// orderings of indistinguishable midpoints.
BigInt brute_marking_count(const Template& g, long c, long m, long k) {
  const int l = g.length;
  std::vector<long> kappa(static_cast<std::size_t>(l), 0);
  for (const Edge& e : g.edges)
    for (int v = e.i + 1; v <= e.j; ++v) kappa[static_cast<std::size_t>(v - 1)] += e.w;
  long size = l + 1 + static_cast<long>(g.edges.size());
  for (int t = 1; t <= l; ++t) size += std::max(0L, c + (k + t - 1) * m - kappa[static_cast<std::size_t>(t - 1)]);
  if (size > 18) return -1;
  std::vector<std::pair<int, int>> less;
  for (int v = 0; v < l; ++v) less.emplace_back(v, v + 1);
  int n = l + 1;
  BigInt den = 1;
  for (int t = 1; t <= l; ++t) {
    const long shorts = c + (k + t - 1) * m - kappa[static_cast<std::size_t>(t - 1)];
    if (shorts < 0) return 0;
    for (long s = 0; s < shorts; ++s, ++n) {
      less.emplace_back(t - 1, n);
      less.emplace_back(n, t);
    }
    den *= factorial(shorts);
  }
  std::map<Edge, int> mult;
  for (const Edge& e : g.edges) {
    ++mult[e];
    less.emplace_back(e.i, n);
    less.emplace_back(n, e.j);
    ++n;
  }
  for (const auto& [e, count] : mult) den *= factorial(count);
  return oracle::linear_extensions(n, less) / den;
}

// Template search by a different route: all multisets of candidate edges by
// total cost, then the structural rules.
std::set<Template> brute_templates(int delta) {
  std::vector<Edge> cand;
  for (int span = 1; span <= delta + 1; ++span)
    for (int w = 1; span * w - 1 <= delta; ++w)
      for (int i = 0; i <= delta; ++i)
        if (!(span == 1 && w == 1)) cand.push_back({i, i + span, w});
  std::set<Template> out;
  std::vector<Edge> chosen;
  std::function<void(std::size_t, int)> rec = [&](std::size_t from, int left) {
    if (left == 0) {
      int l = 0;
      int lo = delta + 5;
      for (const Edge& e : chosen) {
        l = std::max(l, e.j);
        lo = std::min(lo, e.i);
      }
      if (lo != 0) return;
      for (int v = 1; v < l; ++v) {
        bool covered = false;
        for (const Edge& e : chosen) covered = covered || (e.i < v && v < e.j);
        if (!covered) return;
      }
      Template t;
      t.length = l;
      t.edges = chosen;
      std::sort(t.edges.begin(), t.edges.end());
      out.insert(t);
      return;
    }
    for (std::size_t n = from; n < cand.size(); ++n) {
      const int cost = (cand[n].j - cand[n].i) * cand[n].w - 1;
      if (cost > left) continue;
      chosen.push_back(cand[n]);
      rec(n, left - cost);
      chosen.pop_back();
    }
  };
  rec(0, delta);
  return out;
}

}  // namespace

TEST_CASE("template census for one and two nodes") {
  const auto one = enumerate_templates(1);
  REQUIRE(one.size() == 2);
  CHECK(one[0].to_string() == "[(0,1,2)]");
  CHECK(one[1].to_string() == "[(0,2,1)]");
  CHECK(enumerate_templates(2).size() == 7);
  CHECK(enumerate_templates(0).empty());
}

TEST_CASE("template enumeration matches a blind search") {
  for (int delta = 1; delta <= 4; ++delta) {
    const auto got = enumerate_templates(delta);
    const std::set<Template> as_set(got.begin(), got.end());
    CHECK(as_set.size() == got.size());
    CHECK(as_set == brute_templates(delta));
    for (const Template& t : got) {
      CHECK(t.valid());
      CHECK(template_stats(t).cogenus == delta);
    }
  }
}

TEST_CASE("statistics of the printed templates") {
  const TemplateStats a = template_stats(Template::make({{0, 1, 2}}));
  CHECK(a.length == 1);
  CHECK(a.cogenus == 1);
  CHECK(a.mult == Y(-1) + 2 + Y(1));
  CHECK(a.eps0 == 0);
  CHECK(a.eps1 == 0);
  CHECK(a.kappa == std::vector<int>{2});
  CHECK(a.kmin == 2);

  const TemplateStats b = template_stats(Template::make({{0, 1, 3}}));
  CHECK(b.cogenus == 2);
  CHECK(b.mult == Y(-2) + Y(-1, 2) + 3 + Y(1, 2) + Y(2));
  CHECK(b.kmin == 3);

  const TemplateStats c = template_stats(Template::make({{0, 1, 2}, {0, 1, 2}}));
  CHECK(c.mult == Y(-2) + Y(-1, 4) + 6 + Y(1, 4) + Y(2));
  CHECK(c.kappa == std::vector<int>{4});

  const TemplateStats d = template_stats(Template::make({{0, 2, 1}, {1, 2, 2}}));
  CHECK(d.eps0 == 1);
  CHECK(d.eps1 == 0);
  CHECK(d.kappa == std::vector<int>{1, 3});
  CHECK(d.kmin == 2);

  const TemplateStats e = template_stats(Template::make({{0, 2, 1}, {1, 3, 1}}));
  CHECK(e.length == 3);
  CHECK(e.kappa == std::vector<int>{1, 2, 1});
  CHECK(e.kmin == 1);
}

TEST_CASE("marking counts agree with linear-extension enumeration") {
  for (int delta = 1; delta <= 3; ++delta) {
    for (const Template& t : enumerate_templates(delta)) {
      for (auto [c, m] : std::vector<std::pair<long, long>>{{0, 1}, {0, 2}, {1, 1}, {2, 0}, {3, 1}}) {
        for (long k = -1; k <= 4; ++k) {
          CAPTURE(t.to_string());
          CAPTURE(k);
          const BigInt expected = brute_marking_count(t, c, m, k);
          if (expected >= 0) CHECK(marking_count(t, c, m, k) == expected);
        }
      }
    }
  }
  const Template arc2 = Template::make({{0, 1, 2}});
  const Template span2 = Template::make({{0, 2, 1}});
  for (long k = 2; k <= 6; ++k) CHECK(marking_count(arc2, 0, 1, k) == k - 1);
  for (long k = 1; k <= 6; ++k) CHECK(marking_count(span2, 0, 1, k) == 2 * k + 1);
  CHECK(marking_count(arc2, 0, 1, 1) == 0);
}

TEST_CASE("marking counts are polynomial in the position") {
  for (int delta = 1; delta <= 3; ++delta) {
    for (const Template& t : enumerate_templates(delta)) {
      const TemplateStats st = template_stats(t);
      const int deg = static_cast<int>(t.edges.size());
      const long k0 = st.kmin;
      // Finite differences of order deg+1 vanish on the feasible range.
      std::vector<BigInt> v;
      for (long k = k0; k <= k0 + deg + 4; ++k) v.push_back(marking_count(t, 0, 1, k));
      for (int r = 0; r <= deg; ++r) {
        for (std::size_t i = 0; i + 1 < v.size(); ++i) v[i] = v[i + 1] - v[i];
        v.pop_back();
      }
      for (const BigInt& x : v) CHECK(x == 0);
    }
  }
}

TEST_CASE("template sums match the recursion") {
  CHECK(template_sum(Surface::p2(3), 1) == Y(-1) + 10 + Y(1));
  CHECK(template_sum(Surface::p2(2), 1) == LaurentPoly(3L));
  CHECK(template_sum(Surface::hirzebruch(1, 2, 2), 0) == LaurentPoly(1L));
  for (int d = 1; d <= 7; ++d)
    for (long delta = 0; delta <= 4; ++delta) CHECK(template_sum(Surface::p2(d), delta) == severi(Surface::p2(d), delta));
  for (int m = 0; m <= 4; ++m)
    for (int c = 0; c <= 6; ++c)
      for (int d = 0; d <= 5; ++d)
        for (long delta = 0; delta <= 3; ++delta) {
          if (c + m < 2 * delta) continue;
          CAPTURE(m);
          CAPTURE(c);
          CAPTURE(d);
          CAPTURE(delta);
          CHECK(template_sum(Surface::hirzebruch(m, c, d), delta) == severi(Surface::hirzebruch(m, c, d), delta));
        }
  for (int m = 2; m <= 6; ++m)
    for (int d = 1; d <= 5; ++d)
      for (long delta = 0; 2 * delta <= m && delta <= 3; ++delta)
        CHECK(template_sum(Surface::wps(m, d), delta) == severi(Surface::wps(m, d), delta));
  CHECK_THROWS_AS(template_sum(Surface::hirzebruch(1, 2, 3), 2), DomainError);
}

TEST_CASE("node polynomials of the plane") {
  const DPoly n1 = node_polynomial_p2(1);
  const RatLaurent half_sym = RatLaurent::y_pow(-1, Rational(1, 2)) + RatLaurent(2L) + RatLaurent::y_pow(1, Rational(1, 2));
  CHECK(n1.coeff(2) == half_sym);
  CHECK(n1.coeff(1) == RatLaurent::y_pow(-1, Rational(-3, 2)) + RatLaurent(-3L) + RatLaurent::y_pow(1, Rational(-3, 2)));
  CHECK(n1.coeff(0) == RatLaurent::y_pow(-1) + RatLaurent(1L) + RatLaurent::y_pow(1));
  for (int delta = 1; delta <= 3; ++delta) {
    const DPoly p = node_polynomial_p2(delta);
    CHECK(p.degree() == 2 * delta);
    CHECK(p.max_half_exp() == 2 * delta);
    for (int d = delta; d <= 3 * delta + 3; ++d) CHECK(p.evaluate(d) == to_rational(severi(Surface::p2(d), delta)));
  }
}

TEST_CASE("node polynomials of Hirzebruch surfaces and P(1,1,m)") {
  const MultiPoly h = node_polynomial_hirzebruch(1);
  for (int m = 0; m <= 3; ++m)
    for (int c = 2; c <= 5; ++c)
      for (int d = 1; d <= 4; ++d)
        CHECK(evaluate(h, {c, m, d}) == to_rational(severi(Surface::hirzebruch(m, c, d), 1)));
  const MultiPoly w = node_polynomial_wps(1);
  for (int m = 2; m <= 5; ++m)
    for (int d = 1; d <= 5; ++d) CHECK(evaluate(w, {m, d}) == to_rational(severi(Surface::wps(m, d), 1)));
}
