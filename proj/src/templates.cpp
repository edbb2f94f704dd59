#include "refsev/templates.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace refsev {

Template Template::make(std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  Template t;
  t.edges = std::move(edges);
  for (const auto& e : t.edges) t.length = std::max(t.length, e.j);
  if (!t.valid()) throw std::invalid_argument("not a template: " + t.to_string());
  return t;
}

bool Template::valid() const {
  if (edges.empty() || length < 1) return false;
  for (const auto& e : edges) {
    if (e.i < 0 || e.j <= e.i || e.j > length || e.w < 1) return false;
    if (e.j == e.i + 1 && e.w < 2) return false;
  }
  for (int v = 1; v < length; ++v) {
    const bool covered = std::any_of(edges.begin(), edges.end(), [v](const Edge& e) { return e.i < v && v < e.j; });
    if (!covered) return false;
  }
  return true;
}

std::string Template::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t n = 0; n < edges.size(); ++n) {
    if (n) out << ",";
    out << "(" << edges[n].i << "," << edges[n].j << "," << edges[n].w << ")";
  }
  out << "]";
  return out.str();
}

std::vector<Template> enumerate_templates(int delta) {
  std::vector<Template> out;
  if (delta < 1) return out;
  // Candidate edges, each costing (j-i)w - 1 >= 1.
  std::vector<Edge> cand;
  for (int i = 0; i <= delta; ++i) {
    for (int j = i + 1; j <= delta + 1; ++j) {
      for (int w = 1; (j - i) * w - 1 <= delta; ++w) {
        if (j == i + 1 && w == 1) continue;
        cand.push_back({i, j, w});
      }
    }
  }
  std::sort(cand.begin(), cand.end());
  std::vector<Edge> cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t from, int left) {
    if (left == 0) {
      Template t;
      t.edges = cur;
      for (const auto& e : cur) t.length = std::max(t.length, e.j);
      if (t.valid()) out.push_back(std::move(t));
      return;
    }
    for (std::size_t n = from; n < cand.size(); ++n) {
      const int cost = (cand[n].j - cand[n].i) * cand[n].w - 1;
      if (cost > left) continue;
      cur.push_back(cand[n]);
      rec(n, left - cost);
      cur.pop_back();
    }
  };
  rec(0, delta);
  std::sort(out.begin(), out.end(), [](const Template& a, const Template& b) {
    if (a.length != b.length) return a.length < b.length;
    return a.edges < b.edges;
  });
  return out;
}

LaurentPoly edge_mult(const std::vector<Edge>& edges) {
  LaurentPoly r(1L);
  for (const auto& e : edges) {
    const LaurentPoly q = quantum(e.w);
    r *= q * q;
  }
  return r;
}

TemplateStats template_stats(const Template& g) {
  TemplateStats st;
  st.length = g.length;
  st.mult = edge_mult(g.edges);
  st.eps0 = 1;
  st.eps1 = 1;
  st.kappa.assign(static_cast<std::size_t>(g.length), 0);
  for (const auto& e : g.edges) {
    st.cogenus += (e.j - e.i) * e.w - 1;
    if (e.i == 0 && e.w != 1) st.eps0 = 0;
    if (e.j == g.length && e.w != 1) st.eps1 = 0;
    for (int v = e.i + 1; v <= e.j; ++v) st.kappa[static_cast<std::size_t>(v - 1)] += e.w;
  }
  st.kmin = 0;
  for (int v = 1; v <= g.length; ++v) st.kmin = std::max(st.kmin, st.kappa[static_cast<std::size_t>(v - 1)] - v + 1);
  return st;
}

BigInt marking_count(const Template& g, long c, long m, long k) {
  const TemplateStats st = template_stats(g);
  const int gaps = g.length;
  // Elements forced into one gap: midpoints of the added short edges.
  std::vector<long> fixed(static_cast<std::size_t>(gaps), 0);
  for (int t = 1; t <= gaps; ++t) {
    const long n = c + (k + t - 1) * m - st.kappa[static_cast<std::size_t>(t - 1)];
    if (n < 0) return 0;
    fixed[static_cast<std::size_t>(t - 1)] = n;
  }
  // Movable groups: parallel template edges with equal endpoints and weight.
  struct Group {
    int lo, hi, size;
  };
  std::vector<Group> groups;
  for (std::size_t n = 0; n < g.edges.size();) {
    std::size_t e = n;
    while (e < g.edges.size() && g.edges[e] == g.edges[n]) ++e;
    groups.push_back({g.edges[n].i + 1, g.edges[n].j, static_cast<int>(e - n)});
    n = e;
  }
  // Sum over distributions of each group among its gaps of
  // prod_t n_t! / (prod of group pieces! * prod of short-edge groups!).
  std::vector<long> load = fixed;
  BigInt fixed_den = 1;
  for (long n : fixed) fixed_den *= factorial(n);
  BigInt total = 0;
  std::function<void(std::size_t, int, int, const BigInt&)> place = [&](std::size_t gi, int t, int left,
                                                                        const BigInt& den) {
    if (gi == groups.size()) {
      BigInt num = 1;
      for (long n : load) num *= factorial(n);
      total += num / (den * fixed_den);
      return;
    }
    const Group& gr = groups[gi];
    auto& slot = load[static_cast<std::size_t>(t - 1)];
    if (t == gr.hi) {
      slot += left;
      if (gi + 1 < groups.size()) {
        place(gi + 1, groups[gi + 1].lo, groups[gi + 1].size, den * factorial(left));
      } else {
        place(gi + 1, 0, 0, den * factorial(left));
      }
      slot -= left;
      return;
    }
    for (int x = 0; x <= left; ++x) {
      slot += x;
      place(gi, t + 1, left - x, den * factorial(x));
      slot -= x;
    }
  };
  place(0, groups.front().lo, groups.front().size, BigInt(1));
  return total;
}

std::pair<long, long> floor_parameters(const Surface& s) {
  switch (s.kind) {
    case SurfaceKind::P2: return {0, 1};
    case SurfaceKind::Hirzebruch: return {s.c, s.m};
    case SurfaceKind::WPS: return {0, s.m};
  }
  return {0, 1};
}

void require_template_region(const Surface& s, long delta) {
  s.validate();
  if (delta < 0) throw std::invalid_argument("delta must be >= 0");
  if (s.kind == SurfaceKind::P2 || delta == 0) return;
  const auto [c, m] = floor_parameters(s);
  if (m < 0) throw DomainError("floor diagrams need m >= 0");
  if (c + m < 2 * delta)
    throw DomainError("template formula needs c + m >= 2*delta (c=" + std::to_string(c) + ", m=" + std::to_string(m) +
                      ", delta=" + std::to_string(delta) + ")");
}

namespace {

const std::vector<Template>& templates_of(int delta) {
  static std::mutex mu;
  static std::map<int, std::vector<Template>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(delta);
  if (it == cache.end()) it = cache.emplace(delta, enumerate_templates(delta)).first;
  return it->second;
}

struct StatsCache {
  std::map<const Template*, TemplateStats> stats;
  const TemplateStats& of(const Template* t) {
    auto it = stats.find(t);
    if (it == stats.end()) it = stats.emplace(t, template_stats(*t)).first;
    return it->second;
  }
};

}  // namespace

void for_each_placed_collection(const Surface& s, long delta,
                                const std::function<void(const PlacedCollection&)>& visit) {
  require_template_region(s, delta);
  const bool p2 = s.kind == SurfaceKind::P2;
  const long d = s.d;
  StatsCache sc;
  PlacedCollection cur;

  // Choose templates left to right; positions chosen as templates are appended.
  std::function<void(long, long)> rec = [&](long left, long next_free) {
    if (left == 0) {
      if (!cur.templates.empty() || delta == 0) visit(cur);
      return;
    }
    for (long part = 1; part <= left; ++part) {
      for (const Template& t : templates_of(static_cast<int>(part))) {
        const TemplateStats& st = sc.of(&t);
        long lo = next_free;
        if (cur.templates.empty()) lo = p2 ? st.kmin : 1 - st.eps0;
        if (p2) lo = std::max(lo, static_cast<long>(st.kmin));
        // The remaining cogenus needs at least one more unit of length per unit.
        for (long k = lo; k + st.length <= d + 1; ++k) {
          cur.templates.push_back(&t);
          cur.positions.push_back(k);
          if (left == part) {
            if (k + st.length <= d + st.eps1) visit(cur);
          } else if (k + st.length <= d) {
            rec(left - part, k + st.length);
          }
          cur.templates.pop_back();
          cur.positions.pop_back();
        }
      }
    }
  };
  if (delta == 0) {
    visit(cur);
    return;
  }
  rec(delta, 0);
}

LaurentPoly template_sum(const Surface& s, long delta) {
  const auto [c, m] = floor_parameters(s);
  std::map<std::pair<const Template*, long>, BigInt> counts;
  std::map<std::vector<const Template*>, BigInt> weight_by_collection;
  for_each_placed_collection(s, delta, [&](const PlacedCollection& pc) {
    BigInt prod = 1;
    for (std::size_t i = 0; i < pc.templates.size() && prod != 0; ++i) {
      auto key = std::make_pair(pc.templates[i], pc.positions[i]);
      auto it = counts.find(key);
      if (it == counts.end()) it = counts.emplace(key, marking_count(*pc.templates[i], c, m, pc.positions[i])).first;
      prod *= it->second;
    }
    weight_by_collection[pc.templates] += prod;
  });
  LaurentPoly total;
  for (const auto& [coll, w] : weight_by_collection) {
    if (w == 0) continue;
    LaurentPoly mult(1L);
    for (const Template* t : coll) mult *= edge_mult(t->edges);
    total += mult * w;
  }
  return total;
}

}  // namespace refsev
