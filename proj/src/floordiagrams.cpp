#include "refsev/floordiagrams.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace refsev {

std::string FloorDiagram::to_string() const {
  std::ostringstream out;
  out << "d=" << d << "; edges=[";
  for (std::size_t n = 0; n < edges.size(); ++n) {
    if (n) out << ",";
    out << "(" << edges[n].i << "," << edges[n].j << "," << edges[n].w << ")";
  }
  out << "]; s=[";
  for (std::size_t n = 0; n < s.size(); ++n) {
    if (n) out << ",";
    out << s[n];
  }
  out << "]";
  if (fibres != 0) out << "; fibres=" << fibres;
  return out.str();
}

int divergence(const FloorDiagram& D, int j) {
  int div = 0;
  for (const auto& e : D.edges) {
    if (e.i == j) div += e.w;
    if (e.j == j) div -= e.w;
  }
  return div;
}

namespace {

int sources_at(const FloorDiagram& D, int j) {
  if (j < 1 || j > static_cast<int>(D.s.size())) return 0;
  return D.s[static_cast<std::size_t>(j - 1)];
}

// Edges of the completed diagram on vertices 0..d+1.
std::vector<Edge> completed_edges(const FloorDiagram& D, long m) {
  std::vector<Edge> all = D.edges;
  for (int j = 1; j <= D.d; ++j) {
    for (int n = 0; n < sources_at(D, j); ++n) all.push_back({0, j, 1});
    const long sinks = m + sources_at(D, j) - divergence(D, j);
    if (sinks < 0) throw std::invalid_argument("divergence bound violated at floor " + std::to_string(j));
    for (long n = 0; n < sinks; ++n) all.push_back({j, D.d + 1, 1});
  }
  for (int n = 0; n < D.fibres; ++n) all.push_back({0, D.d + 1, 1});
  std::sort(all.begin(), all.end());
  return all;
}

bool is_short(const Edge& e) { return e.j == e.i + 1 && e.w == 1; }

}  // namespace

bool is_valid(const FloorDiagram& D, long m) {
  for (const auto& e : D.edges) {
    if (e.i < 1 || e.j > D.d || e.j <= e.i || e.w < 1) return false;
  }
  for (int j = 1; j <= D.d; ++j) {
    if (divergence(D, j) > m + sources_at(D, j)) return false;
  }
  return true;
}

bool is_connected(const FloorDiagram& D) {
  if (D.d <= 1) return true;
  std::vector<int> parent(static_cast<std::size_t>(D.d + 1));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (const auto& e : D.edges) parent[static_cast<std::size_t>(find(e.i))] = find(e.j);
  const int root = find(1);
  for (int j = 2; j <= D.d; ++j) {
    if (find(j) != root) return false;
  }
  return true;
}

std::optional<FloorDiagram> reconstruct(const Surface& s, const std::vector<const Template*>& collection,
                                        const std::vector<long>& positions) {
  const auto [c, m] = floor_parameters(s);
  const int d = s.d;
  std::vector<Edge> all;
  std::vector<long> cross(static_cast<std::size_t>(d + 2), 0);  // cross[t]: weight over gap (t-1, t)
  for (std::size_t n = 0; n < collection.size(); ++n) {
    const long k = positions[n];
    if (k < 0 || k + collection[n]->length > d + 1) return std::nullopt;
    for (const auto& e : collection[n]->edges) {
      const Edge placed{static_cast<int>(k + e.i), static_cast<int>(k + e.j), e.w};
      if ((placed.i == 0 || placed.j == d + 1) && placed.w != 1) return std::nullopt;
      all.push_back(placed);
      for (int t = placed.i + 1; t <= placed.j; ++t) cross[static_cast<std::size_t>(t)] += placed.w;
    }
  }
  for (int t = 1; t <= d + 1; ++t) {
    const long n = c + static_cast<long>(t - 1) * m - cross[static_cast<std::size_t>(t)];
    if (n < 0) return std::nullopt;
    for (long x = 0; x < n; ++x) all.push_back({t - 1, t, 1});
  }
  FloorDiagram D;
  D.d = d;
  D.s.assign(static_cast<std::size_t>(d), 0);
  for (const auto& e : all) {
    if (e.i == 0 && e.j == d + 1) {
      ++D.fibres;
    } else if (e.i == 0) {
      ++D.s[static_cast<std::size_t>(e.j - 1)];
    } else if (e.j <= d) {
      D.edges.push_back(e);
    }
  }
  std::sort(D.edges.begin(), D.edges.end());
  return D;
}

Decomposition decompose(const FloorDiagram& D, long c, long m) {
  (void)c;
  std::vector<Edge> kept;
  for (const auto& e : completed_edges(D, m)) {
    if (!is_short(e)) kept.push_back(e);
  }
  Decomposition out;
  std::size_t n = 0;
  while (n < kept.size()) {
    const int start = kept[n].i;
    int end = kept[n].j;
    std::size_t e = n + 1;
    while (e < kept.size() && kept[e].i < end) {
      end = std::max(end, kept[e].j);
      ++e;
    }
    std::vector<Edge> local;
    for (std::size_t x = n; x < e; ++x) local.push_back({kept[x].i - start, kept[x].j - start, kept[x].w});
    out.collection.push_back(Template::make(std::move(local)));
    out.positions.push_back(start);
    n = e;
  }
  return out;
}

LaurentPoly diagram_mult(const FloorDiagram& D) { return edge_mult(D.edges); }

long diagram_cogenus(const FloorDiagram& D, long c, long m) {
  (void)c;
  long total = 0;
  for (const auto& e : completed_edges(D, m)) {
    if (!is_short(e)) total += static_cast<long>(e.j - e.i) * e.w - 1;
  }
  return total;
}

BigInt diagram_markings(const FloorDiagram& D, const Surface& s) {
  const auto [c, m] = floor_parameters(s);
  const Decomposition dec = decompose(D, c, m);
  BigInt nu = 1;
  for (std::size_t n = 0; n < dec.collection.size(); ++n) nu *= marking_count(dec.collection[n], c, m, dec.positions[n]);
  return nu;
}

BigInt count_interleavings(int slots, const std::vector<FloatGroup>& groups) {
  std::vector<FloatGroup> gs;
  for (const auto& g : groups) {
    if (g.size == 0) continue;
    if (g.lo < 0 || g.hi >= slots || g.lo > g.hi) return 0;
    gs.push_back(g);
  }
  std::map<std::pair<int, std::vector<int>>, BigInt> memo;
  std::function<BigInt(int, std::vector<int>&)> rec = [&](int t, std::vector<int>& rem) -> BigInt {
    if (t == slots) return 1;
    auto key = std::make_pair(t, rem);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::vector<std::size_t> active;
    for (std::size_t g = 0; g < gs.size(); ++g) {
      if (gs[g].lo <= t && t <= gs[g].hi && rem[g] > 0) active.push_back(g);
    }
    BigInt total = 0;
    std::vector<int> take(gs.size(), 0);
    std::function<void(std::size_t, int, BigInt)> choose = [&](std::size_t a, int load, BigInt den) {
      if (a == active.size()) {
        for (std::size_t g : active) rem[g] -= take[g];
        total += factorial(load) / den * rec(t + 1, rem);
        for (std::size_t g : active) rem[g] += take[g];
        return;
      }
      const std::size_t g = active[a];
      const int lo = gs[g].hi == t ? rem[g] : 0;
      for (int x = lo; x <= rem[g]; ++x) {
        take[g] = x;
        choose(a + 1, load + x, den * factorial(x));
      }
      take[g] = 0;
    };
    choose(0, 0, BigInt(1));
    memo.emplace(std::move(key), total);
    return total;
  };
  std::vector<int> rem;
  for (const auto& g : gs) rem.push_back(g.size);
  return rec(0, rem);
}

namespace {

std::vector<FloatGroup> edge_groups(const FloorDiagram& D) {
  std::vector<FloatGroup> groups;
  for (std::size_t n = 0; n < D.edges.size();) {
    std::size_t e = n;
    while (e < D.edges.size() && D.edges[e] == D.edges[n]) ++e;
    groups.push_back({D.edges[n].i, D.edges[n].j - 1, static_cast<int>(e - n)});
    n = e;
  }
  return groups;
}

}  // namespace

BigInt diagram_markings_direct(const FloorDiagram& D, const Surface& s) {
  const long m = floor_parameters(s).second;
  std::vector<FloatGroup> groups = edge_groups(D);
  for (int j = 1; j <= D.d; ++j) {
    groups.push_back({0, j - 1, sources_at(D, j)});
    const long sinks = m + sources_at(D, j) - divergence(D, j);
    if (sinks < 0) return 0;
    groups.push_back({j, D.d, static_cast<int>(sinks)});
  }
  groups.push_back({0, D.d, D.fibres});
  return count_interleavings(D.d + 1, groups);
}

std::vector<DiagramRecord> enumerate_diagrams(const Surface& s, long delta) {
  std::vector<DiagramRecord> out;
  for_each_placed_collection(s, delta, [&](const PlacedCollection& pc) {
    auto D = reconstruct(s, pc.templates, pc.positions);
    if (!D) return;
    DiagramRecord rec;
    rec.diagram = std::move(*D);
    for (const Template* t : pc.templates) rec.collection.push_back(*t);
    rec.positions = pc.positions;
    out.push_back(std::move(rec));
  });
  return out;
}

LaurentPoly comb_severi(const Surface& s, long delta) {
  LaurentPoly total;
  for (const auto& rec : enumerate_diagrams(s, delta)) {
    const BigInt nu = diagram_markings_direct(rec.diagram, s);
    if (nu != 0) total += diagram_mult(rec.diagram) * nu;
  }
  return total;
}

LaurentPoly comb_irreducible_severi(const Surface& s, long delta) {
  if (s.kind != SurfaceKind::P2) throw std::invalid_argument("irreducible floor-diagram counts are for P2 only");
  LaurentPoly total;
  for (const auto& rec : enumerate_diagrams(s, delta)) {
    if (!is_connected(rec.diagram)) continue;
    const BigInt nu = diagram_markings_direct(rec.diagram, s);
    if (nu != 0) total += diagram_mult(rec.diagram) * nu;
  }
  return total;
}

std::vector<FloorDiagram> enumerate_p2_diagrams(int d, long delta) {
  std::vector<FloorDiagram> out;
  const long target = static_cast<long>(d) * (d - 1) / 2 - delta;
  if (d < 1 || delta < 0 || target < 0) return out;
  std::vector<int> in(static_cast<std::size_t>(d + 2), 0);
  std::vector<Edge> cur;

  std::function<void(int)> floor_step;
  // Chooses the out-edges of floor j as a sorted multiset of (head, weight).
  std::function<void(int, int, int, int)> out_edges = [&](int j, int head, int weight, int budget) {
    // Option: stop adding edges at this floor.
    floor_step(j + 1);
    if (static_cast<long>(cur.size()) >= target) return;
    for (int h = head; h <= d; ++h) {
      for (int w = (h == head ? weight : 1); w <= budget; ++w) {
        cur.push_back({j, h, w});
        in[static_cast<std::size_t>(h)] += w;
        out_edges(j, h, w, budget - w);
        in[static_cast<std::size_t>(h)] -= w;
        cur.pop_back();
      }
    }
  };
  floor_step = [&](int j) {
    if (j > d) {
      if (static_cast<long>(cur.size()) == target) {
        FloorDiagram D;
        D.d = d;
        D.edges = cur;
        std::sort(D.edges.begin(), D.edges.end());
        D.s.assign(static_cast<std::size_t>(d), 0);
        out.push_back(std::move(D));
      }
      return;
    }
    // out-weight <= in-weight + 1 at floor j.
    out_edges(j, j + 1, 1, in[static_cast<std::size_t>(j)] + 1);
  };
  floor_step(1);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Partitions of n into parts <= cap, as multiplicity vectors indexed by part-1.
void part_vectors(int n, int cap, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, cap); p >= 1; --p) {
    ++cur[static_cast<std::size_t>(p - 1)];
    part_vectors(n - p, p, cur, out);
    --cur[static_cast<std::size_t>(p - 1)];
  }
}

}  // namespace

BigInt relative_markings(const FloorDiagram& D, const TangencySeq& alpha, const TangencySeq& beta) {
  const int d = D.d;
  if (alpha.weighted() + beta.weighted() != d) throw std::invalid_argument("relative markings need I alpha + I beta = d");
  const int top = std::max(1, std::max(alpha.max_order(), beta.max_order()));
  std::vector<int> need(static_cast<std::size_t>(top), 0);
  for (int i = 1; i <= top; ++i) need[static_cast<std::size_t>(i - 1)] = alpha.at(i) + beta.at(i);

  std::vector<int> cap(static_cast<std::size_t>(d + 1), 0);
  for (int j = 1; j <= d; ++j) {
    cap[static_cast<std::size_t>(j)] = 1 - divergence(D, j);
    if (cap[static_cast<std::size_t>(j)] < 0) return 0;
  }
  const std::vector<FloatGroup> base_groups = edge_groups(D);

  // sinks[j][i-1]: number of weight-i sinks at floor j.
  std::vector<std::vector<int>> sinks(static_cast<std::size_t>(d + 1), std::vector<int>(static_cast<std::size_t>(top), 0));
  BigInt total = 0;

  std::function<void()> split_types = [&]() {
    // a[j][i]: alpha-type sinks of weight i at floor j, summing to alpha_i over j.
    std::vector<std::vector<int>> a(static_cast<std::size_t>(d + 1), std::vector<int>(static_cast<std::size_t>(top), 0));
    std::function<void(int, int, int, BigInt)> choose = [&](int i, int j, int left, BigInt factor) {
      if (i > top) {
        std::vector<FloatGroup> groups = base_groups;
        for (int jj = 1; jj <= d; ++jj) {
          for (int ii = 1; ii <= top; ++ii) {
            const int free_sinks = sinks[static_cast<std::size_t>(jj)][static_cast<std::size_t>(ii - 1)] -
                                   a[static_cast<std::size_t>(jj)][static_cast<std::size_t>(ii - 1)];
            groups.push_back({jj, d, free_sinks});
          }
        }
        total += factor * count_interleavings(d + 1, groups);
        return;
      }
      if (j > d) {
        if (left == 0) choose(i + 1, 1, alpha.at(i + 1), factor);
        return;
      }
      const int avail = sinks[static_cast<std::size_t>(j)][static_cast<std::size_t>(i - 1)];
      for (int x = 0; x <= std::min(avail, left); ++x) {
        a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i - 1)] = x;
        choose(i, j + 1, left - x, factor / factorial(x));
      }
      a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i - 1)] = 0;
    };
    // Fixed divisor points are distinguishable: alpha_i! labelings, up to
    // reordering the alpha-type sinks of one weight at one floor.
    BigInt labels = 1;
    for (int i = 1; i <= top; ++i) labels *= factorial(alpha.at(i));
    choose(1, 1, alpha.at(1), labels);
  };

  std::function<void(int)> assign = [&](int j) {
    if (j > d) {
      for (int i = 0; i < top; ++i) {
        if (need[static_cast<std::size_t>(i)] != 0) return;
      }
      split_types();
      return;
    }
    std::vector<std::vector<int>> options;
    std::vector<int> cur(static_cast<std::size_t>(top), 0);
    part_vectors(cap[static_cast<std::size_t>(j)], top, cur, options);
    for (const auto& opt : options) {
      bool ok = true;
      for (int i = 0; i < top; ++i) ok = ok && opt[static_cast<std::size_t>(i)] <= need[static_cast<std::size_t>(i)];
      if (!ok) continue;
      for (int i = 0; i < top; ++i) need[static_cast<std::size_t>(i)] -= opt[static_cast<std::size_t>(i)];
      sinks[static_cast<std::size_t>(j)] = opt;
      assign(j + 1);
      for (int i = 0; i < top; ++i) need[static_cast<std::size_t>(i)] += opt[static_cast<std::size_t>(i)];
    }
    sinks[static_cast<std::size_t>(j)].assign(static_cast<std::size_t>(top), 0);
  };
  assign(1);
  return total;
}

LaurentPoly comb_relative_severi(int d, long delta, const TangencySeq& alpha, const TangencySeq& beta) {
  if (alpha.weighted() + beta.weighted() != d) throw std::invalid_argument("relative counts need I alpha + I beta = d");
  LaurentPoly free_weight(1L);
  for (int i = 1; i <= beta.max_order(); ++i) free_weight *= quantum(i).pow(static_cast<unsigned>(beta.at(i)));
  LaurentPoly total;
  for (const auto& D : enumerate_p2_diagrams(d, delta)) {
    const BigInt nu = relative_markings(D, alpha, beta);
    if (nu != 0) total += diagram_mult(D) * nu;
  }
  return total * free_weight;
}

std::string diagram_line(const FloorDiagram& D, const Surface& s) {
  const auto [c, m] = floor_parameters(s);
  std::ostringstream out;
  out << D.to_string() << "; cogenus=" << diagram_cogenus(D, c, m) << "; mult=" << refsev::to_string(diagram_mult(D))
      << "; nu=" << diagram_markings(D, s);
  return out.str();
}

}  // namespace refsev
