#include "refsev/engines.hpp"

#include "refsev/chrecursion.hpp"
#include "refsev/floordiagrams.hpp"
#include "refsev/gfseries.hpp"
#include "refsev/templates.hpp"

#include <stdexcept>

namespace refsev {

Engine parse_engine(const std::string& name) {
  if (name == "ch") return Engine::CH;
  if (name == "template") return Engine::Template;
  if (name == "floor") return Engine::Floor;
  if (name == "gf") return Engine::GF;
  throw std::invalid_argument("unknown engine '" + name + "' (expected ch|template|floor|gf)");
}

std::string engine_name(Engine e) {
  switch (e) {
    case Engine::CH: return "ch";
    case Engine::Template: return "template";
    case Engine::Floor: return "floor";
    case Engine::GF: return "gf";
  }
  return "?";
}

std::optional<std::string> gf_region_violation(const Surface& s, long delta) {
  if (delta > kEmbeddedOrder)
    return "generating functions only known for delta <= " + std::to_string(kEmbeddedOrder);
  switch (s.kind) {
    case SurfaceKind::P2:
      if (2L * s.d < delta + 2) return "needs d >= delta/2 + 1";
      return std::nullopt;
    case SurfaceKind::Hirzebruch: {
      // Normalise to m >= 0; the line bundle is the same.
      const long m = s.m < 0 ? -s.m : s.m;
      const long c = s.m < 0 ? s.c + static_cast<long>(s.d) * s.m : s.c;
      if (2L * s.d < delta) return "needs d >= delta/2";
      if (m == 0 && 2 * c < delta) return "needs c >= delta/2";
      if (m > 0 && c < delta) return "needs c >= delta when m != 0";
      return std::nullopt;
    }
    case SurfaceKind::WPS:
      if (delta > 2L * s.d - 2 || delta > 2L * s.m - 1) return "needs delta <= min(2d-2, 2m-1)";
      return std::nullopt;
  }
  return std::nullopt;
}

LaurentPoly severi_by(Engine e, const Surface& s, long delta) {
  switch (e) {
    case Engine::CH: return severi(s, delta);
    case Engine::Template: return template_sum(s, delta);
    case Engine::Floor: return comb_severi(s, delta);
    case Engine::GF: {
      if (delta == 0) return LaurentPoly(1L);
      if (auto why = gf_region_violation(s, delta)) throw DomainError(*why + " (" + s.describe() + ")");
      const int dl = static_cast<int>(delta);
      switch (s.kind) {
        case SurfaceKind::P2: return refined_invariant_gf(p2_data(s.d), dl)[static_cast<std::size_t>(dl)];
        case SurfaceKind::Hirzebruch:
          return refined_invariant_gf(hirzebruch_data(s.m, s.c, s.d), dl)[static_cast<std::size_t>(dl)];
        case SurfaceKind::WPS: return p11m_prediction(s.d, s.m, dl)[static_cast<std::size_t>(dl)];
      }
    }
  }
  throw std::invalid_argument("unknown engine");
}

DPoly node_polynomial_p2(int delta, Engine engine) {
  if (delta < 1) throw std::invalid_argument("node polynomials need delta >= 1");
  std::vector<std::pair<long, LaurentPoly>> nodes;
  for (int d = delta; d <= 3 * delta + 1; ++d) nodes.emplace_back(d, severi_by(engine, Surface::p2(d), delta));
  return interpolate(nodes, 2 * delta);
}

namespace {

std::vector<long> range(long lo, long hi) {
  std::vector<long> r;
  for (long x = lo; x <= hi; ++x) r.push_back(x);
  return r;
}

}  // namespace

MultiPoly node_polynomial_hirzebruch(int delta, Engine engine) {
  if (delta < 1) throw std::invalid_argument("node polynomials need delta >= 1");
  auto value = [&](const std::vector<long>& p) {
    return to_rational(severi_by(engine, Surface::hirzebruch(static_cast<int>(p[1]), static_cast<int>(p[0]),
                                                             static_cast<int>(p[2])),
                                 delta));
  };
  const std::vector<std::vector<long>> grid{range(2 * delta, 3 * delta), range(1, delta + 1),
                                            range(delta, 3 * delta)};
  MultiPoly p = interpolate_grid(grid, value);
  const std::vector<long> extra{3L * delta + 1, delta + 2L, 3L * delta + 1};
  if (evaluate(p, extra) != value(extra)) throw ConsistencyError("Hirzebruch node polynomial fails its check point");
  return p;
}

MultiPoly node_polynomial_wps(int delta, Engine engine) {
  if (delta < 1) throw std::invalid_argument("node polynomials need delta >= 1");
  auto value = [&](const std::vector<long>& p) {
    return to_rational(severi_by(engine, Surface::wps(static_cast<int>(p[0]), static_cast<int>(p[1])), delta));
  };
  const std::vector<std::vector<long>> grid{range(2 * delta, 3 * delta), range(delta, 3 * delta)};
  MultiPoly p = interpolate_grid(grid, value);
  const std::vector<long> extra{3L * delta + 1, 3L * delta + 1};
  if (evaluate(p, extra) != value(extra)) throw ConsistencyError("P(1,1,m) node polynomial fails its check point");
  return p;
}

}  // namespace refsev
