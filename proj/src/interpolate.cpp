#include "refsev/interpolate.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace refsev {

DPoly::DPoly(std::vector<RatLaurent> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void DPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const RatLaurent& DPoly::coeff(int k) const {
  static const RatLaurent zero;
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return zero;
  return coeffs_[static_cast<std::size_t>(k)];
}

RatLaurent DPoly::evaluate(const Rational& d) const {
  RatLaurent acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * d + *it;
  return acc;
}

int DPoly::max_half_exp() const {
  int best = 0;
  bool any = false;
  for (const auto& c : coeffs_) {
    if (c.is_zero()) continue;
    best = any ? std::max(best, c.max_exp()) : c.max_exp();
    any = true;
  }
  return best;
}

DPoly interpolate(const std::vector<std::pair<long, RatLaurent>>& nodes, int degree_bound) {
  if (degree_bound < 0) throw std::invalid_argument("degree bound must be >= 0");
  const std::size_t n = static_cast<std::size_t>(degree_bound) + 1;
  if (nodes.size() < n) throw std::invalid_argument("not enough interpolation nodes");
  std::set<long> seen;
  for (const auto& nd : nodes) {
    if (!seen.insert(nd.first).second) throw std::invalid_argument("repeated interpolation abscissa");
  }

  // Newton divided differences on the first n nodes.
  std::vector<RatLaurent> dd(n);
  for (std::size_t i = 0; i < n; ++i) dd[i] = nodes[i].second;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      const Rational span = Rational(nodes[i].first - nodes[i - level].first);
      dd[i] = (dd[i] - dd[i - 1]) * (Rational(1) / span);
    }
  }

  // Expand the Newton form into monomials, innermost first.
  std::vector<RatLaurent> mono{dd[n - 1]};
  for (std::size_t step = n - 1; step-- > 0;) {
    const Rational x = Rational(nodes[step].first);
    std::vector<RatLaurent> next(mono.size() + 1);
    for (std::size_t k = 0; k < mono.size(); ++k) {
      next[k + 1] += mono[k];
      next[k] -= mono[k] * x;
    }
    next[0] += dd[step];
    mono = std::move(next);
  }
  DPoly p(std::move(mono));

  for (std::size_t i = n; i < nodes.size(); ++i) {
    if (p.evaluate(Rational(nodes[i].first)) != nodes[i].second)
      throw ConsistencyError("interpolation mismatch at extra node " + std::to_string(nodes[i].first));
  }
  return p;
}

DPoly interpolate(const std::vector<std::pair<long, LaurentPoly>>& nodes, int degree_bound) {
  std::vector<std::pair<long, RatLaurent>> rat;
  rat.reserve(nodes.size());
  for (const auto& [x, v] : nodes) rat.emplace_back(x, to_rational(v));
  return interpolate(rat, degree_bound);
}

RatLaurent evaluate(const MultiPoly& p, const std::vector<long>& point) {
  RatLaurent acc;
  for (const auto& [exps, c] : p) {
    if (exps.size() != point.size()) throw std::invalid_argument("point dimension mismatch");
    Rational m = 1;
    for (std::size_t v = 0; v < exps.size(); ++v) {
      for (int k = 0; k < exps[v]; ++k) m *= point[v];
    }
    acc += c * m;
  }
  return acc;
}

namespace {

MultiPoly grid_rec(const std::vector<std::vector<long>>& grid, std::size_t var, std::vector<long>& point,
                   const std::function<RatLaurent(const std::vector<long>&)>& value) {
  MultiPoly out;
  const auto& xs = grid[var];
  if (var + 1 == grid.size()) {
    std::vector<std::pair<long, RatLaurent>> nodes;
    for (long x : xs) {
      point[var] = x;
      nodes.emplace_back(x, value(point));
    }
    const DPoly p = interpolate(nodes, static_cast<int>(xs.size()) - 1);
    for (int k = 0; k <= p.degree(); ++k) {
      if (!p.coeff(k).is_zero()) out[{k}] = p.coeff(k);
    }
    return out;
  }
  // Interpolate the remaining variables at each sample of this one, then
  // interpolate every resulting coefficient along this variable.
  std::vector<MultiPoly> slices;
  std::set<std::vector<int>> monos;
  for (long x : xs) {
    point[var] = x;
    slices.push_back(grid_rec(grid, var + 1, point, value));
    for (const auto& kv : slices.back()) monos.insert(kv.first);
  }
  for (const auto& rest : monos) {
    std::vector<std::pair<long, RatLaurent>> nodes;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      auto it = slices[i].find(rest);
      nodes.emplace_back(xs[i], it == slices[i].end() ? RatLaurent() : it->second);
    }
    const DPoly p = interpolate(nodes, static_cast<int>(xs.size()) - 1);
    for (int k = 0; k <= p.degree(); ++k) {
      if (p.coeff(k).is_zero()) continue;
      std::vector<int> exps{k};
      exps.insert(exps.end(), rest.begin(), rest.end());
      out[exps] = p.coeff(k);
    }
  }
  return out;
}

}  // namespace

MultiPoly interpolate_grid(const std::vector<std::vector<long>>& grid,
                           const std::function<RatLaurent(const std::vector<long>&)>& value) {
  if (grid.empty()) throw std::invalid_argument("empty interpolation grid");
  std::vector<long> point(grid.size());
  return grid_rec(grid, 0, point, value);
}

std::string to_string(const DPoly& p, const std::string& var) {
  if (p.degree() < 0) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    if (p.coeff(k).is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    out << "(" << to_string(p.coeff(k)) << ")";
    if (k == 1) out << "*" << var;
    else if (k > 1) out << "*" << var << "^" << k;
  }
  return out.str();
}

}  // namespace refsev
