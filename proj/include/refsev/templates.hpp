#pragma once

// Templates (short-edge-free pieces of floor diagrams), their statistics and
// marking counts, and the template-collection formula for refined Severi
// degrees.

#include "refsev/laurent.hpp"
#include "refsev/surfaces.hpp"

#include <compare>
#include <functional>
#include <string>
#include <vector>

namespace refsev {

struct Edge {
  int i = 0;
  int j = 0;
  int w = 1;
  auto operator<=>(const Edge&) const = default;
};

struct Template {
  int length = 0;
  std::vector<Edge> edges;  // sorted

  /// Sorts the edges and sets length = max head; validates the template rules.
  static Template make(std::vector<Edge> edges);
  bool valid() const;
  std::string to_string() const;
  auto operator<=>(const Template&) const = default;
};

struct TemplateStats {
  int length = 0;
  int cogenus = 0;
  LaurentPoly mult;
  int eps0 = 0;
  int eps1 = 0;
  std::vector<int> kappa;  // kappa_1 .. kappa_l
  int kmin = 0;
};

/// All templates of the given cogenus, sorted by length then edges.
std::vector<Template> enumerate_templates(int delta);
TemplateStats template_stats(const Template& g);

/// prod_e [w(e)]_y^2.
LaurentPoly edge_mult(const std::vector<Edge>& edges);

/// Number of linear extensions, up to equivalence, of the template completed
/// by short edges at position k. Zero when the position is infeasible.
BigInt marking_count(const Template& g, long c, long m, long k);

/// Parameters (c, m) of the bottom-edge family used by floor diagrams:
/// P2 is (0, 1), P(1,1,m) is (0, m).
std::pair<long, long> floor_parameters(const Surface& s);

/// Throws DomainError when the collection formula is not known to be valid.
void require_template_region(const Surface& s, long delta);

/// One ordered template collection with positions.
struct PlacedCollection {
  std::vector<const Template*> templates;
  std::vector<long> positions;
};

/// Calls visit(collection) for every ordered collection of total cogenus delta
/// and every admissible lattice point of positions.
void for_each_placed_collection(const Surface& s, long delta,
                                const std::function<void(const PlacedCollection&)>& visit);

LaurentPoly template_sum(const Surface& s, long delta);

}  // namespace refsev
