#pragma once

// Floor diagrams: reconstruction from placed template collections, refined
// multiplicity, cogenus, marking counts, relative markings and irreducible
// counts on the projective plane.

#include "refsev/laurent.hpp"
#include "refsev/surfaces.hpp"
#include "refsev/templates.hpp"

#include <compare>
#include <string>
#include <vector>

namespace refsev {

struct FloorDiagram {
  int d = 0;
  std::vector<Edge> edges;  // between floors 1..d, sorted
  std::vector<int> s;       // sources per floor (Hirzebruch only)
  /// Weight-1 elevators running from the source side straight to the sink
  /// side without meeting a floor (fibre components; Hirzebruch only).
  int fibres = 0;

  std::string to_string() const;
  auto operator<=>(const FloorDiagram&) const = default;
};

/// out-weight minus in-weight at floor j.
int divergence(const FloorDiagram& D, int j);
/// Checks the divergence bound div(j) <= m + s_j at every floor.
bool is_valid(const FloorDiagram& D, long m);

/// Connectivity of the graph on floors and finite edges.
bool is_connected(const FloorDiagram& D);

struct DiagramRecord {
  FloorDiagram diagram;
  std::vector<Template> collection;
  std::vector<long> positions;
};

/// All diagrams of cogenus delta, one per placed template collection with a
/// feasible short-edge completion.
std::vector<DiagramRecord> enumerate_diagrams(const Surface& s, long delta);

/// Builds a diagram from a placed collection; nullopt when some gap would
/// need a negative number of short edges.
std::optional<FloorDiagram> reconstruct(const Surface& s, const std::vector<const Template*>& collection,
                                        const std::vector<long>& positions);

/// Splits the completed diagram into its template collection.
struct Decomposition {
  std::vector<Template> collection;
  std::vector<long> positions;
};
Decomposition decompose(const FloorDiagram& D, long c, long m);

LaurentPoly diagram_mult(const FloorDiagram& D);
long diagram_cogenus(const FloorDiagram& D, long c, long m);
/// nu(D) as a product of template marking counts.
BigInt diagram_markings(const FloorDiagram& D, const Surface& s);
/// nu(D) by a direct count over the whole marked structure.
BigInt diagram_markings_direct(const FloorDiagram& D, const Surface& s);

LaurentPoly comb_severi(const Surface& s, long delta);
LaurentPoly comb_irreducible_severi(const Surface& s, long delta);

/// Elements of a marked diagram that float between floors: each group of
/// indistinguishable elements may sit in any slot lo..hi, where slot t lies
/// between floor t and floor t+1 (slot 0 before floor 1, slot d after floor d).
struct FloatGroup {
  int lo = 0;
  int hi = 0;
  int size = 0;
};
/// Sum over placements of prod_t (slot load)! / prod (group pieces)!: the
/// number of linear orders up to permuting indistinguishable elements.
BigInt count_interleavings(int slots, const std::vector<FloatGroup>& groups);

/// Projective-plane floor diagrams of the given degree with exactly
/// d(d-1)/2 - delta finite edges and div(j) <= 1, enumerated directly.
std::vector<FloorDiagram> enumerate_p2_diagrams(int d, long delta);

/// Relative marking count nu_{alpha,beta}(D) on the projective plane.
BigInt relative_markings(const FloorDiagram& D, const TangencySeq& alpha, const TangencySeq& beta);
LaurentPoly comb_relative_severi(int d, long delta, const TangencySeq& alpha, const TangencySeq& beta);

/// One line per diagram: d=<n>; edges=[(i,j,w),...]; s=[...]; cogenus=<k>; mult=<poly>; nu=<int>
std::string diagram_line(const FloorDiagram& D, const Surface& s);

}  // namespace refsev
