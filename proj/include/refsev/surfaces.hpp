#pragma once

// Toric surfaces with a line bundle: the projective plane with O(d), the
// Hirzebruch surface with cF + dH, and P(1,1,m) with dH. Each is described by
// its lattice polygon; H is the bottom edge.

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace refsev {

enum class SurfaceKind { P2, Hirzebruch, WPS };

struct Surface {
  SurfaceKind kind = SurfaceKind::P2;
  int m = 1;
  int c = 0;
  int d = 1;

  static Surface p2(int d);
  static Surface hirzebruch(int m, int c, int d);
  static Surface wps(int m, int d);

  /// Throws std::invalid_argument when the parameters violate the family's constraints.
  void validate() const;
  std::string describe() const;

  auto operator<=>(const Surface&) const = default;
};

struct SurfaceInvariants {
  long dimL = 0;  // lattice points minus one
  long gL = 0;    // arithmetic genus
  long HL = 0;    // bottom edge length
  long HLmH = 0;  // bottom edge length one level down
};

SurfaceInvariants invariants(const Surface& s);

/// Removes the bottom strip; empty at the base level.
std::optional<Surface> step_down(const Surface& s);

/// Vertices of the defining polygon (only when m >= 0).
std::vector<std::pair<long, long>> polygon(const Surface& s);

/// A sequence of non-negative integers; entry i-1 holds the number of
/// order-i tangencies. Trailing zeros are always trimmed.
class TangencySeq {
 public:
  TangencySeq() = default;
  TangencySeq(std::initializer_list<int> entries);
  explicit TangencySeq(std::vector<int> entries);

  /// Entry for tangency order i >= 1; zero beyond the stored length.
  int at(int i) const;
  void set(int i, int value);
  /// Largest order with a nonzero entry; 0 for the empty sequence.
  int max_order() const { return static_cast<int>(v_.size()); }
  long total() const;     // |a|
  long weighted() const;  // I a
  bool empty() const { return v_.empty(); }
  const std::vector<int>& entries() const { return v_; }

  TangencySeq plus_unit(int k) const;
  TangencySeq minus_unit(int k) const;
  bool leq(const TangencySeq& o) const;

  std::string to_string() const;

  auto operator<=>(const TangencySeq&) const = default;

 private:
  void trim();
  std::vector<int> v_;
};

/// dim|L| - HL + |beta| - delta: the number of point conditions left over.
long gamma(const Surface& s, const TangencySeq& beta, long delta);

/// All (alpha', beta') with alpha' <= alpha, beta' >= beta and
/// I alpha' + I beta' = target.
std::vector<std::pair<TangencySeq, TangencySeq>> enumerate_splits(const TangencySeq& alpha,
                                                                  const TangencySeq& beta, int target);

/// prod_i C(a_i, b_i).
long long seq_binomial(const TangencySeq& a, const TangencySeq& b);

/// Every sequence with I = n (all orders bounded by n).
std::vector<TangencySeq> sequences_with_weight(int n);

}  // namespace refsev
