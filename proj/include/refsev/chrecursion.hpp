#pragma once

// Refined Caporaso-Harris recursion for relative refined Severi degrees.

#include "refsev/laurent.hpp"
#include "refsev/surfaces.hpp"

#include <cstddef>
#include <unordered_map>
#include <vector>

namespace refsev {

struct CHKey {
  Surface surface;
  TangencySeq alpha;
  TangencySeq beta;
  long delta = 0;

  /// Rejects keys with I alpha + I beta != HL.
  CHKey(Surface s, TangencySeq a, TangencySeq b, long dl);
};

/// Memoizing evaluator. One instance owns its table; it is not meant to be
/// shared between threads.
class CHRecursion {
 public:
  explicit CHRecursion(bool memoize = true) : memoize_(memoize) {}

  LaurentPoly relative(const CHKey& key);
  LaurentPoly severi(const Surface& s, long delta);

  std::size_t cache_size() const { return memo_.size(); }
  void clear() { memo_.clear(); }

  /// Flat encoding of a key, used by the persistent cache file.
  struct Record {
    std::vector<int> key;
    LaurentPoly value;
  };
  std::vector<Record> export_records() const;
  void import_records(const std::vector<Record>& records);

 private:
  struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept;
  };

  LaurentPoly eval(const Surface& s, const TangencySeq& alpha, const TangencySeq& beta, long delta);
  const LaurentPoly& quantum_power(int i, int e);

  bool memoize_;
  std::unordered_map<std::vector<int>, LaurentPoly, VecHash> memo_;
  std::vector<std::vector<LaurentPoly>> qpow_;
};

/// The per-thread table behind the free functions below.
CHRecursion& shared_ch_engine();

LaurentPoly relative_severi(const CHKey& key);
LaurentPoly severi(const Surface& s, long delta);
/// Value at y = -1.
BigInt welschinger(const Surface& s, long delta);
/// Value at y = 1.
BigInt classical(const Surface& s, long delta);

/// Key encoding shared with the cache file format.
std::vector<int> encode_key(const Surface& s, const TangencySeq& alpha, const TangencySeq& beta, long delta);

}  // namespace refsev
