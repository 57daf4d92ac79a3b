#pragma once

// Signed counting over marked partitions.
//
// A mark is a chosen occurrence of a forbidden pattern. Weighting a
// partition with marks S by (-1)^|S| q^sum and summing over every choice of
// S leaves exactly the partitions without occurrences. The sum is organized
// by peeling the front of a marked partition: either an unmarked first part,
// or a maximal cluster (a run of parts covered by marks that pairwise chain
// through shared parts). Clusters are in turn peeled one mark at a time.

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "rpart/core.hpp"
#include "rpart/series.hpp"

namespace rpart {

/// Clusters whose first mark is `v`, with first part `k`, last part `l` and
/// `width` parts.
struct ClusterKey {
  Pattern v;
  std::int64_t k = 0;
  std::int64_t l = 0;
  std::int64_t width = 0;
};

/// Marked partitions with first part `k` and `parts` parts.
struct MarkedKey {
  std::int64_t k = 0;
  std::int64_t parts = 0;
};

/// Weight enumerators for one pattern set and truncation degree, memoized
/// across calls. The recurrences assume no member of the set occurs inside
/// another (see reduce_factors); neg_sequence reduces its input first.
class ClusterSieve {
 public:
  ClusterSieve(PatternSet avoid, std::size_t cap);

  const PatternSet& pattern_set() const { return avoid_; }
  std::size_t cap() const { return cap_; }

  /// Zero when `key.v` is not in the set or the key is out of range.
  const TruncatedSeries& cluster_weight(const ClusterKey& key);
  TruncatedSeries cluster_total(std::int64_t k, std::int64_t l, std::int64_t width);
  const TruncatedSeries& marked_weight(const MarkedKey& key);

  /// Coefficients of 1 + sum_{k, m >= 1} marked_weight(k, m).
  std::vector<BigInt> sequence();

 private:
  const TruncatedSeries& cluster_weight(std::size_t v, std::int64_t k, std::int64_t l,
                                        std::int64_t width);
  const TruncatedSeries& marked_prefix(std::int64_t l, std::int64_t parts);

  static std::uint64_t pack(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
    return (a << 48) | (b << 32) | (c << 16) | d;
  }

  PatternSet avoid_;
  std::size_t cap_;
  TruncatedSeries zero_;
  TruncatedSeries one_;
  std::unordered_map<std::uint64_t, TruncatedSeries> clusters_;
  std::unordered_map<std::uint64_t, TruncatedSeries> marked_;
  std::unordered_map<std::uint64_t, TruncatedSeries> prefixes_;
};

/// Free-function forms over a fresh sieve for `avoid` truncated at `cap`.
TruncatedSeries cluster_weight(const PatternSet& avoid, const ClusterKey& key, std::size_t cap);
TruncatedSeries cluster_total(const PatternSet& avoid, std::int64_t k, std::int64_t l,
                              std::int64_t width, std::size_t cap);
TruncatedSeries marked_weight(const PatternSet& avoid, std::int64_t k, std::int64_t parts,
                              std::size_t cap);

/// p_A(0..max_n) through the cluster sieve, on reduce_factors(avoid).
std::vector<BigInt> neg_sequence(const PatternSet& avoid, std::size_t max_n);

}  // namespace rpart
