#include "rpart/negative.hpp"

#include <algorithm>
#include <limits>

namespace rpart {

namespace {

constexpr std::int64_t kMaxKeyField = std::numeric_limits<std::uint16_t>::max();

}  // namespace

ClusterSieve::ClusterSieve(PatternSet avoid, std::size_t cap)
    : avoid_(std::move(avoid)), cap_(cap), zero_(cap), one_(TruncatedSeries::one(cap)) {
  validate_user_set(avoid_);
  if (cap_ >= static_cast<std::size_t>(kMaxKeyField) || avoid_.size() >= 0xffff) {
    throw Error("cluster sieve limited to degree and set size below 65535");
  }
}

const TruncatedSeries& ClusterSieve::cluster_weight(const ClusterKey& key) {
  const auto it = std::find(avoid_.begin(), avoid_.end(), key.v);
  if (it == avoid_.end()) return zero_;
  return cluster_weight(static_cast<std::size_t>(it - avoid_.begin()), key.k, key.l, key.width);
}

const TruncatedSeries& ClusterSieve::cluster_weight(std::size_t vi, std::int64_t k,
                                                    std::int64_t l, std::int64_t width) {
  const Pattern& v = avoid_.patterns()[vi];
  const auto mark_parts = static_cast<std::int64_t>(v.length()) + 1;
  const auto cap = static_cast<std::int64_t>(cap_);
  if (l < 1 || l > k || k < v.sum() + 1 || width < mark_parts) return zero_;
  // Every part is at least l, so the cluster weighs at least k + (width - 1) l.
  if (k > cap || k + (width - 1) * l > cap) return zero_;

  const auto id = pack(vi, static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(l),
                       static_cast<std::uint64_t>(width));
  if (auto found = clusters_.find(id); found != clusters_.end()) return found->second;

  TruncatedSeries result(cap_);
  const Partition first = instantiate(v, k);
  if (k == l + v.sum() && width == mark_parts && first.sum() <= cap)
    result[static_cast<std::size_t>(first.sum())] -= 1;

  // Peel the first mark. The second mark shares its first j parts with the
  // last j parts of the first one, which pins its starting part.
  for (std::size_t ui = 0; ui < avoid_.size(); ++ui) {
    const Pattern& u = avoid_.patterns()[ui];
    const std::size_t max_shared = std::min(first.size(), u.length() + 1) - kOverlapMargin;
    for (std::size_t j = 1; j <= max_shared; ++j) {
      const std::int64_t next_k = first[first.size() - j];
      if (next_k < u.sum() + 1) continue;
      const auto entries = overlap1(v, u, k, next_k);
      const auto match = std::find_if(entries.begin(), entries.end(), [&](const OverlapEntry& e) {
        return e.overlap_len == static_cast<int>(j);
      });
      if (match == entries.end() || match->exponent > cap) continue;
      const std::int64_t rest_width = width - mark_parts + static_cast<std::int64_t>(j);
      const TruncatedSeries& rest = cluster_weight(ui, next_k, l, rest_width);
      if (rest.is_zero()) continue;
      result.add_shifted(rest, static_cast<std::size_t>(match->exponent), BigInt(-1));
    }
  }
  return clusters_.emplace(id, std::move(result)).first->second;
}

TruncatedSeries ClusterSieve::cluster_total(std::int64_t k, std::int64_t l, std::int64_t width) {
  TruncatedSeries total(cap_);
  for (std::size_t vi = 0; vi < avoid_.size(); ++vi) total += cluster_weight(vi, k, l, width);
  return total;
}

const TruncatedSeries& ClusterSieve::marked_weight(const MarkedKey& key) {
  const std::int64_t k = key.k;
  const std::int64_t parts = key.parts;
  const auto cap = static_cast<std::int64_t>(cap_);
  if (parts == 0) return one_;
  if (k < 1 || parts < 0 || k > cap || k + (parts - 1) > cap) return zero_;

  const auto id = pack(0, static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(parts), 0);
  if (auto found = marked_.find(id); found != marked_.end()) return found->second;

  TruncatedSeries result(cap_);
  if (parts == 1) {
    result[static_cast<std::size_t>(k)] = 1;
  } else {
    // First part outside every mark.
    result.add_shifted(marked_prefix(k, parts - 1), static_cast<std::size_t>(k), BigInt(1));
    // First part opens a cluster of `width` parts ending in l.
    for (std::int64_t l = 1; l <= k; ++l) {
      for (std::int64_t width = 2; width <= parts; ++width) {
        const std::int64_t rest_parts = parts - width;
        if (k + (width - 1) * l + rest_parts > cap) break;
        const TruncatedSeries* rest = nullptr;
        for (std::size_t vi = 0; vi < avoid_.size(); ++vi) {
          const TruncatedSeries& cluster = cluster_weight(vi, k, l, width);
          if (cluster.is_zero()) continue;
          if (!rest) rest = &marked_prefix(l, rest_parts);
          result.add_product(cluster, *rest);
        }
      }
    }
  }
  return marked_.emplace(id, std::move(result)).first->second;
}

// Q(l, j) = sum_{r=1}^{l} marked_weight(r, j), with Q(l, 0) = 1.
const TruncatedSeries& ClusterSieve::marked_prefix(std::int64_t l, std::int64_t parts) {
  if (parts == 0) return one_;
  const auto cap = static_cast<std::int64_t>(cap_);
  l = std::min(l, cap);
  if (l < 1) return zero_;
  const auto id = pack(0, static_cast<std::uint64_t>(l), static_cast<std::uint64_t>(parts), 0);
  if (auto found = prefixes_.find(id); found != prefixes_.end()) return found->second;

  std::int64_t start = l;
  while (start > 1 && !prefixes_.contains(pack(0, static_cast<std::uint64_t>(start - 1),
                                               static_cast<std::uint64_t>(parts), 0))) {
    --start;
  }
  for (std::int64_t r = start; r <= l; ++r) {
    TruncatedSeries acc(cap_);
    if (r > 1) {
      acc = prefixes_.at(pack(0, static_cast<std::uint64_t>(r - 1),
                              static_cast<std::uint64_t>(parts), 0));
    }
    acc += marked_weight({r, parts});
    prefixes_.insert_or_assign(
        pack(0, static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(parts), 0),
        std::move(acc));
  }
  return prefixes_.at(id);
}

std::vector<BigInt> ClusterSieve::sequence() {
  TruncatedSeries total = one_;
  const auto cap = static_cast<std::int64_t>(cap_);
  for (std::int64_t k = 1; k <= cap; ++k)
    for (std::int64_t parts = 1; k + (parts - 1) <= cap; ++parts)
      total += marked_weight({k, parts});
  return {total.coeffs().begin(), total.coeffs().end()};
}

TruncatedSeries cluster_weight(const PatternSet& avoid, const ClusterKey& key, std::size_t cap) {
  ClusterSieve sieve(avoid, cap);
  return sieve.cluster_weight(key);
}

TruncatedSeries cluster_total(const PatternSet& avoid, std::int64_t k, std::int64_t l,
                              std::int64_t width, std::size_t cap) {
  ClusterSieve sieve(avoid, cap);
  return sieve.cluster_total(k, l, width);
}

TruncatedSeries marked_weight(const PatternSet& avoid, std::int64_t k, std::int64_t parts,
                              std::size_t cap) {
  ClusterSieve sieve(avoid, cap);
  return sieve.marked_weight({k, parts});
}

std::vector<BigInt> neg_sequence(const PatternSet& avoid, std::size_t max_n) {
  validate_user_set(avoid);
  ClusterSieve sieve(reduce_factors(avoid), max_n);
  return sieve.sequence();
}

}  // namespace rpart
