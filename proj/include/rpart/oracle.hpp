#pragma once

// Reference counts that do not go through either engine: exhaustive
// enumeration, the classical two-argument table, and Euler's pentagonal
// recurrence.

#include <cstddef>
#include <functional>
#include <vector>

#include "rpart/core.hpp"
#include "rpart/count_table.hpp"

namespace rpart {

inline constexpr std::size_t kDefaultBruteCeiling = 40;

/// brute_count asked to enumerate beyond its ceiling.
class CeilingExceeded : public Error {
 public:
  using Error::Error;
};

/// Visits every partition of n once, in reverse-lexicographic order
/// ((4), (3,1), (2,2), ...). n = 0 visits the empty partition.
void for_each_partition(std::size_t n, const std::function<void(const Partition&)>& visit);

std::vector<Partition> enumerate_partitions(std::size_t n);

/// Number of partitions of each n <= max_n avoiding every pattern in `avoid`.
std::vector<BigInt> brute_count(const PatternSet& avoid, std::size_t max_n,
                                std::size_t ceiling = kDefaultBruteCeiling);

/// p(0..max_n) by Euler's pentagonal number recurrence.
std::vector<BigInt> pentagonal_sequence(std::size_t max_n);

/// Single-state table from P(n, m) = P(n - 1, m - 1) + P(n - m, m),
/// P(m, m) = 1, P(0, 0) = 1.
CountTable unrestricted_table(std::size_t max_n);

}  // namespace rpart
