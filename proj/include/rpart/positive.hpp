#pragma once

// Direct counting over (n, largest part, scheme state).
//
// For a live state B and 1 <= m < n,
//
//   P_B(n, m) = sum_{m'=1}^{m} P_{child(B, m - m')}(n - m, m'),
//
// with P_B(m, m) = 1 and the dead state contributing nothing. Differences
// without a special edge lead back to state 0, so the sum is a prefix sum of
// state 0's row plus one correction per special edge, which keeps every cell
// O(1 + |special edges|) and the whole table quadratic in N.

#include <cstddef>
#include <vector>

#include "rpart/count_table.hpp"
#include "rpart/scheme.hpp"

namespace rpart {

/// Table indexed by the states of build_scheme(avoid). P_B(0, 0) = 1 stands
/// for the empty partition.
CountTable count_table(const PatternSet& avoid, std::size_t max_n);
CountTable count_table(const Scheme& scheme, std::size_t max_n);

/// p_A(0..max_n); p_A(0) = 1.
std::vector<BigInt> count_sequence(const PatternSet& avoid, std::size_t max_n);

}  // namespace rpart
