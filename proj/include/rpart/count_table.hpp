#pragma once

#include <cstddef>
#include <vector>

#include "rpart/series.hpp"

namespace rpart {

/// P_B(n, m) for every state B and 0 <= m <= n <= max_n: the number of
/// partitions of n with largest part exactly m that satisfy B's conditions.
/// Cells with m > n read as zero.
class CountTable {
 public:
  CountTable(std::size_t num_states, std::size_t max_n);

  std::size_t num_states() const { return num_states_; }
  std::size_t max_n() const { return max_n_; }

  const BigInt& at(std::size_t state, std::size_t n, std::size_t m) const;
  BigInt& at(std::size_t state, std::size_t n, std::size_t m);

  /// Sum over m of P_state(n, m).
  BigInt row_total(std::size_t state, std::size_t n) const;

  bool operator==(const CountTable&) const = default;

 private:
  std::size_t index(std::size_t state, std::size_t n, std::size_t m) const {
    return state * cells_per_state_ + n * (n + 1) / 2 + m;
  }

  std::size_t num_states_;
  std::size_t max_n_;
  std::size_t cells_per_state_;
  std::vector<BigInt> cells_;
  static const BigInt kZero;
};

}  // namespace rpart
