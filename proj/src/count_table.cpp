#include "rpart/count_table.hpp"

namespace rpart {

const BigInt CountTable::kZero{0};

CountTable::CountTable(std::size_t num_states, std::size_t max_n)
    : num_states_(num_states),
      max_n_(max_n),
      cells_per_state_((max_n + 1) * (max_n + 2) / 2),
      cells_(num_states * cells_per_state_) {}

const BigInt& CountTable::at(std::size_t state, std::size_t n, std::size_t m) const {
  if (m > n) return kZero;
  return cells_.at(index(state, n, m));
}

BigInt& CountTable::at(std::size_t state, std::size_t n, std::size_t m) {
  if (m > n || n > max_n_ || state >= num_states_) throw Error("count table index out of range");
  return cells_[index(state, n, m)];
}

BigInt CountTable::row_total(std::size_t state, std::size_t n) const {
  BigInt total = 0;
  for (std::size_t m = 0; m <= n; ++m) total += at(state, n, m);
  return total;
}

}  // namespace rpart
