#include "rpart/positive.hpp"

#include <algorithm>

namespace rpart {

CountTable count_table(const PatternSet& avoid, std::size_t max_n) {
  return count_table(build_scheme(avoid), max_n);
}

CountTable count_table(const Scheme& scheme, std::size_t max_n) {
  const std::size_t states = scheme.num_states();
  CountTable table(states, max_n);
  // prefix(B, n, m) = sum_{m' <= m} P_B(n, m')
  CountTable prefix(states, max_n);
  for (std::size_t b = 0; b < states; ++b) {
    table.at(b, 0, 0) = 1;
    prefix.at(b, 0, 0) = 1;
  }

  for (std::size_t n = 1; n <= max_n; ++n) {
    for (std::size_t b = 0; b < states; ++b) {
      const auto edges = scheme.edges(static_cast<int>(b));
      BigInt running = 0;
      for (std::size_t m = 1; m <= n; ++m) {
        BigInt& cell = table.at(b, n, m);
        if (m == n) {
          cell = 1;
        } else {
          const std::size_t rest = n - m;
          // Every m' in [1, m] through state 0, then correct the special edges.
          cell = prefix.at(0, rest, std::min(m, rest));
          for (const auto& e : edges) {
            if (static_cast<std::size_t>(e.diff) >= m) break;
            const std::size_t next = m - static_cast<std::size_t>(e.diff);
            if (next > rest) continue;
            if (e.to != kDeadState) cell += table.at(static_cast<std::size_t>(e.to), rest, next);
            cell -= table.at(0, rest, next);
          }
        }
        running += cell;
        prefix.at(b, n, m) = running;
      }
    }
  }
  return table;
}

std::vector<BigInt> count_sequence(const PatternSet& avoid, std::size_t max_n) {
  std::vector<BigInt> out(max_n + 1);
  out[0] = 1;
  if (max_n == 0) return out;
  const CountTable table = count_table(avoid, max_n);
  for (std::size_t n = 1; n <= max_n; ++n) out[n] = table.row_total(0, n);
  return out;
}

}  // namespace rpart
