#include "rpart/oracle.hpp"

#include <algorithm>

namespace rpart {

namespace {

void extend(std::vector<int>& prefix, int remaining, int largest,
            const std::function<void(const Partition&)>& visit) {
  if (remaining == 0) {
    visit(Partition(prefix));
    return;
  }
  for (int part = std::min(remaining, largest); part >= 1; --part) {
    prefix.push_back(part);
    extend(prefix, remaining - part, part, visit);
    prefix.pop_back();
  }
}

}  // namespace

void for_each_partition(std::size_t n, const std::function<void(const Partition&)>& visit) {
  std::vector<int> prefix;
  extend(prefix, static_cast<int>(n), static_cast<int>(n), visit);
}

std::vector<Partition> enumerate_partitions(std::size_t n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

std::vector<BigInt> brute_count(const PatternSet& avoid, std::size_t max_n, std::size_t ceiling) {
  if (max_n > ceiling) {
    throw CeilingExceeded("brute force limited to n <= " + std::to_string(ceiling) +
                          ", asked for " + std::to_string(max_n));
  }
  validate_user_set(avoid);
  std::vector<BigInt> out(max_n + 1);
  for (std::size_t n = 0; n <= max_n; ++n) {
    unsigned long count = 0;
    for_each_partition(n, [&](const Partition& p) { count += avoids_set(p, avoid) ? 1 : 0; });
    out[n] = count;
  }
  return out;
}

std::vector<BigInt> pentagonal_sequence(std::size_t max_n) {
  std::vector<BigInt> p(max_n + 1);
  p[0] = 1;
  for (std::size_t n = 1; n <= max_n; ++n) {
    BigInt total = 0;
    for (std::size_t j = 1;; ++j) {
      const std::size_t g1 = j * (3 * j - 1) / 2;
      if (g1 > n) break;
      const std::size_t g2 = j * (3 * j + 1) / 2;
      BigInt term = p[n - g1];
      if (g2 <= n) term += p[n - g2];
      if (j % 2 == 1) {
        total += term;
      } else {
        total -= term;
      }
    }
    p[n] = total;
  }
  return p;
}

CountTable unrestricted_table(std::size_t max_n) {
  CountTable table(1, max_n);
  table.at(0, 0, 0) = 1;
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (std::size_t m = 1; m <= n; ++m) {
      if (m == n) {
        table.at(0, n, m) = 1;
        continue;
      }
      // P(n - 1, m - 1) is zero for m = 1 once n > 1.
      BigInt value = m >= 2 ? BigInt(table.at(0, n - 1, m - 1)) : BigInt(0);
      if (m <= n - m) value += table.at(0, n - m, m);
      table.at(0, n, m) = value;
    }
  }
  return table;
}

}  // namespace rpart
