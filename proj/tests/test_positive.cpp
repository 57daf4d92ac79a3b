#include <doctest.h>

#include <chrono>
#include <random>

#include "rpart/oracle.hpp"
#include "rpart/positive.hpp"
#include "support/brute.hpp"

using namespace rpart;
using rpart::testing::big;

namespace {

const std::vector<PatternSet>& battery() {
  static const std::vector<PatternSet> sets{
      PatternSet{},
      PatternSet{Pattern{0}},
      PatternSet{Pattern{0}, Pattern{1}},
      PatternSet{Pattern{1}},
      PatternSet{Pattern{2}},
      PatternSet{Pattern{1}, Pattern{0, 0}},
      PatternSet{Pattern{2}, Pattern{0, 0}},
      PatternSet{Pattern{0, 0}},
      PatternSet{Pattern{0, 0, 0}},
      PatternSet{Pattern{0, 0, 0, 0}},
      PatternSet{Pattern{0, 1}},
      PatternSet{Pattern{1, 0}},
      PatternSet{Pattern{1, 1, 1}},
      PatternSet{Pattern{2, 1}, Pattern{1, 1}},
      PatternSet{Pattern{0}, Pattern{0, 0}},
      PatternSet{Pattern{3, 0, 2}, Pattern{1, 2}},
  };
  return sets;
}

}  // namespace

TEST_CASE("count_sequence examples") {
  CHECK(count_sequence(PatternSet{Pattern{0}}, 10) == big({1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10}));
  CHECK(count_sequence(PatternSet{Pattern{0}, Pattern{1}}, 9) == big({1, 1, 1, 1, 2, 2, 3, 3, 4, 5}));
  CHECK(count_sequence(PatternSet{}, 10) == big({1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42}));
  CHECK(count_sequence(PatternSet{Pattern{1, 1, 1}}, 10)[10] == 41);
  CHECK(count_sequence(PatternSet{Pattern{0}}, 0) == big({1}));
}

TEST_CASE("unrestricted table by largest part") {
  const auto table = count_table(PatternSet{}, 4);
  CHECK(table.at(0, 4, 1) == 1);
  CHECK(table.at(0, 4, 2) == 2);
  CHECK(table.at(0, 4, 3) == 1);
  CHECK(table.at(0, 4, 4) == 1);
  CHECK(table.row_total(0, 4) == 5);
}

TEST_CASE("with no patterns the table is the classical one, entry for entry") {
  const std::size_t n = 60;
  CHECK(count_table(PatternSet{}, n) == unrestricted_table(n));
}

TEST_CASE("the [1,1,1] table splits off the m' = m - 1 term through P'") {
  const std::size_t max_n = 40;
  const auto scheme = build_scheme(PatternSet{Pattern{1, 1, 1}});
  const auto t = count_table(scheme, max_n);
  for (std::size_t n = 2; n <= max_n; ++n) {
    for (std::size_t m = 1; m < n; ++m) {
      const std::size_t rest = n - m;
      for (std::size_t b = 0; b < 3; ++b) {
        BigInt expected = 0;
        for (std::size_t next = 1; next <= std::min(m, rest); ++next)
          if (next + 1 != m) expected += t.at(0, rest, next);
        if (m >= 2 && m - 1 <= rest && b < 2) expected += t.at(b + 1, rest, m - 1);
        CHECK(t.at(b, n, m) == expected);
      }
    }
  }
}

TEST_CASE("table invariants") {
  for (const auto& avoid : battery()) {
    const auto t = count_table(avoid, 25);
    for (std::size_t b = 0; b < t.num_states(); ++b) {
      for (std::size_t m = 1; m <= 25; ++m) CHECK(t.at(b, m, m) == 1);
      for (std::size_t n = 1; n <= 25; ++n) {
        CHECK(t.at(b, n, 0) == 0);
        CHECK(t.at(b, n, n + 1) == 0);
        for (std::size_t m = 1; m <= n; ++m) CHECK(sgn(t.at(b, n, m)) >= 0);
      }
    }
  }
}

TEST_CASE("positive engine matches brute force up to n = 35") {
  for (const auto& avoid : battery()) {
    CAPTURE(avoid.to_string());
    CHECK(count_sequence(avoid, 35) == brute_count(avoid, 35));
  }
}

TEST_CASE("adding patterns never increases counts") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Pattern> small;
    for (std::size_t i = 0, k = 1 + rng() % 2; i < k; ++i) {
      std::vector<int> d(1 + rng() % 3);
      for (auto& x : d) x = static_cast<int>(rng() % 4);
      small.emplace_back(d);
    }
    std::vector<Pattern> large = small;
    std::vector<int> d(1 + rng() % 3);
    for (auto& x : d) x = static_cast<int>(rng() % 4);
    large.emplace_back(d);
    const auto a = count_sequence(PatternSet(small), 30);
    const auto b = count_sequence(PatternSet(large), 30);
    for (std::size_t n = 0; n <= 30; ++n) CHECK(b[n] <= a[n]);
  }
}

TEST_CASE("doubling N costs roughly four times as much" * doctest::skip(std::getenv("RPART_SKIP_TIMING") != nullptr)) {
  using clock = std::chrono::steady_clock;
  const PatternSet avoid{Pattern{1, 1, 1}};
  auto best_of = [&](std::size_t n) {
    double best = 1e9;
    for (int rep = 0; rep < 5; ++rep) {
      const auto start = clock::now();
      const auto seq = count_sequence(avoid, n);
      best = std::min(best, std::chrono::duration<double>(clock::now() - start).count());
      CHECK(seq.size() == n + 1);
    }
    return best;
  };
  const double small = best_of(500);
  const double large = best_of(1000);
  const double ratio = large / small;
  MESSAGE("N=500: " << small << "s, N=1000: " << large << "s, ratio " << ratio);
  CHECK(ratio >= 3.0);
  CHECK(ratio <= 6.0);
}
