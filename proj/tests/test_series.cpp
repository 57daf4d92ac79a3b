#include <doctest.h>

#include <random>

#include "rpart/oracle.hpp"
#include "rpart/series.hpp"
#include "support/brute.hpp"

using namespace rpart;
using rpart::testing::big;

namespace {

TruncatedSeries poly(std::size_t cap, std::initializer_list<long> coeffs) {
  TruncatedSeries s(cap);
  std::size_t i = 0;
  for (long c : coeffs) {
    if (i <= cap) s[i] = c;
    ++i;
  }
  return s;
}

TruncatedSeries random_series(std::mt19937& rng, std::size_t cap) {
  TruncatedSeries s(cap);
  for (std::size_t i = 0; i <= cap; ++i)
    if (rng() % 3) s[i] = static_cast<long>(rng() % 21) - 10;
  return s;
}

std::vector<BigInt> terms(const TruncatedSeries& s) { return {s.coeffs().begin(), s.coeffs().end()}; }

// Brute-force count of partitions of n whose parts all satisfy `keep`.
template <typename Keep>
std::vector<BigInt> brute_parts(std::size_t max_n, Keep keep) {
  std::vector<BigInt> out(max_n + 1);
  for (std::size_t n = 0; n <= max_n; ++n) {
    long count = 0;
    for_each_partition(n, [&](const Partition& p) {
      count += std::all_of(p.parts().begin(), p.parts().end(), keep) ? 1 : 0;
    });
    out[n] = count;
  }
  return out;
}

}  // namespace

TEST_CASE("add") {
  CHECK(poly(3, {1, 1}) + poly(3, {1, -1}) == poly(3, {2}));
  const auto s = poly(4, {3, 0, -2, 5});
  CHECK(TruncatedSeries(4) + s == s);
  CHECK(poly(2, {0, 0, 1}) + poly(2, {0, 0, 3}) == poly(2, {0, 0, 4}));
  CHECK_THROWS_AS(add(TruncatedSeries(2), TruncatedSeries(3)), CapMismatch);
}

TEST_CASE("mul") {
  CHECK(poly(2, {1, 1}) * poly(2, {1, 1}) == poly(2, {1, 2, 1}));
  CHECK(poly(1, {1, 1}) * poly(1, {1, 1}) == poly(1, {1, 2}));
  const auto s = poly(5, {2, -1, 0, 7});
  CHECK(TruncatedSeries::one(5) * s == s);
  CHECK_THROWS_AS(mul(TruncatedSeries(2), TruncatedSeries(3)), CapMismatch);
}

TEST_CASE("monomial_shift") {
  CHECK(monomial_shift(TruncatedSeries::one(5), 3, BigInt(-1)) == poly(5, {0, 0, 0, -1}));
  const auto s = poly(4, {1, 2, 3, 4, 5});
  CHECK(monomial_shift(s, 5, BigInt(1)).is_zero());
  CHECK(monomial_shift(poly(3, {1, 1}), 1, BigInt(1)) == poly(3, {0, 1, 1}));
}

TEST_CASE("to_string") {
  CHECK(poly(4, {1, 2, 0, -1}).to_string() == "1 + 2*q - q^3");
  CHECK(TruncatedSeries(3).to_string() == "0");
  CHECK(poly(3, {0, -1}).to_string() == "-q");
}

TEST_CASE("ring axioms at a fixed cap") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t cap = rng() % 9;
    const auto a = random_series(rng, cap);
    const auto b = random_series(rng, cap);
    const auto c = random_series(rng, cap);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("truncating a higher-cap product equals the product at the lower cap") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t cap = 3 + rng() % 6;
    const std::size_t high = cap + 1 + rng() % 5;
    const auto a = random_series(rng, high);
    const auto b = random_series(rng, high);
    auto truncate = [&](const TruncatedSeries& s) {
      TruncatedSeries out(cap);
      for (std::size_t i = 0; i <= cap; ++i) out[i] = s[i];
      return out;
    };
    CHECK(truncate(a * b) == truncate(a) * truncate(b));
  }
}

TEST_CASE("euler_product") {
  CHECK(euler_product(0) == TruncatedSeries::one(0));
  CHECK(terms(euler_product(5)) == big({1, 1, 2, 3, 5, 7}));
  CHECK(euler_product(10)[10] == 42);
  const auto p = euler_product(60);
  const auto brute = brute_parts(25, [](int) { return true; });
  for (std::size_t n = 0; n <= 25; ++n) CHECK(p[n] == brute[n]);
  for (std::size_t n = 2; n <= 60; ++n) {
    CHECK(sgn(p[n]) > 0);
    CHECK(p[n] >= p[n - 1]);
  }
}

TEST_CASE("distinct_product") {
  CHECK(distinct_product(0) == TruncatedSeries::one(0));
  CHECK(terms(distinct_product(6)) == big({1, 1, 1, 2, 2, 3, 4}));
  CHECK(distinct_product(10)[10] == 10);
  std::vector<std::uint32_t> odd{1};
  CHECK(distinct_product(40) == residue_product(2, odd, 40));
}

TEST_CASE("residue_product") {
  std::vector<std::uint32_t> rr{1, 4};
  CHECK(terms(residue_product(5, rr, 9)) == big({1, 1, 1, 1, 2, 2, 3, 3, 4, 5}));
  CHECK(terms(residue_product(5, rr, 25)) ==
        brute_parts(25, [](int v) { return v % 5 == 1 || v % 5 == 4; }));
  std::vector<std::uint32_t> all{0};
  CHECK(residue_product(1, all, 30) == euler_product(30));
  std::vector<std::uint32_t> odd{1};
  CHECK(terms(residue_product(2, odd, 10)) == terms(distinct_product(10)));
  CHECK(terms(residue_product(2, odd, 20)) == brute_parts(20, [](int v) { return v % 2 == 1; }));
  std::vector<std::uint32_t> bad{5};
  CHECK_THROWS_AS(residue_product(5, bad, 10), InvalidResidue);
  CHECK_THROWS_AS(residue_product(0, all, 10), InvalidResidue);
}

TEST_CASE("coefficients beyond 64 bits stay exact") {
  const auto p = euler_product(1000);
  // p(1000), the classical value.
  CHECK(p[1000] == BigInt("24061467864032622473692149727991"));
}
