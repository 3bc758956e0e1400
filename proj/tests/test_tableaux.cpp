#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "permfix/errors.hpp"
#include "permfix/tableaux.hpp"

using namespace permfix;

TEST_CASE("skew tableau examples") {
  for (int n = 1; n <= 8; ++n)
    for (int a = 0; a <= n; ++a) CHECK(skew_syt_count({Partition::row(n), Partition::row(n - a)}) == 1);
  CHECK(skew_syt_count({Partition({3, 1}), Partition({2})}) == 2);
  CHECK(skew_syt_count({Partition({1, 1}), Partition({2})}) == 0);
  CHECK(skew_syt_count({Partition({2, 2}), Partition()}) == 2);
}

TEST_CASE("large-first-row closed form examples") {
  for (int n = 3; n <= 9; ++n) {
    CHECK(skew_syt_large_first_row(Partition({n - 1, 1}), 1) == 1);
    CHECK(skew_syt_large_first_row(Partition::row(n), 2) == 1);
  }
  CHECK(skew_syt_large_first_row(Partition({6, 2}), 3) == 3);
  CHECK(skew_syt_count({Partition({6, 2}), Partition({5})}) == 3);
  CHECK_THROWS_AS(skew_syt_large_first_row(Partition({3, 3}), 4), GuardViolation);
}

TEST_CASE("every skew count matches brute force and the determinant") {
  for (int n = 1; n <= 7; ++n) {
    for (const Partition& outer : all_partitions(n)) {
      for (int m = 0; m <= n; ++m) {
        for (const Partition& inner : all_partitions(m)) {
          CAPTURE(outer.to_string());
          CAPTURE(inner.to_string());
          const BigInt count = skew_syt_count({outer, inner});
          CHECK(count == oracle::syt_bruteforce(outer, inner));
          if (outer.contains(inner)) CHECK(skew_syt_count_aitken({outer, inner}) == count);
        }
      }
    }
  }
}

TEST_CASE("closed form agrees with the general count wherever it applies") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 40);
    const Partition p = oracle::random_partition(n, rng);
    const int a = static_cast<int>(rng() % static_cast<unsigned>(n + 1));
    CAPTURE(p.to_string());
    CAPTURE(a);
    if (p.second() <= n - a) {
      CHECK(skew_syt_large_first_row(p, a) == skew_syt_from_row(p, a));
    } else {
      CHECK_THROWS_AS(skew_syt_large_first_row(p, a), GuardViolation);
    }
  }
  CHECK(skew_syt_from_row(Partition({3}), -1) == 0);
  CHECK(skew_syt_from_row(Partition({3}), 4) == 0);
}
