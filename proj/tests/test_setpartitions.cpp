#include <doctest.h>

#include "oracles.hpp"
#include "permfix/setpartitions.hpp"

using namespace permfix;

TEST_CASE("Stirling and Bell examples") {
  CHECK(stirling(2, 2) == 1);
  CHECK(stirling(4, 2) == 7);
  for (int r = 1; r <= 15; ++r) CHECK(stirling(r, 1) == 1);
  CHECK(stirling(3, 5) == 0);
  CHECK(stirling(0, 0) == 1);
  CHECK(stirling(5, 0) == 0);
  CHECK(bell(0) == 1);
  CHECK(bell(3) == 5);
  CHECK(bell(4) == 15);
  CHECK(bell(10) == 115975);
}

TEST_CASE("Stirling numbers count restricted growth strings") {
  for (int r = 0; r <= 10; ++r) {
    const auto counts = oracle::set_partitions_by_blocks(r);
    std::uint64_t total = 0;
    for (int a = 0; a <= r; ++a) {
      CHECK(stirling(r, a) == counts[static_cast<std::size_t>(a)]);
      total += counts[static_cast<std::size_t>(a)];
    }
    CHECK(bell(r) == total);
  }
}

TEST_CASE("table grows on demand and rows are consistent") {
  const StirlingTable& small = stirling_table(4);
  CHECK(small.r_max() >= 4);
  const StirlingTable& big = stirling_table(40);
  CHECK(big.r_max() >= 40);
  CHECK(big(40, 40) == 1);
  CHECK(big(40, 39) == 780);
  CHECK(big.row(5).size() == 6);
}

TEST_CASE("Poisson moments") {
  for (int r = 0; r <= 12; ++r) CHECK(poisson_moment(r, Rational(1)) == Rational(bell(r)));
  CHECK(poisson_moment(1, Rational(7, 3)) == Rational(7, 3));
  CHECK(poisson_moment(2, Rational(1, 2)) == Rational(3, 4));
  // 2^r sum_a S(r,a) / 2^a at r = 2
  CHECK(4 * poisson_moment(2, Rational(1, 2)) == 3);
  const Real mean(2.5, 128);
  CHECK(poisson_moment(3, mean).to_double() == doctest::Approx(2.5 + 3 * 6.25 + 15.625));
}

TEST_CASE("occupancy probabilities") {
  CHECK(occupancy_probability(1, 1, 9) == 1);
  CHECK(occupancy_probability(2, 2, 2) == Rational(1, 2));
  CHECK(occupancy_probability(1, 2, 2) == Rational(1, 2));
  CHECK(occupancy_probability(3, 2, 5) == 0);
  for (int n = 1; n <= 8; ++n) {
    for (int r = 0; r <= 8; ++r) {
      Rational total = 0;
      for (int a = 0; a <= r; ++a) total += occupancy_probability(a, r, n);
      CHECK(total == 1);
    }
  }
}

TEST_CASE("occupancy matches direct enumeration of ball drops") {
  for (int n = 1; n <= 4; ++n) {
    for (int r = 0; r <= 5; ++r) {
      std::vector<std::uint64_t> hits(static_cast<std::size_t>(r) + 2, 0);
      std::uint64_t outcomes = 1;
      for (int j = 0; j < r; ++j) outcomes *= static_cast<std::uint64_t>(n);
      for (std::uint64_t code = 0; code < outcomes; ++code) {
        std::vector<bool> used(static_cast<std::size_t>(n), false);
        std::uint64_t c = code;
        for (int j = 0; j < r; ++j) {
          used[c % static_cast<std::uint64_t>(n)] = true;
          c /= static_cast<std::uint64_t>(n);
        }
        ++hits[static_cast<std::size_t>(std::count(used.begin(), used.end(), true))];
      }
      for (int a = 0; a <= r; ++a) {
        CHECK(occupancy_probability(a, r, n) ==
              ratio(hits[static_cast<std::size_t>(a)], outcomes));
      }
    }
  }
}
