#include <doctest.h>

#include <map>

#include "oracles.hpp"
#include "permfix/characters.hpp"

using namespace permfix;

namespace {

std::vector<int> lengths_of(const CycleType& mu) { return mu.cycles().parts(); }

}  // namespace

TEST_CASE("cycle types") {
  const CycleType x = parse_cycle_type("3,1,1");
  CHECK(x.n() == 5);
  CHECK(x.n1() == 2);
  CHECK(x.n2() == 0);
  CHECK(x.class_size() == 20);
  CHECK(x.centralizer_size() == 6);
  CHECK(parse_cycle_type("2^3").n2() == 3);
  CHECK(CycleType::from_lengths({1, 3, 2}) == parse_cycle_type("3,2,1"));
  CHECK(CycleType::identity(4).n1() == 4);
}

TEST_CASE("Murnaghan-Nakayama matches Young's orthogonal form for n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for (const Partition& lambda : all_partitions(n)) {
      const oracle::OrthogonalForm form(lambda);
      CHECK(dim(lambda) == static_cast<unsigned long>(form.dim()));
      for (const Partition& mu : all_partitions(n)) {
        CAPTURE(lambda.to_string());
        CAPTURE(mu.to_string());
        const CycleType type(mu);
        CHECK(character(lambda, type) == static_cast<long>(form.character(oracle::permutation_of_type(lengths_of(type)))));
      }
    }
  }
}

TEST_CASE("character examples") {
  for (int n = 1; n <= 9; ++n)
    for (const Partition& mu : all_partitions(n)) CHECK(character(Partition::row(n), CycleType(mu)) == 1);
  for (int n = 2; n <= 9; ++n)
    for (const Partition& mu : all_partitions(n)) {
      const CycleType x(mu);
      CHECK(character(Partition({n - 1, 1}), x) == x.n1() - 1);
    }
  CHECK(character(Partition({2, 1}), parse_cycle_type("3")) == -1);
  CHECK_THROWS_AS(character(Partition({2, 1}), parse_cycle_type("2")), std::invalid_argument);
}

TEST_CASE("character table orthogonality") {
  for (int n = 1; n <= 8; ++n) {
    const CharacterTable table = character_table(n);
    const BigInt order = factorial(static_cast<unsigned long>(n));
    for (std::size_t a = 0; a < table.shapes.size(); ++a) {
      for (std::size_t b = 0; b < table.shapes.size(); ++b) {
        BigInt inner = 0;
        for (std::size_t c = 0; c < table.classes.size(); ++c)
          inner += table.classes[c].class_size() * table.values[a][c] * table.values[b][c];
        CHECK(inner == (a == b ? order : BigInt(0)));
      }
    }
  }
}

TEST_CASE("rim hooks remove the right number of cells") {
  for (int n = 1; n <= 9; ++n) {
    for (const Partition& lambda : all_partitions(n)) {
      for (int len = 1; len <= n; ++len) {
        for (const RimHook& h : rim_hooks(lambda, len)) {
          CHECK(h.remainder.size() == n - len);
          CHECK(lambda.contains(h.remainder));
          CHECK(h.height >= 0);
          CHECK(h.height < len);
        }
      }
    }
  }
}

TEST_CASE("near-row templates agree with the general character") {
  for (int n = 4; n <= 10; ++n) {
    for (const Partition& mu : all_partitions(n)) {
      const CycleType x(mu);
      for (NearRowShape s : {NearRowShape::kStandard, NearRowShape::kTwoRow, NearRowShape::kTwoColumn}) {
        CHECK(char_nearrow(s, x) == character(near_row_partition(s, n), x));
      }
    }
  }
  for (int n = 4; n <= 10; ++n) {
    const BigInt expect = binomial(n - 1, 2) - 1;
    CHECK(char_nearrow(NearRowShape::kTwoRow, CycleType::identity(n)) == expect);
  }
  CHECK_THROWS(char_nearrow(NearRowShape::kTwoRow, CycleType::identity(3)));
}

TEST_CASE("near-row values at fixed-point-free classes k^{n/k}, k >= 3") {
  for (int k = 3; k <= 5; ++k) {
    for (int n = 2 * k; n <= 24; n += k) {
      std::vector<int> cycles(static_cast<std::size_t>(n / k), k);
      const CycleType x{Partition(cycles)};
      CHECK(character(Partition({n - 1, 1}), x) == -1);
      CHECK(character(Partition({n - 2, 2}), x) == 0);
      CHECK(character(Partition({n - 2, 1, 1}), x) == 1);
    }
  }
}

TEST_CASE("character ratio on an i-cycle") {
  for (int n = 2; n <= 12; ++n) {
    for (int i = 2; i <= n; ++i) {
      CHECK(char_ratio_icycle(Partition::row(n), i) == 1);
      CHECK(char_ratio_icycle(Partition({n - 1, 1}), i) == ratio(n - i - 1, n - 1));
    }
    for (int j = 0; j < n; ++j) {
      const Partition hook = Partition::hook(n, j);
      const Rational expect = ratio(j % 2 == 0 ? 1 : -1, dim(hook));
      CHECK(char_ratio_icycle(hook, n) == expect);
    }
  }
  for (int n = 3; n <= 9; ++n) {
    for (const Partition& lambda : all_partitions(n)) {
      for (int i = 2; i <= n; ++i) {
        std::vector<int> lengths{i};
        lengths.resize(static_cast<std::size_t>(n - i + 1), 1);
        CHECK(char_ratio_icycle(lambda, i) ==
              ratio(character(lambda, CycleType::from_lengths(lengths)), dim(lambda)));
      }
    }
  }
  CHECK_THROWS_AS(char_ratio_icycle(Partition({3}), 1), std::out_of_range);
  CHECK_THROWS_AS(char_ratio_icycle(Partition({3}), 4), std::out_of_range);
}

TEST_CASE("ratio expansion report") {
  const std::vector<int> grid{50, 100, 200, 400};
  const RatioAsymptoticsReport zero = verify_ratio_asymptotics(2, 0, grid);
  for (const auto& row : zero.rows) CHECK(row.scaled_error == 0);
  const RatioAsymptoticsReport one = verify_ratio_asymptotics(2, 1, grid);
  CHECK(one.non_increasing);
  // Only (n-1,1): n^2 |(n-3)/(n-1) - (1 - 2/n)| = 2n/(n-1)
  for (const auto& row : one.rows) CHECK(row.scaled_error == ratio(2 * row.n, row.n - 1));
  const RatioAsymptoticsReport two = verify_ratio_asymptotics(3, 2, std::vector<int>{50, 100, 200});
  CHECK(two.max_scaled_error > 0);
  CHECK(two.max_scaled_error < 100);
}
