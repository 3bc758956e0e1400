#pragma once

#include <vector>

#include "permfix/bigint.hpp"
#include "permfix/real.hpp"

namespace permfix {

// Triangular table of Stirling numbers of the second kind S(r, a) for
// 0 <= a <= r <= r_max, built by S(r,a) = a S(r-1,a) + S(r-1,a-1).
class StirlingTable {
 public:
  static constexpr int kDefaultRows = 12;

  explicit StirlingTable(int r_max = kDefaultRows);

  int r_max() const { return static_cast<int>(rows_.size()) - 1; }
  // Zero for a > r. Throws std::out_of_range for r > r_max().
  const BigInt& operator()(int r, int a) const;
  const std::vector<BigInt>& row(int r) const;

 private:
  std::vector<std::vector<BigInt>> rows_;
};

// Shared, lazily extended table covering at least r_max rows. The returned
// reference stays valid for the lifetime of the program.
const StirlingTable& stirling_table(int r_max);

BigInt stirling(int r, int a);
BigInt bell(int r);

// rth moment of Poisson(mean): sum_a S(r,a) mean^a.
Rational poisson_moment(int r, const Rational& mean);
Real poisson_moment(int r, const Real& mean);

// Probability that r balls dropped uniformly into n cells occupy exactly a
// cells: n!/(n-a)! S(r,a) / n^r. Zero outside 0 <= a <= min(r, n).
Rational occupancy_probability(int a, int r, int n);

}  // namespace permfix
