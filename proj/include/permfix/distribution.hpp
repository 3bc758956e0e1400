#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "permfix/bigint.hpp"

namespace permfix {

// Exact law of a fixed-point count: prob[j] = P(X = j), j = 0..n.
struct ExactDistribution {
  std::vector<Rational> prob;

  Rational total() const;
  Rational moment(int r) const;
  std::vector<double> as_doubles() const;
};

// Histogram of sampled fixed-point counts.
struct EmpiricalDistribution {
  std::string model;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  std::vector<std::uint64_t> histogram;  // histogram[j] = #samples with j fixed points

  double moment(int r) const;
  // Standard error of the sample mean of X^r.
  double moment_stderr(int r) const;
  std::vector<double> frequencies() const;
  // Merges another histogram over the same support.
  EmpiricalDistribution& operator+=(const EmpiricalDistribution& other);
};

// Total variation distance between a law on {0, 1, ...} and Poisson(mean);
// the Poisson mass beyond the support is included.
double tv_to_poisson(std::span<const double> prob, double mean);
double tv_to_poisson(const ExactDistribution& dist, double mean);
double tv_to_poisson(const EmpiricalDistribution& dist, double mean);

}  // namespace permfix
