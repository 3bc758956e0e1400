#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "permfix/bigint.hpp"
#include "permfix/partition.hpp"

namespace permfix {

// m_{lambda,r}: multiplicity of the lambda-irreducible in the rth tensor
// power of the n-dimensional defining representation of S_n, n = |lambda|.
// Zero whenever lambda_1 < n - r. m_{lambda,0} = [lambda = (n)].

// sum_{a=0}^r S(r,a) d_{lambda/(n-a)}
BigInt mult_skew(const Partition& lambda, int r);

// Coefficient of lambda in sum_a S(r,a) U^a D^a applied to (n), where D
// removes and U adds a corner cell.
BigInt mult_updown(const Partition& lambda, int r);

// d_{lambda-bar} sum_a S(r,a) C(a, |lambda-bar|). Throws GuardViolation
// unless 1 <= r <= n - lambda_2.
BigInt mult_ding(const Partition& lambda, int r);
bool ding_applies(const Partition& lambda, int r);

inline constexpr int kMultOracleMaxN = 7;
// (1/n!) sum_{g in S_n} fix(g)^r chi^lambda(g), summed over every element.
// Throws std::out_of_range for n > kMultOracleMaxN.
BigInt mult_oracle(const Partition& lambda, int r);

enum class MultAlgorithm { kSkew, kUpDown, kDing, kOracle };
std::string_view to_string(MultAlgorithm alg);
BigInt multiplicity(const Partition& lambda, int r, MultAlgorithm alg = MultAlgorithm::kSkew);

// Every lambda |- n with a nonzero multiplicity candidate (lambda_1 >= n - r)
// together with m_{lambda,r}, in partitions_with_large_first_row order.
std::vector<std::pair<Partition, BigInt>> multiplicity_support(int n, int r);

}  // namespace permfix
