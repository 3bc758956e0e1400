#pragma once

#include "permfix/bigint.hpp"
#include "permfix/errors.hpp"
#include "permfix/partition.hpp"

namespace permfix {

struct SkewShape {
  Partition outer;
  Partition inner;

  bool valid() const { return outer.contains(inner); }
  int size() const { return outer.size() - inner.size(); }
};

// Number of standard fillings of outer/inner by memoized corner peeling.
// Zero when inner is not contained in outer.
BigInt skew_syt_count(const SkewShape& shape);

// Same count by the Aitken determinant
//   |outer/inner|! * det[ 1 / ((outer_i - i) - (inner_j - j))! ].
// Independent of skew_syt_count; used for cross-checks.
BigInt skew_syt_count_aitken(const SkewShape& shape);

// d_{lambda/(n-a)} for lambda |- n. Zero when a > n or (n-a) is not
// contained in lambda.
BigInt skew_syt_from_row(const Partition& lambda, int a);

// Closed form d_{lambda/(n-a)} = dim(lambda-bar) * C(a, |lambda-bar|), valid
// when lambda_2 <= n - a. Throws GuardViolation otherwise.
BigInt skew_syt_large_first_row(const Partition& lambda, int a);

}  // namespace permfix
