#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "permfix/bigint.hpp"
#include "permfix/characters.hpp"
#include "permfix/distribution.hpp"
#include "permfix/partition.hpp"
#include "permfix/real.hpp"

namespace permfix {

// Moment vectors are indexed r = 0..r_max; entry 0 is always 1.
//
// Every lambda-sum below runs over lambda_1 >= n - r only: m_{lambda,r}
// vanishes elsewhere.

// Fixed points of g^-1 x^-1 g x with g, x uniform in S_n:
//   E[fix^r] = sum_lambda m_{lambda,r} / d_lambda.
std::vector<Rational> commutator_random_moments(int n, int r_max);
Rational moment_commutator_random(int n, int r);

// Fixed points of g^-1 x^-1 g x with g uniform and x of the given class:
//   E[fix^r] = sum_lambda m_{lambda,r} chi^lambda(x)^2 / d_lambda.
std::vector<Rational> commutator_fixed_moments(const CycleType& x, int r_max);
// Throws std::invalid_argument if |x| != n.
Rational moment_commutator_fixed(int n, const CycleType& x, int r);

// Closed forms in n_1(x), n_2(x) for r = 1 and r = 2 (n >= 4 for r = 2).
// Throws std::invalid_argument for any other r.
Rational moment_commutator_fixed_closed(int n, const CycleType& x, int r);

// Fixed points after k uniform i-cycles from the identity:
//   E[fix^r] = sum_lambda d_lambda (chi^lambda(i,1^{n-i}) / d_lambda)^k m_{lambda,r}.
// Exact rational evaluation; cost grows with k.
std::vector<Rational> walk_moments_exact(int n, int i, std::uint64_t k, int r_max);
Rational moment_icycle_walk_exact(int n, int i, std::uint64_t k, int r);

// Floating evaluation for large k: ratio^k = sign^k exp(k log|ratio|) at the
// requested precision. Terms are computed in parallel over lambda and
// reduced pairwise in partition order, so results are bit-identical for any
// thread count.
std::vector<Real> walk_moments(int n, int i, std::uint64_t k, int r_max,
                               unsigned precision_bits = kDefaultPrecisionBits);
// Single-threaded reference with a left-to-right sum.
std::vector<Real> walk_moments_serial(int n, int i, std::uint64_t k, int r_max,
                                      unsigned precision_bits = kDefaultPrecisionBits);
Real moment_icycle_walk(int n, int i, std::uint64_t k, int r,
                        unsigned precision_bits = kDefaultPrecisionBits);

// round((1/i) n ln n + c n), ties to even. Throws std::invalid_argument if
// the result is negative.
std::uint64_t cutoff_steps(int n, int i, double c);
// 1 + e^{-i c}
Real cutoff_poisson_mean(int i, double c, unsigned precision_bits = kDefaultPrecisionBits);

struct CutoffRow {
  int r = 0;
  Real moment;
  Real reference;
  Real difference;  // moment - reference
};

struct CutoffComparison {
  int n = 0;
  int i = 0;
  double c = 0;
  std::uint64_t k = 0;
  Real poisson_mean;
  std::vector<CutoffRow> rows;  // r = 1..r_max
};

CutoffComparison walk_cutoff_comparison(int n, int i, double c, int r_max,
                                        unsigned precision_bits = kDefaultPrecisionBits);

inline constexpr int kWalkExactMaxN = 8;
// Exact law of the fixed-point count after k i-cycles, from the Fourier
// inversion over all classes. Throws std::out_of_range for n > 8.
ExactDistribution walk_exact_distribution(int n, int i, std::uint64_t k);

struct CutoffTerm {
  int t = 0;
  std::uint64_t k = 0;
  Real term;   // d_lambda ratio^k at k = cutoff_steps(n, i, c)
  Real limit;  // e^{-i t c} d_{lambda-bar} / t!
};
CutoffTerm cutoff_term(const Partition& lambda, int i, double c,
                       unsigned precision_bits = kDefaultPrecisionBits);

enum class MomentModel { kCommutatorBothRandom, kCommutatorFixedX, kICycleWalk };
std::string to_string(MomentModel model);

using MomentValue = std::variant<Rational, Real>;

struct MomentEntry {
  int r = 0;
  MomentValue value;
  MomentValue reference;  // rth moment of the predicted Poisson limit
  std::string formula;
};

struct MomentReport {
  MomentModel model = MomentModel::kCommutatorBothRandom;
  int n = 0;
  std::optional<CycleType> x;
  int i = 0;
  std::uint64_t k = 0;
  std::optional<double> c;
  MomentValue poisson_mean;
  std::vector<MomentEntry> moments;  // r = 1..r_max
};

MomentReport commutator_random_report(int n, int r_max);
// Cross-checks the closed forms for r <= 2 (n >= 4); throws
// CrossCheckFailure on disagreement.
MomentReport commutator_fixed_report(const CycleType& x, int r_max);
// Uses the exact rational path when `exact` is set.
MomentReport walk_report(int n, int i, std::uint64_t k, int r_max, unsigned precision_bits,
                         bool exact, std::optional<double> c);

}  // namespace permfix
