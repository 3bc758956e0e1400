#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "permfix/characters.hpp"
#include "permfix/distribution.hpp"
#include "permfix/partition.hpp"
#include "permfix/permutation.hpp"

namespace permfix {

// Random streams. Every Monte Carlo run is split into chunks of kChunkSize
// samples; chunk j draws from
//   std::mt19937_64(splitmix64(seed + (j + 1) * 0x9E3779B97F4A7C15))
// so results depend on the seed only, never on the thread count.
using Engine = std::mt19937_64;
inline constexpr std::uint64_t kChunkSize = 1ULL << 16;

std::uint64_t splitmix64(std::uint64_t x);
Engine stream_engine(std::uint64_t seed, std::uint64_t stream);

Permutation sample_uniform(int n, Engine& rng);
// g^-1 x^-1 g x with g uniform; x uniform too when not given.
Permutation sample_commutator(int n, const std::optional<Permutation>& x, Engine& rng);
// Product of k independent uniform i-cycles. Each cycle is an ordered
// i-tuple of distinct points (p_1 -> p_2 -> ... -> p_i -> p_1).
Permutation sample_icycle_walk(int n, int i, std::uint64_t k, Engine& rng);
// Deck order after r top-to-random shuffles of the sorted deck: the top
// card is removed and reinserted at one of n positions uniformly.
Permutation top_to_random(int n, int r, Engine& rng);

// Common shape of the RSK insertion and recording tableaux (row insertion).
Partition rsk_shape(const Permutation& g);

struct SimulationModel {
  enum class Kind { kUniform, kCommutator, kWalk };

  Kind kind = Kind::kUniform;
  int n = 1;
  std::optional<CycleType> x;  // commutator with fixed x
  int i = 2;                   // walk
  std::uint64_t k = 0;         // walk

  std::string describe() const;
};

EmpiricalDistribution simulate_fixed_points(const SimulationModel& model, std::uint64_t samples,
                                            std::uint64_t seed);
// Single-threaded reference; produces the identical histogram.
EmpiricalDistribution simulate_fixed_points_serial(const SimulationModel& model, std::uint64_t samples,
                                                   std::uint64_t seed);

struct ShapeCheckRow {
  Partition shape;
  Rational exact;  // m_{lambda,r} d_lambda / n^r
  std::uint64_t count = 0;
  double z = 0;  // (count - N p) / sqrt(N p (1 - p))
};

struct ShapeCheckReport {
  int n = 0;
  int r = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<ShapeCheckRow> rows;  // all partitions of n
  Rational exact_total;
  double chi_square = 0;
  int degrees_of_freedom = 0;
  double max_abs_z = 0;
};

// Throws std::out_of_range for n > 8 or r > 6.
ShapeCheckReport top_to_random_shape_check(int n, int r, std::uint64_t samples, std::uint64_t seed);

inline constexpr int kCommutatorEnumMaxN = 6;
inline constexpr int kFixedCommutatorEnumMaxN = 7;
// Exact fixed-point law of the commutator by enumerating every g (and every
// x when not given). Throws std::out_of_range beyond the size limits.
ExactDistribution enumerate_commutator_distribution(int n, const std::optional<CycleType>& x);
ExactDistribution enumerate_commutator_distribution_serial(int n, const std::optional<CycleType>& x);

}  // namespace permfix
