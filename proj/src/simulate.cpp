#include "permfix/simulate.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "permfix/multiplicity.hpp"

namespace permfix {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

Engine stream_engine(std::uint64_t seed, std::uint64_t stream) {
  return Engine(splitmix64(seed + (stream + 1) * 0x9E3779B97F4A7C15ULL));
}

namespace {

int uniform_index(int lo, int hi, Engine& rng) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

void check_walk(int n, int i) {
  if (n < 1 || i < 2 || i > n) throw std::invalid_argument("walk needs 2 <= i <= n");
}

// Draws the fixed-point count of one sample, reusing scratch buffers.
class FixedPointSampler {
 public:
  explicit FixedPointSampler(const SimulationModel& model) : model_(model) {
    const auto n = static_cast<std::size_t>(model.n);
    a_.resize(n);
    b_.resize(n);
    std::iota(a_.begin(), a_.end(), 0);
    std::iota(b_.begin(), b_.end(), 0);
    if (model.kind == SimulationModel::Kind::kCommutator && model.x) {
      fixed_x_ = Permutation::from_cycle_type(*model.x).images();
    }
  }

  int draw(Engine& rng) {
    switch (model_.kind) {
      case SimulationModel::Kind::kUniform:
        // Shuffling any arrangement yields a uniform permutation.
        std::shuffle(a_.begin(), a_.end(), rng);
        return count_fixed_points(a_);
      case SimulationModel::Kind::kCommutator: {
        std::shuffle(a_.begin(), a_.end(), rng);
        const std::vector<int>& x = fixed_x_.empty() ? (std::shuffle(b_.begin(), b_.end(), rng), b_) : fixed_x_;
        // g^-1 x^-1 g x fixes j exactly when g(x(j)) = x(g(j)).
        int fixed = 0;
        for (int j = 0; j < model_.n; ++j) {
          const auto u = static_cast<std::size_t>(j);
          if (a_[static_cast<std::size_t>(x[u])] == x[static_cast<std::size_t>(a_[u])]) ++fixed;
        }
        return fixed;
      }
      case SimulationModel::Kind::kWalk: {
        std::iota(a_.begin(), a_.end(), 0);
        for (std::uint64_t step = 0; step < model_.k; ++step) right_multiply_icycle(a_, rng);
        return count_fixed_points(a_);
      }
    }
    return 0;
  }

  // g <- g * (p_1 p_2 ... p_i) for a uniform ordered tuple of distinct points.
  void right_multiply_icycle(std::vector<int>& g, Engine& rng) {
    const int n = model_.n;
    const int i = model_.i;
    for (int m = 0; m < i; ++m) {
      std::swap(b_[static_cast<std::size_t>(m)], b_[static_cast<std::size_t>(uniform_index(m, n - 1, rng))]);
    }
    const int head = g[static_cast<std::size_t>(b_[0])];
    for (int m = 0; m + 1 < i; ++m) {
      g[static_cast<std::size_t>(b_[static_cast<std::size_t>(m)])] = g[static_cast<std::size_t>(b_[static_cast<std::size_t>(m) + 1])];
    }
    g[static_cast<std::size_t>(b_[static_cast<std::size_t>(i) - 1])] = head;
  }

 private:
  const SimulationModel& model_;
  std::vector<int> a_;
  std::vector<int> b_;
  std::vector<int> fixed_x_;
};

void validate(const SimulationModel& model) {
  if (model.n < 1) throw std::invalid_argument("simulation needs n >= 1");
  if (model.kind == SimulationModel::Kind::kCommutator && model.x && model.x->n() != model.n) {
    throw std::invalid_argument("cycle type size does not match n");
  }
  if (model.kind == SimulationModel::Kind::kWalk) check_walk(model.n, model.i);
}

std::uint64_t chunk_count(std::uint64_t samples) { return (samples + kChunkSize - 1) / kChunkSize; }

std::uint64_t chunk_samples(std::uint64_t samples, std::uint64_t chunk) {
  return std::min(kChunkSize, samples - chunk * kChunkSize);
}

void run_chunk(const SimulationModel& model, std::uint64_t samples, std::uint64_t seed, std::uint64_t chunk,
               std::vector<std::uint64_t>& histogram) {
  Engine rng = stream_engine(seed, chunk);
  FixedPointSampler sampler(model);
  const std::uint64_t count = chunk_samples(samples, chunk);
  for (std::uint64_t s = 0; s < count; ++s) ++histogram[static_cast<std::size_t>(sampler.draw(rng))];
}

EmpiricalDistribution empty_distribution(const SimulationModel& model, std::uint64_t samples, std::uint64_t seed) {
  EmpiricalDistribution out;
  out.model = model.describe();
  out.seed = seed;
  out.samples = samples;
  out.histogram.assign(static_cast<std::size_t>(model.n) + 1, 0);
  return out;
}

std::vector<int> all_permutations_flat(int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> flat;
  do {
    flat.insert(flat.end(), perm.begin(), perm.end());
  } while (std::next_permutation(perm.begin(), perm.end()));
  return flat;
}

int commutator_fixed_points(const int* g, const int* x, int n) {
  int fixed = 0;
  for (int j = 0; j < n; ++j) {
    if (g[x[j]] == x[g[j]]) ++fixed;
  }
  return fixed;
}

void check_enumeration(int n, const std::optional<CycleType>& x) {
  if (n < 1) throw std::invalid_argument("enumeration needs n >= 1");
  if (x) {
    if (x->n() != n) throw std::invalid_argument("cycle type size does not match n");
    if (n > kFixedCommutatorEnumMaxN) throw std::out_of_range("fixed-x enumeration limited to n <= 7");
  } else if (n > kCommutatorEnumMaxN) {
    throw std::out_of_range("both-random enumeration limited to n <= 6");
  }
}

ExactDistribution to_exact(const std::vector<std::uint64_t>& counts, const BigInt& total) {
  ExactDistribution out;
  for (std::uint64_t c : counts) {
    Rational p(BigInt(static_cast<unsigned long>(c)), total);
    p.canonicalize();
    out.prob.push_back(p);
  }
  return out;
}

}  // namespace

Permutation sample_uniform(int n, Engine& rng) {
  if (n < 1) throw std::invalid_argument("n >= 1 required");
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(std::move(images));
}

Permutation sample_commutator(int n, const std::optional<Permutation>& x, Engine& rng) {
  if (x && x->size() != n) throw std::invalid_argument("x has the wrong size");
  const Permutation g = sample_uniform(n, rng);
  const Permutation xx = x ? *x : sample_uniform(n, rng);
  return g.inverse() * xx.inverse() * g * xx;
}

Permutation sample_icycle_walk(int n, int i, std::uint64_t k, Engine& rng) {
  check_walk(n, i);
  SimulationModel model{SimulationModel::Kind::kWalk, n, std::nullopt, i, k};
  FixedPointSampler sampler(model);
  std::vector<int> g(static_cast<std::size_t>(n));
  std::iota(g.begin(), g.end(), 0);
  for (std::uint64_t step = 0; step < k; ++step) sampler.right_multiply_icycle(g, rng);
  return Permutation(std::move(g));
}

Permutation top_to_random(int n, int r, Engine& rng) {
  if (n < 1 || r < 0) throw std::invalid_argument("top_to_random needs n >= 1, r >= 0");
  std::vector<int> deck(static_cast<std::size_t>(n));
  std::iota(deck.begin(), deck.end(), 0);
  for (int s = 0; s < r; ++s) {
    const int top = deck.front();
    deck.erase(deck.begin());
    deck.insert(deck.begin() + uniform_index(0, n - 1, rng), top);
  }
  return Permutation(std::move(deck));
}

Partition rsk_shape(const Permutation& g) {
  std::vector<std::vector<int>> rows;
  for (int value : g.images()) {
    int carry = value;
    bool placed = false;
    for (auto& row : rows) {
      auto it = std::upper_bound(row.begin(), row.end(), carry);
      if (it == row.end()) {
        row.push_back(carry);
        placed = true;
        break;
      }
      std::swap(carry, *it);
    }
    if (!placed) rows.push_back({carry});
  }
  std::vector<int> shape;
  for (const auto& row : rows) shape.push_back(static_cast<int>(row.size()));
  return Partition(std::move(shape));
}

std::string SimulationModel::describe() const {
  switch (kind) {
    case Kind::kUniform:
      return "uniform n=" + std::to_string(n);
    case Kind::kCommutator:
      return "commutator n=" + std::to_string(n) + (x ? " x=" + x->to_string() : std::string(" x=uniform"));
    case Kind::kWalk:
      return "walk n=" + std::to_string(n) + " i=" + std::to_string(i) + " k=" + std::to_string(k);
  }
  return "?";
}

EmpiricalDistribution simulate_fixed_points(const SimulationModel& model, std::uint64_t samples,
                                            std::uint64_t seed) {
  validate(model);
  EmpiricalDistribution out = empty_distribution(model, samples, seed);
  const auto chunks = static_cast<std::int64_t>(chunk_count(samples));
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(out.histogram.size(), 0);
#pragma omp for schedule(dynamic)
    for (std::int64_t c = 0; c < chunks; ++c) {
      run_chunk(model, samples, seed, static_cast<std::uint64_t>(c), local);
    }
#pragma omp critical
    for (std::size_t j = 0; j < local.size(); ++j) out.histogram[j] += local[j];
  }
  return out;
}

EmpiricalDistribution simulate_fixed_points_serial(const SimulationModel& model, std::uint64_t samples,
                                                   std::uint64_t seed) {
  validate(model);
  EmpiricalDistribution out = empty_distribution(model, samples, seed);
  for (std::uint64_t c = 0; c < chunk_count(samples); ++c) run_chunk(model, samples, seed, c, out.histogram);
  return out;
}

ShapeCheckReport top_to_random_shape_check(int n, int r, std::uint64_t samples, std::uint64_t seed) {
  if (n < 1 || n > 8 || r < 0 || r > 6) throw std::out_of_range("shape check needs n <= 8, r <= 6");
  ShapeCheckReport report;
  report.n = n;
  report.r = r;
  report.samples = samples;
  report.seed = seed;
  const std::vector<Partition> shapes = all_partitions(n);
  std::unordered_map<Partition, std::size_t> index;
  BigInt n_pow_r;
  mpz_ui_pow_ui(n_pow_r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
  report.exact_total = 0;
  for (std::size_t s = 0; s < shapes.size(); ++s) {
    index.emplace(shapes[s], s);
    Rational p(mult_skew(shapes[s], r) * dim(shapes[s]), n_pow_r);
    p.canonicalize();
    report.exact_total += p;
    report.rows.push_back({shapes[s], p, 0, 0});
  }

  std::vector<std::uint64_t> counts(shapes.size(), 0);
  const auto chunks = static_cast<std::int64_t>(chunk_count(samples));
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(shapes.size(), 0);
#pragma omp for schedule(dynamic)
    for (std::int64_t c = 0; c < chunks; ++c) {
      Engine rng = stream_engine(seed, static_cast<std::uint64_t>(c));
      const std::uint64_t count = chunk_samples(samples, static_cast<std::uint64_t>(c));
      for (std::uint64_t s = 0; s < count; ++s) ++local[index.at(rsk_shape(top_to_random(n, r, rng)))];
    }
#pragma omp critical
    for (std::size_t j = 0; j < local.size(); ++j) counts[j] += local[j];
  }

  const auto total = static_cast<double>(samples);
  for (std::size_t s = 0; s < shapes.size(); ++s) {
    ShapeCheckRow& row = report.rows[s];
    row.count = counts[s];
    const double p = row.exact.get_d();
    const double expected = total * p;
    if (p > 0 && p < 1) {
      row.z = (static_cast<double>(row.count) - expected) / std::sqrt(total * p * (1 - p));
    } else if (p == 0) {
      row.z = row.count == 0 ? 0 : INFINITY;
    } else {
      row.z = row.count == samples ? 0 : -INFINITY;
    }
    if (p > 0) {
      const double d = static_cast<double>(row.count) - expected;
      report.chi_square += d * d / expected;
      ++report.degrees_of_freedom;
    }
    report.max_abs_z = std::max(report.max_abs_z, std::abs(row.z));
  }
  report.degrees_of_freedom = std::max(0, report.degrees_of_freedom - 1);
  return report;
}

ExactDistribution enumerate_commutator_distribution(int n, const std::optional<CycleType>& x) {
  check_enumeration(n, x);
  const std::vector<int> perms = all_permutations_flat(n);
  const auto count = static_cast<std::int64_t>(perms.size() / static_cast<std::size_t>(n));
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(n) + 1, 0);
  const std::vector<int> fixed_x = x ? Permutation::from_cycle_type(*x).images() : std::vector<int>{};
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(hist.size(), 0);
    if (x) {
#pragma omp for schedule(static)
      for (std::int64_t g = 0; g < count; ++g) {
        ++local[static_cast<std::size_t>(commutator_fixed_points(&perms[static_cast<std::size_t>(g * n)], fixed_x.data(), n))];
      }
    } else {
#pragma omp for schedule(dynamic)
      for (std::int64_t xi = 0; xi < count; ++xi) {
        const int* xp = &perms[static_cast<std::size_t>(xi * n)];
        for (std::int64_t g = 0; g < count; ++g) {
          ++local[static_cast<std::size_t>(commutator_fixed_points(&perms[static_cast<std::size_t>(g * n)], xp, n))];
        }
      }
    }
#pragma omp critical
    for (std::size_t j = 0; j < local.size(); ++j) hist[j] += local[j];
  }
  BigInt total = static_cast<unsigned long>(count);
  if (!x) total *= static_cast<unsigned long>(count);
  return to_exact(hist, total);
}

ExactDistribution enumerate_commutator_distribution_serial(int n, const std::optional<CycleType>& x) {
  check_enumeration(n, x);
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(n) + 1, 0);
  const std::vector<int> perms = all_permutations_flat(n);
  const std::size_t count = perms.size() / static_cast<std::size_t>(n);
  const std::vector<int> fixed_x = x ? Permutation::from_cycle_type(*x).images() : std::vector<int>{};
  for (std::size_t xi = 0; xi < (x ? 1 : count); ++xi) {
    const int* xp = x ? fixed_x.data() : &perms[xi * static_cast<std::size_t>(n)];
    for (std::size_t g = 0; g < count; ++g) {
      ++hist[static_cast<std::size_t>(commutator_fixed_points(&perms[g * static_cast<std::size_t>(n)], xp, n))];
    }
  }
  BigInt total = static_cast<unsigned long>(count);
  if (!x) total *= static_cast<unsigned long>(count);
  return to_exact(hist, total);
}

}  // namespace permfix
