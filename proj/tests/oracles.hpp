#pragma once

// Independent brute-force references used only by the tests. None of these
// call into the library's own counting code.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "permfix/bigint.hpp"
#include "permfix/partition.hpp"

namespace oracle {

using permfix::BigInt;
using permfix::Partition;
using permfix::Rational;

using Cell = std::pair<int, int>;

inline std::vector<Cell> skew_cells(const Partition& outer, const Partition& inner) {
  std::vector<Cell> cells;
  for (int row = 0; row < outer.length(); ++row) {
    for (int col = inner.part(row); col < outer.part(row); ++col) cells.emplace_back(row, col);
  }
  return cells;
}

// Counts standard fillings of outer/inner by trying every bijection of
// labels to cells. Fine up to about 9 cells.
inline std::uint64_t syt_bruteforce(const Partition& outer, const Partition& inner) {
  if (!outer.contains(inner)) return 0;
  const std::vector<Cell> cells = skew_cells(outer, inner);
  std::vector<int> label(cells.size());
  std::iota(label.begin(), label.end(), 0);
  std::map<Cell, std::size_t> where;
  for (std::size_t c = 0; c < cells.size(); ++c) where[cells[c]] = c;
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (std::size_t c = 0; c < cells.size() && ok; ++c) {
      const auto [row, col] = cells[c];
      auto right = where.find({row, col + 1});
      auto below = where.find({row + 1, col});
      if (right != where.end() && label[right->second] < label[c]) ok = false;
      if (below != where.end() && label[below->second] < label[c]) ok = false;
    }
    if (ok) ++count;
  } while (std::next_permutation(label.begin(), label.end()));
  return count;
}

// Set partitions of {0..r-1} as restricted growth strings, tallied by
// number of blocks.
inline std::vector<std::uint64_t> set_partitions_by_blocks(int r) {
  std::vector<std::uint64_t> out(static_cast<std::size_t>(r) + 1, 0);
  if (r == 0) {
    out[0] = 1;
    return out;
  }
  std::vector<int> a(static_cast<std::size_t>(r), 0);
  while (true) {
    const int blocks = *std::max_element(a.begin(), a.end()) + 1;
    ++out[static_cast<std::size_t>(blocks)];
    int j = r - 1;
    while (j > 0) {
      const int bound = *std::max_element(a.begin(), a.begin() + j) + 1;
      if (a[static_cast<std::size_t>(j)] < bound) break;
      --j;
    }
    if (j == 0) break;
    ++a[static_cast<std::size_t>(j)];
    std::fill(a.begin() + j + 1, a.end(), 0);
  }
  return out;
}

inline std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline int fixed_points(const std::vector<int>& p) {
  int f = 0;
  for (std::size_t j = 0; j < p.size(); ++j) f += p[j] == static_cast<int>(j);
  return f;
}

// (p q)(j) = p(q(j))
inline std::vector<int> compose(const std::vector<int>& p, const std::vector<int>& q) {
  std::vector<int> out(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) out[j] = p[static_cast<std::size_t>(q[j])];
  return out;
}

inline std::vector<int> invert(const std::vector<int>& p) {
  std::vector<int> out(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) out[static_cast<std::size_t>(p[j])] = static_cast<int>(j);
  return out;
}

inline std::vector<int> cycle_lengths(const std::vector<int>& p) {
  std::vector<int> lengths;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (seen[j]) continue;
    int len = 0;
    for (std::size_t k = j; !seen[k]; k = static_cast<std::size_t>(p[k])) {
      seen[k] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

// Young's orthogonal form: matrices of the adjacent transpositions
// s_j = (j, j+1) on the standard tableaux of shape lambda.
class OrthogonalForm {
 public:
  explicit OrthogonalForm(const Partition& lambda) : n_(lambda.size()) {
    std::vector<int> fill(static_cast<std::size_t>(lambda.length()), 0);
    std::vector<Cell> where(static_cast<std::size_t>(n_));
    build(lambda, fill, where, 0);
    for (std::size_t t = 0; t < tableaux_.size(); ++t) index_[tableaux_[t]] = t;
  }

  std::size_t dim() const { return tableaux_.size(); }

  // Matrix of s_j, 0 <= j < n - 1, in the orthonormal tableau basis.
  std::vector<std::vector<double>> adjacent(int j) const {
    const std::size_t d = dim();
    std::vector<std::vector<double>> m(d, std::vector<double>(d, 0.0));
    for (std::size_t t = 0; t < d; ++t) {
      const auto& pos = tableaux_[t];
      const auto [r1, c1] = pos[static_cast<std::size_t>(j)];
      const auto [r2, c2] = pos[static_cast<std::size_t>(j + 1)];
      const int axial = (c2 - r2) - (c1 - r1);
      m[t][t] = 1.0 / axial;
      if (r1 != r2 && c1 != c2) {
        auto swapped = pos;
        std::swap(swapped[static_cast<std::size_t>(j)], swapped[static_cast<std::size_t>(j + 1)]);
        const std::size_t u = index_.at(swapped);
        m[u][t] = std::sqrt(1.0 - 1.0 / (static_cast<double>(axial) * axial));
      }
    }
    return m;
  }

  // Character at a permutation written as a word in adjacent transpositions.
  long long character(const std::vector<int>& perm) const {
    const std::size_t d = dim();
    std::vector<std::vector<double>> acc(d, std::vector<double>(d, 0.0));
    for (std::size_t t = 0; t < d; ++t) acc[t][t] = 1.0;
    // Bubble sort records perm = s_{j_1} ... s_{j_m}.
    std::vector<int> p = perm;
    std::vector<int> word;
    for (int pass = 0; pass < n_; ++pass) {
      for (int j = 0; j + 1 < n_; ++j) {
        if (p[static_cast<std::size_t>(j)] > p[static_cast<std::size_t>(j + 1)]) {
          std::swap(p[static_cast<std::size_t>(j)], p[static_cast<std::size_t>(j + 1)]);
          word.push_back(j);
        }
      }
    }
    for (int j : word) acc = multiply(acc, adjacent(j));
    double trace = 0;
    for (std::size_t t = 0; t < d; ++t) trace += acc[t][t];
    return std::llround(trace);
  }

 private:
  using Positions = std::vector<Cell>;

  void build(const Partition& lambda, std::vector<int>& fill, Positions& where, int next) {
    if (next == n_) {
      tableaux_.push_back(where);
      return;
    }
    for (int row = 0; row < lambda.length(); ++row) {
      const int col = fill[static_cast<std::size_t>(row)];
      if (col >= lambda.part(row)) continue;
      if (row > 0 && fill[static_cast<std::size_t>(row - 1)] <= col) continue;
      where[static_cast<std::size_t>(next)] = {row, col};
      ++fill[static_cast<std::size_t>(row)];
      build(lambda, fill, where, next + 1);
      --fill[static_cast<std::size_t>(row)];
    }
  }

  static std::vector<std::vector<double>> multiply(const std::vector<std::vector<double>>& a,
                                                   const std::vector<std::vector<double>>& b) {
    const std::size_t d = a.size();
    std::vector<std::vector<double>> out(d, std::vector<double>(d, 0.0));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k)
        if (a[i][k] != 0.0)
          for (std::size_t j = 0; j < d; ++j) out[i][j] += a[i][k] * b[k][j];
    return out;
  }

  int n_;
  std::vector<Positions> tableaux_;
  std::map<Positions, std::size_t> index_;
};

// Permutation in S_n with the given cycle lengths, cycles on consecutive points.
inline std::vector<int> permutation_of_type(const std::vector<int>& lengths) {
  int n = 0;
  for (int len : lengths) n += len;
  std::vector<int> p(static_cast<std::size_t>(n));
  int start = 0;
  for (int len : lengths) {
    for (int j = 0; j < len; ++j) p[static_cast<std::size_t>(start + j)] = start + (j + 1) % len;
    start += len;
  }
  return p;
}

// Length of the longest strictly increasing subsequence, O(n^2) DP.
inline int longest_increasing(const std::vector<int>& w) {
  std::vector<int> best(w.size(), 1);
  int out = 0;
  for (std::size_t j = 0; j < w.size(); ++j) {
    for (std::size_t k = 0; k < j; ++k)
      if (w[k] < w[j]) best[j] = std::max(best[j], best[k] + 1);
    out = std::max(out, best[j]);
  }
  return out;
}

inline int longest_decreasing(const std::vector<int>& w) {
  std::vector<int> neg(w.size());
  std::transform(w.begin(), w.end(), neg.begin(), [](int v) { return -v; });
  return longest_increasing(neg);
}

// Exact law of the i-cycle walk after k steps, by pushing the full
// distribution on S_n through k convolutions with the uniform i-cycle measure.
inline std::map<std::vector<int>, Rational> walk_markov_chain(int n, int i, int k) {
  std::vector<std::vector<int>> cycles;
  for (const auto& p : all_permutations(n)) {
    const auto lengths = cycle_lengths(p);
    if (lengths.front() == i && std::count(lengths.begin(), lengths.end(), 1) == n - i) cycles.push_back(p);
  }
  std::vector<int> id(static_cast<std::size_t>(n));
  std::iota(id.begin(), id.end(), 0);
  std::map<std::vector<int>, Rational> law{{id, Rational(1)}};
  const Rational step = permfix::ratio(1, static_cast<long>(cycles.size()));
  for (int s = 0; s < k; ++s) {
    std::map<std::vector<int>, Rational> next;
    for (const auto& [g, p] : law)
      for (const auto& c : cycles) next[compose(g, c)] += p * step;
    law = std::move(next);
  }
  return law;
}

// Hand-rolled generator of random partitions of n: random compositions
// sorted into weakly decreasing order.
inline Partition random_partition(int n, std::mt19937_64& rng) {
  std::vector<int> parts;
  int left = n;
  while (left > 0) {
    std::uniform_int_distribution<int> pick(1, left);
    const int part = pick(rng);
    parts.push_back(part);
    left -= part;
  }
  std::sort(parts.rbegin(), parts.rend());
  return Partition(parts);
}

}  // namespace oracle
