#pragma once

#include <span>
#include <vector>

#include "permfix/characters.hpp"

namespace permfix {

// A permutation of {0, ..., n-1} in one-line form. Products compose right
// to left: (p * q)(j) = p(q(j)).
class Permutation {
 public:
  Permutation() = default;
  // Zero-based images; throws std::invalid_argument unless a bijection.
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  // One-based one-line notation, e.g. {2, 1, 4, 3}.
  static Permutation from_one_line(std::span<const int> one_based);
  // Canonical representative: consecutive cycles in the listed order.
  static Permutation from_cycle_type(const CycleType& type);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int j) const { return images_[static_cast<std::size_t>(j)]; }
  const std::vector<int>& images() const { return images_; }

  int fixed_points() const;
  CycleType cycle_type() const;
  Permutation inverse() const;

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<int> images, Unchecked) : images_(std::move(images)) {}

  std::vector<int> images_;
};

// Fixed points of a zero-based one-line permutation.
int count_fixed_points(std::span<const int> images);

}  // namespace permfix
