#include "permfix/permutation.hpp"

#include <numeric>
#include <stdexcept>

namespace permfix {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= size() || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a permutation");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images), Unchecked{});
}

Permutation Permutation::from_one_line(std::span<const int> one_based) {
  std::vector<int> images;
  images.reserve(one_based.size());
  for (int v : one_based) images.push_back(v - 1);
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycle_type(const CycleType& type) {
  std::vector<int> images(static_cast<std::size_t>(type.n()));
  int start = 0;
  for (int len : type.cycles().parts()) {
    for (int j = 0; j < len; ++j) {
      images[static_cast<std::size_t>(start + j)] = start + (j + 1) % len;
    }
    start += len;
  }
  return Permutation(std::move(images), Unchecked{});
}

int count_fixed_points(std::span<const int> images) {
  int fixed = 0;
  for (std::size_t j = 0; j < images.size(); ++j) {
    if (images[j] == static_cast<int>(j)) ++fixed;
  }
  return fixed;
}

int Permutation::fixed_points() const { return count_fixed_points(images_); }

CycleType Permutation::cycle_type() const {
  std::vector<int> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (int s = 0; s < size(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    int len = 0;
    for (int j = s; !seen[static_cast<std::size_t>(j)]; j = images_[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return CycleType::from_lengths(std::move(lengths));
}

Permutation Permutation::inverse() const {
  std::vector<int> out(images_.size());
  for (int j = 0; j < size(); ++j) out[static_cast<std::size_t>(images_[static_cast<std::size_t>(j)])] = j;
  return Permutation(std::move(out), Unchecked{});
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw std::invalid_argument("permutation sizes differ");
  std::vector<int> out(q.images_.size());
  for (int j = 0; j < q.size(); ++j) out[static_cast<std::size_t>(j)] = p(q(j));
  return Permutation(std::move(out), Permutation::Unchecked{});
}

}  // namespace permfix
