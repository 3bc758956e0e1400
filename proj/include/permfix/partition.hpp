#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "permfix/bigint.hpp"

namespace permfix {

struct FrobeniusCoordinates {
  std::vector<int> arms;  // a_j = lambda_j - j
  std::vector<int> legs;  // b_j = lambda'_j - j
  bool operator==(const FrobeniusCoordinates&) const = default;
};

// An integer partition: weakly decreasing positive parts. Immutable value
// type with structural equality and ordering; used as a key in memo tables.
class Partition {
 public:
  Partition() = default;
  // Trailing zeros are dropped; throws std::invalid_argument if the parts
  // are negative or not weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  static Partition row(int n);
  static Partition column(int n);
  // (n - j, 1^j)
  static Partition hook(int n, int j);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  // Zero-based row access; zero past the last row.
  int part(int row) const { return row < length() ? parts_[static_cast<std::size_t>(row)] : 0; }
  int first() const { return part(0); }
  int second() const { return part(1); }

  Partition conjugate() const;
  FrobeniusCoordinates frobenius() const;
  int diagonal_size() const;
  // Partition with its largest part removed.
  Partition without_first_row() const;
  bool contains(const Partition& inner) const;
  bool is_hook() const;
  int hook_length(int row, int col) const;

  // Partitions obtained by removing (adding) one corner cell.
  std::vector<Partition> remove_corner_cells() const;
  std::vector<Partition> add_corner_cells() const;

  // "3,1,1"; the empty partition renders as "".
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

// Number of standard Young tableaux of shape lambda, n! / prod(hooks).
BigInt dim(const Partition& lambda);

// All partitions of n in reverse lexicographic order: (n), (n-1,1), ...
std::vector<Partition> all_partitions(int n);
// Partitions of n with every part <= max_part, reverse lexicographic.
std::vector<Partition> bounded_partitions(int n, int max_part);
// {lambda |- n : lambda_1 >= n - t_max}, grouped by t = n - lambda_1
// ascending; reverse lexicographic overall.
std::vector<Partition> partitions_with_large_first_row(int n, int t_max);

// Parses "3,1,1", "2^3", "4, 2^2, 1" into a list of parts. Whitespace is
// ignored; "^k" repeats the preceding part k times. Throws
// std::invalid_argument on malformed input.
std::vector<int> parse_parts(std::string_view text);
// Parses a partition; the parts must already be weakly decreasing.
Partition parse_partition(std::string_view text);

}  // namespace permfix

template <>
struct std::hash<permfix::Partition> : permfix::PartitionHash {};
