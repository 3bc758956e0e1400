#pragma once

#include <span>
#include <vector>

#include "permfix/bigint.hpp"
#include "permfix/partition.hpp"

namespace permfix {

// A conjugacy class of S_n, recorded by its cycle lengths.
class CycleType {
 public:
  CycleType() = default;
  explicit CycleType(Partition cycles);
  // Cycle lengths in any order.
  static CycleType from_lengths(std::vector<int> lengths);
  static CycleType identity(int n);

  const Partition& cycles() const { return cycles_; }
  int n() const { return cycles_.size(); }
  // Number of fixed points.
  int n1() const { return multiplicity(1); }
  // Number of 2-cycles.
  int n2() const { return multiplicity(2); }
  int multiplicity(int length) const;

  // n! / prod_k k^{m_k} m_k!
  BigInt class_size() const;
  BigInt centralizer_size() const;

  std::string to_string() const { return cycles_.to_string(); }
  friend bool operator==(const CycleType&, const CycleType&) = default;

 private:
  Partition cycles_;
};

// Parses the partition grammar ("5,3", "2^3") and sorts the cycle lengths.
CycleType parse_cycle_type(std::string_view text);

struct RimHook {
  Partition remainder;
  int height = 0;  // rows spanned minus one
};

// Every rim hook (border strip) of the given length removable from lambda.
std::vector<RimHook> rim_hooks(const Partition& lambda, int length);

// chi^lambda(mu) by the Murnaghan-Nakayama rule, removing the longest
// cycles first with memoization on (remaining shape, cycles consumed).
// Throws std::invalid_argument if |lambda| != |mu|.
BigInt character(const Partition& lambda, const CycleType& mu);

// Full table: rows indexed by all_partitions(n), columns by the cycle types
// in the same order.
struct CharacterTable {
  std::vector<Partition> shapes;
  std::vector<CycleType> classes;
  std::vector<std::vector<BigInt>> values;  // values[shape][class]

  std::size_t shape_index(const Partition& lambda) const;
  std::size_t class_index(const CycleType& mu) const;
};
CharacterTable character_table(int n);

// Closed forms for shapes with a long first row, in terms of the fixed
// points n_1 and 2-cycles n_2 of the class. Binomials are polynomial in n_1,
// so C(n_1 - 1, 2) = 1 at n_1 = 0.
enum class NearRowShape {
  kStandard,   // (n-1, 1):    n_1 - 1
  kTwoRow,     // (n-2, 2):    C(n_1 - 1, 2) + n_2 - 1
  kTwoColumn,  // (n-2, 1, 1): C(n_1 - 1, 2) - n_2
};
Partition near_row_partition(NearRowShape shape, int n);
// Throws std::invalid_argument for n < 4.
BigInt char_nearrow(NearRowShape shape, const CycleType& mu);

// chi^lambda(i, 1^{n-i}) / d_lambda as an exact rational, expanded over the
// i-rim-hooks of lambda: sum (-1)^height d_{lambda - hook} / d_lambda.
// Throws std::out_of_range unless 2 <= i <= |lambda|.
Rational char_ratio_icycle(const Partition& lambda, int i);

struct RatioAsymptoticsRow {
  int n = 0;
  Partition worst_shape;
  Rational worst_ratio;
  // max over lambda with lambda_1 = n - t of |ratio - (1 - i t / n)| * n^2
  Rational scaled_error;
};

struct RatioAsymptoticsReport {
  int i = 0;
  int t = 0;
  std::vector<RatioAsymptoticsRow> rows;
  double max_scaled_error = 0;
  // scaled_error never increases along n_list.
  bool non_increasing = true;
};

RatioAsymptoticsReport verify_ratio_asymptotics(int i, int t, std::span<const int> n_list);

}  // namespace permfix
