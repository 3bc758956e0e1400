#include "permfix/tableaux.hpp"

#include <unordered_map>
#include <utility>
#include <vector>

namespace permfix {

namespace {

class SkewCounter {
 public:
  explicit SkewCounter(const Partition& inner) : inner_(inner) {}

  const BigInt& count(const Partition& outer) {
    if (auto it = memo_.find(outer); it != memo_.end()) return it->second;
    BigInt total = 0;
    if (outer == inner_) {
      total = 1;
    } else {
      for (const Partition& smaller : outer.remove_corner_cells()) {
        if (smaller.contains(inner_)) total += count(smaller);
      }
    }
    return memo_.emplace(outer, std::move(total)).first->second;
  }

 private:
  const Partition& inner_;
  std::unordered_map<Partition, BigInt> memo_;
};

}  // namespace

BigInt skew_syt_count(const SkewShape& shape) {
  if (!shape.valid()) return 0;
  SkewCounter counter(shape.inner);
  return counter.count(shape.outer);
}

BigInt skew_syt_count_aitken(const SkewShape& shape) {
  if (!shape.valid()) return 0;
  const int len = shape.outer.length();
  if (len == 0) return 1;
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(len),
                                       std::vector<Rational>(static_cast<std::size_t>(len)));
  for (int i = 0; i < len; ++i) {
    for (int j = 0; j < len; ++j) {
      const long arg = static_cast<long>(shape.outer.part(i) - i) - (shape.inner.part(j) - j);
      m[i][j] = arg < 0 ? Rational(0) : Rational(1, factorial(static_cast<unsigned long>(arg)));
    }
  }
  // Fraction-exact Gaussian elimination.
  Rational det = 1;
  for (int col = 0; col < len; ++col) {
    int pivot = col;
    while (pivot < len && m[pivot][col] == 0) ++pivot;
    if (pivot == len) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (int row = col + 1; row < len; ++row) {
      if (m[row][col] == 0) continue;
      const Rational f = m[row][col] / m[col][col];
      for (int k = col; k < len; ++k) m[row][k] -= f * m[col][k];
    }
  }
  const Rational value = det * Rational(factorial(static_cast<unsigned long>(shape.size())));
  if (value.get_den() != 1) throw std::logic_error("Aitken determinant is not integral");
  return value.get_num();
}

BigInt skew_syt_from_row(const Partition& lambda, int a) {
  const int n = lambda.size();
  if (a < 0 || a > n) return 0;
  return skew_syt_count({lambda, Partition::row(n - a)});
}

BigInt skew_syt_large_first_row(const Partition& lambda, int a) {
  const int n = lambda.size();
  if (a < 0 || a > n || lambda.second() > n - a) {
    throw GuardViolation("closed form needs lambda_2 <= n - a (lambda=" + lambda.to_string() +
                         ", a=" + std::to_string(a) + ")");
  }
  const Partition bar = lambda.without_first_row();
  return dim(bar) * binomial(a, bar.size());
}

}  // namespace permfix
