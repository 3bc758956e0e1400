#include "permfix/multiplicity.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "permfix/characters.hpp"
#include "permfix/setpartitions.hpp"
#include "permfix/tableaux.hpp"

namespace permfix {

BigInt mult_skew(const Partition& lambda, int r) {
  if (r < 0) throw std::invalid_argument("negative r");
  const auto& stirling_row = stirling_table(r).row(r);
  BigInt total = 0;
  for (int a = 0; a <= r; ++a) {
    const BigInt& s = stirling_row[static_cast<std::size_t>(a)];
    if (s == 0) continue;
    total += s * skew_syt_from_row(lambda, a);
  }
  return total;
}

namespace {

// Integer-weighted formal sum of partitions.
using State = std::map<Partition, BigInt>;

State apply_down(const State& in) {
  State out;
  for (const auto& [shape, weight] : in) {
    for (Partition& smaller : shape.remove_corner_cells()) out[std::move(smaller)] += weight;
  }
  return out;
}

State apply_up(const State& in) {
  State out;
  for (const auto& [shape, weight] : in) {
    for (Partition& larger : shape.add_corner_cells()) out[std::move(larger)] += weight;
  }
  return out;
}

}  // namespace

BigInt mult_updown(const Partition& lambda, int r) {
  if (r < 0) throw std::invalid_argument("negative r");
  const int n = lambda.size();
  const auto& stirling_row = stirling_table(r).row(r);
  BigInt total = 0;
  State down{{Partition::row(n), BigInt(1)}};
  for (int a = 0; a <= r && !down.empty(); ++a) {
    if (a > 0) down = apply_down(down);
    const BigInt& s = stirling_row[static_cast<std::size_t>(a)];
    if (s == 0) continue;
    State up = down;
    for (int j = 0; j < a; ++j) up = apply_up(up);
    if (auto it = up.find(lambda); it != up.end()) total += s * it->second;
  }
  return total;
}

bool ding_applies(const Partition& lambda, int r) {
  return r >= 1 && r <= lambda.size() - lambda.second();
}

BigInt mult_ding(const Partition& lambda, int r) {
  if (!ding_applies(lambda, r)) {
    throw GuardViolation("Ding's formula needs 1 <= r <= n - lambda_2 (lambda=" + lambda.to_string() +
                         ", r=" + std::to_string(r) + ")");
  }
  const Partition bar = lambda.without_first_row();
  const auto& stirling_row = stirling_table(r).row(r);
  BigInt sum = 0;
  for (int a = 0; a <= r; ++a) sum += stirling_row[static_cast<std::size_t>(a)] * binomial(a, bar.size());
  return dim(bar) * sum;
}

BigInt mult_oracle(const Partition& lambda, int r) {
  if (r < 0) throw std::invalid_argument("negative r");
  const int n = lambda.size();
  if (n > kMultOracleMaxN) throw std::out_of_range("mult_oracle: n too large for enumeration");
  std::map<std::vector<int>, BigInt> char_by_type;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  BigInt total = 0;
  do {
    std::vector<int> lengths;
    std::vector<bool> seen(perm.size(), false);
    int fixed = 0;
    for (int s = 0; s < n; ++s) {
      if (seen[static_cast<std::size_t>(s)]) continue;
      int len = 0;
      for (int j = s; !seen[static_cast<std::size_t>(j)]; j = perm[static_cast<std::size_t>(j)]) {
        seen[static_cast<std::size_t>(j)] = true;
        ++len;
      }
      if (len == 1) ++fixed;
      lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end(), std::greater<>());
    auto it = char_by_type.find(lengths);
    if (it == char_by_type.end()) {
      it = char_by_type.emplace(lengths, character(lambda, CycleType(Partition(lengths)))).first;
    }
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(fixed), static_cast<unsigned long>(r));
    total += power * it->second;
  } while (std::next_permutation(perm.begin(), perm.end()));
  const BigInt order = factorial(static_cast<unsigned long>(n));
  if (total % order != 0) throw std::logic_error("mult_oracle: inner product is not integral");
  return total / order;
}

std::string_view to_string(MultAlgorithm alg) {
  switch (alg) {
    case MultAlgorithm::kSkew:
      return "skew";
    case MultAlgorithm::kUpDown:
      return "updown";
    case MultAlgorithm::kDing:
      return "ding";
    case MultAlgorithm::kOracle:
      return "oracle";
  }
  return "?";
}

BigInt multiplicity(const Partition& lambda, int r, MultAlgorithm alg) {
  switch (alg) {
    case MultAlgorithm::kSkew:
      return mult_skew(lambda, r);
    case MultAlgorithm::kUpDown:
      return mult_updown(lambda, r);
    case MultAlgorithm::kDing:
      return mult_ding(lambda, r);
    case MultAlgorithm::kOracle:
      return mult_oracle(lambda, r);
  }
  throw std::invalid_argument("unknown algorithm");
}

std::vector<std::pair<Partition, BigInt>> multiplicity_support(int n, int r) {
  std::vector<std::pair<Partition, BigInt>> out;
  for (Partition& lambda : partitions_with_large_first_row(n, std::min(r, n))) {
    BigInt m = mult_skew(lambda, r);
    out.emplace_back(std::move(lambda), std::move(m));
  }
  return out;
}

}  // namespace permfix
