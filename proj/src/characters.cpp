#include "permfix/characters.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace permfix {

CycleType::CycleType(Partition cycles) : cycles_(std::move(cycles)) {}

CycleType CycleType::from_lengths(std::vector<int> lengths) {
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return CycleType(Partition(std::move(lengths)));
}

CycleType CycleType::identity(int n) { return CycleType(Partition::column(n)); }

int CycleType::multiplicity(int length) const {
  return static_cast<int>(std::count(cycles_.parts().begin(), cycles_.parts().end(), length));
}

BigInt CycleType::centralizer_size() const {
  std::map<int, int> mult;
  for (int c : cycles_.parts()) ++mult[c];
  BigInt z = 1;
  for (auto [length, m] : mult) {
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(length), static_cast<unsigned long>(m));
    z *= power * factorial(static_cast<unsigned long>(m));
  }
  return z;
}

BigInt CycleType::class_size() const {
  BigInt out;
  const BigInt num = factorial(static_cast<unsigned long>(n()));
  const BigInt den = centralizer_size();
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

CycleType parse_cycle_type(std::string_view text) {
  return CycleType::from_lengths(parse_parts(text));
}

std::vector<RimHook> rim_hooks(const Partition& lambda, int length) {
  std::vector<RimHook> out;
  if (length <= 0 || length > lambda.size()) return out;
  // Beta numbers lambda_j + (len - 1 - j): removing a rim hook of the given
  // length slides one bead down by `length` onto a free position; the height
  // is the number of beads jumped over.
  const int len = lambda.length();
  std::vector<int> beta(static_cast<std::size_t>(len));
  for (int j = 0; j < len; ++j) beta[static_cast<std::size_t>(j)] = lambda.part(j) + (len - 1 - j);
  for (int j = 0; j < len; ++j) {
    const int from = beta[static_cast<std::size_t>(j)];
    const int to = from - length;
    if (to < 0) continue;
    if (std::find(beta.begin(), beta.end(), to) != beta.end()) continue;
    int jumped = 0;
    for (int b : beta) {
      if (b > to && b < from) ++jumped;
    }
    std::vector<int> moved = beta;
    moved[static_cast<std::size_t>(j)] = to;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    std::vector<int> parts(static_cast<std::size_t>(len));
    for (int r = 0; r < len; ++r) parts[static_cast<std::size_t>(r)] = moved[static_cast<std::size_t>(r)] - (len - 1 - r);
    out.push_back({Partition(std::move(parts)), jumped});
  }
  return out;
}

namespace {

class MurnaghanNakayama {
 public:
  explicit MurnaghanNakayama(const CycleType& mu) : cycles_(mu.cycles().parts()) {}

  BigInt evaluate(const Partition& lambda, std::size_t consumed) {
    if (consumed == cycles_.size()) return lambda.empty() ? 1 : 0;
    // Trailing cycles of length 1 contribute d_lambda directly.
    if (cycles_[consumed] == 1) return dim(lambda);
    auto& level = memo_[consumed];
    if (auto it = level.find(lambda); it != level.end()) return it->second;
    BigInt total = 0;
    for (const RimHook& hook : rim_hooks(lambda, cycles_[consumed])) {
      const BigInt sub = evaluate(hook.remainder, consumed + 1);
      if (hook.height % 2 == 0) {
        total += sub;
      } else {
        total -= sub;
      }
    }
    memo_[consumed].emplace(lambda, total);
    return total;
  }

 private:
  std::vector<int> cycles_;
  std::unordered_map<std::size_t, std::unordered_map<Partition, BigInt>> memo_;
};

}  // namespace

BigInt character(const Partition& lambda, const CycleType& mu) {
  if (lambda.size() != mu.n()) throw std::invalid_argument("character: |lambda| != |mu|");
  MurnaghanNakayama mn(mu);
  return mn.evaluate(lambda, 0);
}

std::size_t CharacterTable::shape_index(const Partition& lambda) const {
  auto it = std::find(shapes.begin(), shapes.end(), lambda);
  if (it == shapes.end()) throw std::out_of_range("shape not in table");
  return static_cast<std::size_t>(it - shapes.begin());
}

std::size_t CharacterTable::class_index(const CycleType& mu) const {
  auto it = std::find(classes.begin(), classes.end(), mu);
  if (it == classes.end()) throw std::out_of_range("class not in table");
  return static_cast<std::size_t>(it - classes.begin());
}

CharacterTable character_table(int n) {
  CharacterTable table;
  table.shapes = all_partitions(n);
  for (const Partition& p : table.shapes) table.classes.emplace_back(p);
  table.values.assign(table.shapes.size(), std::vector<BigInt>(table.classes.size()));
  // One evaluator per class so the memo is shared across shapes.
  for (std::size_t c = 0; c < table.classes.size(); ++c) {
    MurnaghanNakayama mn(table.classes[c]);
    for (std::size_t s = 0; s < table.shapes.size(); ++s) {
      table.values[s][c] = mn.evaluate(table.shapes[s], 0);
    }
  }
  return table;
}

Partition near_row_partition(NearRowShape shape, int n) {
  switch (shape) {
    case NearRowShape::kStandard:
      return Partition({n - 1, 1});
    case NearRowShape::kTwoRow:
      return Partition({n - 2, 2});
    case NearRowShape::kTwoColumn:
      return Partition({n - 2, 1, 1});
  }
  throw std::invalid_argument("unknown near-row shape");
}

BigInt char_nearrow(NearRowShape shape, const CycleType& mu) {
  if (mu.n() < 4) throw std::invalid_argument("near-row closed forms need n >= 4");
  const BigInt shifted = mu.n1() - 1;
  const BigInt choose2 = shifted * (shifted - 1) / 2;
  switch (shape) {
    case NearRowShape::kStandard:
      return shifted;
    case NearRowShape::kTwoRow:
      return choose2 + mu.n2() - 1;
    case NearRowShape::kTwoColumn:
      return choose2 - mu.n2();
  }
  throw std::invalid_argument("unknown near-row shape");
}

Rational char_ratio_icycle(const Partition& lambda, int i) {
  if (i < 2 || i > lambda.size()) throw std::out_of_range("char_ratio_icycle: need 2 <= i <= n");
  BigInt numerator = 0;
  for (const RimHook& hook : rim_hooks(lambda, i)) {
    if (hook.height % 2 == 0) {
      numerator += dim(hook.remainder);
    } else {
      numerator -= dim(hook.remainder);
    }
  }
  Rational out(numerator, dim(lambda));
  out.canonicalize();
  return out;
}

RatioAsymptoticsReport verify_ratio_asymptotics(int i, int t, std::span<const int> n_list) {
  RatioAsymptoticsReport report;
  report.i = i;
  report.t = t;
  for (int n : n_list) {
    if (n < t + i + 2) throw std::invalid_argument("verify_ratio_asymptotics: need n >= t + i + 2");
    RatioAsymptoticsRow row;
    row.n = n;
    row.scaled_error = -1;
    const Rational predicted = 1 - ratio(i * t, n);
    const Rational n_squared = Rational(n) * n;
    for (const Partition& tail : bounded_partitions(t, n - t)) {
      std::vector<int> parts{n - t};
      parts.insert(parts.end(), tail.parts().begin(), tail.parts().end());
      const Partition lambda(std::move(parts));
      const Rational ratio = char_ratio_icycle(lambda, i);
      const Rational scaled = ::abs(ratio - predicted) * n_squared;
      if (scaled > row.scaled_error) {
        row.scaled_error = scaled;
        row.worst_shape = lambda;
        row.worst_ratio = ratio;
      }
    }
    const double value = row.scaled_error.get_d();
    if (!report.rows.empty() && row.scaled_error > report.rows.back().scaled_error) {
      report.non_increasing = false;
    }
    report.max_scaled_error = std::max(report.max_scaled_error, value);
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace permfix
