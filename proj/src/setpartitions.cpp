#include "permfix/setpartitions.hpp"

#include <deque>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace permfix {

StirlingTable::StirlingTable(int r_max) {
  if (r_max < 0) throw std::invalid_argument("negative r_max");
  rows_.resize(static_cast<std::size_t>(r_max) + 1);
  rows_[0] = {1};
  for (int r = 1; r <= r_max; ++r) {
    const auto& prev = rows_[static_cast<std::size_t>(r) - 1];
    auto& row = rows_[static_cast<std::size_t>(r)];
    row.assign(static_cast<std::size_t>(r) + 1, 0);
    for (int a = 1; a <= r; ++a) {
      const BigInt carry = a < r ? prev[static_cast<std::size_t>(a)] : BigInt(0);
      row[static_cast<std::size_t>(a)] = a * carry + prev[static_cast<std::size_t>(a) - 1];
    }
  }
}

const BigInt& StirlingTable::operator()(int r, int a) const {
  static const BigInt zero = 0;
  const auto& values = row(r);
  if (a < 0 || a > r) return zero;
  return values[static_cast<std::size_t>(a)];
}

const std::vector<BigInt>& StirlingTable::row(int r) const {
  if (r < 0 || r > r_max()) throw std::out_of_range("Stirling row out of range");
  return rows_[static_cast<std::size_t>(r)];
}

const StirlingTable& stirling_table(int r_max) {
  static std::mutex mutex;
  static std::deque<std::unique_ptr<StirlingTable>> tables;
  std::lock_guard lock(mutex);
  if (tables.empty() || tables.back()->r_max() < r_max) {
    int rows = tables.empty() ? StirlingTable::kDefaultRows : 2 * tables.back()->r_max();
    while (rows < r_max) rows *= 2;
    tables.push_back(std::make_unique<StirlingTable>(rows));
  }
  return *tables.back();
}

BigInt stirling(int r, int a) {
  if (r < 0) throw std::invalid_argument("negative r");
  return stirling_table(r)(r, a);
}

BigInt bell(int r) {
  if (r < 0) throw std::invalid_argument("negative r");
  BigInt total = 0;
  for (const BigInt& s : stirling_table(r).row(r)) total += s;
  return total;
}

Rational poisson_moment(int r, const Rational& mean) {
  if (r < 0) throw std::invalid_argument("negative r");
  const auto& row = stirling_table(r).row(r);
  Rational total = 0;
  Rational power = 1;
  for (int a = 0; a <= r; ++a) {
    total += Rational(row[static_cast<std::size_t>(a)]) * power;
    power *= mean;
  }
  return total;
}

Real poisson_moment(int r, const Real& mean) {
  if (r < 0) throw std::invalid_argument("negative r");
  const auto& row = stirling_table(r).row(r);
  Real total(mean.precision());
  Real power(1.0, mean.precision());
  for (int a = 0; a <= r; ++a) {
    total += Real(row[static_cast<std::size_t>(a)], mean.precision()) * power;
    power *= mean;
  }
  return total;
}

Rational occupancy_probability(int a, int r, int n) {
  if (n < 1 || r < 0) throw std::invalid_argument("require n >= 1, r >= 0");
  if (a < 0 || a > r || a > n) return 0;
  BigInt falling = 1;
  for (int j = 0; j < a; ++j) falling *= n - j;
  BigInt total;
  mpz_ui_pow_ui(total.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
  Rational out(falling * stirling(r, a), total);
  out.canonicalize();
  return out;
}

}  // namespace permfix
