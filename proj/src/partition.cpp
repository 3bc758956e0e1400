#include "permfix/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace permfix {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t j = 0; j < parts_.size(); ++j) {
    if (parts_[j] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (j > 0 && parts_[j] > parts_[j - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::row(int n) {
  if (n < 0) throw std::invalid_argument("negative size");
  return n == 0 ? Partition() : Partition(std::vector<int>{n});
}

Partition Partition::column(int n) {
  if (n < 0) throw std::invalid_argument("negative size");
  return Partition(std::vector<int>(static_cast<std::size_t>(n), 1));
}

Partition Partition::hook(int n, int j) {
  if (j < 0 || j >= n) throw std::invalid_argument("hook leg out of range");
  std::vector<int> parts(static_cast<std::size_t>(j) + 1, 1);
  parts[0] = n - j;
  return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
  std::vector<int> out(static_cast<std::size_t>(first()), 0);
  for (int row : parts_) {
    for (int c = 0; c < row; ++c) ++out[static_cast<std::size_t>(c)];
  }
  return Partition(std::move(out));
}

int Partition::diagonal_size() const {
  int m = 0;
  while (m < length() && parts_[static_cast<std::size_t>(m)] >= m + 1) ++m;
  return m;
}

FrobeniusCoordinates Partition::frobenius() const {
  const Partition conj = conjugate();
  const int m = diagonal_size();
  FrobeniusCoordinates out;
  out.arms.reserve(static_cast<std::size_t>(m));
  out.legs.reserve(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    out.arms.push_back(part(j) - (j + 1));
    out.legs.push_back(conj.part(j) - (j + 1));
  }
  return out;
}

Partition Partition::without_first_row() const {
  if (parts_.empty()) return {};
  return Partition(std::vector<int>(parts_.begin() + 1, parts_.end()));
}

bool Partition::contains(const Partition& inner) const {
  if (inner.length() > length()) return false;
  for (int j = 0; j < inner.length(); ++j) {
    if (inner.part(j) > part(j)) return false;
  }
  return true;
}

bool Partition::is_hook() const { return length() <= 1 || second() <= 1; }

int Partition::hook_length(int row, int col) const {
  int below = 0;
  for (int r = row + 1; r < length() && part(r) > col; ++r) ++below;
  return part(row) - col + below;
}

std::vector<Partition> Partition::remove_corner_cells() const {
  std::vector<Partition> out;
  for (int j = 0; j < length(); ++j) {
    if (part(j) > part(j + 1)) {
      std::vector<int> p = parts_;
      --p[static_cast<std::size_t>(j)];
      out.emplace_back(std::move(p));
    }
  }
  return out;
}

std::vector<Partition> Partition::add_corner_cells() const {
  std::vector<Partition> out;
  for (int j = 0; j <= length(); ++j) {
    if (j == 0 || part(j) < part(j - 1)) {
      std::vector<int> p = parts_;
      if (j == length()) {
        p.push_back(1);
      } else {
        ++p[static_cast<std::size_t>(j)];
      }
      out.emplace_back(std::move(p));
    }
  }
  return out;
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < parts_.size(); ++j) {
    if (j) out += ',';
    out += std::to_string(parts_[j]);
  }
  return out;
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int v : p.parts()) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

BigInt dim(const Partition& lambda) {
  const int n = lambda.size();
  if (n <= 1) return 1;
  // Net exponent of each integer in n! / prod(hooks). The hooks along the
  // tail of the first row cancel most of n! when lambda_1 is close to n.
  std::vector<int> exponent(static_cast<std::size_t>(n) + 1, 1);
  exponent[0] = 0;
  const Partition conj = lambda.conjugate();
  for (int r = 0; r < lambda.length(); ++r) {
    for (int c = 0; c < lambda.part(r); ++c) {
      const int hook = lambda.part(r) - c + conj.part(c) - r - 1;
      --exponent[static_cast<std::size_t>(hook)];
    }
  }
  BigInt num = 1;
  BigInt den = 1;
  for (int k = 2; k <= n; ++k) {
    const int e = exponent[static_cast<std::size_t>(k)];
    for (int j = 0; j < e; ++j) num *= k;
    for (int j = 0; j < -e; ++j) den *= k;
  }
  BigInt out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

std::vector<Partition> bounded_partitions(int n, int max_part) {
  if (n < 0) throw std::invalid_argument("negative size");
  std::vector<Partition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  max_part = std::min(max_part, n);
  if (max_part <= 0) return out;
  // Reverse lexicographic: greedy fill, then repeatedly decrement the last
  // part exceeding 1 and refill the remainder greedily.
  std::vector<int> parts;
  auto fill = [&](int remaining, int cap) {
    while (remaining > 0) {
      const int v = std::min(remaining, cap);
      parts.push_back(v);
      remaining -= v;
    }
  };
  fill(n, max_part);
  while (true) {
    out.emplace_back(parts);
    int ones = 0;
    while (!parts.empty() && parts.back() == 1) {
      parts.pop_back();
      ++ones;
    }
    if (parts.empty()) break;
    const int v = --parts.back();
    fill(ones + 1, v);
  }
  return out;
}

std::vector<Partition> all_partitions(int n) { return bounded_partitions(n, n); }

std::vector<Partition> partitions_with_large_first_row(int n, int t_max) {
  if (n < 0 || t_max < 0 || t_max > n) throw std::invalid_argument("require 0 <= t_max <= n");
  std::vector<Partition> out;
  for (int t = 0; t <= t_max; ++t) {
    const int head = n - t;
    if (head == 0) {
      if (n == 0) out.emplace_back();
      continue;
    }
    for (const Partition& tail : bounded_partitions(t, head)) {
      std::vector<int> parts{head};
      parts.insert(parts.end(), tail.parts().begin(), tail.parts().end());
      out.emplace_back(std::move(parts));
    }
  }
  return out;
}

std::vector<int> parse_parts(std::string_view text) {
  std::string compact;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
  }
  std::vector<int> parts;
  if (compact.empty()) return parts;
  auto parse_int = [](std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
      throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
    }
    return v;
  };
  std::string_view rest = compact;
  while (true) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    const auto caret = item.find('^');
    const int value = parse_int(item.substr(0, caret));
    const int repeat = caret == std::string_view::npos ? 1 : parse_int(item.substr(caret + 1));
    if (value <= 0 || repeat < 0) throw std::invalid_argument("parts must be positive");
    parts.insert(parts.end(), static_cast<std::size_t>(repeat), value);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return parts;
}

Partition parse_partition(std::string_view text) { return Partition(parse_parts(text)); }

}  // namespace permfix
