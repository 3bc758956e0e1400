#include "permfix/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace permfix {

int resolve_thread_count(std::optional<int> requested) {
  if (requested) {
    if (*requested < 1) throw std::invalid_argument("thread count must be positive");
    return *requested;
  }
  if (const char* env = std::getenv("PERMFIX_THREADS"); env != nullptr && *env != '\0') {
    const int value = std::stoi(env);
    if (value < 1) throw std::invalid_argument("PERMFIX_THREADS must be positive");
    return value;
  }
  return omp_get_num_procs();
}

void set_thread_count(int threads) {
  if (threads < 1) throw std::invalid_argument("thread count must be positive");
  omp_set_num_threads(threads);
}

int thread_count() { return omp_get_max_threads(); }

Real pairwise_sum(std::span<const Real> terms, unsigned precision_bits) {
  if (terms.empty()) return Real(precision_bits);
  if (terms.size() == 1) {
    Real out(precision_bits);
    out += terms[0];
    return out;
  }
  const std::size_t half = terms.size() / 2;
  return pairwise_sum(terms.first(half), precision_bits) + pairwise_sum(terms.subspan(half), precision_bits);
}

}  // namespace permfix
