#pragma once

#include <optional>
#include <span>

#include "permfix/real.hpp"

namespace permfix {

// Thread count used by the OpenMP kernels. Resolution order: explicit
// request, then the PERMFIX_THREADS environment variable, then the number of
// available cores.
int resolve_thread_count(std::optional<int> requested);
void set_thread_count(int threads);
int thread_count();

// Fixed-order pairwise sum, so the result does not depend on how the terms
// were produced.
Real pairwise_sum(std::span<const Real> terms, unsigned precision_bits);

}  // namespace permfix
