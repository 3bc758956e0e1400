#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "permfix/report.hpp"

namespace permfix {

enum class VerifySuite { kIdentities, kAsymptotics, kOracles, kAll };

// Throws std::invalid_argument for unknown names.
VerifySuite parse_verify_suite(std::string_view name);

struct GateResult {
  std::string suite;
  std::string gate;
  bool passed = false;
  double seconds = 0;
  Json detail;
};

// Runs every gate of the suite in a fixed order. `on_gate` is called as
// soon as each gate finishes.
std::vector<GateResult> run_verify(VerifySuite suite, const std::function<void(const GateResult&)>& on_gate = {});

// Exact RSK shape law of a deck after r top-to-random shuffles, by
// enumerating all n^r insertion sequences.
std::vector<std::pair<Partition, Rational>> exhaustive_shuffle_shapes(int n, int r);

}  // namespace permfix
