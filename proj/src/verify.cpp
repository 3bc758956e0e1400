#include "permfix/verify.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "permfix/characters.hpp"
#include "permfix/moments.hpp"
#include "permfix/multiplicity.hpp"
#include "permfix/permutation.hpp"
#include "permfix/setpartitions.hpp"
#include "permfix/simulate.hpp"
#include "permfix/tableaux.hpp"

namespace permfix {

VerifySuite parse_verify_suite(std::string_view name) {
  if (name == "identities") return VerifySuite::kIdentities;
  if (name == "asymptotics") return VerifySuite::kAsymptotics;
  if (name == "oracles") return VerifySuite::kOracles;
  if (name == "all") return VerifySuite::kAll;
  throw std::invalid_argument("unknown verify suite '" + std::string(name) + "'");
}

std::vector<std::pair<Partition, Rational>> exhaustive_shuffle_shapes(int n, int r) {
  if (n < 1 || r < 0) throw std::invalid_argument("need n >= 1, r >= 0");
  std::map<Partition, BigInt> counts;
  std::vector<int> choice(static_cast<std::size_t>(r), 0);
  BigInt total = 0;
  while (true) {
    std::vector<int> deck(static_cast<std::size_t>(n));
    std::iota(deck.begin(), deck.end(), 0);
    for (int pos : choice) {
      const int top = deck.front();
      deck.erase(deck.begin());
      deck.insert(deck.begin() + pos, top);
    }
    counts[rsk_shape(Permutation(std::move(deck)))] += 1;
    total += 1;
    int j = 0;
    while (j < r && ++choice[static_cast<std::size_t>(j)] == n) choice[static_cast<std::size_t>(j++)] = 0;
    if (j == r) break;
  }
  std::vector<std::pair<Partition, Rational>> out;
  for (auto& [shape, count] : counts) {
    out.emplace_back(shape, ratio(count, total));
  }
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Gate {
  const char* suite;
  const char* name;
  std::function<bool(Json&)> body;
};

bool dim_squares(Json& detail) {
  for (int n = 0; n <= 10; ++n) {
    BigInt sum = 0;
    for (const Partition& p : all_partitions(n)) {
      const BigInt d = dim(p);
      sum += d * d;
    }
    if (sum != factorial(static_cast<unsigned long>(n))) {
      detail["failed_n"] = n;
      return false;
    }
  }
  detail["checked"] = "n <= 10";
  return true;
}

bool dimension_identity(Json& detail) {
  for (int n = 1; n <= 8; ++n) {
    for (int r = 0; r <= 6; ++r) {
      BigInt sum = 0;
      for (const Partition& p : all_partitions(n)) sum += mult_skew(p, r) * dim(p);
      BigInt expected;
      mpz_ui_pow_ui(expected.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
      if (sum != expected) {
        detail["failed"] = {{"n", n}, {"r", r}, {"sum", sum.get_str()}};
        return false;
      }
    }
  }
  detail["checked"] = "sum_lambda m_{lambda,r} d_lambda = n^r for n <= 8, r <= 6";
  return true;
}

bool multiplicity_algorithms(Json& detail) {
  int compared = 0;
  for (int n = 1; n <= 8; ++n) {
    for (const Partition& p : all_partitions(n)) {
      for (int r = 0; r <= 6; ++r) {
        const BigInt skew = mult_skew(p, r);
        bool ok = mult_updown(p, r) == skew;
        if (ok && ding_applies(p, r)) ok = mult_ding(p, r) == skew;
        if (!ok) {
          detail["failed"] = {{"lambda", to_json(p)}, {"r", r}};
          return false;
        }
        ++compared;
      }
    }
  }
  detail["compared"] = compared;
  return true;
}

bool skew_closed_form(Json& detail) {
  int compared = 0;
  for (int n = 1; n <= 9; ++n) {
    for (const Partition& p : all_partitions(n)) {
      for (int a = 0; a <= n - p.second(); ++a) {
        if (skew_syt_from_row(p, a) != skew_syt_large_first_row(p, a)) {
          detail["failed"] = {{"lambda", to_json(p)}, {"a", a}};
          return false;
        }
        ++compared;
      }
    }
  }
  detail["compared"] = compared;
  return true;
}

bool skew_aitken(Json& detail) {
  int compared = 0;
  for (int n = 0; n <= 8; ++n) {
    for (const Partition& outer : all_partitions(n)) {
      for (int m = 0; m <= n; ++m) {
        for (const Partition& inner : all_partitions(m)) {
          const SkewShape shape{outer, inner};
          if (skew_syt_count(shape) != skew_syt_count_aitken(shape)) {
            detail["failed"] = {{"outer", to_json(outer)}, {"inner", to_json(inner)}};
            return false;
          }
          ++compared;
        }
      }
    }
  }
  detail["compared"] = compared;
  return true;
}

bool occupancy_and_bell(Json& detail) {
  for (int n = 1; n <= 12; ++n) {
    for (int r = 0; r <= 12; ++r) {
      Rational total = 0;
      for (int a = 0; a <= std::min(r, n); ++a) total += occupancy_probability(a, r, n);
      if (total != 1) {
        detail["failed_occupancy"] = {{"n", n}, {"r", r}};
        return false;
      }
    }
  }
  for (int r = 0; r <= 20; ++r) {
    if (poisson_moment(r, Rational(1)) != Rational(bell(r))) {
      detail["failed_bell"] = r;
      return false;
    }
  }
  detail["checked"] = "occupancy sums n,r <= 12; Poisson(1) moments = Bell r <= 20";
  return true;
}

bool commutator_lower_bound(Json& detail) {
  // The lambda = (n) term alone contributes sum_{a <= min(n, r)} S(r, a),
  // which is B(r) once n >= r. Below that the Bell bound can fail.
  Json below_bell = Json::array();
  for (int n = 1; n <= 30; ++n) {
    const std::vector<Rational> m = commutator_random_moments(n, 6);
    for (int r = 1; r <= 6; ++r) {
      BigInt row_term = 0;
      for (int a = 0; a <= std::min(n, r); ++a) row_term += stirling(r, a);
      const Rational& value = m[static_cast<std::size_t>(r)];
      if (value < Rational(row_term)) {
        detail["failed"] = {{"n", n}, {"r", r}};
        return false;
      }
      if (value < Rational(bell(r))) {
        if (n >= r) {
          detail["failed"] = {{"n", n}, {"r", r}};
          return false;
        }
        below_bell.push_back({{"n", n}, {"r", r}, {"moment", to_json(value)}});
      }
    }
  }
  detail["checked"] = "n <= 30, r <= 6; >= B(r) whenever n >= r";
  detail["below_bell_with_n_lt_r"] = below_bell;
  return true;
}

bool closed_forms(Json& detail) {
  int classes = 0;
  for (int n = 4; n <= 9; ++n) {
    for (const Partition& p : all_partitions(n)) {
      const CycleType x(p);
      const std::vector<Rational> m = commutator_fixed_moments(x, 2);
      for (NearRowShape s : {NearRowShape::kStandard, NearRowShape::kTwoRow, NearRowShape::kTwoColumn}) {
        if (char_nearrow(s, x) != character(near_row_partition(s, n), x)) {
          detail["failed_character"] = {{"x", to_json(p)}, {"template", static_cast<int>(s)}};
          return false;
        }
      }
      for (int r = 1; r <= 2; ++r) {
        if (moment_commutator_fixed_closed(n, x, r) != m[static_cast<std::size_t>(r)]) {
          detail["failed_moment"] = {{"x", to_json(p)}, {"r", r}};
          return false;
        }
      }
      ++classes;
    }
  }
  detail["classes"] = classes;
  return true;
}

bool ratio_asymptotics(Json& detail) {
  const std::vector<int> grid{200, 400, 800, 1600, 3200};
  bool ok = true;
  Json reports = Json::array();
  for (int i : {2, 3, 5}) {
    for (int t : {1, 2, 3}) {
      const RatioAsymptoticsReport rep = verify_ratio_asymptotics(i, t, grid);
      Json seq = Json::array();
      for (const auto& row : rep.rows) seq.push_back(row.scaled_error.get_d());
      reports.push_back({{"i", i}, {"t", t}, {"scaled_error", seq}, {"non_increasing", rep.non_increasing}});
      ok = ok && rep.non_increasing;
    }
  }
  detail["n"] = grid;
  detail["sequences"] = reports;
  return ok;
}

bool commutator_rate(Json& detail) {
  bool ok = true;
  Json rows = Json::array();
  for (int r = 1; r <= 4; ++r) {
    const Rational b(bell(r));
    const Rational c_r = (moment_commutator_random(20, r) - b) * 20;
    Json seq = Json::array();
    for (int n : {40, 80, 160}) {
      const Rational gap = moment_commutator_random(n, r) - b;
      seq.push_back(gap.get_d());
      ok = ok && gap >= 0 && gap * n <= c_r;
    }
    rows.push_back({{"r", r}, {"C_r", c_r.get_d()}, {"gap_n40_80_160", seq}});
  }
  detail["rows"] = rows;
  return ok;
}

bool fixed_class_trends(Json& detail) {
  bool ok = true;
  Json rows = Json::array();
  for (int k : {3, 4}) {
    for (int r = 1; r <= 3; ++r) {
      Json seq = Json::array();
      Rational prev = -1;
      for (int n = 12 * 2; n <= 12 * 8; n *= 2) {
        const CycleType x(Partition(std::vector<int>(static_cast<std::size_t>(n / k), k)));
        const Rational gap = moment_commutator_fixed(n, x, r) - Rational(bell(r));
        seq.push_back(gap.get_d());
        if (prev >= 0 && ::abs(gap) > prev) ok = false;
        prev = ::abs(gap);
      }
      rows.push_back({{"type", "k^{n/k}"}, {"k", k}, {"r", r}, {"gap_to_bell", seq}});
    }
  }
  for (int r = 1; r <= 3; ++r) {
    Rational limit = 0;
    for (int a = 0; a <= r; ++a) limit += Rational(stirling(r, a)) / Rational(BigInt(1) << a);
    limit *= Rational(BigInt(1) << r);
    Json seq = Json::array();
    Rational prev = -1;
    for (int n = 16; n <= 128; n *= 2) {
      const CycleType x(Partition(std::vector<int>(static_cast<std::size_t>(n / 2), 2)));
      const Rational gap = ::abs(moment_commutator_fixed(n, x, r) - limit);
      seq.push_back(gap.get_d());
      if (prev >= 0 && gap > prev) ok = false;
      prev = gap;
    }
    rows.push_back({{"type", "2^{n/2}"}, {"r", r}, {"limit", to_json(limit)}, {"gap_to_limit", seq}});
  }
  detail["rows"] = rows;
  return ok;
}

bool cutoff_terms(Json& detail) {
  bool ok = true;
  Json rows = Json::array();
  for (int i : {2, 3}) {
    for (const std::vector<int>& tail : std::vector<std::vector<int>>{{}, {1}, {2}, {1, 1}, {2, 1}}) {
      Json seq = Json::array();
      double prev = INFINITY;
      for (int n : {500, 1000, 2000}) {
        const int t = std::accumulate(tail.begin(), tail.end(), 0);
        std::vector<int> parts{n - t};
        parts.insert(parts.end(), tail.begin(), tail.end());
        const CutoffTerm term = cutoff_term(Partition(parts), i, 0.5);
        const double err = std::abs((term.term - term.limit).to_double());
        seq.push_back({{"n", n}, {"term", term.term.to_double()}, {"limit", term.limit.to_double()}});
        if (err > prev + 1e-15) ok = false;
        prev = err;
      }
      rows.push_back({{"i", i}, {"lambda_bar", tail}, {"c", 0.5}, {"terms", seq}});
    }
  }
  detail["rows"] = rows;
  return ok;
}

bool functional_equation(Json& detail) {
  for (int n = 1; n <= 5; ++n) {
    const CharacterTable table = character_table(n);
    std::vector<int> x(static_cast<std::size_t>(n));
    std::iota(x.begin(), x.end(), 0);
    std::vector<std::vector<int>> perms;
    do {
      perms.push_back(x);
    } while (std::next_permutation(x.begin(), x.end()));
    for (const auto& xp : perms) {
      const Permutation xx(xp);
      std::vector<BigInt> sums(table.shapes.size(), 0);
      for (const auto& gp : perms) {
        const Permutation g(gp);
        const std::size_t cls = table.class_index((g.inverse() * xx.inverse() * g * xx).cycle_type());
        for (std::size_t s = 0; s < sums.size(); ++s) sums[s] += table.values[s][cls];
      }
      const std::size_t xcls = table.class_index(xx.cycle_type());
      const BigInt order = factorial(static_cast<unsigned long>(n));
      for (std::size_t s = 0; s < sums.size(); ++s) {
        const BigInt& chi = table.values[s][xcls];
        const Rational lhs = ratio(sums[s], order);
        const Rational rhs = ratio(chi * chi, dim(table.shapes[s]));
        if (lhs != rhs) {
          detail["failed"] = {{"n", n}, {"lambda", to_json(table.shapes[s])}};
          return false;
        }
      }
    }
  }
  detail["checked"] = "every chi, every x, n <= 5";
  return true;
}

bool commutator_enumeration(Json& detail) {
  for (int n = 1; n <= 5; ++n) {
    const ExactDistribution dist = enumerate_commutator_distribution(n, std::nullopt);
    const std::vector<Rational> m = commutator_random_moments(n, 4);
    for (int r = 0; r <= 4; ++r) {
      if (dist.moment(r) != m[static_cast<std::size_t>(r)]) {
        detail["failed_random"] = {{"n", n}, {"r", r}};
        return false;
      }
    }
  }
  for (int n = 1; n <= 6; ++n) {
    for (const Partition& p : all_partitions(n)) {
      const CycleType x(p);
      const ExactDistribution dist = enumerate_commutator_distribution(n, x);
      const std::vector<Rational> m = commutator_fixed_moments(x, 4);
      for (int r = 0; r <= 4; ++r) {
        if (dist.moment(r) != m[static_cast<std::size_t>(r)]) {
          detail["failed_fixed"] = {{"n", n}, {"x", to_json(p)}, {"r", r}};
          return false;
        }
      }
    }
  }
  detail["checked"] = "both random n <= 5, fixed x n <= 6, r <= 4";
  return true;
}

bool multiplicity_oracle(Json& detail) {
  int compared = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const Partition& p : all_partitions(n)) {
      for (int r = 0; r <= 5; ++r) {
        if (mult_oracle(p, r) != mult_skew(p, r)) {
          detail["failed"] = {{"lambda", to_json(p)}, {"r", r}};
          return false;
        }
        ++compared;
      }
    }
  }
  detail["compared"] = compared;
  return true;
}

bool walk_exactness(Json& detail) {
  for (int n = 3; n <= 7; ++n) {
    for (int i : {2, 3}) {
      for (std::uint64_t k = 0; k <= 20; k += 5) {
        const ExactDistribution dist = walk_exact_distribution(n, i, k);
        if (dist.total() != 1) {
          detail["failed_total"] = {{"n", n}, {"i", i}, {"k", k}};
          return false;
        }
        const std::vector<Rational> m = walk_moments_exact(n, i, k, 3);
        for (int r = 1; r <= 3; ++r) {
          if (dist.moment(r) != m[static_cast<std::size_t>(r)]) {
            detail["failed_moment"] = {{"n", n}, {"i", i}, {"k", k}, {"r", r}};
            return false;
          }
        }
      }
    }
  }
  detail["checked"] = "n 3..7, i in {2,3}, k in {0,5,10,15,20}, r <= 3";
  return true;
}

bool shuffle_shapes(Json& detail) {
  for (int n = 1; n <= 5; ++n) {
    for (int r = 0; r <= 3; ++r) {
      BigInt n_pow_r;
      mpz_ui_pow_ui(n_pow_r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
      std::map<Partition, Rational> exact;
      for (const auto& [shape, p] : exhaustive_shuffle_shapes(n, r)) exact[shape] = p;
      for (const Partition& p : all_partitions(n)) {
        Rational predicted(mult_skew(p, r) * dim(p), n_pow_r);
        predicted.canonicalize();
        const Rational seen = exact.count(p) ? exact[p] : Rational(0);
        if (seen != predicted) {
          detail["failed"] = {{"n", n}, {"r", r}, {"shape", to_json(p)}};
          return false;
        }
      }
    }
  }
  detail["checked"] = "exhaustive top-to-random, n <= 5, r <= 3";
  return true;
}

const std::vector<Gate>& gates() {
  static const std::vector<Gate> all{
      {"identities", "dim_squares_sum_to_factorial", dim_squares},
      {"identities", "dimension_identity", dimension_identity},
      {"identities", "multiplicity_algorithms_agree", multiplicity_algorithms},
      {"identities", "skew_closed_form", skew_closed_form},
      {"identities", "skew_aitken_determinant", skew_aitken},
      {"identities", "occupancy_and_bell", occupancy_and_bell},
      {"identities", "commutator_moment_lower_bound", commutator_lower_bound},
      {"identities", "fixed_x_closed_forms", closed_forms},
      {"asymptotics", "character_ratio_expansion", ratio_asymptotics},
      {"asymptotics", "commutator_poisson_rate", commutator_rate},
      {"asymptotics", "fixed_class_trends", fixed_class_trends},
      {"asymptotics", "cutoff_terms", cutoff_terms},
      {"oracles", "functional_equation", functional_equation},
      {"oracles", "commutator_enumeration", commutator_enumeration},
      {"oracles", "multiplicity_inner_product", multiplicity_oracle},
      {"oracles", "walk_fourier_inversion", walk_exactness},
      {"oracles", "top_to_random_shapes", shuffle_shapes},
  };
  return all;
}

bool selected(VerifySuite suite, std::string_view gate_suite) {
  switch (suite) {
    case VerifySuite::kAll:
      return true;
    case VerifySuite::kIdentities:
      return gate_suite == "identities";
    case VerifySuite::kAsymptotics:
      return gate_suite == "asymptotics";
    case VerifySuite::kOracles:
      return gate_suite == "oracles";
  }
  return false;
}

}  // namespace

std::vector<GateResult> run_verify(VerifySuite suite, const std::function<void(const GateResult&)>& on_gate) {
  std::vector<GateResult> out;
  for (const Gate& gate : gates()) {
    if (!selected(suite, gate.suite)) continue;
    GateResult result;
    result.suite = gate.suite;
    result.gate = gate.name;
    result.detail = Json::object();
    const auto start = Clock::now();
    try {
      result.passed = gate.body(result.detail);
    } catch (const std::exception& e) {
      result.passed = false;
      result.detail["exception"] = e.what();
    }
    result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (on_gate) on_gate(result);
    out.push_back(std::move(result));
  }
  return out;
}

}  // namespace permfix
