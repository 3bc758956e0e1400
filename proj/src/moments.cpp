#include "permfix/moments.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "permfix/errors.hpp"
#include "permfix/multiplicity.hpp"
#include "permfix/parallel.hpp"
#include "permfix/setpartitions.hpp"
#include "permfix/tableaux.hpp"

namespace permfix {

namespace {

// A lambda in the support together with m_{lambda,r} for r = 0..r_max.
struct SupportTerm {
  Partition lambda;
  std::vector<BigInt> mult;
};

std::vector<SupportTerm> support_terms(int n, int r_max) {
  if (n < 1) throw std::invalid_argument("require n >= 1");
  if (r_max < 0) throw std::invalid_argument("require r_max >= 0");
  const StirlingTable& stirling = stirling_table(r_max);
  std::vector<SupportTerm> out;
  for (Partition& lambda : partitions_with_large_first_row(n, std::min(r_max, n))) {
    std::vector<BigInt> skew(static_cast<std::size_t>(r_max) + 1);
    for (int a = 0; a <= r_max; ++a) skew[static_cast<std::size_t>(a)] = skew_syt_from_row(lambda, a);
    SupportTerm term{std::move(lambda), std::vector<BigInt>(static_cast<std::size_t>(r_max) + 1)};
    for (int r = 0; r <= r_max; ++r) {
      BigInt m = 0;
      for (int a = 0; a <= r; ++a) m += stirling(r, a) * skew[static_cast<std::size_t>(a)];
      term.mult[static_cast<std::size_t>(r)] = std::move(m);
    }
    out.push_back(std::move(term));
  }
  return out;
}

void check_walk_args(int n, int i) {
  if (n < 2 || i < 2 || i > n) throw std::invalid_argument("walk needs 2 <= i <= n");
}

// d_lambda * ratio^k, evaluated in log space.
Real walk_weight(const Partition& lambda, int i, std::uint64_t k, unsigned prec) {
  const Real d(dim(lambda), prec);
  if (k == 0) return d;
  const Rational ratio = char_ratio_icycle(lambda, i);
  if (ratio == 0) return Real(prec);
  const Real magnitude(Rational(::abs(ratio)), prec);
  Real steps(prec);
  mpfr_set_ui(steps.get(), static_cast<unsigned long>(k), MPFR_RNDN);
  Real power = exp(log(magnitude) * steps);
  if (ratio < 0 && (k % 2) == 1) power = -power;
  return d * power;
}

std::vector<Real> weighted_terms(const SupportTerm& term, const Real& weight, int r_max) {
  std::vector<Real> out;
  out.reserve(static_cast<std::size_t>(r_max) + 1);
  for (int r = 0; r <= r_max; ++r) {
    out.push_back(weight * Real(term.mult[static_cast<std::size_t>(r)], weight.precision()));
  }
  return out;
}

}  // namespace

std::vector<Rational> commutator_random_moments(int n, int r_max) {
  std::vector<Rational> out(static_cast<std::size_t>(r_max) + 1, Rational(0));
  for (const SupportTerm& term : support_terms(n, r_max)) {
    const BigInt d = dim(term.lambda);
    for (int r = 0; r <= r_max; ++r) {
      out[static_cast<std::size_t>(r)] += ratio(term.mult[static_cast<std::size_t>(r)], d);
    }
  }
  return out;
}

Rational moment_commutator_random(int n, int r) { return commutator_random_moments(n, r).back(); }

std::vector<Rational> commutator_fixed_moments(const CycleType& x, int r_max) {
  const int n = x.n();
  std::vector<Rational> out(static_cast<std::size_t>(r_max) + 1, Rational(0));
  for (const SupportTerm& term : support_terms(n, r_max)) {
    const BigInt chi = character(term.lambda, x);
    if (chi == 0) continue;
    Rational weight(chi * chi, dim(term.lambda));
    weight.canonicalize();
    for (int r = 0; r <= r_max; ++r) {
      out[static_cast<std::size_t>(r)] += Rational(term.mult[static_cast<std::size_t>(r)]) * weight;
    }
  }
  return out;
}

Rational moment_commutator_fixed(int n, const CycleType& x, int r) {
  if (x.n() != n) throw std::invalid_argument("cycle type size does not match n");
  return commutator_fixed_moments(x, r).back();
}

Rational moment_commutator_fixed_closed(int n, const CycleType& x, int r) {
  if (x.n() != n) throw std::invalid_argument("cycle type size does not match n");
  const Rational n1_shift = x.n1() - 1;
  if (r == 1) {
    if (n < 2) throw std::invalid_argument("closed-form mean needs n >= 2");
    return 1 + n1_shift * n1_shift / Rational(n - 1);
  }
  if (r == 2) {
    if (n < 4) throw std::invalid_argument("closed-form second moment needs n >= 4");
    const Rational choose2 = n1_shift * (n1_shift - 1) / 2;
    const Rational two_row = choose2 + x.n2() - 1;
    const Rational two_column = choose2 - x.n2();
    return 2 + 3 * n1_shift * n1_shift / Rational(n - 1) +
           two_row * two_row / ratio(n * (n - 3), 2) +
           two_column * two_column / ratio((n - 1) * (n - 2), 2);
  }
  throw std::invalid_argument("closed forms exist for r = 1, 2 only");
}

std::vector<Rational> walk_moments_exact(int n, int i, std::uint64_t k, int r_max) {
  check_walk_args(n, i);
  std::vector<Rational> out(static_cast<std::size_t>(r_max) + 1, Rational(0));
  for (const SupportTerm& term : support_terms(n, r_max)) {
    const Rational weight = Rational(dim(term.lambda)) * pow(char_ratio_icycle(term.lambda, i), k);
    for (int r = 0; r <= r_max; ++r) {
      out[static_cast<std::size_t>(r)] += weight * Rational(term.mult[static_cast<std::size_t>(r)]);
    }
  }
  return out;
}

Rational moment_icycle_walk_exact(int n, int i, std::uint64_t k, int r) {
  return walk_moments_exact(n, i, k, r).back();
}

std::vector<Real> walk_moments(int n, int i, std::uint64_t k, int r_max, unsigned precision_bits) {
  check_walk_args(n, i);
  const std::vector<SupportTerm> support = support_terms(n, r_max);
  const auto count = static_cast<std::ptrdiff_t>(support.size());
  std::vector<std::vector<Real>> terms(support.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t j = 0; j < count; ++j) {
    const SupportTerm& term = support[static_cast<std::size_t>(j)];
    terms[static_cast<std::size_t>(j)] =
        weighted_terms(term, walk_weight(term.lambda, i, k, precision_bits), r_max);
  }
  std::vector<Real> out;
  out.reserve(static_cast<std::size_t>(r_max) + 1);
  std::vector<Real> column;
  column.reserve(support.size());
  for (int r = 0; r <= r_max; ++r) {
    column.clear();
    for (const auto& t : terms) column.push_back(t[static_cast<std::size_t>(r)]);
    out.push_back(pairwise_sum(column, precision_bits));
  }
  return out;
}

std::vector<Real> walk_moments_serial(int n, int i, std::uint64_t k, int r_max, unsigned precision_bits) {
  check_walk_args(n, i);
  std::vector<Real> out(static_cast<std::size_t>(r_max) + 1, Real(precision_bits));
  for (const SupportTerm& term : support_terms(n, r_max)) {
    const std::vector<Real> t = weighted_terms(term, walk_weight(term.lambda, i, k, precision_bits), r_max);
    for (int r = 0; r <= r_max; ++r) out[static_cast<std::size_t>(r)] += t[static_cast<std::size_t>(r)];
  }
  return out;
}

Real moment_icycle_walk(int n, int i, std::uint64_t k, int r, unsigned precision_bits) {
  return walk_moments(n, i, k, r, precision_bits).back();
}

std::uint64_t cutoff_steps(int n, int i, double c) {
  check_walk_args(n, i);
  constexpr unsigned prec = 128;
  const Real nn(static_cast<double>(n), prec);
  const Real steps = nn * log(nn) / Real(static_cast<double>(i), prec) + Real(c, prec) * nn;
  const Real rounded = round_half_even(steps);
  if (rounded.sign() < 0) throw std::invalid_argument("cutoff step count is negative");
  return mpfr_get_ui(rounded.get(), MPFR_RNDN);
}

Real cutoff_poisson_mean(int i, double c, unsigned precision_bits) {
  return Real(1.0, precision_bits) + exp(Real(-static_cast<double>(i), precision_bits) * Real(c, precision_bits));
}

CutoffComparison walk_cutoff_comparison(int n, int i, double c, int r_max, unsigned precision_bits) {
  CutoffComparison out;
  out.n = n;
  out.i = i;
  out.c = c;
  out.k = cutoff_steps(n, i, c);
  out.poisson_mean = cutoff_poisson_mean(i, c, precision_bits);
  const std::vector<Real> moments = walk_moments(n, i, out.k, r_max, precision_bits);
  for (int r = 1; r <= r_max; ++r) {
    CutoffRow row;
    row.r = r;
    row.moment = moments[static_cast<std::size_t>(r)];
    row.reference = poisson_moment(r, out.poisson_mean);
    row.difference = row.moment - row.reference;
    out.rows.push_back(std::move(row));
  }
  return out;
}

ExactDistribution walk_exact_distribution(int n, int i, std::uint64_t k) {
  check_walk_args(n, i);
  if (n > kWalkExactMaxN) throw std::out_of_range("walk_exact_distribution: n too large");
  const CharacterTable table = character_table(n);
  // Fourier weight of each irreducible: d_tau * ratio_tau^k / n!.
  const Rational inv_order(1, factorial(static_cast<unsigned long>(n)));
  std::vector<Rational> weight;
  weight.reserve(table.shapes.size());
  for (const Partition& tau : table.shapes) {
    weight.push_back(Rational(dim(tau)) * pow(char_ratio_icycle(tau, i), k) * inv_order);
  }
  ExactDistribution out;
  out.prob.assign(static_cast<std::size_t>(n) + 1, Rational(0));
  for (std::size_t c = 0; c < table.classes.size(); ++c) {
    Rational p_element = 0;
    for (std::size_t s = 0; s < table.shapes.size(); ++s) {
      p_element += weight[s] * Rational(table.values[s][c]);
    }
    out.prob[static_cast<std::size_t>(table.classes[c].n1())] += p_element * Rational(table.classes[c].class_size());
  }
  return out;
}

CutoffTerm cutoff_term(const Partition& lambda, int i, double c, unsigned precision_bits) {
  const int n = lambda.size();
  CutoffTerm out;
  out.t = n - lambda.first();
  out.k = cutoff_steps(n, i, c);
  out.term = walk_weight(lambda, i, out.k, precision_bits);
  const Real exponent = Real(-static_cast<double>(i * out.t), precision_bits) * Real(c, precision_bits);
  out.limit = exp(exponent) * Real(dim(lambda.without_first_row()), precision_bits) /
              Real(factorial(static_cast<unsigned long>(out.t)), precision_bits);
  return out;
}

std::string to_string(MomentModel model) {
  switch (model) {
    case MomentModel::kCommutatorBothRandom:
      return "commutator_both_random";
    case MomentModel::kCommutatorFixedX:
      return "commutator_fixed_x";
    case MomentModel::kICycleWalk:
      return "icycle_walk";
  }
  return "?";
}

MomentReport commutator_random_report(int n, int r_max) {
  MomentReport report;
  report.model = MomentModel::kCommutatorBothRandom;
  report.n = n;
  report.poisson_mean = Rational(1);
  const std::vector<Rational> values = commutator_random_moments(n, r_max);
  for (int r = 1; r <= r_max; ++r) {
    report.moments.push_back({r, values[static_cast<std::size_t>(r)], Rational(bell(r)),
                              "sum_lambda m_{lambda,r}/d_lambda"});
  }
  return report;
}

MomentReport commutator_fixed_report(const CycleType& x, int r_max) {
  MomentReport report;
  report.model = MomentModel::kCommutatorFixedX;
  report.n = x.n();
  report.x = x;
  report.poisson_mean = Rational(1);
  const std::vector<Rational> values = commutator_fixed_moments(x, r_max);
  for (int r = 1; r <= r_max; ++r) {
    std::string formula = "sum_lambda m_{lambda,r} chi^2/d_lambda";
    if (r <= 2 && x.n() >= 4) {
      const Rational closed = moment_commutator_fixed_closed(x.n(), x, r);
      if (closed != values[static_cast<std::size_t>(r)]) {
        throw CrossCheckFailure("closed form disagrees with character sum at r=" + std::to_string(r));
      }
      formula += "; closed form in n_1, n_2 agrees";
    }
    report.moments.push_back({r, values[static_cast<std::size_t>(r)], Rational(bell(r)), formula});
  }
  return report;
}

MomentReport walk_report(int n, int i, std::uint64_t k, int r_max, unsigned precision_bits, bool exact,
                         std::optional<double> c) {
  MomentReport report;
  report.model = MomentModel::kICycleWalk;
  report.n = n;
  report.i = i;
  report.k = k;
  report.c = c;
  // Effective cutoff offset when only k is given: k = (1/i) n ln n + c n.
  const double c_eff = c ? *c : static_cast<double>(k) / n - std::log(static_cast<double>(n)) / i;
  const Real mean = cutoff_poisson_mean(i, c_eff, precision_bits);
  report.poisson_mean = mean;
  if (exact) {
    const std::vector<Rational> values = walk_moments_exact(n, i, k, r_max);
    for (int r = 1; r <= r_max; ++r) {
      report.moments.push_back({r, values[static_cast<std::size_t>(r)], poisson_moment(r, mean),
                                "sum_lambda d_lambda ratio^k m_{lambda,r} (exact rational)"});
    }
  } else {
    const std::vector<Real> values = walk_moments(n, i, k, r_max, precision_bits);
    for (int r = 1; r <= r_max; ++r) {
      report.moments.push_back({r, values[static_cast<std::size_t>(r)], poisson_moment(r, mean),
                                "sum_lambda d_lambda ratio^k m_{lambda,r} (log-space power)"});
    }
  }
  return report;
}

}  // namespace permfix
