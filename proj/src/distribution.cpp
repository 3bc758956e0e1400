#include "permfix/distribution.hpp"

#include <cmath>
#include <stdexcept>

namespace permfix {

Rational ExactDistribution::total() const {
  Rational sum = 0;
  for (const Rational& p : prob) sum += p;
  return sum;
}

Rational ExactDistribution::moment(int r) const {
  Rational sum = 0;
  for (std::size_t j = 0; j < prob.size(); ++j) {
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), j, static_cast<unsigned long>(r));
    sum += prob[j] * Rational(power);
  }
  return sum;
}

std::vector<double> ExactDistribution::as_doubles() const {
  std::vector<double> out;
  out.reserve(prob.size());
  for (const Rational& p : prob) out.push_back(p.get_d());
  return out;
}

double EmpiricalDistribution::moment(int r) const {
  if (samples == 0) return 0;
  long double sum = 0;
  for (std::size_t j = 0; j < histogram.size(); ++j) {
    sum += static_cast<long double>(histogram[j]) * std::pow(static_cast<long double>(j), r);
  }
  return static_cast<double>(sum / static_cast<long double>(samples));
}

double EmpiricalDistribution::moment_stderr(int r) const {
  if (samples < 2) return 0;
  const long double mean = moment(r);
  long double ss = 0;
  for (std::size_t j = 0; j < histogram.size(); ++j) {
    const long double d = std::pow(static_cast<long double>(j), r) - mean;
    ss += static_cast<long double>(histogram[j]) * d * d;
  }
  const long double var = ss / static_cast<long double>(samples - 1);
  return static_cast<double>(std::sqrt(var / static_cast<long double>(samples)));
}

std::vector<double> EmpiricalDistribution::frequencies() const {
  std::vector<double> out(histogram.size(), 0.0);
  if (samples == 0) return out;
  for (std::size_t j = 0; j < histogram.size(); ++j) {
    out[j] = static_cast<double>(histogram[j]) / static_cast<double>(samples);
  }
  return out;
}

EmpiricalDistribution& EmpiricalDistribution::operator+=(const EmpiricalDistribution& other) {
  if (histogram.size() < other.histogram.size()) histogram.resize(other.histogram.size(), 0);
  for (std::size_t j = 0; j < other.histogram.size(); ++j) histogram[j] += other.histogram[j];
  samples += other.samples;
  return *this;
}

double tv_to_poisson(std::span<const double> prob, double mean) {
  if (mean < 0) throw std::invalid_argument("negative Poisson mean");
  double sum = 0;
  double covered = 0;
  double pmf = std::exp(-mean);
  for (std::size_t j = 0; j < prob.size(); ++j) {
    if (j > 0) pmf *= mean / static_cast<double>(j);
    sum += std::abs(prob[j] - pmf);
    covered += pmf;
  }
  const double tail = std::max(0.0, 1.0 - covered);
  return 0.5 * (sum + tail);
}

double tv_to_poisson(const ExactDistribution& dist, double mean) {
  const auto p = dist.as_doubles();
  return tv_to_poisson(p, mean);
}

double tv_to_poisson(const EmpiricalDistribution& dist, double mean) {
  const auto p = dist.frequencies();
  return tv_to_poisson(p, mean);
}

}  // namespace permfix
