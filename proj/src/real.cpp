#include "permfix/real.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace permfix {

namespace {

mpfr_prec_t checked(unsigned bits) {
  if (bits < MPFR_PREC_MIN || bits > MPFR_PREC_MAX) throw std::invalid_argument("precision out of range");
  return static_cast<mpfr_prec_t>(bits);
}

}  // namespace

Real::Real(unsigned precision_bits) {
  mpfr_init2(value_, checked(precision_bits));
  mpfr_set_zero(value_, 1);
}

Real::Real(double value, unsigned precision_bits) {
  mpfr_init2(value_, checked(precision_bits));
  mpfr_set_d(value_, value, MPFR_RNDN);
}

Real::Real(const BigInt& value, unsigned precision_bits) {
  mpfr_init2(value_, checked(precision_bits));
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const Rational& value, unsigned precision_bits) {
  mpfr_init2(value_, checked(precision_bits));
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(const Real& other, unsigned precision_bits) {
  mpfr_init2(value_, precision_bits);
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

void Real::grow_to(const Real& other) {
  if (mpfr_get_prec(other.value_) > mpfr_get_prec(value_)) {
    mpfr_prec_round(value_, mpfr_get_prec(other.value_), MPFR_RNDN);
  }
}

Real& Real::operator+=(const Real& rhs) {
  grow_to(rhs);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  grow_to(rhs);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  grow_to(rhs);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  grow_to(rhs);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real out(*this);
  mpfr_neg(out.value_, out.value_, MPFR_RNDN);
  return out;
}

std::string Real::to_string(int digits) const {
  if (digits <= 0) {
    // Enough decimal digits to round-trip the binary precision.
    digits = static_cast<int>(mpfr_get_prec(value_) * 0.30103) + 2;
  }
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return mpfr_sgn(value_) > 0 ? "inf" : "-inf";
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  int len = mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, value_);
  if (len < 0) throw std::runtime_error("mpfr_snprintf failed");
  if (static_cast<std::size_t>(len) >= buf.size()) {
    buf.resize(static_cast<std::size_t>(len) + 1);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, value_);
  }
  return std::string(buf.data());
}

Real abs(const Real& x) {
  Real out(x.precision());
  mpfr_abs(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real exp(const Real& x) {
  Real out(x.precision());
  mpfr_exp(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real log(const Real& x) {
  Real out(x.precision());
  mpfr_log(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real pow(const Real& base, unsigned long exponent) {
  Real out(base.precision());
  mpfr_pow_ui(out.get(), base.get(), exponent, MPFR_RNDN);
  return out;
}

Real round_half_even(const Real& x) {
  Real out(x.precision());
  mpfr_rint(out.get(), x.get(), MPFR_RNDN);
  return out;
}

}  // namespace permfix
