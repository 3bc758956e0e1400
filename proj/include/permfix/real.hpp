#pragma once

#include <mpfr.h>

#include <cstdint>
#include <string>

#include "permfix/bigint.hpp"

namespace permfix {

inline constexpr unsigned kDefaultPrecisionBits = 128;
inline constexpr unsigned kMinPrecisionBits = 80;

// Owning handle on an MPFR value with an explicit precision. Binary
// operations produce a result at the larger of the two operand precisions;
// all rounding is to nearest.
class Real {
 public:
  explicit Real(unsigned precision_bits = kDefaultPrecisionBits);
  Real(double value, unsigned precision_bits);
  Real(const BigInt& value, unsigned precision_bits);
  Real(const Rational& value, unsigned precision_bits);
  Real(const Real& other);
  Real(const Real& other, unsigned precision_bits);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  unsigned precision() const { return static_cast<unsigned>(mpfr_get_prec(value_)); }
  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }

  // Decimal rendering with `digits` significant digits, e.g. "1.2345e+00".
  std::string to_string(int digits = 0) const;

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);

  friend Real operator+(Real lhs, const Real& rhs) { return lhs += rhs; }
  friend Real operator-(Real lhs, const Real& rhs) { return lhs -= rhs; }
  friend Real operator*(Real lhs, const Real& rhs) { return lhs *= rhs; }
  friend Real operator/(Real lhs, const Real& rhs) { return lhs /= rhs; }
  Real operator-() const;

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return b < a; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.value_, b.value_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return b <= a; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

 private:
  void grow_to(const Real& other);

  mpfr_t value_;
};

Real abs(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real pow(const Real& base, unsigned long exponent);
// Round to the nearest integer, ties to even.
Real round_half_even(const Real& x);

}  // namespace permfix
