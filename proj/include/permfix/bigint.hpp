#pragma once

#include <gmpxx.h>

#include <string>

namespace permfix {

// Exact integers and rationals. Every count in the library (dimensions,
// skew tableaux, Stirling numbers, multiplicities) is a BigInt.
using BigInt = mpz_class;
using Rational = mpq_class;

BigInt factorial(unsigned long n);

// num/den in lowest terms; den must be nonzero.
inline Rational ratio(const BigInt& num, const BigInt& den) {
  Rational out(num, den);
  out.canonicalize();
  return out;
}

// C(n, k) for n >= 0; zero outside 0 <= k <= n.
BigInt binomial(long n, long k);

// Exact integer power of a rational.
Rational pow(const Rational& base, unsigned long exponent);

inline std::string to_string(const BigInt& v) { return v.get_str(); }
std::string to_string(const Rational& v);

}  // namespace permfix
