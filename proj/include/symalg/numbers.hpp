#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace symalg {

// Exact arbitrary-precision arithmetic. Rationals are kept canonical by
// the backend: gcd(num, den) = 1, den >= 1, zero is 0/1.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

inline bool is_zero(const Rational& q) { return q.is_zero(); }

inline Rational rational_pow(const Rational& base, unsigned long e) {
  Rational acc{1};
  Rational b = base;
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

inline Integer int_pow(const Integer& base, unsigned long e) {
  return boost::multiprecision::pow(base, static_cast<unsigned>(e));
}

inline Integer factorial(unsigned long n) {
  Integer acc{1};
  for (unsigned long i = 2; i <= n; ++i) acc *= i;
  return acc;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Integer acc{1};
  for (unsigned long i = 1; i <= k; ++i) {
    acc *= n - k + i;
    acc /= i;
  }
  return acc;
}

inline bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// "num/den", denominator omitted when 1.
inline std::string to_string(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) s += "/" + denominator(q).str();
  return s;
}

}  // namespace symalg
