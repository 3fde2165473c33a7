#ifndef HSNUM_BIGINT_HPP_
#define HSNUM_BIGINT_HPP_

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hsnum {

using BigInt   = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(unsigned n);

// Generalized binomial coefficient: zero for k < 0, and zero for k > n when
// n >= 0. Negative n uses the falling-factorial definition.
BigInt binomial(long long n, long long k);

// base^exp with 0^0 = 1.
BigInt power(const BigInt& base, unsigned exp);

std::string to_string(const BigInt& value);

// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& value);

inline bool is_integral(const Rational& value) {
  return boost::multiprecision::denominator(value) == 1;
}

}  // namespace hsnum

#endif  // HSNUM_BIGINT_HPP_
