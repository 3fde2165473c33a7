#include "hsnum/bigint.hpp"

namespace hsnum {

BigInt factorial(unsigned n) {
  BigInt result = 1;
  for (unsigned i = 2; i <= n; ++i) {
    result *= i;
  }
  return result;
}

BigInt binomial(long long n, long long k) {
  if (k < 0 || (n >= 0 && k > n)) {
    return 0;
  }
  if (n >= 0 && k > n - k) {
    k = n - k;
  }
  BigInt num = 1;
  for (long long i = 0; i < k; ++i) {
    num *= BigInt(n - i);
    num /= BigInt(i + 1);  // exact: product of i+1 consecutive integers
  }
  return num;
}

BigInt power(const BigInt& base, unsigned exp) {
  BigInt result = 1;
  BigInt b      = base;
  while (exp != 0) {
    if (exp & 1U) {
      result *= b;
    }
    exp >>= 1U;
    if (exp != 0) {
      b *= b;
    }
  }
  return result;
}

std::string to_string(const BigInt& value) {
  return value.str();
}

std::string to_string(const Rational& value) {
  auto const& den = boost::multiprecision::denominator(value);
  auto const& num = boost::multiprecision::numerator(value);
  if (den == 1) {
    return num.str();
  }
  return num.str() + "/" + den.str();
}

}  // namespace hsnum
