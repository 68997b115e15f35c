#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "wreathlab/error.hpp"

namespace wreathlab {

/// Exact arbitrary-precision integer used for all orders, counts and class
/// values. Small inputs already produce values far beyond 64 bits.
using BigInt = boost::multiprecision::cpp_int;

/// base^exp over BigInt.
inline BigInt pow_big(std::uint64_t base, std::uint64_t exp) {
  BigInt r = 1;
  BigInt b = base;
  while (exp) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

/// ceil(a / b) for a >= 0, b > 0.
inline BigInt ceil_div(const BigInt& a, const BigInt& b) {
  return (a + b - 1) / b;
}

/// 1 + p + ... + p^(terms-1); zero terms give the empty sum 0.
/// Closed-form quotients like (1 - p^k)/(1 - p) are always evaluated this
/// way so no rational arithmetic ever appears.
inline BigInt geometric_sum(std::uint64_t p, std::uint64_t terms) {
  BigInt sum = 0;
  BigInt pw = 1;
  for (std::uint64_t k = 0; k < terms; ++k) {
    sum += pw;
    pw *= p;
  }
  return sum;
}

/// Deterministic trial-division primality test. Inputs are small primes in
/// practice; rejects 0 and 1.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

inline void require_prime(std::uint64_t p) {
  if (!is_prime(p)) {
    throw DomainError("p = " + std::to_string(p) + " is not prime");
  }
}

/// Checked narrowing for counts that must fit a machine word (explicit
/// group realizations).
inline std::uint64_t to_u64(const BigInt& n, const char* what) {
  if (n < 0 || n > BigInt(UINT64_MAX)) {
    throw DomainError(std::string(what) + " out of machine range: " + n.str());
  }
  return static_cast<std::uint64_t>(n);
}

}  // namespace wreathlab
