#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

namespace composites {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt num(const BigRat& q) { return boost::multiprecision::numerator(q); }
inline BigInt den(const BigRat& q) { return boost::multiprecision::denominator(q); }

inline BigInt big_gcd(BigInt a, BigInt b) { return boost::multiprecision::gcd(a, b); }
inline BigInt big_lcm(BigInt a, BigInt b) { return boost::multiprecision::lcm(a, b); }
inline BigInt big_abs(const BigInt& a) { return boost::multiprecision::abs(a); }

inline bool is_integer(const BigRat& q) { return den(q) == 1; }

// Trial division; fine for the desk-scale moduli and primes this library meets.
inline bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (BigInt d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

// n = p^k with p prime, k >= 1? Returns (p, k) through the out-params.
inline bool prime_power(const BigInt& n, BigInt& p_out, int& k_out) {
  if (n < 2) return false;
  BigInt m = n;
  BigInt p = 2;
  while (p * p <= m && m % p != 0) p += (p == 2 ? 1 : 2);
  if (m % p != 0) p = m;  // n prime
  int k = 0;
  while (m % p == 0) { m /= p; ++k; }
  if (m != 1) return false;
  p_out = p;
  k_out = k;
  return true;
}

// Prime factorization by trial division, ascending primes.
inline std::vector<std::pair<BigInt, int>> factor_integer(BigInt n) {
  std::vector<std::pair<BigInt, int>> out;
  n = big_abs(n);
  for (BigInt d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    int e = 0;
    while (n % d == 0) { n /= d; ++e; }
    if (e) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline BigInt big_pow(BigInt base, unsigned e) {
  BigInt r = 1;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

inline BigRat rat_pow(BigRat base, unsigned e) {
  BigRat r = 1;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

}  // namespace composites
