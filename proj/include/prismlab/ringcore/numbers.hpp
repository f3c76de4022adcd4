#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace prismlab {

using Z = boost::multiprecision::mpz_int;
using Q = boost::multiprecision::mpq_rational;

inline Z numer(const Q& q) { return boost::multiprecision::numerator(q); }
inline Z denom(const Q& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Q& q) { return denom(q) == 1; }

inline Z ipow(const Z& b, unsigned e) { return boost::multiprecision::pow(b, e); }

inline Q qpow(const Q& b, unsigned e) {
  Q r = 1, x = b;
  while (e) {
    if (e & 1u) r *= x;
    x *= x;
    e >>= 1u;
  }
  return r;
}

inline std::int64_t ipow64(std::int64_t b, unsigned e) {
  std::int64_t r = 1;
  while (e--) r *= b;
  return r;
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline Z factorial(unsigned n) {
  Z r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

// C(n,k) for any integer n (generalized to negative n), k >= 0.
inline Z binom(const Z& n, unsigned k) {
  Z num = 1;
  for (unsigned i = 0; i < k; ++i) num *= (n - i);
  return num / factorial(k);
}

inline Z binom(long n, unsigned k) { return binom(Z(n), k); }

// p-adic valuation; v_p(0) is reported as a large sentinel.
constexpr int kInfVal = 1 << 28;

inline int vp(Z n, long p) {
  if (n == 0) return kInfVal;
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

inline int vp(const Q& q, long p) {
  if (q == 0) return kInfVal;
  return vp(numer(q), p) - vp(denom(q), p);
}

inline Z mod_floor(const Z& a, const Z& m) {
  Z r = a % m;
  if (r < 0) r += m;
  return r;
}

// Inverse of a modulo m; throws if not invertible.
inline Z mod_inverse(const Z& a, const Z& m) {
  Z aa = mod_floor(a, m);
  Z r;
  if (mpz_invert(r.backend().data(), aa.backend().data(), m.backend().data()) == 0)
    throw std::domain_error("not invertible modulo " + m.str());
  return r;
}

// Image of a rational in Z/m when the denominator is a unit mod m.
inline bool try_reduce(const Q& q, const Z& m, Z& out) {
  Z d = denom(q);
  Z g = boost::multiprecision::gcd(d, m);
  if (g != 1) return false;
  out = mod_floor(numer(q) * mod_inverse(d, m), m);
  return true;
}

inline std::string to_string(const Z& z) { return z.str(); }
inline std::string to_string(const Q& q) { return q.str(); }

}  // namespace prismlab
