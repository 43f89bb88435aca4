#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyclojac {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

inline bool is_prime(std::int64_t n) { return is_prime(Integer(static_cast<long>(n))); }

inline bool is_perfect_square(const Integer& n) {
  if (n < 0) return false;
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

/// A rational in lowest terms is a square iff numerator and denominator both are.
inline bool is_rational_square(const Rational& q) {
  if (q < 0) return false;
  return is_perfect_square(Integer(q.get_num())) && is_perfect_square(Integer(q.get_den()));
}

inline Integer int_pow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline std::int64_t ipow64(std::int64_t base, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

inline Integer factorial(int n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

inline std::vector<std::int64_t> sorted_divisors(std::int64_t m) {
  std::vector<std::int64_t> lo, hi;
  for (std::int64_t d = 1; d * d <= m; ++d) {
    if (m % d == 0) {
      lo.push_back(d);
      if (d != m / d) hi.push_back(m / d);
    }
  }
  lo.insert(lo.end(), hi.rbegin(), hi.rend());
  return lo;
}

inline std::vector<std::int64_t> primes_up_to(std::int64_t bound) {
  std::vector<std::int64_t> out;
  if (bound < 2) return out;
  std::vector<bool> sieve(static_cast<std::size_t>(bound) + 1, true);
  for (std::int64_t i = 2; i <= bound; ++i) {
    if (!sieve[static_cast<std::size_t>(i)]) continue;
    out.push_back(i);
    for (std::int64_t j = i * i; j <= bound; j += i) sieve[static_cast<std::size_t>(j)] = false;
  }
  return out;
}

/// Writes m = p^r for prime p, or returns false.
inline bool factor_prime_power(std::int64_t m, std::int64_t& p, int& r) {
  if (m < 2) return false;
  std::int64_t q = m;
  for (std::int64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      r = 0;
      while (q % d == 0) {
        q /= d;
        ++r;
      }
      return q == 1;
    }
  }
  p = q;
  r = 1;
  return true;
}

}  // namespace cyclojac
