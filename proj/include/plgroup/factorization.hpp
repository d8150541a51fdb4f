#ifndef PLGROUP_FACTORIZATION_HPP
#define PLGROUP_FACTORIZATION_HPP

/// Prime factorization of positive rationals.
///
/// This is the exact substrate for all slope-lattice computations: a positive
/// rational is represented by its (finite) vector of prime exponents, and
/// multiplicative questions become integer linear algebra.

#include <map>
#include <stdexcept>
#include <vector>

#include "plgroup/rational.hpp"

namespace plgroup {

/// Map prime -> nonzero exponent.  The empty vector is the rational 1.
using PrimeExponentVector = std::map<Integer, long>;

namespace detail {

/// Incrementally extended prime table shared by all factorizations.
/// Thread-compatible only; the library is used single-threaded per run.
inline std::vector<Integer>& prime_table() {
  static std::vector<Integer> primes{2, 3, 5, 7, 11, 13};
  return primes;
}

inline const Integer& nth_prime(std::size_t n) {
  auto& primes = prime_table();
  while (primes.size() <= n) {
    Integer c = primes.back() + 2;
    for (;;) {
      bool composite = false;
      for (const Integer& p : primes) {
        if (p * p > c) break;
        if (c % p == 0) {
          composite = true;
          break;
        }
      }
      if (!composite) break;
      c += 2;
    }
    primes.push_back(c);
  }
  return primes[n];
}

}  // namespace detail

/// Integers whose absolute value exceeds this bound are rejected by
/// factorize() instead of being ground through trial division.
inline Integer default_factor_limit() { return Integer(1) << 256; }

/// Trial-division factorization of a positive integer.
inline void factorize_integer(Integer n, long exponent_sign,
                              PrimeExponentVector& out,
                              const Integer& limit) {
  if (n <= 0) throw std::invalid_argument("factorize: nonpositive integer");
  if (n > limit)
    throw std::invalid_argument("factorize: integer exceeds factor limit");
  std::size_t idx = 0;
  while (n > 1) {
    const Integer& p = detail::nth_prime(idx);
    if (p * p > n) {
      out[n] += exponent_sign;  // remaining n is prime
      break;
    }
    long e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e != 0) out[p] += exponent_sign * e;
    ++idx;
  }
}

/// Exact factorization of a positive rational: product over primes of
/// prime^exponent reconstructs the input.  Throws on q <= 0 and on
/// numerators/denominators beyond `limit`.
inline PrimeExponentVector factorize(const Rational& q,
                                     const Integer& limit = default_factor_limit()) {
  if (q <= 0) throw std::invalid_argument("factorize: input must be positive");
  PrimeExponentVector out;
  factorize_integer(numerator(q), +1, out, limit);
  factorize_integer(denominator(q), -1, out, limit);
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

/// Inverse of factorize.
inline Rational reconstruct(const PrimeExponentVector& v) {
  Rational r(1);
  for (const auto& [p, e] : v) r *= rat_pow(Rational(p), e);
  return r;
}

}  // namespace plgroup

#endif  // PLGROUP_FACTORIZATION_HPP
