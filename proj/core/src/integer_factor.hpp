#ifndef KUMMER_SRC_INTEGER_FACTOR_HPP_
#define KUMMER_SRC_INTEGER_FACTOR_HPP_

#include <utility>
#include <vector>

#include <gmpxx.h>

namespace kummer::detail {

/* Factorization of n > 0 into (prime, exponent), primes ascending.
 * Trial division to a small bound, then Pollard rho (Brent). */
std::vector<std::pair<mpz_class, unsigned>> factor_integer(mpz_class n);

/* s with s^2 = -1 (mod p), for a prime p = 1 (mod 4). */
mpz_class sqrt_minus_one(mpz_class const& p);

}  // namespace kummer::detail

#endif  // KUMMER_SRC_INTEGER_FACTOR_HPP_
