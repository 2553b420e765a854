#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace fibredim {

/// Miller-Rabin via GMP; never reports a prime as composite and the error
/// probability on composites is negligible at the repetition count used.
bool is_probable_prime(const mpz_class& n);

/// Prime factorization (trial division + Pollard rho), primes ascending.
/// Requires n >= 1; returns {} for n == 1.
std::vector<std::pair<mpz_class, unsigned>> factorize(mpz_class n);

/// Distinct prime divisors of n, ascending. Requires n >= 1.
std::vector<mpz_class> prime_divisors(const mpz_class& n);

mpz_class gcd(const mpz_class& a, const mpz_class& b);
mpz_class lcm(const mpz_class& a, const mpz_class& b);

/// g = gcd(a, b) = u*a + v*b with g >= 0.
void ext_gcd(const mpz_class& a, const mpz_class& b, mpz_class& g, mpz_class& u, mpz_class& v);

/// Inverse of a modulo the prime p; requires a != 0 mod p.
mpz_class mod_inverse(const mpz_class& a, const mpz_class& p);

std::string to_decimal(const mpz_class& n);

}  // namespace fibredim
