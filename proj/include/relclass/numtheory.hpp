#ifndef RELCLASS_NUMTHEORY_HPP
#define RELCLASS_NUMTHEORY_HPP

#include <cstdint>
#include <utility>
#include <vector>

// Elementary integer routines shared by the other modules. Everything here
// is exact; moduli and factored values stay within 64 bits (conductors in
// planned scans are <= 1e5, primes passed to the splitting tools may be
// arbitrary 64-bit).

namespace relclass {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m);
uint64_t powmod(uint64_t base, uint64_t exp, uint64_t m);

// Deterministic Miller-Rabin over the full 64-bit range.
bool is_prime_u64(uint64_t n);

// (prime, exponent) pairs in increasing prime order, by trial division.
std::vector<std::pair<uint64_t, unsigned>> factorize(uint64_t n);

uint64_t euler_phi(uint64_t n);

// Exponent of (Z/nZ)^*.
uint64_t carmichael_lambda(uint64_t n);

// Divisors of n in increasing order.
std::vector<uint64_t> divisors(uint64_t n);

// Multiplicative order of a modulo m; requires gcd(a, m) = 1.
uint64_t multiplicative_order_mod(uint64_t a, uint64_t m);

// Primes <= limit, by sieve.
std::vector<uint64_t> primes_up_to(uint64_t limit);

// Solves x = r1 mod m1, x = r2 mod m2 for coprime m1, m2.
uint64_t crt_pair(uint64_t r1, uint64_t m1, uint64_t r2, uint64_t m2);

// Smallest primitive root mod p^k (p odd prime, k >= 1).
uint64_t smallest_primitive_root(uint64_t p, unsigned k);

} // namespace relclass

#endif
