#ifndef RELCLASS_SPLITTING_HPP
#define RELCLASS_SPLITTING_HPP

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace relclass {

/// How an odd prime p behaves in Z[zeta_{2n}], observed through the
/// factorization of x^n + 1 over GF(p): p is unramified (p does not divide
/// 2n), so Z[zeta_{2n}]/(p) = GF(p)[x]/(x^n+1) and the residue degrees are
/// the degrees of the irreducible factors. `consistent` records whether
/// every degree equals the order of p mod 2n with count n/order.
struct SplittingReport {
    uint64_t p = 0;
    uint32_t two_n = 0;
    uint32_t order = 0;                  // order of p in (Z/2nZ)^*
    std::vector<uint32_t> factor_degrees; // sorted multiset
    bool consistent = false;
};

// Smallest f >= 1 with p^f = 1 mod 2n; p odd prime, 2n a 2-power.
uint32_t multiplicative_order(uint64_t p, uint32_t two_n);

// Degrees of the irreducible factors of x^n + 1 over GF(p), via
// distinct-degree factorization (the polynomial is squarefree for odd p).
// Sorted ascending; degrees sum to n.
std::vector<uint32_t> factor_degrees_mod_p(uint32_t n, uint64_t p);

SplittingReport splitting_report(uint64_t p, uint32_t two_n);

// True iff the norm of a prime ideal above p can be squarefree, i.e.
// p = 1 mod 2n.
bool squarefree_norm_possible(uint64_t p, uint32_t two_n);

// Odd primes p | h with p != 1 mod 2n whose square does not divide h.
// For every actual relative class number of a degree-2n field this list is
// empty; a nonempty result on such an input would falsify the divisibility
// mechanism. Factorization budget: trial division to 1e7, then a primality
// check on the cofactor; beyond that FactorizationIncomplete.
std::vector<mpz_class> theorem_mechanism_check(const mpz_class& h, uint32_t two_n);

} // namespace relclass

#endif
