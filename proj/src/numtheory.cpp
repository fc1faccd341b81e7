#include "relclass/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "relclass/errors.hpp"

namespace relclass {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

uint64_t powmod(uint64_t base, uint64_t exp, uint64_t m) {
    if (m == 1) return 0;
    uint64_t r = 1;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This base set is deterministic for all n < 2^64.
    for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::pair<uint64_t, unsigned>> factorize(uint64_t n) {
    std::vector<std::pair<uint64_t, unsigned>> out;
    if (n < 2) return out;
    for (uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

uint64_t euler_phi(uint64_t n) {
    if (n == 0) return 0;
    uint64_t phi = 1;
    for (auto [p, e] : factorize(n)) {
        uint64_t pe = 1;
        for (unsigned i = 1; i < e; ++i) pe *= p;
        phi *= pe * (p - 1);
    }
    return phi;
}

uint64_t carmichael_lambda(uint64_t n) {
    if (n <= 1) return 1;
    uint64_t lam = 1;
    for (auto [p, e] : factorize(n)) {
        uint64_t comp;
        if (p == 2) {
            comp = e == 1 ? 1 : (e == 2 ? 2 : (uint64_t{1} << (e - 2)));
        } else {
            comp = p - 1;
            for (unsigned i = 1; i < e; ++i) comp *= p;
        }
        lam = std::lcm(lam, comp);
    }
    return lam;
}

std::vector<uint64_t> divisors(uint64_t n) {
    std::vector<uint64_t> out{1};
    for (auto [p, e] : factorize(n)) {
        size_t count = out.size();
        uint64_t pe = 1;
        for (unsigned i = 0; i < e; ++i) {
            pe *= p;
            for (size_t j = 0; j < count; ++j) out.push_back(out[j] * pe);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

uint64_t multiplicative_order_mod(uint64_t a, uint64_t m) {
    if (m == 1) return 1;
    a %= m;
    if (std::gcd(a, m) != 1) throw NonUnit("multiplicative_order_mod: argument is not a unit");
    uint64_t lam = carmichael_lambda(m);
    uint64_t order = lam;
    for (auto [p, e] : factorize(lam)) {
        (void)e;
        while (order % p == 0 && powmod(a, order / p, m) == 1) order /= p;
    }
    return order;
}

std::vector<uint64_t> primes_up_to(uint64_t limit) {
    std::vector<uint64_t> primes;
    if (limit < 2) return primes;
    std::vector<bool> sieve(limit + 1, true);
    sieve[0] = sieve[1] = false;
    for (uint64_t i = 2; i * i <= limit; ++i) {
        if (!sieve[i]) continue;
        for (uint64_t j = i * i; j <= limit; j += i) sieve[j] = false;
    }
    for (uint64_t i = 2; i <= limit; ++i) {
        if (sieve[i]) primes.push_back(i);
    }
    return primes;
}

uint64_t crt_pair(uint64_t r1, uint64_t m1, uint64_t r2, uint64_t m2) {
    // x = r1 + m1 * t with t = (r2 - r1) / m1 mod m2.
    uint64_t inv = powmod(m1 % m2, euler_phi(m2) - 1, m2);
    uint64_t diff = (r2 % m2 + m2 - r1 % m2) % m2;
    uint64_t t = mulmod(diff, inv, m2);
    return (r1 + m1 * t) % (m1 * m2);
}

uint64_t smallest_primitive_root(uint64_t p, unsigned k) {
    if (p == 2 || !is_prime_u64(p)) {
        throw MalformedInput("smallest_primitive_root: p must be an odd prime");
    }
    uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i) q *= p;
    uint64_t phi = q / p * (p - 1);
    auto phi_factors = factorize(phi);
    for (uint64_t g = 2; g < q; ++g) {
        if (g % p == 0) continue;
        bool ok = true;
        for (auto [r, e] : phi_factors) {
            (void)e;
            if (powmod(g, phi / r, q) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw InternalInconsistency("smallest_primitive_root: no primitive root found");
}

} // namespace relclass
