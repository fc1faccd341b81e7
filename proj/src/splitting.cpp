#include "relclass/splitting.hpp"

#include <algorithm>
#include <string>

#include "relclass/errors.hpp"
#include "relclass/numtheory.hpp"

namespace relclass {

namespace {

void require_odd_prime(uint64_t p) {
    if (p < 3 || p % 2 == 0 || !is_prime_u64(p)) {
        throw InvalidPrime("expected an odd prime, got " + std::to_string(p));
    }
}

void require_two_power(uint32_t v, const char* what) {
    if (v < 2 || (v & (v - 1)) != 0) {
        throw MalformedInput(std::string(what) + " must be a 2-power >= 2");
    }
}

// Dense polynomials over GF(p), low degree; coefficients in [0, p).
using Poly = std::vector<uint64_t>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// a*b mod (monic `mod`, p).
Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& mod, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            c[i + j] = (c[i + j] + mulmod(a[i], b[j], p)) % p;
        }
    }
    size_t m = mod.size() - 1;
    for (size_t i = c.size(); i-- > m;) {
        uint64_t lead = c[i];
        if (lead == 0) continue;
        c[i] = 0;
        for (size_t j = 0; j < m; ++j) {
            c[i - m + j] = (c[i - m + j] + p - mulmod(lead, mod[j], p)) % p;
        }
    }
    c.resize(std::min(c.size(), m));
    trim(c);
    return c;
}

// Remainder of a by monic b.
Poly poly_mod(Poly a, const Poly& b, uint64_t p) {
    size_t m = b.size() - 1;
    trim(a);
    while (a.size() > m) {
        uint64_t lead = a.back();
        size_t shift = a.size() - 1 - m;
        for (size_t j = 0; j < m; ++j) {
            a[shift + j] = (a[shift + j] + p - mulmod(lead, b[j], p)) % p;
        }
        a.pop_back();
        trim(a);
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b, uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // Make b monic before using it as a divisor.
        uint64_t inv = powmod(b.back(), p - 2, p);
        for (auto& c : b) c = mulmod(c, inv, p);
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        uint64_t inv = powmod(a.back(), p - 2, p);
        for (auto& c : a) c = mulmod(c, inv, p);
    }
    return a;
}

Poly poly_divexact(const Poly& a, const Poly& b, uint64_t p) {
    // a / b for monic b dividing a.
    Poly rem = a;
    trim(rem);
    size_t m = b.size() - 1;
    Poly quot(rem.size() >= m ? rem.size() - m : 0, 0);
    while (rem.size() > m) {
        uint64_t lead = rem.back();
        size_t shift = rem.size() - 1 - m;
        quot[shift] = lead;
        if (lead != 0) {
            for (size_t j = 0; j <= m; ++j) {
                rem[shift + j] = (rem[shift + j] + p - mulmod(lead, b[j], p)) % p;
            }
        }
        trim(rem);
        if (rem.size() > shift + m) rem.resize(shift + m), trim(rem);
    }
    return quot;
}

} // namespace

uint32_t multiplicative_order(uint64_t p, uint32_t two_n) {
    require_odd_prime(p);
    require_two_power(two_n, "2n");
    return static_cast<uint32_t>(multiplicative_order_mod(p % two_n, two_n));
}

std::vector<uint32_t> factor_degrees_mod_p(uint32_t n, uint64_t p) {
    require_odd_prime(p);
    require_two_power(n, "n");

    // f = x^n + 1, squarefree over GF(p) since p is odd.
    Poly f(n + 1, 0);
    f[0] = 1;
    f[n] = 1;

    std::vector<uint32_t> degrees;
    Poly h{0, 1}; // tracks x^{p^d} mod f
    uint32_t d = 0;
    while (f.size() > 1) {
        ++d;
        uint32_t deg_f = static_cast<uint32_t>(f.size() - 1);
        if (2 * d > deg_f) {
            // What remains is a single irreducible factor.
            degrees.push_back(deg_f);
            break;
        }
        h = poly_mod(h, f, p);
        // h <- h^p mod f
        Poly hp{1};
        Poly base = h;
        uint64_t e = p;
        while (e) {
            if (e & 1) hp = poly_mul_mod(hp, base, f, p);
            base = poly_mul_mod(base, base, f, p);
            e >>= 1;
        }
        h = hp;
        // gcd(f, h - x) collects all irreducible factors of degree d.
        Poly diff = h;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        trim(diff);
        Poly g = poly_gcd(f, diff, p);
        if (g.size() > 1) {
            uint32_t deg_g = static_cast<uint32_t>(g.size() - 1);
            if (deg_g % d != 0) {
                throw InternalInconsistency("distinct-degree factorization produced a non-multiple degree");
            }
            for (uint32_t i = 0; i < deg_g / d; ++i) degrees.push_back(d);
            f = poly_divexact(f, g, p);
        }
    }
    std::sort(degrees.begin(), degrees.end());
    uint64_t total = 0;
    for (uint32_t deg : degrees) total += deg;
    if (total != n) {
        throw InternalInconsistency("factor degrees do not sum to n");
    }
    return degrees;
}

SplittingReport splitting_report(uint64_t p, uint32_t two_n) {
    require_two_power(two_n, "2n");
    if (two_n < 4) throw MalformedInput("splitting_report: 2n must be >= 4");
    SplittingReport rep;
    rep.p = p;
    rep.two_n = two_n;
    rep.order = multiplicative_order(p, two_n);
    rep.factor_degrees = factor_degrees_mod_p(two_n / 2, p);
    uint32_t n = two_n / 2;
    rep.consistent = true;
    for (uint32_t deg : rep.factor_degrees) {
        if (deg != rep.order) rep.consistent = false;
    }
    if (rep.factor_degrees.size() * rep.order != n) rep.consistent = false;
    return rep;
}

bool squarefree_norm_possible(uint64_t p, uint32_t two_n) {
    require_odd_prime(p);
    require_two_power(two_n, "2n");
    return p % two_n == 1;
}

std::vector<mpz_class> theorem_mechanism_check(const mpz_class& h, uint32_t two_n) {
    require_two_power(two_n, "2n");
    if (h < 1) throw MalformedInput("theorem_mechanism_check: h must be >= 1");

    constexpr uint64_t kTrialBound = 10'000'000;
    std::vector<std::pair<mpz_class, unsigned>> factors;
    mpz_class rest = h;

    auto strip = [&](uint64_t p) {
        if (!mpz_divisible_ui_p(rest.get_mpz_t(), p)) return;
        unsigned e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++e;
        }
        factors.emplace_back(mpz_class(static_cast<unsigned long>(p)), e);
    };

    strip(2);
    for (uint64_t p = 3; p <= kTrialBound && rest > 1; p += 2) {
        if (mpz_class(static_cast<unsigned long>(p)) * p > rest) break;
        strip(p);
    }
    if (rest > 1) {
        if (mpz_probab_prime_p(rest.get_mpz_t(), 40) > 0) {
            factors.emplace_back(rest, 1);
        } else {
            throw FactorizationIncomplete("cofactor " + rest.get_str() + " resists the trial-division budget");
        }
    }

    std::vector<mpz_class> violations;
    for (const auto& [p, e] : factors) {
        if (p == 2) continue;
        if (mpz_class(p % two_n) == 1) continue;
        if (e < 2) violations.push_back(p);
    }
    return violations;
}

} // namespace relclass
