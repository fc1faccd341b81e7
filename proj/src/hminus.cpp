#include "relclass/hminus.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "relclass/errors.hpp"
#include "relclass/numtheory.hpp"

namespace relclass {

namespace {

void require_usable(const DirichletCharacter& chi) {
    uint32_t two_n = chi.order();
    if (two_n < 4 || (two_n & (two_n - 1)) != 0) {
        throw MalformedInput("character order must be a 2-power >= 4, got " + std::to_string(two_n));
    }
    if (!chi.is_odd()) throw MalformedInput("character must be odd");
    if (chi.conductor() != chi.modulus()) throw MalformedInput("character must be primitive");
}

// One compensated accumulator per real component.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;
    void add(double x) {
        double y = x - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

} // namespace

CycInt character_sum(const DirichletCharacter& chi) {
    require_usable(chi);
    uint32_t two_n = chi.order();
    uint32_t n = two_n / 2;
    uint64_t f = chi.modulus();

    // Coefficients stay below f^2, well within 64 bits for every planned
    // conductor range.
    std::vector<int64_t> acc(n, 0);
    for (uint64_t a = 1; a < f; ++a) {
        auto e = chi.evaluate(a);
        if (!e) continue;
        uint32_t r = *e;
        if (r < n) {
            acc[r] += static_cast<int64_t>(a);
        } else {
            acc[r - n] -= static_cast<int64_t>(a);
        }
    }
    std::vector<mpz_class> coeffs(n);
    for (uint32_t i = 0; i < n; ++i) coeffs[i] = acc[i];
    return CycInt(n, std::move(coeffs));
}

std::pair<uint64_t, uint32_t> w_and_q(const FieldOrbit& orbit) {
    uint64_t ell = orbit.degree + 1;
    if (is_prime_u64(ell) && orbit.conductor == ell) {
        return {2 * ell, 1};
    }
    return {2, 1};
}

CycInt scaled_l_at_zero(const DirichletCharacter& chi, uint64_t w) {
    CycInt s = character_sum(chi);
    return (-s * mpz_class(w)).exact_div(mpz_class(chi.modulus()));
}

double analytic_oracle(const FieldOrbit& orbit) {
    auto [w, q] = w_and_q(orbit);
    uint64_t f = orbit.conductor;
    uint32_t two_n = orbit.degree;
    uint32_t n = two_n / 2;

    double product = 1.0; // of |L(0, chi)| over the orbit
    for (const auto& chi : orbit.members) {
        KahanSum re, im;
        for (uint64_t a = 1; a < f; ++a) {
            auto e = chi.evaluate(a);
            if (!e) continue;
            double theta = 2.0 * std::numbers::pi * static_cast<double>(*e) / static_cast<double>(two_n);
            re.add(static_cast<double>(a) * std::cos(theta));
            im.add(static_cast<double>(a) * std::sin(theta));
        }
        double abs_s = std::hypot(re.sum, im.sum);
        product *= abs_s / static_cast<double>(f);
    }
    return std::ldexp(static_cast<double>(q) * static_cast<double>(w) * product, -static_cast<int>(n));
}

HMinusRecord h_minus(const FieldOrbit& orbit) {
    if (orbit.members.empty()) throw MalformedInput("h_minus: empty orbit");
    const auto& chi = orbit.representative();
    require_usable(chi);
    uint32_t two_n = orbit.degree;
    uint32_t n = two_n / 2;
    if (chi.order() != two_n || chi.conductor() != orbit.conductor || orbit.members.size() != n) {
        throw MalformedInput("h_minus: orbit metadata inconsistent with its representative");
    }

    auto [w, q] = w_and_q(orbit);
    HMinusRecord rec{orbit, w, q, scaled_l_at_zero(chi, w), 0, 0, false, 0.0};
    rec.norm_value = rec.scaled_l_value.norm();
    if (rec.norm_value == 0) {
        throw ZeroLValue("h_minus: L(0, chi) vanished for conductor " + std::to_string(orbit.conductor));
    }

    auto field_context = [&] {
        return "conductor " + std::to_string(orbit.conductor) + ", degree " + std::to_string(two_n);
    };

    // h^- = Q * w * N(A) / (w^n * 2^n)
    mpz_class denom;
    mpz_class wz(static_cast<unsigned long>(w));
    mpz_pow_ui(denom.get_mpz_t(), wz.get_mpz_t(), n);
    denom <<= n;
    mpz_class numer = rec.norm_value * w * q;
    if (!mpz_divisible_p(numer.get_mpz_t(), denom.get_mpz_t())) {
        throw NonIntegralResult("h_minus: Q*w*N(A) not divisible by w^n*2^n at " + field_context());
    }
    mpz_divexact(rec.h_minus.get_mpz_t(), numer.get_mpz_t(), denom.get_mpz_t());
    if (rec.h_minus < 1) {
        throw NonIntegralResult("h_minus: nonpositive class number at " + field_context());
    }

    uint64_t ell = two_n + 1;
    if (is_prime_u64(ell) && orbit.conductor == ell) {
        rec.eq4_applicable = true;
        // 2^{2n-1} * l^{n-1} * h^- must equal N(2*l*L(0,chi)) = N(A).
        mpz_class lhs;
        mpz_class lz(static_cast<unsigned long>(ell));
        mpz_pow_ui(lhs.get_mpz_t(), lz.get_mpz_t(), n - 1);
        lhs *= rec.h_minus;
        lhs <<= (2 * n - 1);
        if (lhs != rec.norm_value) {
            throw NonIntegralResult("h_minus: cyclotomic-case identity failed at " + field_context());
        }
    }

    rec.oracle_float = analytic_oracle(orbit);
    double delta = std::abs(rec.oracle_float - rec.h_minus.get_d());
    if (!(delta < 0.1)) {
        throw InternalInconsistency("h_minus: analytic oracle disagrees with exact value at " + field_context() +
                                    " (exact " + rec.h_minus.get_str() + ", oracle " +
                                    std::to_string(rec.oracle_float) + ")");
    }
    return rec;
}

} // namespace relclass
