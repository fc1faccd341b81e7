#ifndef RELCLASS_CYCLOTOMIC_HPP
#define RELCLASS_CYCLOTOMIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace relclass {

/// Exact element of Z[zeta_{2n}] for 2-power 2n, stored on the power basis
/// of Z[x]/(x^n + 1): coeffs[i] is the coefficient of zeta^i, 0 <= i < n.
/// (x^n + 1 is the 2n-th cyclotomic polynomial when 2n is a 2-power, so
/// this quotient really is the ring of integers.) Values are always fully
/// reduced; x^n folds to -1. Plain value semantics throughout.
class CycInt {
public:
    // Zero element of Z[zeta_{2n}]; n must be a 2-power >= 2.
    explicit CycInt(uint32_t half_degree);
    CycInt(uint32_t half_degree, std::vector<mpz_class> coeffs);

    static CycInt from_integer(uint32_t half_degree, const mpz_class& c);

    // zeta_{2n}^e as a signed monomial; e may be any integer.
    static CycInt root_of_unity(uint32_t half_degree, int64_t e);

    uint32_t half_degree() const { return n_; }
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }
    const mpz_class& coeff(size_t i) const { return coeffs_[i]; }

    bool is_zero() const;
    bool operator==(const CycInt& other) const = default;

    CycInt operator+(const CycInt& rhs) const;
    CycInt operator-(const CycInt& rhs) const;
    CycInt operator*(const CycInt& rhs) const;
    CycInt operator-() const;
    CycInt operator*(const mpz_class& c) const;

    // Galois conjugate sigma_k: zeta -> zeta^k, k odd mod 2n.
    // Throws InvalidAutomorphism for even k.
    CycInt conjugate(uint64_t k) const;

    // Absolute norm: product of sigma_k over odd k in (0, 2n). The product
    // must collapse to a rational integer; a surviving non-constant
    // coefficient throws InternalInconsistency (it would mean corrupted
    // arithmetic, not a property of the input).
    mpz_class norm() const;

    // a/d with d dividing every coefficient; NotDivisible carries the first
    // offending coefficient index.
    CycInt exact_div(const mpz_class& d) const;

    // gcd of |coefficients| (0 for the zero element).
    mpz_class content() const;

    // Human-readable form like "6 + 2*z" (z = zeta_{2n}).
    std::string to_string() const;

private:
    uint32_t n_;
    std::vector<mpz_class> coeffs_;
};

/// Element of Q(zeta_{2n}) as CycInt numerator over a positive integer
/// denominator, kept normalized: gcd(content(num), den) = 1.
class CycRational {
public:
    CycRational(CycInt numerator, mpz_class denominator);

    const CycInt& numerator() const { return num_; }
    const mpz_class& denominator() const { return den_; }

    bool is_integral() const { return den_ == 1; }

    // Multiplies by an integer and renormalizes.
    CycRational scaled(const mpz_class& c) const;

    // Requires den == 1.
    const CycInt& as_integral() const;

    std::string to_string() const;

private:
    void normalize();

    CycInt num_;
    mpz_class den_;
};

} // namespace relclass

#endif
