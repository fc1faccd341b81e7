#ifndef RELCLASS_HMINUS_HPP
#define RELCLASS_HMINUS_HPP

#include <gmpxx.h>

#include <cstdint>

#include "relclass/cyclotomic.hpp"
#include "relclass/dirichlet.hpp"

namespace relclass {

/// Everything computed for one imaginary cyclic field of 2-power degree 2n:
/// the exact relative class number together with its intermediates and the
/// floating-point cross-check. Invariants certified at construction:
///   q_index * w * norm_value == h_minus * w^n * 2^n          (exactly)
///   2^{2n-1} l^{n-1} h_minus == norm_value  when eq4_applicable
///   |oracle_float - h_minus| < oracle guard
struct HMinusRecord {
    FieldOrbit orbit;
    uint64_t w = 0;
    uint32_t q_index = 1; // always 1 for these fields
    CycInt scaled_l_value; // w * L(0, chi) for the representative
    mpz_class norm_value;
    mpz_class h_minus;
    bool eq4_applicable = false; // 2n+1 = l prime and conductor = l
    double oracle_float = 0.0;
};

// S = sum_{a=1}^{f} chi(a) * a, exact in Z[zeta_{2n}]. This is the
// numerator of L(0, chi) = -S/f. Requires chi odd, primitive, of exact
// 2-power order >= 4.
CycInt character_sum(const DirichletCharacter& chi);

// (w, Q) for the field the orbit identifies: Q = 1 always; w = 2*l when
// l = 2n+1 is prime and the conductor equals l (the field is then the
// full l-th cyclotomic field), otherwise w = 2.
std::pair<uint64_t, uint32_t> w_and_q(const FieldOrbit& orbit);

// w * L(0, chi) = (-w * S) / f, with integrality asserted, not assumed:
// a NotDivisible escape here falsifies the integrality statement the whole
// computation rests on (in practice it means an arithmetic bug).
CycInt scaled_l_at_zero(const DirichletCharacter& chi, uint64_t w);

// Relative class number of the orbit's field via the norm formula
//   h^- = Q * w * N(A) / (w^n * 2^n),  A = w * L(0, chi),
// with exact division enforced, the l-branch identity re-checked, and the
// analytic oracle compared against the exact value (guard 0.1, calibrated
// for the planned scan ranges). Throws NonIntegralResult / ZeroLValue on
// falsification.
HMinusRecord h_minus(const FieldOrbit& orbit);

// Independent floating-point evaluation of the same class number via
//   Q * w * 2^{-n} * prod_{chi in orbit} |S_chi| / f
// in complex doubles with compensated summation; shares nothing with the
// exact cyclotomic path.
double analytic_oracle(const FieldOrbit& orbit);

} // namespace relclass

#endif
