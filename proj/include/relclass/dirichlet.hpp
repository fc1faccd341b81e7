#ifndef RELCLASS_DIRICHLET_HPP
#define RELCLASS_DIRICHLET_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "relclass/unit_group.hpp"

namespace relclass {

/// Dirichlet character mod f, stored as a full value table: values[a] is
/// the exponent e with chi(a) = zeta_order^e, or -1 when gcd(a, f) > 1.
/// `order` is always the exact order (the table is reduced on
/// construction), the conductor is computed eagerly, and parity is
/// chi(-1). Immutable value type.
class DirichletCharacter {
public:
    // Build from images of the group generators: exponents[i] in Z/order
    // with chi(generators[i]) = zeta_order^exponents[i]. Each exponent must
    // be compatible with its generator order. The stated order may shrink
    // to the exact one.
    static DirichletCharacter from_generator_exponents(const UnitGroupStructure& group, uint32_t order,
                                                       const std::vector<uint32_t>& exponents);

    uint64_t modulus() const { return modulus_; }
    uint32_t order() const { return order_; }
    uint64_t conductor() const { return conductor_; }
    int parity() const { return parity_; }
    bool is_odd() const { return parity_ == -1; }
    const std::vector<int32_t>& values() const { return values_; }

    // Exponent of chi(a) in Z/order, or nullopt when gcd(a, f) > 1.
    std::optional<uint32_t> evaluate(uint64_t a) const;

    // chi^k (exact order of the result is recomputed).
    DirichletCharacter power(uint64_t k) const;

    // The character mod new_modulus induced by this one; requires
    // modulus | new_modulus.
    DirichletCharacter induced_to(uint64_t new_modulus) const;

    bool operator==(const DirichletCharacter& other) const {
        return modulus_ == other.modulus_ && order_ == other.order_ && values_ == other.values_;
    }

private:
    DirichletCharacter(uint64_t modulus, uint32_t order, std::vector<int32_t> values);

    uint64_t modulus_;
    uint32_t order_;
    std::vector<int32_t> values_;
    uint64_t conductor_;
    int parity_;
};

/// Galois orbit of primitive odd characters of exact 2-power order 2n and
/// common conductor; one orbit = one imaginary cyclic field of degree 2n.
/// Members are sorted by value table, members.front() is the canonical
/// representative.
struct FieldOrbit {
    uint64_t conductor = 0;
    uint32_t degree = 0; // 2n
    std::vector<DirichletCharacter> members;

    const DirichletCharacter& representative() const { return members.front(); }
};

// All characters mod f of exact order `order` satisfying the flags, sorted
// by value-table lexicographic order. Empty when none exist.
std::vector<DirichletCharacter> characters_of_exact_order(uint64_t modulus, uint32_t order, bool require_odd,
                                                          bool require_primitive);
std::vector<DirichletCharacter> characters_of_exact_order(const UnitGroupStructure& group, uint32_t order,
                                                          bool require_odd, bool require_primitive);

// Recomputes the conductor from the value table (the constructor caches
// the same computation; this is the checkable definition).
uint64_t conductor_of(const DirichletCharacter& chi);

// Partitions characters (all primitive, odd, same exact 2-power order 2n,
// same conductor) into Galois orbits of size n under chi -> chi^k, k odd.
// Throws MalformedInput when the input is not closed under that action.
std::vector<FieldOrbit> galois_orbits(const std::vector<DirichletCharacter>& chars);

// Exponents of chi at the canonical generators of its modulus, joined as
// a stable text label, e.g. "e1" or "e2-1".
std::string generator_exponent_label(const DirichletCharacter& chi, const UnitGroupStructure& group);

// Conrey-style index of chi: the unit a mod f such that chi coincides with
// the Conrey character chi_f(a, .); computed from the local dlog data via
// CRT. Enables cross-checks against public number-theory databases.
uint64_t conrey_index(const DirichletCharacter& chi);

} // namespace relclass

#endif
