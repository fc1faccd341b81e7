#ifndef RELCLASS_UNIT_GROUP_HPP
#define RELCLASS_UNIT_GROUP_HPP

#include <cstdint>
#include <vector>

namespace relclass {

struct Generator {
    uint64_t residue;
    uint64_t order;
};

/// Cyclic decomposition of (Z/fZ)^* with a full discrete-log table.
///
/// The decomposition is obtained by CRT over the prime powers dividing f:
/// the smallest primitive root for each odd prime power, and <-1> x <5>
/// for the 2-power part when 8 | f. Generators are listed 2-part first
/// (-1 before 5), then odd prime powers by increasing prime, so labels
/// derived from exponent vectors are reproducible across runs.
///
/// Immutable after construction; safe to share across threads.
class UnitGroupStructure {
public:
    static UnitGroupStructure decompose(uint64_t modulus);

    uint64_t modulus() const { return modulus_; }
    uint64_t phi() const { return phi_; }
    const std::vector<Generator>& generators() const { return generators_; }

    // lcm of the generator orders.
    uint64_t exponent() const { return exponent_; }

    bool is_unit(uint64_t a) const;

    // Exponent vector v with prod generators[i].residue^v[i] = a (mod f),
    // each v[i] reduced mod generators[i].order. Throws NonUnit.
    std::vector<uint32_t> discrete_log(uint64_t a) const;

private:
    explicit UnitGroupStructure(uint64_t modulus);
    void build_table();
    void validate() const;

    uint64_t modulus_;
    uint64_t phi_;
    uint64_t exponent_;
    std::vector<Generator> generators_;
    // Flattened table: dlog_[a * generators_.size() + i] is the exponent of
    // generator i in the decomposition of a, or table absent for non-units.
    std::vector<uint32_t> dlog_;
    std::vector<uint8_t> unit_;
};

inline UnitGroupStructure decompose_unit_group(uint64_t modulus) {
    return UnitGroupStructure::decompose(modulus);
}

} // namespace relclass

#endif
