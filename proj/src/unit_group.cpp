#include "relclass/unit_group.hpp"

#include <numeric>
#include <string>

#include "relclass/errors.hpp"
#include "relclass/numtheory.hpp"

namespace relclass {

UnitGroupStructure::UnitGroupStructure(uint64_t modulus) : modulus_(modulus), phi_(1), exponent_(1) {}

UnitGroupStructure UnitGroupStructure::decompose(uint64_t modulus) {
    if (modulus == 0) throw MalformedInput("decompose_unit_group: modulus must be positive");
    UnitGroupStructure g(modulus);
    g.phi_ = euler_phi(modulus);

    auto factors = factorize(modulus);
    // 2-part first so the (-1, 5) pair leads every generator list.
    for (auto [p, e] : factors) {
        if (p != 2 || e == 1) continue; // (Z/2)^* is trivial
        uint64_t q = uint64_t{1} << e;
        uint64_t rest = modulus / q;
        uint64_t minus_one = rest == 1 ? q - 1 : crt_pair(q - 1, q, 1, rest);
        g.generators_.push_back({minus_one, 2});
        if (e >= 3) {
            uint64_t five = rest == 1 ? 5 : crt_pair(5 % q, q, 1, rest);
            g.generators_.push_back({five, uint64_t{1} << (e - 2)});
        }
    }
    for (auto [p, e] : factors) {
        if (p == 2) continue;
        uint64_t q = 1;
        for (unsigned i = 0; i < e; ++i) q *= p;
        uint64_t rest = modulus / q;
        uint64_t root = smallest_primitive_root(p, e);
        uint64_t lifted = rest == 1 ? root : crt_pair(root, q, 1, rest);
        g.generators_.push_back({lifted, q / p * (p - 1)});
    }

    for (const auto& gen : g.generators_) g.exponent_ = std::lcm(g.exponent_, gen.order);
    g.build_table();
    g.validate();
    return g;
}

void UnitGroupStructure::build_table() {
    size_t k = generators_.size();
    unit_.assign(modulus_, 0);
    dlog_.assign(modulus_ * k, 0);

    std::vector<uint32_t> v(k, 0);
    uint64_t cur = 1 % modulus_;
    uint64_t count = 0;
    while (true) {
        if (unit_[cur]) {
            throw InternalInconsistency("unit group decomposition hits residue " + std::to_string(cur) +
                                        " twice (mod " + std::to_string(modulus_) + ")");
        }
        unit_[cur] = 1;
        for (size_t i = 0; i < k; ++i) dlog_[cur * k + i] = v[i];
        ++count;

        // Odometer step; multiplying a wrapped digit order-many times is a
        // net no-op, so `cur` stays in sync with `v`.
        size_t i = k;
        bool done = true;
        while (i > 0) {
            --i;
            cur = mulmod(cur, generators_[i].residue % modulus_, modulus_);
            if (++v[i] < generators_[i].order) {
                done = false;
                break;
            }
            v[i] = 0;
        }
        if (done) break;
    }
    if (count != phi_) {
        throw InternalInconsistency("unit group decomposition covers " + std::to_string(count) +
                                    " residues, expected phi = " + std::to_string(phi_));
    }
}

void UnitGroupStructure::validate() const {
    uint64_t prod = 1;
    for (const auto& gen : generators_) {
        prod *= gen.order;
        if (powmod(gen.residue, gen.order, modulus_) != 1 % modulus_) {
            throw InternalInconsistency("generator order not annihilating");
        }
        for (auto [p, e] : factorize(gen.order)) {
            (void)e;
            if (powmod(gen.residue, gen.order / p, modulus_) == 1 % modulus_) {
                throw InternalInconsistency("generator order not exact");
            }
        }
    }
    if (prod != phi_) throw InternalInconsistency("product of generator orders != phi");
}

bool UnitGroupStructure::is_unit(uint64_t a) const {
    return unit_[a % modulus_] != 0;
}

std::vector<uint32_t> UnitGroupStructure::discrete_log(uint64_t a) const {
    uint64_t r = a % modulus_;
    if (!unit_[r]) {
        throw NonUnit("discrete_log: " + std::to_string(a) + " is not a unit mod " + std::to_string(modulus_));
    }
    size_t k = generators_.size();
    return std::vector<uint32_t>(dlog_.begin() + r * k, dlog_.begin() + (r + 1) * k);
}

} // namespace relclass
