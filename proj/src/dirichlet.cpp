#include "relclass/dirichlet.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "relclass/errors.hpp"
#include "relclass/numtheory.hpp"

namespace relclass {

namespace {

uint64_t compute_conductor(uint64_t modulus, const std::vector<int32_t>& values) {
    // Smallest d | f with chi trivial on every unit a = 1 (mod d).
    for (uint64_t d : divisors(modulus)) {
        bool trivial_on_kernel = true;
        for (uint64_t a = 1; a < modulus; a += d) {
            if (values[a] > 0) {
                trivial_on_kernel = false;
                break;
            }
        }
        if (trivial_on_kernel) return d;
    }
    return modulus;
}

} // namespace

DirichletCharacter::DirichletCharacter(uint64_t modulus, uint32_t order, std::vector<int32_t> values)
    : modulus_(modulus), order_(order), values_(std::move(values)) {
    if (order_ == 0 || values_.size() != modulus_) {
        throw MalformedInput("DirichletCharacter: bad order or table length");
    }
    // Reduce to the exact order so every stored exponent is w.r.t. zeta_order
    // with order minimal.
    uint32_t g = order_;
    for (int32_t e : values_) {
        if (e > 0) g = static_cast<uint32_t>(std::gcd<uint64_t>(g, static_cast<uint32_t>(e)));
    }
    if (g > 1) {
        order_ /= g;
        for (auto& e : values_) {
            if (e > 0) e /= static_cast<int32_t>(g);
        }
    }
    conductor_ = compute_conductor(modulus_, values_);
    if (modulus_ >= 3) {
        int32_t em1 = values_[modulus_ - 1];
        if (em1 == 0) {
            parity_ = +1;
        } else if (order_ % 2 == 0 && em1 == static_cast<int32_t>(order_ / 2)) {
            parity_ = -1;
        } else {
            throw InternalInconsistency("character table has chi(-1) not equal to +-1");
        }
    } else {
        parity_ = +1;
    }
}

DirichletCharacter DirichletCharacter::from_generator_exponents(const UnitGroupStructure& group, uint32_t order,
                                                                const std::vector<uint32_t>& exponents) {
    const auto& gens = group.generators();
    if (exponents.size() != gens.size()) {
        throw MalformedInput("from_generator_exponents: one exponent per generator required");
    }
    if (order == 0) throw MalformedInput("from_generator_exponents: order must be >= 1");
    for (size_t i = 0; i < gens.size(); ++i) {
        if ((static_cast<uint64_t>(exponents[i]) * gens[i].order) % order != 0) {
            throw MalformedInput("from_generator_exponents: exponent " + std::to_string(exponents[i]) +
                                 " incompatible with generator order " + std::to_string(gens[i].order));
        }
    }

    uint64_t f = group.modulus();
    std::vector<int32_t> values(f, -1);
    size_t k = gens.size();
    for (uint64_t a = 0; a < f; ++a) {
        if (!group.is_unit(a)) continue;
        auto v = group.discrete_log(a);
        uint64_t e = 0;
        for (size_t i = 0; i < k; ++i) {
            e += static_cast<uint64_t>(v[i]) % order * (exponents[i] % order) % order;
        }
        values[a] = static_cast<int32_t>(e % order);
    }
    return DirichletCharacter(f, order, std::move(values));
}

std::optional<uint32_t> DirichletCharacter::evaluate(uint64_t a) const {
    int32_t e = values_[a % modulus_];
    if (e < 0) return std::nullopt;
    return static_cast<uint32_t>(e);
}

DirichletCharacter DirichletCharacter::power(uint64_t k) const {
    std::vector<int32_t> values(values_);
    for (auto& e : values) {
        if (e >= 0) e = static_cast<int32_t>((static_cast<uint64_t>(e) * (k % order_)) % order_);
    }
    return DirichletCharacter(modulus_, order_, std::move(values));
}

DirichletCharacter DirichletCharacter::induced_to(uint64_t new_modulus) const {
    if (new_modulus == 0 || new_modulus % modulus_ != 0) {
        throw MalformedInput("induced_to: new modulus must be a positive multiple of the old one");
    }
    std::vector<int32_t> values(new_modulus, -1);
    for (uint64_t a = 0; a < new_modulus; ++a) {
        if (std::gcd(a, new_modulus) != 1) continue;
        values[a] = values_[a % modulus_];
    }
    return DirichletCharacter(new_modulus, order_, std::move(values));
}

uint64_t conductor_of(const DirichletCharacter& chi) {
    return compute_conductor(chi.modulus(), chi.values());
}

std::vector<DirichletCharacter> characters_of_exact_order(uint64_t modulus, uint32_t order, bool require_odd,
                                                          bool require_primitive) {
    auto group = decompose_unit_group(modulus);
    return characters_of_exact_order(group, order, require_odd, require_primitive);
}

std::vector<DirichletCharacter> characters_of_exact_order(const UnitGroupStructure& group, uint32_t order,
                                                          bool require_odd, bool require_primitive) {
    std::vector<DirichletCharacter> out;
    uint64_t f = group.modulus();
    if (order == 0) throw MalformedInput("characters_of_exact_order: order must be >= 1");
    if (order >= 2 && f < 3) return out;
    if (require_primitive && f > 2 && f % 4 == 2) return out; // no primitive characters for such moduli
    if (order > 1 && group.exponent() % order != 0) return out;

    const auto& gens = group.generators();
    size_t k = gens.size();
    // Admissible images per generator: chi(gen_i)^{o_i} = 1 forces the
    // exponent to be a multiple of order/gcd(o_i, order).
    std::vector<uint32_t> step(k), choices(k);
    for (size_t i = 0; i < k; ++i) {
        uint32_t g = static_cast<uint32_t>(std::gcd<uint64_t>(gens[i].order, order));
        step[i] = order / g;
        choices[i] = g;
    }

    std::vector<uint32_t> minus_one_dlog;
    if (f >= 3) minus_one_dlog = group.discrete_log(f - 1);

    std::vector<uint32_t> t(k, 0);
    while (true) {
        // Exact order = lcm of the orders of the generator images.
        uint64_t ord = 1;
        for (size_t i = 0; i < k; ++i) {
            uint32_t e = t[i] * step[i];
            ord = std::lcm<uint64_t>(ord, order / std::gcd(e, order));
        }
        if (ord == order) {
            bool take = true;
            if (require_odd && f >= 3) {
                uint64_t e = 0;
                for (size_t i = 0; i < k; ++i) {
                    e += static_cast<uint64_t>(minus_one_dlog[i]) * (t[i] * step[i]) % order;
                }
                take = order % 2 == 0 && (e % order) == order / 2;
            } else if (require_odd) {
                take = false;
            }
            if (take) {
                std::vector<uint32_t> exps(k);
                for (size_t i = 0; i < k; ++i) exps[i] = t[i] * step[i];
                auto chi = DirichletCharacter::from_generator_exponents(group, order, exps);
                if (!require_primitive || chi.conductor() == f) out.push_back(std::move(chi));
            }
        }
        size_t i = k;
        bool done = true;
        while (i > 0) {
            --i;
            if (++t[i] < choices[i]) {
                done = false;
                break;
            }
            t[i] = 0;
        }
        if (done) break;
    }

    std::sort(out.begin(), out.end(),
              [](const DirichletCharacter& a, const DirichletCharacter& b) { return a.values() < b.values(); });
    return out;
}

std::vector<FieldOrbit> galois_orbits(const std::vector<DirichletCharacter>& chars) {
    std::vector<FieldOrbit> orbits;
    if (chars.empty()) return orbits;

    uint32_t two_n = chars.front().order();
    uint64_t f = chars.front().conductor();
    if (two_n < 4 || (two_n & (two_n - 1)) != 0) {
        throw MalformedInput("galois_orbits: order must be a 2-power >= 4");
    }
    for (const auto& chi : chars) {
        if (chi.order() != two_n || chi.conductor() != f || chi.conductor() != chi.modulus() || !chi.is_odd()) {
            throw MalformedInput("galois_orbits: characters must be primitive, odd, of one exact order and conductor");
        }
    }
    uint32_t n = two_n / 2;
    if (chars.size() % n != 0) {
        throw MalformedInput("galois_orbits: character count not a multiple of the orbit size");
    }

    std::vector<bool> used(chars.size(), false);
    // chars are scanned in the given order; callers pass them sorted, which
    // makes each orbit's first-found member its lex-least one.
    auto find_index = [&](const DirichletCharacter& chi) -> size_t {
        for (size_t j = 0; j < chars.size(); ++j) {
            if (!used[j] && chars[j] == chi) return j;
        }
        throw MalformedInput("galois_orbits: input not closed under k-th powers (orbit size mismatch)");
    };

    for (size_t i = 0; i < chars.size(); ++i) {
        if (used[i]) continue;
        FieldOrbit orbit;
        orbit.conductor = f;
        orbit.degree = two_n;
        for (uint64_t kk = 1; kk < two_n; kk += 2) {
            auto member = chars[i].power(kk);
            size_t j = find_index(member);
            used[j] = true;
            orbit.members.push_back(chars[j]);
        }
        if (orbit.members.size() != n) {
            throw MalformedInput("galois_orbits: orbit size differs from n");
        }
        std::sort(orbit.members.begin(), orbit.members.end(),
                  [](const DirichletCharacter& a, const DirichletCharacter& b) { return a.values() < b.values(); });
        orbits.push_back(std::move(orbit));
    }
    std::sort(orbits.begin(), orbits.end(), [](const FieldOrbit& a, const FieldOrbit& b) {
        return a.representative().values() < b.representative().values();
    });
    return orbits;
}

std::string generator_exponent_label(const DirichletCharacter& chi, const UnitGroupStructure& group) {
    if (group.modulus() != chi.modulus()) {
        throw MalformedInput("generator_exponent_label: group modulus mismatch");
    }
    std::string label = "e";
    const auto& gens = group.generators();
    for (size_t i = 0; i < gens.size(); ++i) {
        if (i) label += "-";
        label += std::to_string(*chi.evaluate(gens[i].residue));
    }
    return label;
}

uint64_t conrey_index(const DirichletCharacter& chi) {
    uint64_t f = chi.modulus();
    if (f <= 2) return 1;
    uint32_t order = chi.order();

    uint64_t acc_r = 0, acc_m = 1;
    auto fold = [&](uint64_t r, uint64_t m) {
        if (acc_m == 1) {
            acc_r = r % m;
            acc_m = m;
        } else {
            acc_r = crt_pair(acc_r, acc_m, r, m);
            acc_m *= m;
        }
    };

    for (auto [p, e] : factorize(f)) {
        uint64_t q = 1;
        for (unsigned i = 0; i < e; ++i) q *= p;
        uint64_t rest = f / q;
        auto embed = [&](uint64_t x) { return rest == 1 ? x % f : crt_pair(x % q, q, 1, rest); };

        if (p == 2) {
            if (e == 1) {
                fold(1, 2);
            } else if (e == 2) {
                uint32_t ev = *chi.evaluate(embed(3));
                fold(ev == 0 ? 1 : 3, 4);
            } else {
                uint32_t es = *chi.evaluate(embed(q - 1));
                uint32_t e5 = *chi.evaluate(embed(5));
                uint64_t half = q / 4; // order of 5 mod 2^e
                uint64_t y = (static_cast<uint64_t>(e5) * half / order) % half;
                uint64_t a = powmod(5, y, q);
                if (es != 0) a = q - a;
                fold(a, q);
            }
        } else {
            // Conrey generator: smallest primitive root mod p that stays
            // primitive mod p^2 (hence mod every p^e).
            uint64_t g = 0;
            auto pm1_factors = factorize(p - 1);
            for (uint64_t r = 2; r < p; ++r) {
                bool prim = true;
                for (auto [pr, pe] : pm1_factors) {
                    (void)pe;
                    if (powmod(r, (p - 1) / pr, p) == 1) {
                        prim = false;
                        break;
                    }
                }
                if (prim && powmod(r, p - 1, p * p) != 1) {
                    g = r;
                    break;
                }
            }
            if (g == 0) throw InternalInconsistency("conrey_index: no generator found");
            uint64_t phi_q = q / p * (p - 1);
            uint32_t ev = *chi.evaluate(embed(g));
            uint64_t x = (static_cast<uint64_t>(ev) * phi_q / order) % phi_q;
            fold(powmod(g, x, q), q);
        }
    }
    return acc_r == 0 ? 1 : acc_r;
}

} // namespace relclass
