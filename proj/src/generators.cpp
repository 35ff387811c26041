#include "rigidwitt/generators.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "rigidwitt/errors.hpp"

namespace rigidwitt {

std::string pack_coeffs(const FieldDesc& field, const std::vector<std::int32_t>& coeffs) {
    const int m = field.witt_modulus();
    if (m == 0) {
        std::string out(coeffs.size() * sizeof(std::int32_t), '\0');
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            const auto v = static_cast<std::uint32_t>(coeffs[i]);
            for (int b = 0; b < 4; ++b) out[4 * i + b] = static_cast<char>((v >> (8 * b)) & 0xFFu);
        }
        return out;
    }
    const int width = m == 4 ? 2 : 1;
    const int per_byte = 8 / width;
    std::string out((coeffs.size() + per_byte - 1) / per_byte, '\0');
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        out[i / per_byte] = static_cast<char>(static_cast<unsigned char>(out[i / per_byte]) |
                                              (static_cast<unsigned>(coeffs[i]) << (width * (i % per_byte))));
    }
    return out;
}

GeneratorSet::GeneratorSet(FieldDesc field, int n, bool unscaled) : field_(field), n_(n), unscaled_(unscaled) {
    if (n < 1) throw PreconditionError("generator set: fold must be positive");
    const ClassBits mask = field.class_mask();
    const ClassBits minus_one = SquareClass::minus_one(field).bits();

    auto add = [&](ClassBits scalar, const std::vector<ClassBits>& basis) {
        GroupRingElt elt(field);
        const int weight = 1 << (n - static_cast<int>(basis.size()));
        for (std::uint32_t combo = 0; combo < (1u << basis.size()); ++combo) {
            ClassBits v = scalar;
            for (std::size_t j = 0; j < basis.size(); ++j) {
                if ((combo >> j) & 1u) v ^= basis[j];
            }
            for (int w = 0; w < weight; ++w) elt.add_entry(v);
        }
        if (elt.is_zero()) return;
        std::string key = pack_coeffs(field, elt.coeffs());
        if (index_.count(key)) return;

        PfisterSpec spec{SquareClass(field, scalar), {}};
        for (ClassBits b : basis) spec.slots.emplace_back(field, negate_bits(field, b));
        while (spec.fold() < n) spec.slots.emplace_back(field, minus_one);

        Generator g{std::move(spec), std::move(elt), {}};
        for (std::size_t i = 0; i < g.elt.coeffs().size(); ++i) {
            if (g.elt.coeffs()[i] != 0) g.support.emplace_back(static_cast<std::uint32_t>(i), g.elt.coeffs()[i]);
        }
        index_.emplace(std::move(key), static_cast<std::uint32_t>(gens_.size()));
        gens_.push_back(std::move(g));
    };

    for_each_subspace(mask, n, [&](const std::vector<ClassBits>& basis) {
        if (unscaled) {
            add(0u, basis);
            if (minus_one != 0) add(minus_one, basis);
            return;
        }
        ClassBits pivots = 0;
        for (ClassBits row : basis) pivots |= row & (~row + 1);
        // Coset representatives: classes vanishing on every pivot bit.
        for (ClassBits c = 0; c <= mask; ++c) {
            if ((c & ~mask) == 0 && (c & pivots) == 0) add(c, basis);
        }
    });
}

long GeneratorSet::find(const std::string& key) const {
    const auto it = index_.find(key);
    return it == index_.end() ? -1 : static_cast<long>(it->second);
}

const GeneratorSet& generator_set(const FieldDesc& field, int n, bool unscaled) {
    using Key = std::tuple<int, int, int, bool>;
    static std::mutex mutex;
    static std::map<Key, std::unique_ptr<GeneratorSet>> cache;
    const Key key{static_cast<int>(field.base), field.nvars, n, unscaled};
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it == cache.end()) {
        it = cache.emplace(key, std::make_unique<GeneratorSet>(field, n, unscaled)).first;
    }
    return *it->second;
}

std::vector<std::pair<WittClass, PfisterSpec>> enumerate_GPn_classes(const FieldDesc& field, int n,
                                                                     bool unscaled) {
    const GeneratorSet& gens = generator_set(field, n, unscaled);
    std::vector<std::pair<WittClass, PfisterSpec>> out;
    out.reserve(gens.size());
    for (const auto& g : gens.generators()) out.emplace_back(g.witt_class(), g.spec);
    return out;
}

}  // namespace rigidwitt
