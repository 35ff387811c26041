#pragma once

#include <functional>
#include <random>
#include <vector>

#include "rigidwitt/form.hpp"
#include "rigidwitt/witt.hpp"

namespace testutil {

using namespace rigidwitt;

inline const std::vector<Base> bases{Base::F3, Base::R, Base::C, Base::SquareMinusOne};

inline SquareClass random_class(const FieldDesc& field, std::mt19937_64& rng) {
    return SquareClass(field, static_cast<ClassBits>(rng()) & field.class_mask());
}

inline DiagonalForm random_form(const FieldDesc& field, std::mt19937_64& rng, std::size_t max_dim) {
    const std::size_t dim = rng() % (max_dim + 1);
    std::vector<SquareClass> entries;
    for (std::size_t i = 0; i < dim; ++i) entries.push_back(random_class(field, rng));
    return DiagonalForm(field, entries);
}

inline DiagonalForm random_anisotropic(const FieldDesc& field, std::mt19937_64& rng, std::size_t max_dim) {
    return anisotropic_part(random_form(field, rng, max_dim));
}

inline PfisterSpec random_pfister(const FieldDesc& field, std::mt19937_64& rng, int n) {
    PfisterSpec spec{random_class(field, rng), {}};
    for (int i = 0; i < n; ++i) spec.slots.push_back(random_class(field, rng));
    return spec;
}

/// Every multiset of square classes with at most max_dim entries.
inline void for_each_form(const FieldDesc& field, std::size_t max_dim,
                          const std::function<void(const DiagonalForm&)>& visit) {
    const auto classes = all_classes(field);
    std::vector<SquareClass> current;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        visit(DiagonalForm(field, current));
        if (current.size() == max_dim) return;
        for (std::size_t i = start; i < classes.size(); ++i) {
            current.push_back(classes[i]);
            rec(i);
            current.pop_back();
        }
    };
    rec(0);
}

inline DiagonalForm form(const FieldDesc& field, std::vector<ClassBits> bits) {
    return DiagonalForm::from_bits(field, std::move(bits));
}

}  // namespace testutil
