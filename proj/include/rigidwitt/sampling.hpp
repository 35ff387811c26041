#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "rigidwitt/form.hpp"

namespace rigidwitt {

struct SampledForm {
    DiagonalForm form;              ///< anisotropic part of the sum of the terms
    std::vector<PfisterSpec> terms;
    std::size_t rejections = 0;     ///< draws discarded before this one
};

/// Seeded generator of random forms in I^n: sums of random scaled n-fold Pfister forms.
class FormSampler {
public:
    FormSampler(FieldDesc field, int n, std::uint64_t seed);

    const FieldDesc& field() const noexcept { return field_; }

    SquareClass random_class();
    PfisterSpec random_pfister();

    /// Anisotropic part of a sum of `terms` random Pfister forms, redrawn until it has
    /// dimension `dim`; nullopt after `max_attempts` draws.
    std::optional<SampledForm> sample(std::size_t dim, int terms, std::size_t max_attempts = 100000);

private:
    FieldDesc field_;
    int n_;
    std::mt19937_64 rng_;
};

}  // namespace rigidwitt
