#include "rigidwitt/sampling.hpp"

#include "rigidwitt/errors.hpp"
#include "rigidwitt/witt.hpp"

namespace rigidwitt {

FormSampler::FormSampler(FieldDesc field, int n, std::uint64_t seed) : field_(field), n_(n), rng_(seed) {
    if (n < 1) throw PreconditionError("FormSampler: fold must be positive");
}

SquareClass FormSampler::random_class() {
    std::uniform_int_distribution<ClassBits> dist(0, field_.class_mask());
    return SquareClass(field_, dist(rng_) & field_.class_mask());
}

PfisterSpec FormSampler::random_pfister() {
    PfisterSpec spec{random_class(), {}};
    for (int i = 0; i < n_; ++i) spec.slots.push_back(random_class());
    return spec;
}

std::optional<SampledForm> FormSampler::sample(std::size_t dim, int terms, std::size_t max_attempts) {
    for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
        SampledForm out{DiagonalForm(field_), {}, attempt};
        DiagonalForm sum(field_);
        for (int i = 0; i < terms; ++i) {
            out.terms.push_back(random_pfister());
            sum = orth_sum(sum, pfister(out.terms.back()));
        }
        out.form = anisotropic_part(sum);
        if (out.form.dim() == dim) return out;
    }
    return std::nullopt;
}

}  // namespace rigidwitt
