#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rigidwitt/witt.hpp"

namespace rigidwitt {

/// Compact hash key of a dense group-ring coefficient vector.
std::string pack_coeffs(const FieldDesc& field, const std::vector<std::int32_t>& coeffs);

/// A nonzero Witt class of a (scaled) n-fold Pfister form.
struct Generator {
    PfisterSpec spec;
    GroupRingElt elt;
    /// Nonzero coefficients as (H index, coefficient).
    std::vector<std::pair<std::uint32_t, std::int32_t>> support;

    WittClass witt_class() const { return WittClass(elt.to_form()); }
};

/// All nonzero classes of c * <<a1..an>> (or +-<<a1..an>> when unscaled), deduplicated,
/// in a fixed enumeration order: subspace rank, pivots, free bits, then scalar.
class GeneratorSet {
public:
    GeneratorSet(FieldDesc field, int n, bool unscaled);

    const FieldDesc& field() const noexcept { return field_; }
    int fold() const noexcept { return n_; }
    bool unscaled() const noexcept { return unscaled_; }
    std::size_t size() const noexcept { return gens_.size(); }
    const Generator& operator[](std::size_t i) const { return gens_[i]; }
    const std::vector<Generator>& generators() const noexcept { return gens_; }

    /// Index of the generator with this packed key, or -1.
    long find(const std::string& key) const;

private:
    FieldDesc field_;
    int n_;
    bool unscaled_;
    std::vector<Generator> gens_;
    std::unordered_map<std::string, std::uint32_t> index_;
};

/// Shared, lazily built generator set (thread-safe cache keyed by field, n, unscaled).
const GeneratorSet& generator_set(const FieldDesc& field, int n, bool unscaled = false);

/// Every generator as (Witt class, Pfister witness).
std::vector<std::pair<WittClass, PfisterSpec>> enumerate_GPn_classes(const FieldDesc& field, int n,
                                                                     bool unscaled = false);

/// Calls visit(basis) for every F2-subspace of rank <= max_rank spanned inside `mask`,
/// given by its reduced echelon basis (pivot = lowest set bit of each row).
template <typename Visit>
void for_each_subspace(ClassBits mask, int max_rank, Visit&& visit);

}  // namespace rigidwitt

#include "rigidwitt/detail/subspaces.hpp"
