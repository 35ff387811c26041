#pragma once

#include <span>
#include <string>
#include <vector>

#include "rigidwitt/square_class.hpp"

namespace rigidwitt {

/// Diagonal quadratic form <a1, ..., ad> over a rigid-field model, stored as a
/// multiset of square classes (sorted by the lexicographic class order).
class DiagonalForm {
public:
    DiagonalForm() = default;
    explicit DiagonalForm(FieldDesc field) : field_(field) {}
    DiagonalForm(FieldDesc field, const std::vector<SquareClass>& entries);

    /// Entries given as raw class bits; validated against the field.
    static DiagonalForm from_bits(FieldDesc field, std::vector<ClassBits> bits);

    const FieldDesc& field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }
    std::span<const ClassBits> bits() const noexcept { return bits_; }
    std::vector<SquareClass> entries() const;
    SquareClass entry(std::size_t i) const { return SquareClass(field_, bits_.at(i)); }

    /// Number of entries in the given class.
    std::size_t multiplicity(const SquareClass& a) const;

    friend bool operator==(const DiagonalForm&, const DiagonalForm&) = default;

private:
    DiagonalForm(FieldDesc field, std::vector<ClassBits> bits, bool sorted);
    void sort_entries();

    FieldDesc field_{};
    std::vector<ClassBits> bits_;
};

/// scalar * <<a1, ..., ak>> with <<a>> = <1, -a>.
struct PfisterSpec {
    SquareClass scalar;
    std::vector<SquareClass> slots;

    int fold() const noexcept { return static_cast<int>(slots.size()); }
    friend bool operator==(const PfisterSpec&, const PfisterSpec&) = default;
};

PfisterSpec make_pfister_spec(std::vector<SquareClass> slots);

DiagonalForm orth_sum(const DiagonalForm& phi, const DiagonalForm& psi);
DiagonalForm scale(const SquareClass& c, const DiagonalForm& phi);
DiagonalForm tensor(const DiagonalForm& phi, const DiagonalForm& psi);
DiagonalForm negate(const DiagonalForm& phi);
DiagonalForm pfister(const PfisterSpec& spec);
/// Pure part: the Pfister form with one copy of the scalar removed.
DiagonalForm pure_part(const PfisterSpec& spec);

SquareClass determinant(const DiagonalForm& phi);
SquareClass discriminant(const DiagonalForm& phi);

/// Apply a class automorphism entrywise.
DiagonalForm transform(const ClassAutomorphism& map, const DiagonalForm& phi);

/// Unique representative of the isometry class of an anisotropic form. At level 2,
/// pairs <x,x> are rewritten to the smaller of <x,x>, <-x,-x>. Throws IsotropicInput.
DiagonalForm canonicalize(const DiagonalForm& phi);

/// canonicalize() without the anisotropy check; input must be known anisotropic.
DiagonalForm canonicalize_unchecked(const DiagonalForm& phi);

bool is_isometric(const DiagonalForm& phi, const DiagonalForm& psi);

/// psi is isometric to a subform of phi.
bool is_subform(const DiagonalForm& psi, const DiagonalForm& phi);

/// Decomposition psi = psi1 + psi2 + psi3 relative to an anisotropic sum phi1 + phi2.
struct SplitSubforms {
    DiagonalForm psi1;  ///< subform of phi1
    DiagonalForm psi2;  ///< subform of phi2
    DiagonalForm psi3;  ///< values avoid D(phi1) and D(phi2); zero unless level 2
};

/// Repeatedly splits off the smallest class of D(psi) that phi1 (preferred) or phi2
/// represents, cancelling it on both sides. Throws IsotropicSum, NotASubform.
SplitSubforms decompose_over_split(const DiagonalForm& psi, const DiagonalForm& phi1,
                                   const DiagonalForm& phi2);

}  // namespace rigidwitt
