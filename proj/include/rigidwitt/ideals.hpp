#pragma once

#include <vector>

#include "rigidwitt/form.hpp"

namespace rigidwitt {

/// phi = sigma + <<-t>> tensor tau in the Witt ring.
struct UnimodularSplit {
    SquareClass t;
    DiagonalForm sigma;
    DiagonalForm tau;

    /// sigma + <1, t> tau as a form (Witt equivalent to the decomposed input).
    DiagonalForm witt_form() const;
};

/// Membership in I^n via the residue recursion phi = (phi1 - phi2) + <<-t>> phi2.
bool in_In(const DiagonalForm& phi, int n);

/// Splits an(phi) along t_index, replacing the uniformizer by u * t_index where
/// u = min D(phi1) * min D(phi2). Throws HyperbolicResidue.
UnimodularSplit decompose_unimodular(const DiagonalForm& phi, int index);

/// Moves `a` to the last variable, splits there and pulls the result back.
/// Requires 1 in D(phi); throws UnitClassError when `a` has no exponent bit.
UnimodularSplit rigid_decompose(const DiagonalForm& phi, const SquareClass& a);

/// Embeds Pfister representations over a residue field into `target`, which must have
/// the same base and at least as many variables.
std::vector<PfisterSpec> lift_representation(const std::vector<PfisterSpec>& reps,
                                             const FieldDesc& target);

SquareClass lift_class(const SquareClass& a, const FieldDesc& target);
DiagonalForm lift_form(const DiagonalForm& phi, const FieldDesc& target);

/// phi over the field with k additional Laurent variables.
DiagonalForm extend_fresh_variable(const DiagonalForm& phi, int k);

/// F(sqrt a) inside the model family, with the induced map on square classes.
class QuadraticExtension {
public:
    /// Throws SquareClassIsOne for a = 1.
    explicit QuadraticExtension(const SquareClass& a);

    const FieldDesc& source() const noexcept { return source_; }
    const FieldDesc& target() const noexcept { return target_; }

    SquareClass image(const SquareClass& x) const;
    DiagonalForm image(const DiagonalForm& phi) const;

private:
    ClassBits image_bits(ClassBits bits) const noexcept;

    FieldDesc source_;
    FieldDesc target_;
    ClassAutomorphism relabel_;
    ClassBits killed_ = 0;  // bits that become squares after relabeling
};

struct ExtendedForm {
    FieldDesc field;
    DiagonalForm form;
};

ExtendedForm extend_scalars_quadratic(const DiagonalForm& phi, const SquareClass& a);

}  // namespace rigidwitt
