#pragma once

#include <compare>
#include <string>
#include <vector>

#include "rigidwitt/field.hpp"

namespace rigidwitt {

/// Lexicographic sort key of (unit, e1, ..., en): the unit bit is the most significant.
ClassBits lex_key(int nvars, ClassBits bits) noexcept;

/// An element of F*/F*^2: a unit bit and an F2 exponent vector over t1..tn.
class SquareClass {
public:
    SquareClass() = default;

    /// Validates that no bit outside the field's class mask is set.
    SquareClass(FieldDesc field, ClassBits bits);

    static SquareClass one(FieldDesc field) { return SquareClass(field, 0); }
    /// Class of -1; equals one() when -1 is a square.
    static SquareClass minus_one(FieldDesc field);
    static SquareClass variable(FieldDesc field, int index);

    const FieldDesc& field() const noexcept { return field_; }
    ClassBits bits() const noexcept { return bits_; }
    bool unit_bit() const noexcept { return (bits_ & 1u) != 0; }
    bool exponent(int index) const noexcept { return ((bits_ >> index) & 1u) != 0; }
    ClassBits exponents() const noexcept { return bits_ & ~ClassBits{1}; }

    /// True when every exponent bit is zero, i.e. the class comes from the base field.
    bool is_unit_class() const noexcept { return exponents() == 0; }
    bool is_one() const noexcept { return bits_ == 0; }

    friend bool operator==(const SquareClass& a, const SquareClass& b) noexcept {
        return a.field_ == b.field_ && a.bits_ == b.bits_;
    }
    friend std::strong_ordering operator<=>(const SquareClass& a, const SquareClass& b) noexcept {
        return lex_key(a.field_.nvars, a.bits_) <=> lex_key(b.field_.nvars, b.bits_);
    }

private:
    FieldDesc field_{};
    ClassBits bits_ = 0;
};

SquareClass mul(const SquareClass& a, const SquareClass& b);
SquareClass negate(const SquareClass& a);

inline SquareClass operator*(const SquareClass& a, const SquareClass& b) { return mul(a, b); }
inline SquareClass operator-(const SquareClass& a) { return negate(a); }

/// Negation on raw bits.
inline ClassBits negate_bits(const FieldDesc& field, ClassBits bits) noexcept {
    return field.level() == Level::One ? bits : (bits ^ 1u);
}

/// Every square class of the field, in lexicographic order.
std::vector<SquareClass> all_classes(const FieldDesc& field);

/// An F2-linear automorphism of F*/F*^2 fixing the unit basis vector, stored as the
/// images of the basis vectors e0 (unit), e1 (t1), ..., en (tn).
class ClassAutomorphism {
public:
    static ClassAutomorphism identity(FieldDesc field);
    /// images[j] is the image of basis vector j; throws if the map is singular.
    ClassAutomorphism(FieldDesc field, std::vector<ClassBits> images);

    const FieldDesc& field() const noexcept { return field_; }
    const std::vector<ClassBits>& images() const noexcept { return images_; }

    ClassBits apply(ClassBits bits) const noexcept;
    SquareClass apply(const SquareClass& a) const;
    SquareClass operator()(const SquareClass& a) const { return apply(a); }

    ClassAutomorphism inverse() const;
    ClassAutomorphism compose(const ClassAutomorphism& inner) const;  // this after inner

    friend bool operator==(const ClassAutomorphism&, const ClassAutomorphism&) = default;

private:
    ClassAutomorphism(FieldDesc field, std::vector<ClassBits> images, bool checked);

    FieldDesc field_{};
    std::vector<ClassBits> images_;
};

/// Rank of a set of bit vectors over F2.
int f2_rank(std::vector<ClassBits> vectors);

/// Relabeling of variables and uniformizers that fixes -1 and sends `a` to t_n.
/// Throws UnitClassError if `a` has no exponent bit.
ClassAutomorphism find_basis_change(const SquareClass& a);

}  // namespace rigidwitt
