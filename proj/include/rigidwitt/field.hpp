#pragma once

#include <cstdint>
#include <string>

namespace rigidwitt {

/// Residue field of the iterated Laurent series model K((t1))...((tn)).
///
/// SquareMinusOne stands for a finite field with q = 1 mod 4 (think F9): two unit
/// square classes and -1 a square. It only arises as F3 with sqrt(-1) adjoined.
enum class Base : std::uint8_t { F3, R, C, SquareMinusOne };

enum class Level : std::uint8_t { One = 1, Two = 2, Infinite = 0 };

/// Bit layout of a square class: bit 0 is the unit bit, bit i (1 <= i <= nvars) the
/// exponent of t_i modulo 2.
using ClassBits = std::uint32_t;

inline constexpr int max_vars = 24;

struct FieldDesc {
    Base base = Base::F3;
    int nvars = 0;

    constexpr Level level() const noexcept {
        switch (base) {
            case Base::F3: return Level::Two;
            case Base::R: return Level::Infinite;
            default: return Level::One;
        }
    }

    constexpr int unit_classes() const noexcept { return base == Base::C ? 1 : 2; }

    constexpr std::uint64_t square_class_count() const noexcept {
        return static_cast<std::uint64_t>(unit_classes()) << nvars;
    }

    /// Mask of all bits a class of this field may carry.
    constexpr ClassBits class_mask() const noexcept {
        const ClassBits all = (ClassBits{1} << (nvars + 1)) - 1;
        return base == Base::C ? (all & ~ClassBits{1}) : all;
    }

    /// Coefficient ring of the Witt ring as Z/m; 0 means Z.
    constexpr int witt_modulus() const noexcept {
        switch (base) {
            case Base::F3: return 4;
            case Base::R: return 0;
            default: return 2;
        }
    }

    /// Whether the unit bit is part of the group-ring index subgroup H.
    /// For level one H is the full square-class group, otherwise H = {unit bit 0}.
    constexpr bool unit_bit_in_h() const noexcept { return base == Base::SquareMinusOne; }

    constexpr std::size_t h_size() const noexcept {
        return std::size_t{1} << (unit_bit_in_h() ? nvars + 1 : nvars);
    }

    /// Index of an element of H. For classes outside H the unit bit is ignored.
    constexpr std::size_t h_index(ClassBits bits) const noexcept {
        return unit_bit_in_h() ? bits : (bits >> 1);
    }

    constexpr ClassBits h_element(std::size_t index) const noexcept {
        return unit_bit_in_h() ? static_cast<ClassBits>(index) : static_cast<ClassBits>(index << 1);
    }

    friend constexpr bool operator==(const FieldDesc&, const FieldDesc&) = default;
};

/// "F3[t1,t2]", "R[]", ...
std::string to_string(const FieldDesc& field);
std::string to_string(Base base);

/// Throws FieldMismatch unless both descriptors agree.
void require_same_field(const FieldDesc& a, const FieldDesc& b, const char* op);

}  // namespace rigidwitt
