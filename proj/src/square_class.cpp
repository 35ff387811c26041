#include "rigidwitt/square_class.hpp"

#include <algorithm>
#include <utility>

#include "rigidwitt/errors.hpp"

namespace rigidwitt {

std::string to_string(Base base) {
    switch (base) {
        case Base::F3: return "F3";
        case Base::R: return "R";
        case Base::C: return "C";
        case Base::SquareMinusOne: return "F9";
    }
    return "?";
}

std::string to_string(const FieldDesc& field) {
    std::string out = to_string(field.base) + "[";
    for (int i = 1; i <= field.nvars; ++i) {
        if (i > 1) out += ",";
        out += "t" + std::to_string(i);
    }
    return out + "]";
}

void require_same_field(const FieldDesc& a, const FieldDesc& b, const char* op) {
    if (!(a == b)) {
        throw FieldMismatch(std::string(op) + ": field mismatch (" + to_string(a) + " vs " +
                            to_string(b) + ")");
    }
}

ClassBits lex_key(int nvars, ClassBits bits) noexcept {
    ClassBits r = bits;
    r = ((r >> 1) & 0x55555555u) | ((r & 0x55555555u) << 1);
    r = ((r >> 2) & 0x33333333u) | ((r & 0x33333333u) << 2);
    r = ((r >> 4) & 0x0F0F0F0Fu) | ((r & 0x0F0F0F0Fu) << 4);
    r = ((r >> 8) & 0x00FF00FFu) | ((r & 0x00FF00FFu) << 8);
    r = (r >> 16) | (r << 16);
    return r >> (31 - nvars);
}

SquareClass::SquareClass(FieldDesc field, ClassBits bits) : field_(field), bits_(bits) {
    if (field.nvars < 0 || field.nvars > max_vars) {
        throw PreconditionError("number of Laurent variables out of range");
    }
    if ((bits & ~field.class_mask()) != 0) {
        throw PreconditionError("square class has bits outside " + to_string(field));
    }
}

SquareClass SquareClass::minus_one(FieldDesc field) {
    return SquareClass(field, field.level() == Level::One ? 0u : 1u);
}

SquareClass SquareClass::variable(FieldDesc field, int index) {
    if (index < 1 || index > field.nvars) {
        throw PreconditionError("variable index t" + std::to_string(index) + " out of range");
    }
    return SquareClass(field, ClassBits{1} << index);
}

SquareClass mul(const SquareClass& a, const SquareClass& b) {
    require_same_field(a.field(), b.field(), "mul");
    return SquareClass(a.field(), a.bits() ^ b.bits());
}

SquareClass negate(const SquareClass& a) {
    return SquareClass(a.field(), negate_bits(a.field(), a.bits()));
}

std::vector<SquareClass> all_classes(const FieldDesc& field) {
    std::vector<SquareClass> out;
    const ClassBits mask = field.class_mask();
    for (ClassBits b = 0; b <= mask; ++b) {
        if ((b & ~mask) == 0) out.emplace_back(field, b);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int f2_rank(std::vector<ClassBits> vectors) {
    int rank = 0;
    for (int bit = 31; bit >= 0; --bit) {
        const ClassBits pivot_mask = ClassBits{1} << bit;
        auto it = std::find_if(vectors.begin() + rank, vectors.end(),
                               [&](ClassBits v) { return (v & pivot_mask) != 0; });
        if (it == vectors.end()) continue;
        std::iter_swap(vectors.begin() + rank, it);
        for (std::size_t i = 0; i < vectors.size(); ++i) {
            if (static_cast<int>(i) != rank && (vectors[i] & pivot_mask)) vectors[i] ^= vectors[rank];
        }
        ++rank;
    }
    return rank;
}

ClassAutomorphism ClassAutomorphism::identity(FieldDesc field) {
    std::vector<ClassBits> images(field.nvars + 1);
    for (int j = 0; j <= field.nvars; ++j) images[j] = ClassBits{1} << j;
    return ClassAutomorphism(field, std::move(images), false);
}

ClassAutomorphism::ClassAutomorphism(FieldDesc field, std::vector<ClassBits> images, bool)
    : field_(field), images_(std::move(images)) {}

ClassAutomorphism::ClassAutomorphism(FieldDesc field, std::vector<ClassBits> images)
    : field_(field), images_(std::move(images)) {
    if (images_.size() != static_cast<std::size_t>(field.nvars + 1)) {
        throw PreconditionError("automorphism needs one image per basis vector");
    }
    if (images_[0] != 1u) throw PreconditionError("automorphism must fix the unit basis vector");
    const ClassBits all = (ClassBits{1} << (field.nvars + 1)) - 1;
    for (ClassBits im : images_) {
        if ((im & ~all) != 0) throw PreconditionError("automorphism image outside the field");
    }
    if (f2_rank(images_) != field.nvars + 1) throw PreconditionError("automorphism is singular");
}

ClassBits ClassAutomorphism::apply(ClassBits bits) const noexcept {
    ClassBits out = 0;
    for (std::size_t j = 0; j < images_.size(); ++j) {
        if ((bits >> j) & 1u) out ^= images_[j];
    }
    return out;
}

SquareClass ClassAutomorphism::apply(const SquareClass& a) const {
    require_same_field(field_, a.field(), "ClassAutomorphism::apply");
    ClassBits out = apply(a.bits());
    if (field_.base == Base::C) out &= ~ClassBits{1};
    return SquareClass(field_, out);
}

ClassAutomorphism ClassAutomorphism::inverse() const {
    // Gauss-Jordan on [A | I] with A given column-wise: work on rows of the transpose.
    const int n = field_.nvars + 1;
    std::vector<ClassBits> rows(n), inv_rows(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if ((images_[j] >> i) & 1u) rows[i] |= ClassBits{1} << j;
        }
        inv_rows[i] = ClassBits{1} << i;
    }
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r) {
            if ((rows[r] >> col) & 1u) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) throw InternalContradiction("singular class automorphism");
        std::swap(rows[col], rows[pivot]);
        std::swap(inv_rows[col], inv_rows[pivot]);
        for (int r = 0; r < n; ++r) {
            if (r != col && ((rows[r] >> col) & 1u)) {
                rows[r] ^= rows[col];
                inv_rows[r] ^= inv_rows[col];
            }
        }
    }
    std::vector<ClassBits> images(n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            if ((inv_rows[i] >> j) & 1u) images[j] |= ClassBits{1} << i;
        }
    }
    return ClassAutomorphism(field_, std::move(images), false);
}

ClassAutomorphism ClassAutomorphism::compose(const ClassAutomorphism& inner) const {
    require_same_field(field_, inner.field_, "ClassAutomorphism::compose");
    std::vector<ClassBits> images(images_.size());
    for (std::size_t j = 0; j < images.size(); ++j) images[j] = apply(inner.images_[j]);
    return ClassAutomorphism(field_, std::move(images), false);
}

ClassAutomorphism find_basis_change(const SquareClass& a) {
    const FieldDesc& field = a.field();
    if (a.is_unit_class()) {
        throw UnitClassError("find_basis_change: class has no Laurent-variable exponent");
    }
    const int n = field.nvars;
    int pivot = n;
    while (!a.exponent(pivot)) --pivot;

    // The inverse map N sends t_n to a; when the highest exponent of a is below n,
    // t_pivot takes over the role of t_n so the images stay a basis.
    std::vector<ClassBits> images(n + 1);
    for (int j = 0; j <= n; ++j) images[j] = ClassBits{1} << j;
    images[n] = a.bits();
    if (pivot != n) images[pivot] = ClassBits{1} << n;
    return ClassAutomorphism(field, std::move(images)).inverse();
}

}  // namespace rigidwitt
