#include "rigidwitt/witt.hpp"

#include <algorithm>
#include <cstdlib>

#include "rigidwitt/errors.hpp"

namespace rigidwitt {

namespace {

ClassBits drop_bit(ClassBits b, int index) noexcept {
    const ClassBits low = b & ((ClassBits{1} << index) - 1);
    return low | ((b >> (index + 1)) << index);
}

void append_copies(std::vector<ClassBits>& out, ClassBits b, long count) {
    for (long i = 0; i < count; ++i) out.push_back(b);
}

// Anisotropic part over the residue field K: entries carry only the unit bit.
std::vector<ClassBits> anisotropic_base(Base base, const std::vector<ClassBits>& bits) {
    long plus = 0, minus = 0;
    for (ClassBits b : bits) (b & 1u ? minus : plus) += 1;
    std::vector<ClassBits> out;
    switch (base) {
        case Base::F3: {
            const long v = (((plus - minus) % 4) + 4) % 4;
            if (v == 1) out = {0u};
            if (v == 2) out = {0u, 0u};
            if (v == 3) out = {1u};
            break;
        }
        case Base::R:
            append_copies(out, plus > minus ? 0u : 1u, std::labs(plus - minus));
            break;
        case Base::C:
            append_copies(out, 0u, plus % 2);
            break;
        case Base::SquareMinusOne:
            append_copies(out, 0u, plus % 2);
            append_copies(out, 1u, minus % 2);
            break;
    }
    return out;
}

// Springer: an(phi1 + t_k phi2) = an(phi1) + t_k an(phi2), recursing on the highest variable.
std::vector<ClassBits> anisotropic_recursive(Base base, int k, const std::vector<ClassBits>& bits) {
    if (k == 0) return anisotropic_base(base, bits);
    const ClassBits var = ClassBits{1} << k;
    std::vector<ClassBits> unit_part, uniformizer_part;
    for (ClassBits b : bits) {
        if (b & var) {
            uniformizer_part.push_back(b ^ var);
        } else {
            unit_part.push_back(b);
        }
    }
    std::vector<ClassBits> out = anisotropic_recursive(base, k - 1, unit_part);
    for (ClassBits b : anisotropic_recursive(base, k - 1, uniformizer_part)) out.push_back(b | var);
    return out;
}

}  // namespace

std::pair<DiagonalForm, DiagonalForm> residues(const DiagonalForm& phi, int index) {
    const FieldDesc& field = phi.field();
    if (index < 1 || index > field.nvars) {
        throw PreconditionError("residues: variable index out of range");
    }
    const FieldDesc smaller{field.base, field.nvars - 1};
    std::vector<ClassBits> first, second;
    for (ClassBits b : phi.bits()) {
        if ((b >> index) & 1u) {
            second.push_back(drop_bit(b ^ (ClassBits{1} << index), index));
        } else {
            first.push_back(drop_bit(b, index));
        }
    }
    return {DiagonalForm::from_bits(smaller, std::move(first)),
            DiagonalForm::from_bits(smaller, std::move(second))};
}

DiagonalForm anisotropic_part(const DiagonalForm& phi) {
    const FieldDesc& field = phi.field();
    std::vector<ClassBits> bits(phi.bits().begin(), phi.bits().end());
    return canonicalize_unchecked(
        DiagonalForm::from_bits(field, anisotropic_recursive(field.base, field.nvars, bits)));
}

int witt_index(const DiagonalForm& phi) {
    return static_cast<int>((phi.dim() - anisotropic_part(phi).dim()) / 2);
}

bool is_isotropic(const DiagonalForm& phi) { return anisotropic_part(phi).dim() < phi.dim(); }

bool is_hyperbolic(const DiagonalForm& phi) { return anisotropic_part(phi).empty(); }

std::vector<SquareClass> value_set(const DiagonalForm& phi) {
    const FieldDesc& field = phi.field();
    const DiagonalForm an = anisotropic_part(phi);
    if (an.dim() < phi.dim()) return all_classes(field);
    std::vector<SquareClass> out = an.entries();
    if (field.level() == Level::Two) {
        for (std::size_t i = 0; i + 1 < an.dim(); ++i) {
            if (an.bits()[i] == an.bits()[i + 1]) out.push_back(negate(an.entry(i)));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool represents(const SquareClass& a, const DiagonalForm& phi) {
    require_same_field(a.field(), phi.field(), "represents");
    if (is_isotropic(phi)) return true;
    return is_isotropic(orth_sum(phi, DiagonalForm(phi.field(), {negate(a)})));
}

// ---------------------------------------------------------------------------
// Group ring model

int coefficient_dim(const FieldDesc& field, std::int32_t c) noexcept {
    switch (field.witt_modulus()) {
        case 4: return c == 2 ? 2 : (c == 0 ? 0 : 1);
        case 2: return c;
        default: return c < 0 ? -c : c;
    }
}

std::int32_t GroupRingElt::reduce(std::int64_t v) const noexcept {
    const int m = field_.witt_modulus();
    if (m == 0) return static_cast<std::int32_t>(v);
    return static_cast<std::int32_t>(((v % m) + m) % m);
}

void GroupRingElt::add_entry(ClassBits a, int sign) {
    const std::size_t idx = field_.h_index(a);
    const bool in_h = field_.level() == Level::One || (a & 1u) == 0;
    coeffs_[idx] = reduce(static_cast<std::int64_t>(coeffs_[idx]) + (in_h ? sign : -sign));
}

void GroupRingElt::set(std::size_t index, std::int64_t value) { coeffs_.at(index) = reduce(value); }

bool GroupRingElt::is_zero() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int32_t c) { return c == 0; });
}

int GroupRingElt::anisotropic_dim() const noexcept {
    int d = 0;
    for (std::int32_t c : coeffs_) d += coefficient_dim(field_, c);
    return d;
}

DiagonalForm GroupRingElt::to_form() const {
    std::vector<ClassBits> bits;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const std::int32_t c = coeffs_[i];
        if (c == 0) continue;
        const ClassBits h = field_.h_element(i);
        switch (field_.witt_modulus()) {
            case 4:
                if (c == 3) {
                    bits.push_back(h | 1u);
                } else {
                    append_copies(bits, h, c);
                }
                break;
            case 2:
                bits.push_back(h);
                break;
            default:
                append_copies(bits, c > 0 ? h : (h | 1u), std::labs(c));
        }
    }
    return canonicalize_unchecked(DiagonalForm::from_bits(field_, std::move(bits)));
}

GroupRingElt& GroupRingElt::operator+=(const GroupRingElt& other) {
    require_same_field(field_, other.field_, "GroupRingElt::+");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] = reduce(static_cast<std::int64_t>(coeffs_[i]) + other.coeffs_[i]);
    }
    return *this;
}

GroupRingElt& GroupRingElt::operator-=(const GroupRingElt& other) {
    require_same_field(field_, other.field_, "GroupRingElt::-");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] = reduce(static_cast<std::int64_t>(coeffs_[i]) - other.coeffs_[i]);
    }
    return *this;
}

GroupRingElt operator-(const GroupRingElt& a) {
    GroupRingElt out(a.field_);
    return out -= a;
}

GroupRingElt operator*(const GroupRingElt& a, const GroupRingElt& b) {
    require_same_field(a.field_, b.field_, "GroupRingElt::*");
    std::vector<std::int64_t> acc(a.coeffs_.size(), 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            acc[i ^ j] += static_cast<std::int64_t>(a.coeffs_[i]) * b.coeffs_[j];
        }
    }
    GroupRingElt out(a.field_);
    for (std::size_t i = 0; i < acc.size(); ++i) out.set(i, acc[i]);
    return out;
}

GroupRingElt to_group_ring(const DiagonalForm& phi) {
    GroupRingElt out(phi.field());
    for (ClassBits b : phi.bits()) out.add_entry(b);
    return out;
}

bool group_ring_equal(const DiagonalForm& phi, const DiagonalForm& psi) {
    require_same_field(phi.field(), psi.field(), "group_ring_equal");
    return to_group_ring(phi) == to_group_ring(psi);
}

// ---------------------------------------------------------------------------

ThreeFormCheck three_form_witt_index_check(const DiagonalForm& phi1, const DiagonalForm& phi2,
                                           const DiagonalForm& phi3, int m) {
    require_same_field(phi1.field(), phi2.field(), "three_form_witt_index_check");
    require_same_field(phi1.field(), phi3.field(), "three_form_witt_index_check");
    if (m < 0) throw PreconditionError("three_form_witt_index_check: m must be nonnegative");
    if (is_isotropic(phi1) || is_isotropic(phi2) || is_isotropic(phi3)) {
        throw IsotropicInput("three_form_witt_index_check: inputs must be anisotropic");
    }
    const FieldDesc& field = phi1.field();
    DiagonalForm left = orth_sum(phi1, phi2);
    if (is_isotropic(left)) throw IsotropicSum("three_form_witt_index_check: phi1 + phi2 is isotropic");
    DiagonalForm right = phi3;

    // psi: a maximal form with psi inside phi1 + phi2 and -psi inside phi3.
    std::vector<ClassBits> psi_bits;
    for (;;) {
        const auto d_left = value_set(left);
        const auto d_right = value_set(right);
        auto it = std::find_if(d_left.begin(), d_left.end(), [&](const SquareClass& x) {
            return std::binary_search(d_right.begin(), d_right.end(), negate(x));
        });
        if (it == d_left.end()) break;
        const SquareClass x = *it;
        psi_bits.push_back(x.bits());
        left = anisotropic_part(orth_sum(left, DiagonalForm(field, {negate(x)})));
        right = anisotropic_part(orth_sum(right, DiagonalForm(field, {x})));
    }
    const DiagonalForm psi = DiagonalForm::from_bits(field, std::move(psi_bits));
    const SplitSubforms split = decompose_over_split(psi, phi1, phi2);

    ThreeFormCheck out;
    out.witness.psi1 = split.psi1;
    out.witness.psi2 = split.psi2;
    out.witness.extra = split.psi3.entries();
    out.witness.achieved = static_cast<int>(psi.dim());
    out.holds = out.witness.achieved >= m;
    return out;
}

}  // namespace rigidwitt
