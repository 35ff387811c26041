#include "rigidwitt/form.hpp"

#include <algorithm>
#include <map>

#include "rigidwitt/errors.hpp"
#include "rigidwitt/witt.hpp"

namespace rigidwitt {

DiagonalForm::DiagonalForm(FieldDesc field, std::vector<ClassBits> bits, bool sorted)
    : field_(field), bits_(std::move(bits)) {
    if (!sorted) sort_entries();
}

DiagonalForm::DiagonalForm(FieldDesc field, const std::vector<SquareClass>& entries) : field_(field) {
    bits_.reserve(entries.size());
    for (const auto& e : entries) {
        require_same_field(field, e.field(), "DiagonalForm");
        bits_.push_back(e.bits());
    }
    sort_entries();
}

DiagonalForm DiagonalForm::from_bits(FieldDesc field, std::vector<ClassBits> bits) {
    const ClassBits mask = field.class_mask();
    for (ClassBits b : bits) {
        if ((b & ~mask) != 0) throw PreconditionError("form entry outside " + to_string(field));
    }
    return DiagonalForm(field, std::move(bits), false);
}

void DiagonalForm::sort_entries() {
    const int n = field_.nvars;
    std::sort(bits_.begin(), bits_.end(),
              [n](ClassBits a, ClassBits b) { return lex_key(n, a) < lex_key(n, b); });
}

std::vector<SquareClass> DiagonalForm::entries() const {
    std::vector<SquareClass> out;
    out.reserve(bits_.size());
    for (ClassBits b : bits_) out.emplace_back(field_, b);
    return out;
}

std::size_t DiagonalForm::multiplicity(const SquareClass& a) const {
    require_same_field(field_, a.field(), "multiplicity");
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), a.bits()));
}

PfisterSpec make_pfister_spec(std::vector<SquareClass> slots) {
    if (slots.empty()) throw PreconditionError("make_pfister_spec: need at least one slot");
    PfisterSpec spec{SquareClass::one(slots.front().field()), std::move(slots)};
    return spec;
}

DiagonalForm orth_sum(const DiagonalForm& phi, const DiagonalForm& psi) {
    require_same_field(phi.field(), psi.field(), "orth_sum");
    std::vector<ClassBits> bits(phi.bits().begin(), phi.bits().end());
    bits.insert(bits.end(), psi.bits().begin(), psi.bits().end());
    return DiagonalForm::from_bits(phi.field(), std::move(bits));
}

DiagonalForm scale(const SquareClass& c, const DiagonalForm& phi) {
    require_same_field(c.field(), phi.field(), "scale");
    std::vector<ClassBits> bits;
    bits.reserve(phi.dim());
    for (ClassBits b : phi.bits()) bits.push_back(b ^ c.bits());
    return DiagonalForm::from_bits(phi.field(), std::move(bits));
}

DiagonalForm tensor(const DiagonalForm& phi, const DiagonalForm& psi) {
    require_same_field(phi.field(), psi.field(), "tensor");
    std::vector<ClassBits> bits;
    bits.reserve(phi.dim() * psi.dim());
    for (ClassBits a : phi.bits()) {
        for (ClassBits b : psi.bits()) bits.push_back(a ^ b);
    }
    return DiagonalForm::from_bits(phi.field(), std::move(bits));
}

DiagonalForm negate(const DiagonalForm& phi) {
    return scale(SquareClass::minus_one(phi.field()), phi);
}

DiagonalForm pfister(const PfisterSpec& spec) {
    const FieldDesc& field = spec.scalar.field();
    std::vector<ClassBits> bits{spec.scalar.bits()};
    for (const auto& slot : spec.slots) {
        require_same_field(field, slot.field(), "pfister");
        const ClassBits minus_a = negate_bits(field, slot.bits());
        const std::size_t half = bits.size();
        for (std::size_t i = 0; i < half; ++i) bits.push_back(bits[i] ^ minus_a);
    }
    return DiagonalForm::from_bits(field, std::move(bits));
}

DiagonalForm pure_part(const PfisterSpec& spec) {
    const DiagonalForm full = pfister(spec);
    std::vector<ClassBits> bits(full.bits().begin(), full.bits().end());
    bits.erase(std::find(bits.begin(), bits.end(), spec.scalar.bits()));
    return DiagonalForm::from_bits(full.field(), std::move(bits));
}

SquareClass determinant(const DiagonalForm& phi) {
    ClassBits det = 0;
    for (ClassBits b : phi.bits()) det ^= b;
    return SquareClass(phi.field(), det);
}

SquareClass discriminant(const DiagonalForm& phi) {
    const std::size_t d = phi.dim();
    const SquareClass det = determinant(phi);
    return ((d * (d - (d > 0 ? 1 : 0)) / 2) % 2 == 1) ? negate(det) : det;
}

DiagonalForm transform(const ClassAutomorphism& map, const DiagonalForm& phi) {
    require_same_field(map.field(), phi.field(), "transform");
    std::vector<ClassBits> bits;
    bits.reserve(phi.dim());
    for (const auto& e : phi.entries()) bits.push_back(map.apply(e).bits());
    return DiagonalForm::from_bits(phi.field(), std::move(bits));
}

DiagonalForm canonicalize_unchecked(const DiagonalForm& phi) {
    if (phi.field().level() != Level::Two) return phi;
    const FieldDesc& field = phi.field();
    const int n = field.nvars;
    std::map<ClassBits, int> counts;
    for (ClassBits b : phi.bits()) ++counts[b];
    std::vector<ClassBits> bits;
    bits.reserve(phi.dim());
    for (auto [b, count] : counts) {
        ClassBits rep = b;
        if (count == 2) {
            const ClassBits neg = negate_bits(field, b);
            if (lex_key(n, neg) < lex_key(n, b)) rep = neg;
        }
        for (int i = 0; i < count; ++i) bits.push_back(rep);
    }
    return DiagonalForm::from_bits(field, std::move(bits));
}

DiagonalForm canonicalize(const DiagonalForm& phi) {
    if (is_isotropic(phi)) throw IsotropicInput("canonicalize: form is isotropic");
    return canonicalize_unchecked(phi);
}

bool is_isometric(const DiagonalForm& phi, const DiagonalForm& psi) {
    require_same_field(phi.field(), psi.field(), "is_isometric");
    if (phi.dim() != psi.dim()) return false;
    return anisotropic_part(orth_sum(phi, negate(psi))).empty();
}

bool is_subform(const DiagonalForm& psi, const DiagonalForm& phi) {
    require_same_field(phi.field(), psi.field(), "is_subform");
    if (psi.dim() > phi.dim()) return false;
    return witt_index(orth_sum(phi, negate(psi))) >= static_cast<int>(psi.dim());
}

namespace {

// Complement of <x> in an anisotropic form representing x.
DiagonalForm cancel_class(const DiagonalForm& phi, ClassBits x) {
    const ClassBits minus_x = negate_bits(phi.field(), x);
    return anisotropic_part(orth_sum(phi, DiagonalForm::from_bits(phi.field(), {minus_x})));
}

bool contains(const std::vector<SquareClass>& sorted, const SquareClass& a) {
    return std::binary_search(sorted.begin(), sorted.end(), a);
}

}  // namespace

SplitSubforms decompose_over_split(const DiagonalForm& psi, const DiagonalForm& phi1,
                                   const DiagonalForm& phi2) {
    require_same_field(phi1.field(), phi2.field(), "decompose_over_split");
    require_same_field(phi1.field(), psi.field(), "decompose_over_split");
    const FieldDesc& field = psi.field();
    const DiagonalForm sum = orth_sum(phi1, phi2);
    if (is_isotropic(sum)) throw IsotropicSum("decompose_over_split: phi1 + phi2 is isotropic");
    if (!is_subform(psi, sum)) throw NotASubform("decompose_over_split: psi is not a subform");

    std::vector<ClassBits> part1, part2;
    DiagonalForm rest = canonicalize_unchecked(psi);
    DiagonalForm rem1 = phi1, rem2 = phi2;
    while (!rest.empty()) {
        const auto d_rest = value_set(rest);
        const auto d1 = value_set(rem1);
        const auto d2 = value_set(rem2);
        bool extracted = false;
        for (const auto& x : d_rest) {
            const bool in1 = contains(d1, x);
            if (!in1 && !contains(d2, x)) continue;
            (in1 ? part1 : part2).push_back(x.bits());
            if (in1) {
                rem1 = cancel_class(rem1, x.bits());
            } else {
                rem2 = cancel_class(rem2, x.bits());
            }
            rest = cancel_class(rest, x.bits());
            extracted = true;
            break;
        }
        if (!extracted) break;
    }
    return SplitSubforms{canonicalize_unchecked(DiagonalForm::from_bits(field, std::move(part1))),
                         canonicalize_unchecked(DiagonalForm::from_bits(field, std::move(part2))),
                         rest};
}

}  // namespace rigidwitt
