#include "rigidwitt/ideals.hpp"

#include "rigidwitt/errors.hpp"
#include "rigidwitt/witt.hpp"

namespace rigidwitt {

namespace {

bool in_In_base(Base base, const std::vector<ClassBits>& bits, int n) {
    long plus = 0, minus = 0;
    for (ClassBits b : bits) (b & 1u ? minus : plus) += 1;
    switch (base) {
        case Base::F3:
            if (n == 1) return (plus + minus) % 2 == 0;
            return (((plus - minus) % 4) + 4) % 4 == 0;
        case Base::R: {
            const long modulus = n >= 40 ? (1L << 40) : (1L << n);
            return (plus - minus) % modulus == 0;
        }
        case Base::C:
            return plus % 2 == 0;
        case Base::SquareMinusOne:
            if (n == 1) return (plus + minus) % 2 == 0;
            return plus % 2 == 0 && minus % 2 == 0;
    }
    return false;
}

bool in_In_recursive(const FieldDesc& field, int k, const std::vector<ClassBits>& bits, int n) {
    if (n <= 0) return true;
    if (k == 0) return in_In_base(field.base, bits, n);
    const ClassBits var = ClassBits{1} << k;
    std::vector<ClassBits> difference, second;
    for (ClassBits b : bits) {
        if (b & var) {
            second.push_back(b ^ var);
            difference.push_back(negate_bits(field, b ^ var));
        } else {
            difference.push_back(b);
        }
    }
    return in_In_recursive(field, k - 1, second, n - 1) && in_In_recursive(field, k - 1, difference, n);
}

ClassBits insert_zero_bit(ClassBits b, int index) noexcept {
    const ClassBits low = b & ((ClassBits{1} << index) - 1);
    return low | ((b >> index) << (index + 1));
}

DiagonalForm reinsert(const DiagonalForm& phi, const FieldDesc& field, int index) {
    std::vector<ClassBits> bits;
    bits.reserve(phi.dim());
    for (ClassBits b : phi.bits()) bits.push_back(insert_zero_bit(b, index));
    return DiagonalForm::from_bits(field, std::move(bits));
}

}  // namespace

DiagonalForm UnimodularSplit::witt_form() const {
    const DiagonalForm binary(t.field(), {SquareClass::one(t.field()), t});
    return orth_sum(sigma, tensor(binary, tau));
}

bool in_In(const DiagonalForm& phi, int n) {
    if (n < 0) throw PreconditionError("in_In: n must be nonnegative");
    const FieldDesc& field = phi.field();
    std::vector<ClassBits> bits(phi.bits().begin(), phi.bits().end());
    return in_In_recursive(field, field.nvars, bits, n);
}

UnimodularSplit decompose_unimodular(const DiagonalForm& phi, int index) {
    const FieldDesc& field = phi.field();
    const auto [phi1, phi2] = residues(anisotropic_part(phi), index);
    if (phi1.empty() || phi2.empty()) {
        throw HyperbolicResidue("decompose_unimodular: a residue class form is hyperbolic");
    }
    const SquareClass a = value_set(phi1).front();
    const SquareClass b = value_set(phi2).front();
    const SquareClass u = a * b;
    const DiagonalForm scaled = scale(u, phi2);
    const DiagonalForm sigma = anisotropic_part(orth_sum(phi1, negate(scaled)));
    const DiagonalForm tau = anisotropic_part(scaled);

    const SquareClass t(field, insert_zero_bit(u.bits(), index) | (ClassBits{1} << index));
    return UnimodularSplit{t, reinsert(sigma, field, index), reinsert(tau, field, index)};
}

UnimodularSplit rigid_decompose(const DiagonalForm& phi, const SquareClass& a) {
    require_same_field(phi.field(), a.field(), "rigid_decompose");
    const ClassAutomorphism to_last = find_basis_change(a);
    const DiagonalForm an = anisotropic_part(phi);
    if (!represents(SquareClass::one(phi.field()), an)) {
        throw PreconditionError("rigid_decompose: form must represent 1");
    }
    const ClassAutomorphism back = to_last.inverse();
    const UnimodularSplit moved = decompose_unimodular(transform(to_last, an), phi.field().nvars);
    return UnimodularSplit{back.apply(moved.t), canonicalize_unchecked(transform(back, moved.sigma)),
                           canonicalize_unchecked(transform(back, moved.tau))};
}

SquareClass lift_class(const SquareClass& a, const FieldDesc& target) {
    if (a.field().base != target.base || a.field().nvars > target.nvars) {
        throw PreconditionError("lift: target must extend the residue field by Laurent variables");
    }
    return SquareClass(target, a.bits());
}

DiagonalForm lift_form(const DiagonalForm& phi, const FieldDesc& target) {
    std::vector<SquareClass> entries;
    for (const auto& e : phi.entries()) entries.push_back(lift_class(e, target));
    if (phi.empty()) lift_class(SquareClass::one(phi.field()), target);
    return DiagonalForm(target, entries);
}

std::vector<PfisterSpec> lift_representation(const std::vector<PfisterSpec>& reps,
                                             const FieldDesc& target) {
    std::vector<PfisterSpec> out;
    out.reserve(reps.size());
    for (const auto& spec : reps) {
        PfisterSpec lifted{lift_class(spec.scalar, target), {}};
        for (const auto& slot : spec.slots) lifted.slots.push_back(lift_class(slot, target));
        out.push_back(std::move(lifted));
    }
    return out;
}

DiagonalForm extend_fresh_variable(const DiagonalForm& phi, int k) {
    if (k < 0 || phi.field().nvars + k > max_vars) {
        throw PreconditionError("extend_fresh_variable: variable count out of range");
    }
    return lift_form(phi, FieldDesc{phi.field().base, phi.field().nvars + k});
}

QuadraticExtension::QuadraticExtension(const SquareClass& a)
    : source_(a.field()), target_(a.field()), relabel_(ClassAutomorphism::identity(a.field())) {
    if (a.is_one()) throw SquareClassIsOne("quadratic extension by a square");
    if (!a.is_unit_class()) {
        relabel_ = find_basis_change(a);
        killed_ = ClassBits{1} << source_.nvars;
        return;
    }
    // a is the nontrivial unit class: -1 for F3 and R, the nonsquare unit for F9.
    killed_ = 1u;
    switch (source_.base) {
        case Base::F3: target_.base = Base::SquareMinusOne; break;
        case Base::R: target_.base = Base::C; break;
        case Base::SquareMinusOne: break;
        case Base::C: throw SquareClassIsOne("quadratic extension by a square");
    }
}

ClassBits QuadraticExtension::image_bits(ClassBits bits) const noexcept {
    return relabel_.apply(bits) & ~killed_;
}

SquareClass QuadraticExtension::image(const SquareClass& x) const {
    require_same_field(source_, x.field(), "QuadraticExtension::image");
    return SquareClass(target_, image_bits(x.bits()));
}

DiagonalForm QuadraticExtension::image(const DiagonalForm& phi) const {
    require_same_field(source_, phi.field(), "QuadraticExtension::image");
    std::vector<ClassBits> bits;
    bits.reserve(phi.dim());
    for (ClassBits b : phi.bits()) bits.push_back(image_bits(b));
    return DiagonalForm::from_bits(target_, std::move(bits));
}

ExtendedForm extend_scalars_quadratic(const DiagonalForm& phi, const SquareClass& a) {
    require_same_field(phi.field(), a.field(), "extend_scalars_quadratic");
    const QuadraticExtension ext(a);
    return ExtendedForm{ext.target(), ext.image(phi)};
}

}  // namespace rigidwitt
