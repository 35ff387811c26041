#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rigidwitt/form.hpp"

namespace rigidwitt {

/// Residue class forms with respect to t_i: entries without t_i, and entries with t_i
/// divided by t_i. Both live over the field with t_i removed (higher variables shift down).
std::pair<DiagonalForm, DiagonalForm> residues(const DiagonalForm& phi, int index);

/// Springer recursion on the last variable; base cases use W(F3) = Z/4, W(R) = Z,
/// W(C) = Z/2 and W(F9) = Z/2[Z/2]. The result is canonical.
DiagonalForm anisotropic_part(const DiagonalForm& phi);

int witt_index(const DiagonalForm& phi);
bool is_isotropic(const DiagonalForm& phi);
bool is_hyperbolic(const DiagonalForm& phi);

/// Classes represented by phi, sorted. Isotropic forms represent everything.
std::vector<SquareClass> value_set(const DiagonalForm& phi);

/// a in D(phi), decided by isotropy of phi and phi + <-a>.
bool represents(const SquareClass& a, const DiagonalForm& phi);

/// Element of the Witt ring, held as its canonical anisotropic representative.
class WittClass {
public:
    WittClass() = default;
    explicit WittClass(const DiagonalForm& phi) : repr_(anisotropic_part(phi)) {}

    const DiagonalForm& repr() const noexcept { return repr_; }
    bool is_zero() const noexcept { return repr_.empty(); }

    friend bool operator==(const WittClass&, const WittClass&) = default;

private:
    DiagonalForm repr_;
};

/// Element of (Z/m)[H], m in {0, 2, 4}: dense coefficients indexed by H.
/// <a> maps to +[a] for a in H and to -[-a] otherwise.
class GroupRingElt {
public:
    GroupRingElt() = default;
    explicit GroupRingElt(FieldDesc field) : field_(field), coeffs_(field.h_size(), 0) {}

    const FieldDesc& field() const noexcept { return field_; }
    const std::vector<std::int32_t>& coeffs() const noexcept { return coeffs_; }
    std::int32_t coeff(std::size_t index) const { return coeffs_.at(index); }

    /// Adds sign * <a>.
    void add_entry(ClassBits a, int sign = 1);
    void set(std::size_t index, std::int64_t value);

    bool is_zero() const noexcept;
    /// Dimension of the anisotropic representative.
    int anisotropic_dim() const noexcept;
    /// Anisotropic diagonal representative (canonical).
    DiagonalForm to_form() const;

    GroupRingElt& operator+=(const GroupRingElt& other);
    GroupRingElt& operator-=(const GroupRingElt& other);
    friend GroupRingElt operator+(GroupRingElt a, const GroupRingElt& b) { return a += b; }
    friend GroupRingElt operator-(GroupRingElt a, const GroupRingElt& b) { return a -= b; }
    friend GroupRingElt operator-(const GroupRingElt& a);
    friend GroupRingElt operator*(const GroupRingElt& a, const GroupRingElt& b);
    friend bool operator==(const GroupRingElt&, const GroupRingElt&) = default;

private:
    std::int32_t reduce(std::int64_t v) const noexcept;

    FieldDesc field_{};
    std::vector<std::int32_t> coeffs_;
};

/// Dimension contributed by a single reduced coefficient.
int coefficient_dim(const FieldDesc& field, std::int32_t c) noexcept;

GroupRingElt to_group_ring(const DiagonalForm& phi);
bool group_ring_equal(const DiagonalForm& phi, const DiagonalForm& psi);

/// Witness data for the Witt index of phi1 + phi2 + phi3 with phi1 + phi2 anisotropic.
struct ThreeFormWitness {
    DiagonalForm psi1;                 ///< subform of phi1 with -psi1 inside phi3
    DiagonalForm psi2;                 ///< subform of phi2 with -psi2 inside phi3
    std::vector<SquareClass> extra;    ///< level 2 only: classes outside D(phi1), D(phi2)
    int achieved = 0;                  ///< dim psi1 + dim psi2 + #extra
};

struct ThreeFormCheck {
    bool holds = false;
    ThreeFormWitness witness;
};

/// Decides i_W(phi1 + phi2 + phi3) >= m by building the common subform psi (greedy
/// hyperbolic-plane extraction) and splitting it over phi1, phi2.
ThreeFormCheck three_form_witt_index_check(const DiagonalForm& phi1, const DiagonalForm& phi2,
                                           const DiagonalForm& phi3, int m);

}  // namespace rigidwitt
