#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rigidwitt/ideals.hpp"
#include "rigidwitt/search.hpp"

namespace rigidwitt {

/// <1, t1, ..., tn, (-1)^((n+2)/2) t1...tn> for even n <= nvars.
DiagonalForm generic_I2_form(const FieldDesc& field, int n);

struct LowerBoundWitness {
    DiagonalForm form;
    int gp3 = 0;  ///< claimed exact 3-Pfister number, floor(d/4) - 1
};

/// <<t_{m+1}>> tensor generic_I2_form(m) with m = 2 floor(d/4) - 2.
LowerBoundWitness lower_bound_generic(const FieldDesc& field, int d);

struct Divisibility {
    bool divisible = false;
    /// rho with phi = <<slots>> tensor rho, from the peeling route.
    std::optional<DiagonalForm> quotient;
    bool linear_verdict = false;
    bool peeling_verdict = false;
    /// Hyperbolicity over F(sqrt a); only for a single slot a != 1.
    std::optional<bool> extension_verdict;
};

/// Decides phi = <<slots>> tensor rho three ways (group-ring linear system, greedy
/// peeling, quadratic extension for one slot). Throws IsotropicInput, and
/// InternalContradiction if the routes disagree.
Divisibility divisible_by_pfister(const DiagonalForm& phi, const std::vector<SquareClass>& slots);

/// Solvability of pi * x = phi over (Z/m)[H] by Smith-style elimination.
bool solvable_in_group_ring(const GroupRingElt& pi, const GroupRingElt& phi);

/// Smallest class d != 1 dividing both Pfister forms, if any.
std::optional<SquareClass> common_slot(const PfisterSpec& pi1, const PfisterSpec& pi2);

struct GP2Subform {
    PfisterSpec witness;
    DiagonalForm complement;
};

/// First GP_2 generator (in enumeration order) that is a subform of phi. Throws IsotropicInput.
std::optional<GP2Subform> find_GP2_subform(const DiagonalForm& phi);

/// All 4 summands of an isometric decomposition phi = s1 + ... + sk into GP_2 forms.
std::optional<std::vector<PfisterSpec>> decompose_into_GP2(const DiagonalForm& phi);

struct Report14 {
    int gp3 = 0;
    PfisterCertificate certificate;
    std::optional<GP2Subform> gp2_subform;
    bool condition_i = false;    ///< two scaled 3-fold Pfister forms suffice
    bool condition_ii = false;   ///< phi = s (tau1' - tau2') verified by isometry
    bool condition_iii = false;  ///< GP_2 subform found
    bool flagged = false;        ///< condition (ii) could not be put into shape
    std::optional<SquareClass> shape_scalar;
    std::optional<PfisterSpec> tau1, tau2;
};

Report14 classify14(const DiagonalForm& phi, const SearchOptions& opts = {});

struct BiquadraticPair {
    SquareClass a;
    SquareClass b;  ///< class over F whose image in F(sqrt a) is adjoined next
};

struct Report16 {
    int gp3 = 0;
    PfisterCertificate certificate;
    GP2Subform gp2_subform;
    std::vector<PfisterSpec> gp2_decomposition;
    BiquadraticPair splitting;
};

/// Throws InternalContradiction if a witness the theory guarantees is not found.
Report16 classify16(const DiagonalForm& phi, const SearchOptions& opts = {});

/// A class a with phi hyperbolic over F(sqrt a), if one exists.
std::optional<SquareClass> quadratic_splitting_class(const DiagonalForm& phi);

/// A pair (a, b) with phi hyperbolic over F(sqrt a)(sqrt b), scanning a by decreasing
/// Witt index over F(sqrt a).
std::optional<BiquadraticPair> biquadratic_splitting_pair(const DiagonalForm& phi);

/// Applies both extensions of the pair and tests hyperbolicity.
bool splits_over(const DiagonalForm& phi, const BiquadraticPair& pair);

}  // namespace rigidwitt
