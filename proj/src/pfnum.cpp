#include "rigidwitt/pfnum.hpp"

#include <algorithm>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

#include "rigidwitt/errors.hpp"
#include "rigidwitt/generators.hpp"

namespace rigidwitt {

using boost::multiprecision::cpp_int;

DiagonalForm generic_I2_form(const FieldDesc& field, int n) {
    if (n < 0 || n % 2 != 0 || n > field.nvars) {
        throw PreconditionError("generic_I2_form: n must be even and at most the number of variables");
    }
    std::vector<ClassBits> bits{0u};
    ClassBits product = 0;
    for (int i = 1; i <= n; ++i) {
        bits.push_back(ClassBits{1} << i);
        product |= ClassBits{1} << i;
    }
    const bool minus = ((n + 2) / 2) % 2 == 1;
    bits.push_back(minus ? negate_bits(field, product) : product);
    return DiagonalForm::from_bits(field, std::move(bits));
}

LowerBoundWitness lower_bound_generic(const FieldDesc& field, int d) {
    if (d < 4) throw PreconditionError("lower_bound_generic: dimension must be at least 4");
    const int m = 2 * (d / 4) - 2;
    if (field.nvars < m + 1) {
        throw PreconditionError("lower_bound_generic: needs " + std::to_string(m + 1) + " variables");
    }
    const DiagonalForm binary(field, {SquareClass::one(field), negate(SquareClass::variable(field, m + 1))});
    return LowerBoundWitness{tensor(binary, generic_I2_form(field, m)), d / 4 - 1};
}

// ---------------------------------------------------------------------------
// Divisibility

namespace {

struct Ring {
    int modulus;  // 0 means Z

    cpp_int reduce(const cpp_int& v) const {
        if (modulus == 0) return v;
        cpp_int r = v % modulus;
        return r < 0 ? r + modulus : r;
    }
    /// 2-adic valuation in Z/m (m = 2^k); zero has valuation k.
    int valuation(const cpp_int& v) const {
        int k = modulus == 4 ? 2 : 1;
        if (v == 0) return k;
        int val = 0;
        cpp_int x = v;
        while (val < k && (x & 1) == 0) {
            x >>= 1;
            ++val;
        }
        return val;
    }
    /// Pivot preference: smaller is better; nullopt for zero.
    std::optional<cpp_int> weight(const cpp_int& v) const {
        if (v == 0) return std::nullopt;
        if (modulus == 0) return v < 0 ? cpp_int(-v) : v;
        return cpp_int(valuation(v));
    }
};

}  // namespace

bool solvable_in_group_ring(const GroupRingElt& pi, const GroupRingElt& phi) {
    require_same_field(pi.field(), phi.field(), "solvable_in_group_ring");
    const Ring ring{pi.field().witt_modulus()};
    const std::size_t size = pi.coeffs().size();
    std::vector<std::vector<cpp_int>> a(size, std::vector<cpp_int>(size));
    std::vector<cpp_int> b(size);
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) a[i][j] = pi.coeffs()[i ^ j];
        b[i] = phi.coeffs()[i];
    }
    std::vector<cpp_int> pivots;
    std::size_t t = 0;
    for (; t < size; ++t) {
        std::optional<cpp_int> best;
        std::size_t br = 0, bc = 0;
        for (std::size_t r = t; r < size; ++r) {
            for (std::size_t c = t; c < size; ++c) {
                const auto w = ring.weight(a[r][c]);
                if (w && (!best || *w < *best)) {
                    best = w;
                    br = r;
                    bc = c;
                }
            }
        }
        if (!best) break;
        std::swap(a[t], a[br]);
        std::swap(b[t], b[br]);
        for (auto& row : a) std::swap(row[t], row[bc]);

        if (ring.modulus == 0) {
            // Euclidean steps until row t and column t are clear.
            bool dirty = true;
            while (dirty) {
                dirty = false;
                for (std::size_t r = t + 1; r < size; ++r) {
                    if (a[r][t] == 0) continue;
                    const cpp_int q = a[r][t] / a[t][t];
                    for (std::size_t c = t; c < size; ++c) a[r][c] -= q * a[t][c];
                    b[r] -= q * b[t];
                    if (a[r][t] != 0) {
                        std::swap(a[t], a[r]);
                        std::swap(b[t], b[r]);
                        dirty = true;
                    }
                }
                for (std::size_t c = t + 1; c < size && !dirty; ++c) {
                    if (a[t][c] == 0) continue;
                    const cpp_int q = a[t][c] / a[t][t];
                    for (std::size_t r = t; r < size; ++r) a[r][c] -= q * a[r][t];
                    if (a[t][c] != 0) {
                        for (auto& row : a) std::swap(row[t], row[c]);
                        dirty = true;
                    }
                }
            }
        } else {
            const cpp_int& p = a[t][t];
            const int v = ring.valuation(p);
            const cpp_int unit_inv = ring.reduce(p >> v);  // odd units of Z/4 are self-inverse
            for (std::size_t r = t + 1; r < size; ++r) {
                if (a[r][t] == 0) continue;
                const cpp_int f = ring.reduce((a[r][t] >> v) * unit_inv);
                for (std::size_t c = t; c < size; ++c) a[r][c] = ring.reduce(a[r][c] - f * a[t][c]);
                b[r] = ring.reduce(b[r] - f * b[t]);
            }
            // Column operations only clear row t; they never touch b.
            for (std::size_t c = t + 1; c < size; ++c) a[t][c] = 0;
        }
        pivots.push_back(a[t][t]);
    }
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (ring.modulus == 0) {
            if (b[i] % pivots[i] != 0) return false;
        } else if (ring.valuation(b[i]) < ring.valuation(pivots[i])) {
            return false;
        }
    }
    for (std::size_t i = pivots.size(); i < size; ++i) {
        if (ring.reduce(b[i]) != 0) return false;
    }
    return true;
}

Divisibility divisible_by_pfister(const DiagonalForm& phi, const std::vector<SquareClass>& slots) {
    if (is_isotropic(phi)) throw IsotropicInput("divisible_by_pfister: form is isotropic");
    const FieldDesc& field = phi.field();
    for (const auto& s : slots) require_same_field(field, s.field(), "divisible_by_pfister");
    const DiagonalForm pi = pfister(PfisterSpec{SquareClass::one(field), slots});

    Divisibility out;
    out.linear_verdict = solvable_in_group_ring(to_group_ring(pi), to_group_ring(phi));

    DiagonalForm cur = canonicalize_unchecked(phi);
    std::vector<SquareClass> quotient;
    bool stuck = false;
    while (!cur.empty() && !stuck) {
        stuck = true;
        for (const auto& x : value_set(cur)) {
            const DiagonalForm piece = scale(x, pi);
            if (!is_subform(piece, cur)) continue;
            quotient.push_back(x);
            cur = anisotropic_part(orth_sum(cur, negate(piece)));
            stuck = false;
            break;
        }
    }
    out.peeling_verdict = !stuck;
    if (out.peeling_verdict) out.quotient = DiagonalForm(field, quotient);

    if (slots.size() == 1 && !slots[0].is_one()) {
        out.extension_verdict = is_hyperbolic(extend_scalars_quadratic(phi, slots[0]).form);
    }
    if (out.linear_verdict != out.peeling_verdict ||
        (out.extension_verdict && *out.extension_verdict != out.linear_verdict)) {
        throw InternalContradiction("divisible_by_pfister: decision routes disagree");
    }
    out.divisible = out.linear_verdict;
    return out;
}

std::optional<SquareClass> common_slot(const PfisterSpec& pi1, const PfisterSpec& pi2) {
    const FieldDesc& field = pi1.scalar.field();
    require_same_field(field, pi2.scalar.field(), "common_slot");
    const DiagonalForm f1 = anisotropic_part(pfister(pi1));
    const DiagonalForm f2 = anisotropic_part(pfister(pi2));
    for (const auto& d : all_classes(field)) {
        if (d.is_one()) continue;
        if (divisible_by_pfister(f1, {d}).divisible && divisible_by_pfister(f2, {d}).divisible) return d;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// GP_2 subforms

namespace {

/// Anisotropic dimension of phi - g, computed on g's support only.
int dim_after_subtracting(const FieldDesc& field, const GroupRingElt& phi, int phi_dim, const Generator& g) {
    const int m = field.witt_modulus();
    int dim = phi_dim;
    for (const auto& [idx, c] : g.support) {
        const std::int32_t before = phi.coeffs()[idx];
        std::int64_t after = static_cast<std::int64_t>(before) - c;
        if (m != 0) after = ((after % m) + m) % m;
        dim += coefficient_dim(field, static_cast<std::int32_t>(after)) - coefficient_dim(field, before);
    }
    return dim;
}

template <typename Visit>
bool for_each_GP2_subform(const DiagonalForm& phi, Visit&& visit) {
    const FieldDesc& field = phi.field();
    const GeneratorSet& gens = generator_set(field, 2);
    const GroupRingElt elt = to_group_ring(phi);
    const int dim = static_cast<int>(phi.dim());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (dim_after_subtracting(field, elt, dim, gens[i]) != dim - 4) continue;
        const DiagonalForm sigma = pfister(gens[i].spec);
        if (!is_subform(sigma, phi)) {
            throw InternalContradiction("GP2 subform scan: group ring and Witt index disagree");
        }
        if (visit(GP2Subform{gens[i].spec, anisotropic_part(orth_sum(phi, negate(sigma)))})) return true;
    }
    return false;
}

}  // namespace

std::optional<GP2Subform> find_GP2_subform(const DiagonalForm& phi) {
    if (is_isotropic(phi)) throw IsotropicInput("find_GP2_subform: form is isotropic");
    if (phi.dim() < 4) return std::nullopt;
    std::optional<GP2Subform> out;
    for_each_GP2_subform(phi, [&](GP2Subform s) {
        out = std::move(s);
        return true;
    });
    return out;
}

namespace {

bool decompose_rec(const DiagonalForm& phi, std::vector<PfisterSpec>& out,
                   std::set<std::vector<ClassBits>>& failed) {
    if (phi.empty()) return true;
    if (phi.dim() % 4 != 0) return false;
    std::vector<ClassBits> key(phi.bits().begin(), phi.bits().end());
    if (failed.count(key)) return false;
    const bool ok = for_each_GP2_subform(phi, [&](const GP2Subform& s) {
        out.push_back(s.witness);
        if (decompose_rec(s.complement, out, failed)) return true;
        out.pop_back();
        return false;
    });
    if (!ok) failed.insert(std::move(key));
    return ok;
}

}  // namespace

std::optional<std::vector<PfisterSpec>> decompose_into_GP2(const DiagonalForm& phi) {
    if (is_isotropic(phi)) throw IsotropicInput("decompose_into_GP2: form is isotropic");
    std::vector<PfisterSpec> out;
    std::set<std::vector<ClassBits>> failed;
    if (!decompose_rec(canonicalize_unchecked(phi), out, failed)) return std::nullopt;
    return out;
}

// ---------------------------------------------------------------------------
// Classification

namespace {

void require_I3_form(const DiagonalForm& phi, std::size_t dim, const char* op) {
    if (phi.dim() != dim) {
        throw PreconditionError(std::string(op) + ": form must have dimension " + std::to_string(dim));
    }
    if (is_isotropic(phi)) throw IsotropicInput(std::string(op) + ": form is isotropic");
    if (!in_In(phi, 3)) throw NotInIdeal(std::string(op) + ": form is not in I^3");
}

PfisterSpec unscaled(const PfisterSpec& spec) { return PfisterSpec{SquareClass::one(spec.scalar.field()), spec.slots}; }

}  // namespace

Report14 classify14(const DiagonalForm& phi, const SearchOptions& opts) {
    require_I3_form(phi, 14, "classify14");
    Report14 report;
    PfisterNumberResult r = pfister_number(phi, 3, opts);
    report.gp3 = r.value;
    report.certificate = std::move(r.certificate);
    report.condition_i = report.gp3 <= 2;
    report.gp2_subform = find_GP2_subform(phi);
    report.condition_iii = report.gp2_subform.has_value();

    if (report.certificate.length() == 2) {
        const PfisterSpec& p1 = report.certificate.terms[0];
        const PfisterSpec& p2 = report.certificate.terms[1];
        const auto d1 = value_set(pfister(p1));
        const auto d2 = value_set(pfister(p2));
        for (const auto& s : d1) {
            if (!std::binary_search(d2.begin(), d2.end(), negate(s))) continue;
            const PfisterSpec t1 = unscaled(p1), t2 = unscaled(p2);
            const DiagonalForm shape = scale(s, orth_sum(pure_part(t1), negate(pure_part(t2))));
            if (is_isometric(phi, shape)) {
                report.condition_ii = true;
                report.shape_scalar = s;
                report.tau1 = t1;
                report.tau2 = t2;
            }
            break;
        }
    }
    report.flagged = report.condition_i && !report.condition_ii;
    return report;
}

std::optional<SquareClass> quadratic_splitting_class(const DiagonalForm& phi) {
    for (const auto& a : all_classes(phi.field())) {
        if (a.is_one()) continue;
        if (is_hyperbolic(extend_scalars_quadratic(phi, a).form)) return a;
    }
    return std::nullopt;
}

bool splits_over(const DiagonalForm& phi, const BiquadraticPair& pair) {
    const QuadraticExtension first(pair.a);
    const SquareClass b = first.image(pair.b);
    if (b.is_one()) return false;
    const QuadraticExtension second(b);
    return is_hyperbolic(second.image(first.image(phi)));
}

std::optional<BiquadraticPair> biquadratic_splitting_pair(const DiagonalForm& phi) {
    const auto classes = all_classes(phi.field());
    std::vector<std::pair<int, SquareClass>> order;
    for (const auto& a : classes) {
        if (!a.is_one()) order.emplace_back(-witt_index(extend_scalars_quadratic(phi, a).form), a);
    }
    std::stable_sort(order.begin(), order.end(),
                     [](const auto& x, const auto& y) { return x.first < y.first; });
    for (const auto& [neg_index, a] : order) {
        const QuadraticExtension first(a);
        const DiagonalForm over_first = first.image(phi);
        for (const auto& b : classes) {
            const SquareClass image = first.image(b);
            if (image.is_one()) continue;
            if (is_hyperbolic(QuadraticExtension(image).image(over_first))) return BiquadraticPair{a, b};
        }
    }
    return std::nullopt;
}

Report16 classify16(const DiagonalForm& phi, const SearchOptions& opts) {
    require_I3_form(phi, 16, "classify16");
    Report16 report;
    try {
        PfisterNumberResult r = pfister_number(phi, 3, opts);
        report.gp3 = r.value;
        report.certificate = std::move(r.certificate);
    } catch (const DepthCapExceeded& e) {
        throw InternalContradiction(std::string("classify16: no certificate with at most three terms: ") + e.what());
    }
    auto sub = find_GP2_subform(phi);
    if (!sub) throw InternalContradiction("classify16: no GP2 subform");
    report.gp2_subform = std::move(*sub);
    auto parts = decompose_into_GP2(phi);
    if (!parts || parts->size() != 4) throw InternalContradiction("classify16: no decomposition into four GP2 forms");
    report.gp2_decomposition = std::move(*parts);
    auto pair = biquadratic_splitting_pair(phi);
    if (!pair) throw InternalContradiction("classify16: no biquadratic splitting pair");
    report.splitting = *pair;
    return report;
}

}  // namespace rigidwitt
