#include <doctest.h>

#include <map>

#include "rigidwitt/errors.hpp"
#include "rigidwitt/syntax.hpp"
#include "test_util.hpp"

using namespace rigidwitt;
using testutil::for_each_form;

namespace {

DiagonalForm P(const char* text, const FieldDesc& f) { return parse_form(text, f); }

// psi is a subform of phi iff psi + rho = phi for some form rho of the complementary dimension.
bool subform_by_complements(const DiagonalForm& psi, const DiagonalForm& phi) {
    if (psi.dim() > phi.dim()) return false;
    bool found = false;
    const std::size_t rest = phi.dim() - psi.dim();
    for_each_form(phi.field(), rest, [&](const DiagonalForm& rho) {
        if (!found && rho.dim() == rest && is_isometric(orth_sum(psi, rho), phi)) found = true;
    });
    return found;
}

}  // namespace

TEST_CASE("orth_sum, scale, tensor examples") {
    const FieldDesc f{Base::F3, 2};
    CHECK(orth_sum(P("<1>", f), P("<-1>", f)) == P("<1,-1>", f));
    CHECK(orth_sum(P("<t1>", f), P("<>", f)) == P("<t1>", f));
    CHECK(orth_sum(P("<1,t1>", f), P("<t1>", f)) == P("<1,t1,t1>", f));

    const SquareClass t1 = SquareClass::variable(f, 1);
    CHECK(scale(t1, P("<1,t1>", f)) == P("<t1,1>", f));
    CHECK(scale(t1, P("<>", f)).empty());
    CHECK(scale(SquareClass::minus_one(f), P("<1,1>", f)) == P("<-1,-1>", f));

    CHECK(tensor(P("<1,-t1>", f), P("<1>", f)) == P("<1,-t1>", f));
    CHECK(tensor(P("<1,t1>", f), P("<1,t2>", f)) == P("<1,t1,t2,t1*t2>", f));
    CHECK(tensor(P("<1,-1>", f), P("<t1,t2>", f)) == P("<t1,t2,-t1,-t2>", f));
}

TEST_CASE("pfister forms") {
    const FieldDesc f{Base::F3, 3};
    const auto t = [&](int i) { return SquareClass::variable(f, i); };
    CHECK(pfister(make_pfister_spec({t(1)})) == P("<1,-t1>", f));
    CHECK(pfister(make_pfister_spec({t(1), t(2)})) == P("<1,-t1,-t2,t1*t2>", f));
    CHECK(pfister(PfisterSpec{t(3), {t(1)}}) == P("<t3,-t1*t3>", f));
    CHECK(pure_part(make_pfister_spec({t(1), t(2)})) == P("<-t1,-t2,t1*t2>", f));
    CHECK(pfister(make_pfister_spec({t(1), t(2), t(3)})).dim() == 8);
    CHECK_THROWS_AS(make_pfister_spec({}), PreconditionError);
}

TEST_CASE("determinant and discriminant") {
    const FieldDesc f{Base::F3, 1};
    CHECK(determinant(P("<1,-t1>", f)) == parse_class("-t1", f));
    CHECK(discriminant(P("<1,-t1>", f)) == parse_class("t1", f));
    CHECK(determinant(P("<>", f)).is_one());
}

TEST_CASE("canonicalize examples") {
    const FieldDesc f3{Base::F3, 0}, r{Base::R, 0}, f3t{Base::F3, 1};
    CHECK(canonicalize(P("<-1,-1>", f3)) == P("<1,1>", f3));
    CHECK(canonicalize(P("<1,1>", r)) == P("<1,1>", r));
    CHECK(canonicalize(P("<-t1,-t1,1>", f3t)) == P("<1,t1,t1>", f3t));
    CHECK_THROWS_AS(canonicalize(P("<1,-1>", r)), IsotropicInput);
}

TEST_CASE("is_isometric examples") {
    const FieldDesc f{Base::F3, 1};
    CHECK(is_isometric(P("<1,-1>", f), P("<t1,-t1>", f)));
    CHECK_FALSE(is_isometric(P("<1,1>", f), P("<1>", f)));
    CHECK(is_isometric(P("<1,1>", FieldDesc{Base::F3, 0}), P("<-1,-1>", FieldDesc{Base::F3, 0})));
}

TEST_CASE("is_subform examples") {
    const FieldDesc f{Base::F3, 2}, r{Base::R, 1};
    CHECK(is_subform(P("<1>", f), P("<1,t1>", f)));
    CHECK_FALSE(is_subform(P("<-1>", r), P("<1,t1>", r)));
    const PfisterSpec pi = make_pfister_spec({SquareClass::variable(f, 1), SquareClass::variable(f, 2)});
    CHECK(is_subform(pure_part(pi), pfister(pi)));
}

TEST_CASE("canonicalize is idempotent and decides isometry, exhaustive dim <= 4, nvars <= 3") {
    for (Base b : testutil::bases) {
        for (int n = 0; n <= 3; ++n) {
            const FieldDesc f{b, n};
            // Bucket anisotropic forms by canonical form, then compare isometry with a representative.
            std::map<std::vector<ClassBits>, DiagonalForm> reps;
            std::size_t mismatches = 0;
            std::vector<DiagonalForm> forms;
            for_each_form(f, 4, [&](const DiagonalForm& phi) {
                if (is_isotropic(phi)) return;
                forms.push_back(phi);
            });
            for (const auto& phi : forms) {
                const DiagonalForm c = canonicalize(phi);
                if (canonicalize(c) != c) ++mismatches;
                if (!is_isometric(c, phi)) ++mismatches;
                const std::vector<ClassBits> key(c.bits().begin(), c.bits().end());
                reps.emplace(key, phi);
            }
            // Distinct canonical forms are never isometric; same dimension pairs only.
            std::vector<DiagonalForm> canon;
            for (const auto& [key, phi] : reps) canon.push_back(canonicalize(phi));
            for (std::size_t i = 0; i < canon.size(); ++i) {
                for (std::size_t j = i + 1; j < canon.size(); ++j) {
                    if (canon[i].dim() == canon[j].dim() && is_isometric(canon[i], canon[j])) ++mismatches;
                }
            }
            CHECK_MESSAGE(mismatches == 0, to_string(f));
        }
    }
}

TEST_CASE("anisotropic multiplicity law") {
    for (Base b : testutil::bases) {
        for (int n = 0; n <= 2; ++n) {
            const FieldDesc f{b, n};
            for_each_form(f, 4, [&](const DiagonalForm& phi) {
                bool law = true;
                for (const auto& a : phi.entries()) {
                    const std::size_t m = phi.multiplicity(a);
                    const bool has_negative = !(negate(a) == a) && phi.multiplicity(negate(a)) > 0;
                    switch (f.level()) {
                        case Level::One: law = law && m <= 1; break;
                        case Level::Two: law = law && m <= 2 && !has_negative; break;
                        case Level::Infinite: law = law && !has_negative; break;
                    }
                }
                CHECK(law == !is_isotropic(phi));
            });
        }
    }
}

TEST_CASE("is_subform agrees with a search over complements") {
    for (Base b : testutil::bases) {
        for (int n = 0; n <= 2; ++n) {
            const FieldDesc f{b, n};
            std::vector<DiagonalForm> small;
            for_each_form(f, 2, [&](const DiagonalForm& psi) { small.push_back(psi); });
            std::mt19937_64 rng(11 + n);
            for (int i = 0; i < 40; ++i) {
                const DiagonalForm phi = testutil::random_form(f, rng, 4);
                for (const auto& psi : small) {
                    CHECK(is_subform(psi, phi) == subform_by_complements(psi, phi));
                }
            }
        }
    }
}

TEST_CASE("pfister forms are anisotropic or hyperbolic, exhaustive over nvars <= 3") {
    for (Base b : testutil::bases) {
        for (int n = 0; n <= 3; ++n) {
            const FieldDesc f{b, n};
            const auto all = all_classes(f);
            for (const auto& a : all) {
                for (const auto& c : all) {
                    const DiagonalForm two = pfister(make_pfister_spec({a, c}));
                    CHECK((!is_isotropic(two) || is_hyperbolic(two)));
                    if (n > 2) continue;
                    for (const auto& e : all) {
                        const DiagonalForm three = pfister(make_pfister_spec({a, c, e}));
                        CHECK((!is_isotropic(three) || is_hyperbolic(three)));
                    }
                }
            }
        }
    }
}

TEST_CASE("decompose_over_split examples") {
    const FieldDesc f{Base::F3, 3};
    const DiagonalForm phi1 = P("<1,t1>", f), phi2 = P("<t2,t3>", f);
    const SplitSubforms s = decompose_over_split(phi1, phi1, phi2);
    CHECK(s.psi1 == phi1);
    CHECK(s.psi2.empty());
    CHECK(s.psi3.empty());
    CHECK_THROWS_AS(decompose_over_split(P("<t1*t2>", f), phi1, phi2), NotASubform);
    CHECK_THROWS_AS(decompose_over_split(P("<1>", f), P("<1>", f), P("<-1>", f)), IsotropicSum);
}

TEST_CASE("decompose_over_split postconditions on random triples") {
    std::mt19937_64 rng(5);
    int done = 0;
    while (done < 1000) {
        const FieldDesc f{testutil::bases[rng() % 4], static_cast<int>(rng() % 4)};
        const DiagonalForm phi1 = testutil::random_anisotropic(f, rng, 4);
        const DiagonalForm phi2 = testutil::random_anisotropic(f, rng, 4);
        const DiagonalForm sum = orth_sum(phi1, phi2);
        if (is_isotropic(sum) || sum.empty()) continue;
        // A random subform of phi1 + phi2: pick entries, then possibly swap in a Witt-equal pair.
        std::vector<SquareClass> entries = sum.entries();
        std::shuffle(entries.begin(), entries.end(), rng);
        entries.resize(rng() % (entries.size() + 1));
        DiagonalForm psi(f, entries);
        if (f.level() == Level::Two && rng() % 2) psi = canonicalize_unchecked(scale(SquareClass::minus_one(f), psi));
        if (!is_subform(psi, sum)) continue;
        ++done;
        const SplitSubforms s = decompose_over_split(psi, phi1, phi2);
        CHECK(is_isometric(psi, orth_sum(orth_sum(s.psi1, s.psi2), s.psi3)));
        CHECK(is_subform(s.psi1, phi1));
        CHECK(is_subform(s.psi2, phi2));
        if (f.level() != Level::Two) CHECK(s.psi3.empty());
        // psi3 consists of pairwise distinct classes outside D(phi1) and D(phi2) but inside D(phi1 + phi2).
        const auto d1 = value_set(phi1), d2 = value_set(phi2), d12 = value_set(sum);
        for (std::size_t i = 0; i < s.psi3.dim(); ++i) {
            const SquareClass x = s.psi3.entry(i);
            CHECK_FALSE(std::binary_search(d1.begin(), d1.end(), x));
            CHECK_FALSE(std::binary_search(d2.begin(), d2.end(), x));
            CHECK(std::binary_search(d12.begin(), d12.end(), x));
            if (i > 0) CHECK(s.psi3.bits()[i] != s.psi3.bits()[i - 1]);
        }
    }
}

TEST_CASE("transform by an automorphism preserves isometry") {
    std::mt19937_64 rng(9);
    const FieldDesc f{Base::F3, 3};
    for (int i = 0; i < 200; ++i) {
        const SquareClass a = testutil::random_class(f, rng);
        if (a.is_unit_class()) continue;
        const ClassAutomorphism m = find_basis_change(a);
        const DiagonalForm phi = testutil::random_form(f, rng, 6), psi = testutil::random_form(f, rng, 6);
        CHECK(is_isometric(phi, psi) == is_isometric(transform(m, phi), transform(m, psi)));
        CHECK(witt_index(phi) == witt_index(transform(m, phi)));
    }
}
