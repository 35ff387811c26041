#include <doctest.h>

#include <array>

#include "rigidwitt/errors.hpp"
#include "rigidwitt/syntax.hpp"
#include "test_util.hpp"

using namespace rigidwitt;

namespace {

DiagonalForm P(const char* text, const FieldDesc& f) { return parse_form(text, f); }

// Isotropy of <a_1,...,a_k> over the prime field F3 by trying every nonzero vector.
bool f3_isotropic(const std::vector<int>& coeffs) {
    const std::size_t k = coeffs.size();
    std::vector<int> x(k, 0);
    for (;;) {
        std::size_t i = 0;
        while (i < k && x[i] == 2) x[i++] = 0;
        if (i == k) return false;
        ++x[i];
        int sum = 0;
        for (std::size_t j = 0; j < k; ++j) sum += coeffs[j] * x[j] * x[j];
        if (sum % 3 == 0) return true;
    }
}

}  // namespace

TEST_CASE("residues") {
    const FieldDesc f{Base::F3, 2}, f1{Base::F3, 1}, f0{Base::F3, 0};
    auto [a, b] = residues(P("<1,t2,t1*t2>", f), 2);
    CHECK(a == P("<1>", f1));
    CHECK(b == P("<1,t1>", f1));
    auto [c, d] = residues(P("<1,-1>", f1), 1);
    CHECK(c == P("<1,-1>", f0));
    CHECK(d.empty());
    auto [e, g] = residues(P("<t1>", f1), 1);
    CHECK(e.empty());
    CHECK(g == P("<1>", f0));
    CHECK_THROWS_AS(residues(P("<t1>", f1), 2), PreconditionError);
}

TEST_CASE("anisotropic part over the prime field F3 matches brute force") {
    const FieldDesc f0{Base::F3, 0};
    CHECK(f3_isotropic({1, 1, 1}));
    CHECK_FALSE(f3_isotropic({1, 1}));
    CHECK_FALSE(f3_isotropic({2, 2}));
    CHECK(f3_isotropic({1, 2}));
    // One hyperbolic plane splits off <1,1,1>; the determinant fixes the rest.
    CHECK(anisotropic_part(P("<1,1,1>", f0)) == P("<-1>", f0));
    CHECK(anisotropic_part(P("<1,-1>", f0)).empty());
    for (int p = 0; p <= 4; ++p) {
        for (int q = 0; p + q <= 5; ++q) {
            std::vector<int> coeffs(p, 1);
            coeffs.insert(coeffs.end(), q, 2);
            std::vector<ClassBits> bits(p, 0u);
            bits.insert(bits.end(), q, 1u);
            const DiagonalForm phi = testutil::form(f0, bits);
            CHECK(is_isotropic(phi) == f3_isotropic(coeffs));
        }
    }
}

TEST_CASE("anisotropic part examples") {
    const FieldDesc f1{Base::F3, 1};
    CHECK(anisotropic_part(P("<1,-1>", f1)).empty());
    CHECK(anisotropic_part(P("<1,1,t1,t1,t1>", f1)) == P("<1,1,-t1>", f1));
    CHECK(witt_index(P("<1,1,t1,t1,t1>", f1)) == 1);
    const FieldDesc r{Base::R, 1};
    CHECK(anisotropic_part(P("<1,1,-1,t1,-t1,t1>", r)) == P("<1,t1>", r));
    const FieldDesc c{Base::C, 1};
    CHECK(anisotropic_part(P("<1,1,1,t1,t1>", c)) == P("<1>", c));
    const FieldDesc s{Base::SquareMinusOne, 1};
    CHECK(anisotropic_part(P("<1,u,u,u*t1,u*t1,u*t1>", s)) == P("<1,u*t1>", s));
}

TEST_CASE("isotropy predicates") {
    const FieldDesc r{Base::R, 0};
    CHECK(is_hyperbolic(P("<1,-1>", r)));
    CHECK(witt_index(P("<1,-1>", r)) == 1);
    CHECK_FALSE(is_isotropic(P("<1,1,1>", r)));
    CHECK(is_hyperbolic(P("<>", r)));
}

TEST_CASE("WittClass equality is structural on anisotropic representatives") {
    const FieldDesc f{Base::F3, 1};
    CHECK(WittClass(P("<1,1,t1,-t1>", f)) == WittClass(P("<-1,-1>", f)));
    CHECK(WittClass(P("<1,-1>", f)).is_zero());
    CHECK_FALSE(WittClass(P("<1,1>", f)) == WittClass(P("<1>", f)));
}

TEST_CASE("Springer additivity of the Witt index") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 1000; ++i) {
        const FieldDesc f{testutil::bases[rng() % 4], 1 + static_cast<int>(rng() % 4)};
        const DiagonalForm phi = testutil::random_form(f, rng, 10);
        const int k = 1 + static_cast<int>(rng() % f.nvars);
        const auto [phi1, phi2] = residues(phi, k);
        CHECK(witt_index(phi) == witt_index(phi1) + witt_index(phi2));
    }
}

TEST_CASE("group ring map is a ring homomorphism") {
    std::mt19937_64 rng(19);
    for (int i = 0; i < 500; ++i) {
        const FieldDesc f{testutil::bases[rng() % 4], static_cast<int>(rng() % 4)};
        const DiagonalForm phi = testutil::random_form(f, rng, 6), psi = testutil::random_form(f, rng, 6);
        CHECK(to_group_ring(orth_sum(phi, psi)) == to_group_ring(phi) + to_group_ring(psi));
        CHECK(to_group_ring(tensor(phi, psi)) == to_group_ring(phi) * to_group_ring(psi));
        CHECK(to_group_ring(negate(phi)) == -to_group_ring(phi));
        CHECK(to_group_ring(phi).to_form() == anisotropic_part(phi));
        CHECK(to_group_ring(phi).anisotropic_dim() == static_cast<int>(anisotropic_part(phi).dim()));
    }
}

TEST_CASE("group ring equality agrees with Springer") {
    std::mt19937_64 rng(23);
    int equal = 0;
    for (int i = 0; i < 2000; ++i) {
        const FieldDesc f{testutil::bases[rng() % 4], static_cast<int>(rng() % 3)};
        const DiagonalForm phi = testutil::random_form(f, rng, 6);
        DiagonalForm psi = testutil::random_form(f, rng, 6);
        if (i % 2) psi = orth_sum(anisotropic_part(phi), testutil::form(f, {0u, negate_bits(f, 0u)}));
        const bool springer = anisotropic_part(orth_sum(phi, negate(psi))).empty();
        equal += springer;
        CHECK(group_ring_equal(phi, psi) == springer);
    }
    CHECK(equal >= 1000);
}

TEST_CASE("value_set equals the classes represented, exhaustive") {
    for (Base b : testutil::bases) {
        for (int n = 0; n <= 3; ++n) {
            const FieldDesc f{b, n};
            const auto all = all_classes(f);
            testutil::for_each_form(f, 4, [&](const DiagonalForm& phi) {
                if (is_isotropic(phi)) return;
                std::vector<SquareClass> expected;
                for (const auto& a : all) {
                    if (represents(a, phi)) expected.push_back(a);
                }
                CHECK(value_set(phi) == expected);
            });
        }
    }
}

TEST_CASE("triple isotropy criterion, exhaustive small cases") {
    for (Base b : testutil::bases) {
        for (int n = 0; n <= 2; ++n) {
            const FieldDesc f{b, n};
            std::vector<DiagonalForm> small;
            testutil::for_each_form(f, 2, [&](const DiagonalForm& phi) {
                if (!phi.empty() && !is_isotropic(phi)) small.push_back(phi);
            });
            for (const auto& p1 : small) {
                for (const auto& p2 : small) {
                    if (is_isotropic(orth_sum(p1, p2))) continue;
                    const auto d1 = value_set(p1), d2 = value_set(p2);
                    for (const auto& p3 : small) {
                        bool common = false;
                        const auto d3 = value_set(p3);
                        for (const auto& x : d1) {
                            common = common || (std::binary_search(d2.begin(), d2.end(), x) &&
                                                std::binary_search(d3.begin(), d3.end(), x));
                        }
                        const bool expected = is_isotropic(orth_sum(p1, p3)) || is_isotropic(orth_sum(p2, p3)) ||
                                              (f.level() == Level::Two && common);
                        CHECK(is_isotropic(orth_sum(orth_sum(p1, p2), p3)) == expected);
                    }
                }
            }
        }
    }
}

TEST_CASE("classes represented only by the sum force -x into both summands") {
    std::mt19937_64 rng(29);
    int instances = 0;
    for (int i = 0; i < 4000 && instances < 300; ++i) {
        const FieldDesc f{Base::F3, 1 + static_cast<int>(rng() % 3)};
        const DiagonalForm phi = testutil::random_anisotropic(f, rng, 5);
        const DiagonalForm psi = testutil::random_anisotropic(f, rng, 5);
        const DiagonalForm sum = orth_sum(phi, psi);
        if (is_isotropic(sum)) continue;
        const auto dp = value_set(phi), dq = value_set(psi), ds = value_set(sum);
        std::vector<SquareClass> xs;
        for (const auto& x : ds) {
            if (!std::binary_search(dp.begin(), dp.end(), x) && !std::binary_search(dq.begin(), dq.end(), x)) {
                xs.push_back(x);
            }
        }
        if (xs.empty()) continue;
        std::shuffle(xs.begin(), xs.end(), rng);
        xs.resize(1 + rng() % xs.size());
        const DiagonalForm x_form(f, xs);
        if (is_isotropic(x_form)) continue;
        ++instances;
        CHECK(is_subform(negate(x_form), phi));
        CHECK(is_subform(negate(x_form), psi));
    }
    CHECK(instances > 50);
}

TEST_CASE("three_form_witt_index_check") {
    const FieldDesc f{Base::F3, 2};
    const DiagonalForm p1 = P("<1,t1>", f), p2 = P("<t2>", f), p3 = P("<-1,t1*t2>", f);
    const ThreeFormCheck zero = three_form_witt_index_check(p1, p2, p3, 0);
    CHECK(zero.holds);

    const DiagonalForm full = negate(orth_sum(p1, p2));
    const ThreeFormCheck all = three_form_witt_index_check(p1, p2, full, 3);
    CHECK(all.holds);
    CHECK(all.witness.psi1 == p1);
    CHECK(all.witness.psi2 == p2);

    CHECK_THROWS_AS(three_form_witt_index_check(P("<1,-1>", f), p2, p3, 1), IsotropicInput);
    CHECK_THROWS_AS(three_form_witt_index_check(p1, P("<-1>", f), p3, 1), IsotropicSum);

    std::mt19937_64 rng(31);
    int checked = 0;
    while (checked < 500) {
        const FieldDesc g{testutil::bases[rng() % 4], static_cast<int>(rng() % 3)};
        const DiagonalForm a = testutil::random_anisotropic(g, rng, 4), b = testutil::random_anisotropic(g, rng, 4),
                           c = testutil::random_anisotropic(g, rng, 5);
        if (is_isotropic(orth_sum(a, b))) continue;
        ++checked;
        const int m = witt_index(orth_sum(orth_sum(a, b), c));
        const ThreeFormCheck r = three_form_witt_index_check(a, b, c, m);
        CHECK(r.holds);
        CHECK(r.witness.achieved == m);
        CHECK_FALSE(three_form_witt_index_check(a, b, c, m + 1).holds);
        CHECK(is_subform(r.witness.psi1, a));
        CHECK(is_subform(r.witness.psi2, b));
        if (g.level() != Level::Two) CHECK(r.witness.extra.empty());
    }
}
