#include <doctest.h>

#include "rigidwitt/errors.hpp"
#include "rigidwitt/pfnum.hpp"
#include "rigidwitt/sampling.hpp"
#include "rigidwitt/syntax.hpp"
#include "test_util.hpp"

using namespace rigidwitt;

namespace {

DiagonalForm P(const char* text, const FieldDesc& f) { return parse_form(text, f); }
SquareClass C(const char* text, const FieldDesc& f) { return parse_class(text, f); }

}  // namespace

TEST_CASE("lower_bound_generic") {
    const FieldDesc f{Base::F3, 5};
    const LowerBoundWitness w8 = lower_bound_generic(f, 8);
    CHECK(w8.gp3 == 1);
    CHECK(w8.form == tensor(P("<<t3>>", f), P("<1,t1,t2,t1*t2>", f)));
    const LowerBoundWitness w12 = lower_bound_generic(f, 12);
    CHECK(w12.gp3 == 2);
    CHECK(w12.form.dim() == 12);
    CHECK(pfister_number(w12.form, 3).value == 2);
    CHECK(lower_bound_generic(f, 9).form == w8.form);
    CHECK_THROWS_AS(lower_bound_generic(FieldDesc{Base::F3, 4}, 12), PreconditionError);
}

TEST_CASE("divisibility examples") {
    const FieldDesc f{Base::F3, 2};
    const DiagonalForm phi = P("<1,t1,t2,t1*t2>", f);
    // Over F3 the factor is <1,t1> = <<-t1>>.
    const Divisibility d = divisible_by_pfister(phi, {C("-t1", f)});
    CHECK(d.divisible);
    REQUIRE(d.quotient);
    CHECK(is_isometric(tensor(P("<<-t1>>", f), *d.quotient), phi));
    CHECK_FALSE(divisible_by_pfister(phi, {C("t1", f)}).divisible);

    const FieldDesc c{Base::C, 2};
    const Divisibility dc = divisible_by_pfister(P("<1,t1,t2,t1*t2>", c), {C("t1", c)});
    CHECK(dc.divisible);
    REQUIRE(dc.quotient);
    CHECK(is_isometric(*dc.quotient, P("<1,t2>", c)));

    CHECK_FALSE(divisible_by_pfister(P("<1,-t1,t2,t1*t2>", f), {C("t1", f)}).divisible);
    CHECK_THROWS_AS(divisible_by_pfister(P("<1,-1>", f), {C("t1", f)}), IsotropicInput);
}

TEST_CASE("constructed multiples are divisible") {
    std::mt19937_64 rng(79);
    for (int i = 0; i < 400; ++i) {
        const FieldDesc f{testutil::bases[rng() % 4], static_cast<int>(rng() % 4)};
        const int k = 1 + static_cast<int>(rng() % 2);
        std::vector<SquareClass> slots;
        for (int j = 0; j < k; ++j) slots.push_back(testutil::random_class(f, rng));
        const DiagonalForm rho = testutil::random_form(f, rng, 4);
        const DiagonalForm phi = anisotropic_part(tensor(pfister(PfisterSpec{SquareClass::one(f), slots}), rho));
        const Divisibility d = divisible_by_pfister(phi, slots);
        CHECK(d.divisible);
        REQUIRE(d.quotient);
        CHECK(group_ring_equal(tensor(pfister(PfisterSpec{SquareClass::one(f), slots}), *d.quotient), phi));
    }
}

TEST_CASE("common_slot") {
    const FieldDesc f{Base::F3, 4};
    const auto s = common_slot(parse_pfister("<<t1,t2>>", f), parse_pfister("<<t1,t3>>", f));
    REQUIRE(s);
    CHECK(divisible_by_pfister(pfister(parse_pfister("<<t1,t2>>", f)), {*s}).divisible);
    CHECK(divisible_by_pfister(pfister(parse_pfister("<<t1,t3>>", f)), {*s}).divisible);
    CHECK_FALSE(common_slot(parse_pfister("<<t1,t2>>", f), parse_pfister("<<t3,t4>>", f)));
    const PfisterSpec pi = parse_pfister("<<t2,-t4>>", f);
    const auto self = common_slot(pi, pi);
    REQUIRE(self);
    CHECK(divisible_by_pfister(pfister(pi), {*self}).divisible);
}

TEST_CASE("solvable_in_group_ring") {
    const FieldDesc f{Base::R, 2};
    const GroupRingElt pi = to_group_ring(P("<<t1>>", f));
    CHECK(solvable_in_group_ring(pi, to_group_ring(P("<t2,-t1*t2>", f))));
    CHECK_FALSE(solvable_in_group_ring(pi, to_group_ring(P("<1>", f))));
    CHECK(solvable_in_group_ring(pi, GroupRingElt(f)));
}

TEST_CASE("find_GP2_subform") {
    const FieldDesc f{Base::F3, 4};
    const DiagonalForm phi = orth_sum(pfister(parse_pfister("t3*<<t1,t2>>", f)), P("<t4,t1*t4>", f));
    REQUIRE_FALSE(is_isotropic(phi));
    const auto sub = find_GP2_subform(phi);
    REQUIRE(sub);
    CHECK(is_subform(pfister(sub->witness), phi));
    CHECK(is_isometric(orth_sum(pfister(sub->witness), sub->complement), phi));
    CHECK_FALSE(find_GP2_subform(P("<1,t1,t2>", f)));
    CHECK_THROWS_AS(find_GP2_subform(P("<1,-1>", f)), IsotropicInput);
}

TEST_CASE("generic dim-8 I^2 form over six variables has no GP2 subform") {
    const FieldDesc f{Base::F3, 6};
    const DiagonalForm psi = generic_I2_form(f, 6);
    CHECK_FALSE(find_GP2_subform(psi));
    CHECK_FALSE(decompose_into_GP2(psi));
}

TEST_CASE("decompose_into_GP2") {
    const FieldDesc f{Base::F3, 4};
    const DiagonalForm phi = orth_sum(pfister(parse_pfister("<<t1,t2>>", f)), pfister(parse_pfister("t3*<<t1,t4>>", f)));
    REQUIRE_FALSE(is_isotropic(phi));
    const auto parts = decompose_into_GP2(phi);
    REQUIRE(parts);
    CHECK(parts->size() == 2);
    DiagonalForm sum(f);
    for (const auto& p : *parts) sum = orth_sum(sum, pfister(p));
    CHECK(is_isometric(sum, phi));
}

TEST_CASE("classify14 on sums of two 3-fold Pfister forms") {
    const FieldDesc f{Base::F3, 5};
    FormSampler sampler(f, 3, 83);
    for (int i = 0; i < 10; ++i) {
        const auto s = sampler.sample(14, 2);
        REQUIRE(s);
        const Report14 r = classify14(s->form);
        CHECK(r.gp3 <= 2);
        CHECK(r.certificate.verify());
        CHECK(r.condition_i);
        CHECK(r.condition_iii);
        REQUIRE(r.gp2_subform);
        CHECK(is_subform(pfister(r.gp2_subform->witness), s->form));
        if (r.condition_ii) {
            REQUIRE(r.shape_scalar);
            REQUIRE(r.tau1);
            REQUIRE(r.tau2);
            const DiagonalForm shape =
                scale(*r.shape_scalar, orth_sum(pure_part(*r.tau1), negate(pure_part(*r.tau2))));
            CHECK(is_isometric(shape, s->form));
        }
        CHECK(r.condition_ii != r.flagged);
    }
}

TEST_CASE("classify14 preconditions") {
    const FieldDesc f{Base::F3, 5};
    CHECK_THROWS_AS(classify14(pfister(parse_pfister("<<t1,t2,t3>>", f))), PreconditionError);
    const DiagonalForm linked = orth_sum(pure_part(parse_pfister("<<t1,t2,t3>>", f)),
                                         negate(pure_part(parse_pfister("<<t1,t2,t4>>", f))));
    CHECK(anisotropic_part(linked).dim() < 14);
    CHECK_THROWS_AS(classify14(linked), PreconditionError);
    const DiagonalForm odd = orth_sum(pure_part(parse_pfister("<<t1,t2,t3>>", f)), P("<t4,t5,t4*t5,-t1*t4,t1*t5,t1*t4*t5,-t2*t4>", f));
    CHECK_THROWS_AS(classify14(odd), PreconditionError);
}

TEST_CASE("biquadratic but no quadratic splitting") {
    const FieldDesc f{Base::F3, 6};
    const DiagonalForm phi = orth_sum(pfister(parse_pfister("<<t1,t2,t3>>", f)), pfister(parse_pfister("<<t4,t5,t6>>", f)));
    REQUIRE_FALSE(is_isotropic(phi));
    CHECK_FALSE(quadratic_splitting_class(phi));
    const auto pair = biquadratic_splitting_pair(phi);
    REQUIRE(pair);
    CHECK(splits_over(phi, *pair));

    const DiagonalForm single = pfister(parse_pfister("t4*<<t1,t2,t3>>", f));
    const auto a = quadratic_splitting_class(single);
    REQUIRE(a);
    CHECK(is_hyperbolic(extend_scalars_quadratic(single, *a).form));
}

TEST_CASE("classify16 on sums of three 3-fold Pfister forms") {
    const FieldDesc f{Base::F3, 5};
    FormSampler sampler(f, 3, 89);
    for (int i = 0; i < 5; ++i) {
        const auto s = sampler.sample(16, 3);
        REQUIRE(s);
        const Report16 r = classify16(s->form);
        CHECK(r.gp3 <= 3);
        CHECK(r.certificate.verify());
        CHECK(is_subform(pfister(r.gp2_subform.witness), s->form));
        REQUIRE(r.gp2_decomposition.size() == 4);
        DiagonalForm sum(f);
        for (const auto& p : r.gp2_decomposition) sum = orth_sum(sum, pfister(p));
        CHECK(is_isometric(sum, s->form));
        CHECK(splits_over(s->form, r.splitting));
    }
}

TEST_CASE("sampler is reproducible and lands in I^n") {
    const FieldDesc f{Base::F3, 4};
    FormSampler a(f, 2, 97), b(f, 2, 97);
    for (int i = 0; i < 20; ++i) {
        const auto x = a.sample(6, 2), y = b.sample(6, 2);
        REQUIRE(x);
        REQUIRE(y);
        CHECK(x->form == y->form);
        CHECK(x->form.dim() == 6);
        CHECK(in_In(x->form, 2));
        DiagonalForm sum(f);
        for (const auto& t : x->terms) sum = orth_sum(sum, pfister(t));
        CHECK(group_ring_equal(sum, x->form));
    }
    CHECK_FALSE(a.sample(10, 1, 50));
}
