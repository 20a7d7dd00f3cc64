#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "brauer/rkops.hpp"

using namespace brauer;

TEST_CASE("R at 0 is the identity, K at 0 is the identity") {
    for (char tc : {'p', 'i', 'c', 'o', 'm'}) {
        PatternSpace sp(boundary_from_char(tc), 2);
        auto t = VarTable::standard(2, {"x", "y"});
        Poly zero(t);
        CHECK(build_R(sp, 1, zero) == LoopOperator::identity(&sp, t));
        CHECK(build_KL(sp, zero) == LoopOperator::identity(&sp, t));
        CHECK(build_K0(sp, zero) == LoopOperator::identity(&sp, t));
    }
}

TEST_CASE("operator identities on small spaces") {
    CHECK(verify_operator_identities(BoundaryType::I, 2, "unitarity").ok());
    CHECK(verify_operator_identities(BoundaryType::C, 3, "ybe").ok());
    CHECK(verify_operator_identities(BoundaryType::M, 2, "reflection").ok());
    CHECK(verify_operator_identities(BoundaryType::O, 2, "reflection").ok());
    CHECK(verify_operator_identities(BoundaryType::P, 3, "ybe").ok());
    for (char tc : {'p', 'i', 'c', 'o', 'm'}) {
        CAPTURE(tc);
        CHECK(verify_operator_identities(boundary_from_char(tc), 2, "rpoint").ok());
        CHECK(verify_operator_identities(boundary_from_char(tc), 2, "stochastic").ok());
    }
}

TEST_CASE("algebra relations") {
    CHECK(verify_algebra_relations(BoundaryType::I, 3).ok());
    CHECK(verify_algebra_relations(BoundaryType::O, 2).ok());
    CHECK(verify_algebra_relations(BoundaryType::M, 3).ok());
    CHECK(verify_algebra_relations(BoundaryType::C, 4).ok());
    CHECK(verify_algebra_relations(BoundaryType::P, 4).ok());
    CHECK(verify_algebra_relations(BoundaryType::I, 4).ok());   // includes I1 I2 I1 = I1
}

TEST_CASE("divided differences") {
    int L = 2;
    auto t = VarTable::standard(L);
    Poly z1 = Poly::variable(t, "z1"), z2 = Poly::variable(t, "z2");

    SUBCASE("d_1 z1 = 1") {
        auto r = divided_difference(BoundaryType::I, {z1}, L, 1, DivDiff::Plain);
        CHECK(r[0] == LinFrac::one(t));
    }
    SUBCASE("d_L z_L^2 = 0") {
        auto r = divided_difference(BoundaryType::I, {z2 * z2}, L, L, DivDiff::Plain);
        CHECK(r[0].is_zero());
    }
    SUBCASE("d_0 z1 = -1") {
        auto r = divided_difference(BoundaryType::C, {z1}, L, 0, DivDiff::Plain);
        CHECK(r[0] == -LinFrac::one(t));
    }
    SUBCASE("tau involutive for all reflections of both types") {
        Poly p = (z1 + z2 * z2) * Poly::variable(t, "A") - Poly::variable(t, "e") * z1;
        for (char tc : {'i', 'c', 'o', 'm'}) {
            auto ty = boundary_from_char(tc);
            for (int i = 0; i <= L; ++i)
                CHECK(tau_apply(ty, L, tau_apply(ty, L, p, i), i) == p);
        }
        for (int i = 1; i <= L; ++i)
            CHECK(tau_apply(BoundaryType::P, L, tau_apply(BoundaryType::P, L, p, i), i) == p);
    }
}
