#include "nilblob/jm.hpp"
#include "nilblob/presentation.hpp"

#include <doctest.h>

using namespace nb;

TEST_CASE("JM identities for n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        Multiplier mul;
        auto r = check_jm(n, mul);
        CHECK_MESSAGE(r.L_commute, "n=" << n);
        CHECK(r.Y_commute);
        CHECK(r.L_square);
        CHECK(r.Y_square_zero);
        CHECK(r.J_square_zero);
        CHECK(r.local_central);
        CHECK(r.Y_shift);
        CHECK(r.Y_conjugation);
    }
}

TEST_CASE("small cases by hand") {
    Multiplier mul;
    // n = 1: J = L_1 = U_0
    CHECK(J_element(1, mul) == generator(1, 0));
    // L_2 = U1 U0 + U0 U1 (the correction term is empty)
    auto L = L_elements(2, mul);
    Element U0 = generator(2, 0), U1 = generator(2, 1);
    CHECK(L[1] == mul.mul(U1, U0) + mul.mul(U0, U1));
    // Y_2 = (U1 + 1) U0 (U1 + 1)
    auto Y = Y_elements(2, mul);
    Element one = Element::identity(2);
    CHECK(Y[1] == mul.mul(mul.mul(U1 + one, U0), U1 + one));
    // Y_1 + Y_2 = L_1 + L_2 here: U1 U0 U1 vanishes
    CHECK(Y[0] + Y[1] == L[0] + L[1] + U0);
}

TEST_CASE("correction sign") {
    // with -2 the L's stop commuting at n = 3
    Multiplier mul;
    auto bad = L_elements(3, mul, -2);
    bool commute = true;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) commute = commute && commutator(bad[i], bad[j], mul).is_zero();
    CHECK(!commute);
    auto good = L_elements(3, mul);
    CHECK(bad[1] == good[1]);
}

TEST_CASE("degrees of JM elements") {
    Multiplier mul;
    for (auto& l : L_elements(4, mul)) CHECK(degree(l) == 2);
    for (auto& y : Y_elements(4, mul)) CHECK(degree(y) == 2);
}

TEST_CASE("centrality of J") {
    // J commutes with U_0 always; record where it fails for the U_i, i >= 1
    for (int n = 1; n <= 5; ++n) {
        Multiplier mul;
        Element J = J_element(n, mul);
        CHECK(commutator(generator(n, 0), J, mul).is_zero());
        auto r = check_jm(n, mul);
        for (int i : r.J_noncentral) CHECK(!commutator(generator(n, i), J, mul).is_zero());
    }
}
