#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ncqm/coadjoint.hpp"
#include "ncqm/lie_algebra.hpp"

using namespace ncqm;

namespace {
const ExtensionParamsQ kUnit{1, 1, 1};
const ExtensionParamsQ kGeneric{make_rational(3, 2), make_rational(2, 3), make_rational(5, 7)};

AlgebraElementQ matrix_commutator_oracle(const AlgebraElementQ& X, const AlgebraElementQ& Y,
                                         const ExtensionParamsQ& ep) {
    auto mx = algebra_matrix(X, ep);
    auto my = algebra_matrix(Y, ep);
    auto c = mx * my - my * mx;
    // The commutator of two algebra matrices is central: read the coordinates
    // back off the last column, checking every other entry vanishes.
    AlgebraElementQ out;
    out.x[4] = c(0, 7);
    out.x[5] = c(1, 7);
    out.x[6] = c(2, 7);
    REQUIRE(algebra_matrix(out, ep) == c);
    return out;
}
}  // namespace

TEST_CASE("bracket agrees with the matrix-commutator oracle") {
    std::mt19937 rng(20260823);
    for (const auto& ep : {kUnit, kGeneric})
        for (int trial = 0; trial < 500; ++trial) {
            auto X = rand_algebra_element(rng);
            auto Y = rand_algebra_element(rng);
            CHECK(bracket(X, Y, ep) == matrix_commutator_oracle(X, Y, ep));
        }
}

TEST_CASE("structure constants over all basis pairs") {
    // Basis order (Q1, Q2, P1, P2, Theta, Phi, Psi) = indices 1..7.
    auto Q1 = basis_element<Rational>(1), Q2 = basis_element<Rational>(2);
    auto P1 = basis_element<Rational>(3), P2 = basis_element<Rational>(4);
    auto Theta = basis_element<Rational>(5), Phi = basis_element<Rational>(6);
    auto Psi = basis_element<Rational>(7);

    AlgebraElementQ zero;
    const auto& ep = kGeneric;

    auto scaled = [](const AlgebraElementQ& e, const Rational& c) {
        AlgebraElementQ out;
        for (int i = 0; i < 7; ++i) out.x[i] = c * e.x[i];
        return out;
    };

    CHECK(bracket(P1, Q1, ep) == scaled(Theta, ep.alpha));
    CHECK(bracket(P2, Q2, ep) == scaled(Theta, ep.alpha));
    CHECK(bracket(Q1, Q2, ep) == scaled(Phi, ep.beta));
    CHECK(bracket(P1, P2, ep) == scaled(Psi, ep.gamma));
    CHECK(bracket(P1, Q2, ep) == zero);
    CHECK(bracket(P2, Q1, ep) == zero);
    for (int i = 1; i <= 7; ++i)
        for (int central = 5; central <= 7; ++central) {
            CHECK(bracket(basis_element<Rational>(i), basis_element<Rational>(central), ep) ==
                  zero);
        }
}

TEST_CASE("bracket is antisymmetric and lands in the center") {
    std::mt19937 rng(5);
    AlgebraElementQ zero;
    for (int trial = 0; trial < 200; ++trial) {
        auto X = rand_algebra_element(rng);
        auto Y = rand_algebra_element(rng);
        auto XY = bracket(X, Y, kGeneric);
        auto YX = bracket(Y, X, kGeneric);
        for (int i = 0; i < 7; ++i) CHECK(XY.x[i] == -YX.x[i]);
        for (int i = 0; i < 4; ++i) CHECK(XY.x[i] == 0);
        CHECK(bracket(X, X, kGeneric) == zero);
    }
}

TEST_CASE("Jacobi identity") {
    std::mt19937 rng(9);
    AlgebraElementQ zero;
    for (int trial = 0; trial < 200; ++trial) {
        auto X = rand_algebra_element(rng);
        auto Y = rand_algebra_element(rng);
        auto Z = rand_algebra_element(rng);
        auto j1 = bracket(X, bracket(Y, Z, kGeneric), kGeneric);
        auto j2 = bracket(Y, bracket(Z, X, kGeneric), kGeneric);
        auto j3 = bracket(Z, bracket(X, Y, kGeneric), kGeneric);
        AlgebraElementQ sum;
        for (int i = 0; i < 7; ++i) sum.x[i] = j1.x[i] + j2.x[i] + j3.x[i];
        CHECK(sum == zero);
    }
}

TEST_CASE("exp lands on the matching group coordinates") {
    std::mt19937 rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        auto X = rand_algebra_element(rng);
        auto g = exp_to_group(X, kGeneric);
        // Exponential coordinates coincide with the group parametrization here.
        CHECK(g.p == std::array<Rational, 2>{X.x[0], X.x[1]});
        CHECK(g.q == std::array<Rational, 2>{X.x[2], X.x[3]});
        CHECK(g.theta == X.x[4]);
        CHECK(g.phi == X.x[5]);
        CHECK(g.psi == X.x[6]);
        CHECK(compose(g, exp_to_group(AlgebraElementQ{{-X.x[0], -X.x[1], -X.x[2], -X.x[3],
                                                       -X.x[4], -X.x[5], -X.x[6]}},
                                      kGeneric),
                      kGeneric) == group_identity<Rational>());
    }
}

TEST_CASE("exp of a central direction is a central one-parameter subgroup") {
    AlgebraElementQ X;
    X.x[4] = make_rational(5, 3);
    auto g = exp_to_group(X, kUnit);
    CHECK(g.theta == make_rational(5, 3));
    CHECK(g.q == std::array<Rational, 2>{0, 0});
    CHECK(g.p == std::array<Rational, 2>{0, 0});
}

TEST_CASE("pairing picks out coordinates against the dual basis") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        auto F = rand_dual_vector(rng);
        auto X = rand_algebra_element(rng);
        Rational expected(0);
        for (int i = 0; i < 7; ++i) expected += F.X[i] * X.x[i];
        CHECK(pairing(F, X, kGeneric) == expected);
    }
}
