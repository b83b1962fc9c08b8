#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ncqm/group.hpp"

using namespace ncqm;

namespace {
const ExtensionParamsQ kUnit{1, 1, 1};
const ExtensionParamsQ kGeneric{make_rational(3, 2), make_rational(2, 3), make_rational(5, 7)};
}  // namespace

TEST_CASE("compose agrees with the 8x8 matrix-product oracle") {
    std::mt19937 rng(20260823);
    for (const auto& ep : {kUnit, kGeneric}) {
        for (int trial = 0; trial < 1000; ++trial) {
            auto g = rand_group_element(rng);
            auto h = rand_group_element(rng);
            auto direct = compose(g, h, ep);
            auto oracle = to_matrix(g, ep) * to_matrix(h, ep);
            CHECK(to_matrix(direct, ep) == oracle);
            CHECK(from_matrix(oracle) == direct);
        }
    }
}

TEST_CASE("worked composition: unit parameters, q-shift then p-shift") {
    GroupElementQ g, h;
    g.q = {1, 0};
    h.p = {1, 0};
    auto gh = compose(g, h, kUnit);
    CHECK(gh.theta == make_rational(1, 2));
    CHECK(gh.phi == 0);
    CHECK(gh.psi == 0);
    CHECK(gh.q == std::array<Rational, 2>{1, 0});
    CHECK(gh.p == std::array<Rational, 2>{1, 0});
    // Reversed order flips the central charge: the group is noncommutative.
    auto hg = compose(h, g, kUnit);
    CHECK(hg.theta == make_rational(-1, 2));
    CHECK_FALSE(gh == hg);
}

TEST_CASE("associativity over random triples") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        auto g = rand_group_element(rng);
        auto h = rand_group_element(rng);
        auto k = rand_group_element(rng);
        CHECK(compose(compose(g, h, kGeneric), k, kGeneric) ==
              compose(g, compose(h, k, kGeneric), kGeneric));
    }
}

TEST_CASE("identity and inverse") {
    std::mt19937 rng(11);
    auto e = group_identity<Rational>();
    for (int trial = 0; trial < 200; ++trial) {
        auto g = rand_group_element(rng);
        CHECK(compose(g, e, kGeneric) == g);
        CHECK(compose(e, g, kGeneric) == g);
        CHECK(compose(g, inverse(g), kGeneric) == e);
        CHECK(compose(inverse(g), g, kGeneric) == e);
        CHECK(to_matrix(inverse(g), kGeneric) == to_matrix(g, kGeneric).inverse());
    }
}

TEST_CASE("inverse of a mixed shift composes to the identity") {
    GroupElementQ g;
    g.q = {1, 0};
    g.p = {0, 1};
    CHECK(compose(inverse(g), g, kUnit) == group_identity<Rational>());
}

TEST_CASE("central elements commute with everything") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = rand_group_element(rng);
        GroupElementQ z;
        z.theta = rand_rational(rng);
        z.phi = rand_rational(rng);
        z.psi = rand_rational(rng);
        CHECK(compose(g, z, kGeneric) == compose(z, g, kGeneric));
    }
}

TEST_CASE("extension parameters must be positive") {
    GroupElementQ g;
    CHECK_THROWS_AS(compose(g, g, ExtensionParamsQ{0, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(compose(g, g, ExtensionParamsQ{1, make_rational(-1), 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(to_matrix(g, ExtensionParamsQ{1, 1, 0}), std::invalid_argument);
}

TEST_CASE("double-scalar instantiation matches the rational path") {
    std::mt19937 rng(17);
    ExtensionParams<double> epd{1.5, 0.25, 0.5};
    ExtensionParamsQ epq{make_rational(3, 2), make_rational(1, 4), make_rational(1, 2)};
    for (int trial = 0; trial < 50; ++trial) {
        auto g = rand_group_element(rng, 4, 4);
        auto h = rand_group_element(rng, 4, 4);
        GroupElementD gd{to_double(g.theta), to_double(g.phi), to_double(g.psi),
                         {to_double(g.q[0]), to_double(g.q[1])},
                         {to_double(g.p[0]), to_double(g.p[1])}};
        GroupElementD hd{to_double(h.theta), to_double(h.phi), to_double(h.psi),
                         {to_double(h.q[0]), to_double(h.q[1])},
                         {to_double(h.p[0]), to_double(h.p[1])}};
        auto exact = compose(g, h, epq);
        auto approx = compose(gd, hd, epd);
        CHECK(approx.theta == doctest::Approx(to_double(exact.theta)).epsilon(1e-12));
        CHECK(approx.phi == doctest::Approx(to_double(exact.phi)).epsilon(1e-12));
        CHECK(approx.psi == doctest::Approx(to_double(exact.psi)).epsilon(1e-12));
    }
}
