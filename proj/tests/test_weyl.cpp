#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "ncqm/weyl.hpp"

using namespace ncqm;

namespace {

WeylPolyX rand_symbol(std::mt19937& rng, Alphabet a, int nterms) {
    WeylPolyX p(a);
    for (int t = 0; t < nterms; ++t) {
        WeylPolyX::Exponents e{};
        for (int v = 0; v < 4; ++v) e[static_cast<std::size_t>(v)] = static_cast<int>(rng() % 3);
        if (a == Alphabet::Real1D) e[1] = e[3] = 0;
        p.add_term(e, CSqrt(rand_rational(rng, 5), rand_rational(rng, 5)));
    }
    return p;
}

}  // namespace

TEST_CASE("canonical commutation of positions and derivatives") {
    for (Alphabet a : {Alphabet::Real2D, Alphabet::ComplexZ}) {
        auto x1 = WeylPolyX::position(a, 1);
        auto x2 = WeylPolyX::position(a, 2);
        auto d1 = WeylPolyX::deriv(a, 1);
        auto d2 = WeylPolyX::deriv(a, 2);
        CHECK(commutator(d1, x1) == WeylPolyX::one(a));
        CHECK(commutator(d2, x2) == WeylPolyX::one(a));
        CHECK(commutator(d1, x2).is_zero());
        CHECK(commutator(d2, x1).is_zero());
        CHECK(commutator(x1, x2).is_zero());
        CHECK(commutator(d1, d2).is_zero());
    }
    auto x = WeylPolyX::position(Alphabet::Real1D, 1);
    auto d = WeylPolyX::deriv(Alphabet::Real1D, 1);
    CHECK(commutator(d, x) == WeylPolyX::one(Alphabet::Real1D));
}

TEST_CASE("reordering cascade has the closed-form coefficients") {
    const Alphabet a = Alphabet::Real1D;
    auto x = WeylPolyX::position(a, 1);
    auto d = WeylPolyX::deriv(a, 1);
    // d^2 x^2 = x^2 d^2 + 4 x d + 2
    WeylPolyX expect = pow(x, 2) * pow(d, 2) + CSqrt(4) * (x * d) + WeylPolyX::constant(a, CSqrt(2));
    CHECK(pow(d, 2) * pow(x, 2) == expect);
    // d^3 x = x d^3 + 3 d^2
    CHECK(pow(d, 3) * x == x * pow(d, 3) + CSqrt(3) * pow(d, 2));

    auto number_op = x * d;
    CHECK(commutator(number_op, x) == x);
    CHECK(commutator(number_op, d) == -d);
}

TEST_CASE("ring axioms hold on random symbols") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        Alphabet a = trial % 2 ? Alphabet::Real2D : Alphabet::ComplexZ;
        auto p = rand_symbol(rng, a, 3);
        auto q = rand_symbol(rng, a, 3);
        auto r = rand_symbol(rng, a, 2);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK((p + q) * r == p * r + q * r);
        CHECK(commutator(p, q) == -commutator(q, p));
    }
}

TEST_CASE("alphabet discipline is enforced") {
    CHECK_THROWS_AS(WeylPolyX::position(Alphabet::Real1D, 2), std::invalid_argument);
    CHECK_THROWS_AS(WeylPolyX::deriv(Alphabet::Real1D, 2), std::invalid_argument);
    CHECK_THROWS_AS(WeylPolyX::position(Alphabet::Real2D, 3), std::invalid_argument);
    auto p = WeylPolyX::position(Alphabet::Real2D, 1);
    auto q = WeylPolyX::position(Alphabet::ComplexZ, 1);
    CHECK_THROWS_AS(p * q, std::invalid_argument);
    WeylPolyX bad(Alphabet::Real1D);
    CHECK_THROWS_AS(bad.add_term({0, 1, 0, 0}, CSqrt(1)), std::invalid_argument);
}

TEST_CASE("constants are recognized") {
    auto c = WeylPolyX::constant(Alphabet::Real2D, CSqrt(QSqrt::sqrt_of(Rational(2))));
    CHECK(c.is_constant());
    CHECK(c.constant_value() == CSqrt(QSqrt::sqrt_of(Rational(2))));
    CHECK(WeylPolyX::zero(Alphabet::Real2D).is_constant());
    auto x = WeylPolyX::position(Alphabet::Real2D, 1);
    CHECK(!x.is_constant());
    CHECK_THROWS_AS(x.constant_value(), std::domain_error);
}

TEST_CASE("numeric conversion and coefficient distance") {
    auto x = WeylPolyX::position(Alphabet::Real2D, 1);
    auto d = WeylPolyX::deriv(Alphabet::Real2D, 2);
    auto p = CSqrt(QSqrt::sqrt_of(Rational(2))) * x + CSqrt::i() * d;
    WeylPolyD pn = to_numeric(p);
    WeylPolyD qn(Alphabet::Real2D);
    qn.add_term({1, 0, 0, 0}, {std::sqrt(2.0), 0.0});
    qn.add_term({0, 0, 0, 1}, {0.0, 1.0});
    CHECK(max_coeff_distance(pn, qn) < 1e-15);
    qn.add_term({0, 0, 0, 1}, {0.0, 0.5});
    CHECK(max_coeff_distance(pn, qn) == doctest::Approx(0.5));
    WeylPolyD extra(Alphabet::Real2D);
    extra.add_term({2, 0, 0, 0}, {3.0, 0.0});
    CHECK(max_coeff_distance(pn, pn + extra) == doctest::Approx(3.0));
}

TEST_CASE("numeric application matches analytic derivatives of a plane wave") {
    const double a = 0.7, b = -1.3;
    Fn2 wave = [&](double x, double y) {
        return std::exp(std::complex<double>(0.0, a * x + b * y));
    };
    // p = d1 + r2 d2 + r1^2
    WeylPolyD p(Alphabet::Real2D);
    p.add_term({0, 0, 1, 0}, {1.0, 0.0});
    p.add_term({0, 1, 0, 1}, {1.0, 0.0});
    p.add_term({2, 0, 0, 0}, {1.0, 0.0});
    const double x = 0.4, y = -0.8, h = 1e-4;
    std::complex<double> got = apply_symbol(p, wave, x, y, h);
    std::complex<double> want =
        (std::complex<double>(0.0, a) + y * std::complex<double>(0.0, b) + x * x) * wave(x, y);
    CHECK(std::abs(got - want) < 1e-8);

    Fn1 pulse = [&](double t) { return std::exp(std::complex<double>(0.0, a * t)); };
    WeylPolyD q(Alphabet::Real1D);
    q.add_term({1, 0, 2, 0}, {1.0, 0.0});
    std::complex<double> got1 = apply_symbol(q, pulse, 0.3, h);
    std::complex<double> want1 = 0.3 * (-a * a) * pulse(0.3);
    CHECK(std::abs(got1 - want1) < 1e-8);

    CHECK_THROWS_AS(apply_symbol(q, wave, x, y, h), std::invalid_argument);
    CHECK_THROWS_AS(apply_symbol(p, pulse, x, h), std::invalid_argument);
}
