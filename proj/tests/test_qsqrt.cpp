#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "ncqm/qsqrt.hpp"

using namespace ncqm;

TEST_CASE("square roots reduce to squarefree radicands") {
    QSqrt r = QSqrt::sqrt_of(make_rational(3, 4));
    CHECK(r == make_rational(1, 2) * QSqrt::sqrt_of(Rational(3)));
    CHECK(QSqrt::sqrt_of(Rational(18)) == Rational(3) * QSqrt::sqrt_of(Rational(2)));
    CHECK(QSqrt::sqrt_of(Rational(49)).is_rational());
    CHECK(QSqrt::sqrt_of(Rational(49)).as_rational() == 7);
    CHECK(QSqrt::sqrt_of(Rational(0)).is_zero());
    CHECK_THROWS_AS(QSqrt::sqrt_of(Rational(-1)), std::domain_error);
}

TEST_CASE("products merge radicands through the gcd") {
    QSqrt s2 = QSqrt::sqrt_of(Rational(2));
    QSqrt s3 = QSqrt::sqrt_of(Rational(3));
    QSqrt s6 = QSqrt::sqrt_of(Rational(6));
    CHECK(s2 * s3 == s6);
    CHECK(s2 * s6 == Rational(2) * s3);
    CHECK(s2 * s2 == QSqrt(Rational(2)));
    CHECK((s2 + s3) * (s2 - s3) == QSqrt(Rational(-1)));
}

TEST_CASE("inverse handles multi-radical denominators") {
    QSqrt s2 = QSqrt::sqrt_of(Rational(2));
    QSqrt s3 = QSqrt::sqrt_of(Rational(3));
    QSqrt s6 = QSqrt::sqrt_of(Rational(6));

    QSqrt x = s2 + s3 + s6 + QSqrt(Rational(5));
    CHECK(x * x.inverse() == QSqrt(Rational(1)));

    QSqrt y = s2 - QSqrt(make_rational(7, 3)) * s3;
    CHECK((y / y) == QSqrt(Rational(1)));

    CHECK_THROWS_AS(QSqrt().inverse(), std::domain_error);

    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        QSqrt z = rand_rational(rng, 9) + rand_rational(rng, 9) * s2 +
                  rand_rational(rng, 9) * s3 + rand_rational(rng, 9) * s6;
        if (z.is_zero()) continue;
        CHECK(z * z.inverse() == QSqrt(Rational(1)));
        double direct = z.to_double();
        CHECK(std::abs(z.inverse().to_double() - 1.0 / direct) < 1e-12 * std::abs(1.0 / direct));
    }
}

TEST_CASE("numeric embedding matches double arithmetic") {
    QSqrt v = make_rational(1, 2) + Rational(3) * QSqrt::sqrt_of(Rational(5));
    CHECK(std::abs(v.to_double() - (0.5 + 3.0 * std::sqrt(5.0))) < 1e-14);
    CHECK_THROWS_AS(v.as_rational(), std::domain_error);
}

TEST_CASE("complex layer divides and conjugates") {
    CSqrt i = CSqrt::i();
    CHECK(i * i == CSqrt(Rational(-1)));
    CSqrt w(QSqrt(Rational(1)), QSqrt::sqrt_of(Rational(3)));
    CSqrt u = w / w;
    CHECK(u == CSqrt(Rational(1)));
    CHECK(w * w.conj() == CSqrt(Rational(4)));

    CSqrt q = (CSqrt(Rational(2)) + i) / (CSqrt(Rational(1)) - i);
    CHECK(q == CSqrt(QSqrt(make_rational(1, 2)), QSqrt(make_rational(3, 2))));

    auto z = w.to_complex();
    CHECK(std::abs(z.real() - 1.0) < 1e-14);
    CHECK(std::abs(z.imag() - std::sqrt(3.0)) < 1e-14);
}

TEST_CASE("printing stays compact") {
    QSqrt v = make_rational(-1, 2) * QSqrt::sqrt_of(Rational(3)) + Rational(2);
    CHECK(v.str() == "2 - 1/2*sqrt(3)");
    CHECK(QSqrt().str() == "0");
}
