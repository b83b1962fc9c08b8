#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "ncqm/gauge.hpp"

using namespace ncqm;

namespace {

CommRelParams params(long hn, long hd, const Rational& t, const Rational& b) {
    CommRelParams p;
    p.hbar = make_rational(hn, hd);
    p.vartheta = t;
    p.Bcal = b;
    return p;
}

Mat4D to_d(const Mat4Q& m) {
    return m.map([](const Rational& r) { return to_double(r); });
}

double max_entry_diff(const Mat4D& a, const Mat4D& b) {
    double worst = 0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
    return worst;
}

CommRelParams rand_invertible(std::mt19937& rng) {
    for (;;) {
        CommRelParams p;
        p.hbar = make_rational(rand_long(rng, 1, 9), rand_long(rng, 1, 5));
        p.vartheta = rand_rational(rng, 5, 4);
        p.Bcal = rand_rational(rng, 5, 4);
        if (p.discriminant() != 0) return p;
    }
}

}  // namespace

TEST_CASE("preserved form reduces to the standard block form without mixing") {
    Mat4Q q = q_form(params(1, 1, Rational(0), Rational(0)));
    Mat4Q want;
    want(0, 3) = Rational(-1);
    want(1, 2) = Rational(1);
    want(2, 1) = Rational(-1);
    want(3, 0) = Rational(1);
    CHECK(q == want);
}

TEST_CASE("preserved form is antisymmetric and invertible") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        CommRelParams p = rand_invertible(rng);
        Mat4Q q = q_form(p);
        CHECK(q.transpose() == Rational(-1) * q);
        CHECK_NOTHROW(q.inverse());
        // 2x2 block determinant: (-vartheta/hbar)(Bcal/hbar) + 1.
        Rational det_block = -(p.vartheta / p.hbar) * (p.Bcal / p.hbar) + 1;
        CHECK(det_block == p.discriminant() / (p.hbar * p.hbar));
        CHECK(det_block != 0);
    }
    CHECK_THROWS_AS(q_form(params(1, 1, Rational(1), Rational(1))), std::invalid_argument);
    CHECK_THROWS_AS(q_form(params(0, 1, Rational(1), Rational(0))), std::invalid_argument);
}

TEST_CASE("membership test accepts the identity and rejects a perturbation") {
    CommRelParams p = params(1, 1, make_rational(1, 3), make_rational(1, 5));
    CHECK(is_ncqm_preserving(Mat4Q::identity(), p));
    Mat4Q bad = Mat4Q::identity();
    bad(0, 1) += make_rational(1, 7);
    CHECK(!is_ncqm_preserving(bad, p));
    CHECK(!is_ncqm_preserving(to_d(bad), p, 1e-10));
}

TEST_CASE("explicit magnetic-to-symmetric matrix is a member") {
    CommRelParams p = params(1, 1, make_rational(1, 2), make_rational(1, 2));
    Mat4D m = landau_to_sym(p);
    Mat4D q = to_d(q_form(p));
    CHECK(max_entry_diff(m * q * m.transpose(), q) <= 1e-12);
    CHECK(is_ncqm_preserving(m, p, 1e-12));
}

TEST_CASE("explicit matrix shrinks to near identity for weak mixing") {
    CommRelParams p = params(1, 1, make_rational(1, 1000000), Rational(0));
    Mat4D m = landau_to_sym(p);
    double off = 0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (i != j) off = std::max(off, std::abs(m(i, j)));
    CHECK(off <= 1e-5);
    for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(m(i, i) - 1.0) <= 1e-5);
    CHECK_THROWS_AS(landau_to_sym(params(1, 1, Rational(2), Rational(1))),
                    std::invalid_argument);
    CHECK_THROWS_AS(landau_to_sym(params(1, 1, Rational(0), make_rational(1, 2))),
                    std::invalid_argument);
}

TEST_CASE("explicit matrix carries the magnetic quadruple onto the symmetric one") {
    CommRelParams p = params(1, 1, make_rational(1, 2), make_rational(1, 2));
    GeneratorSetD landau = to_numeric(landau_generators(p));
    GeneratorSetD sym = to_numeric(symmetric_gauge_generators(p));
    GeneratorSetD moved = transform_generators(landau_to_sym(p), landau);
    CHECK(max_coeff_distance(moved.Q1, sym.Q1) <= 1e-12);
    CHECK(max_coeff_distance(moved.Q2, sym.Q2) <= 1e-12);
    CHECK(max_coeff_distance(moved.P1, sym.P1) <= 1e-12);
    CHECK(max_coeff_distance(moved.P2, sym.P2) <= 1e-12);
}

TEST_CASE("members leave the commutator table alone and non-members break it") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 15; ++trial) {
        CommRelParams p = rand_invertible(rng);
        GeneratorSet gens = landau_generators(p);
        auto before = commutator_table(gens);

        GeneratorSet same = transform_generators(Mat4Q::identity(), gens);
        CHECK(same.Q1 == gens.Q1);
        CHECK(same.P2 == gens.P2);

        Mat4Q m = random_preserving(p, 1000 + static_cast<unsigned long>(trial));
        auto after = commutator_table(transform_generators(m, gens));
        for (int i = 0; i < 6; ++i) {
            CAPTURE(kCommutatorNames[i]);
            CHECK(after[i] == before[i]);
        }

        Mat4Q bad = Mat4Q::identity();
        bad(2, 3) += make_rational(1, 3);
        auto broken = commutator_table(transform_generators(bad, gens));
        int changed = 0;
        for (int i = 0; i < 6; ++i) changed += (broken[i] == before[i]) ? 0 : 1;
        CHECK(changed > 0);
    }
}

TEST_CASE("random members are exact members and form a group") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 50; ++trial) {
        CommRelParams p = rand_invertible(rng);
        unsigned long seed = 77 + static_cast<unsigned long>(trial);
        Mat4Q m = random_preserving(p, seed);
        CHECK(is_ncqm_preserving(m, p));
        CHECK(m == random_preserving(p, seed));
        Mat4Q n = random_preserving(p, seed + 1000);
        CHECK(is_ncqm_preserving(m * n, p));
        CHECK(is_ncqm_preserving(m.inverse(), p));
    }
}

TEST_CASE("conjugation carries members onto matrices preserving the induced form") {
    std::mt19937 rng(53);
    for (int trial = 0; trial < 25; ++trial) {
        CommRelParams p = rand_invertible(rng);
        Mat4Q j = induced_form(p);
        CHECK(j.transpose() == Rational(-1) * j);
        CHECK_NOTHROW(j.inverse());

        Mat4Q m = random_preserving(p, 5 + static_cast<unsigned long>(trial));
        Mat4Q s = to_sp4(m, p);
        CHECK(s * j * s.transpose() == j);

        Mat4Q bad = Mat4Q::identity();
        bad(1, 3) += make_rational(2, 5);
        Mat4Q sbad = to_sp4(bad, p);
        CHECK(is_ncqm_preserving(bad, p) == (sbad * j * sbad.transpose() == j));
        CHECK(!is_ncqm_preserving(bad, p));

        Mat4Q n = random_preserving(p, 6000 + static_cast<unsigned long>(trial));
        CHECK(to_sp4(m * n, p) == to_sp4(m, p) * to_sp4(n, p));
    }
    CHECK(to_sp4(Mat4Q::identity(), params(1, 1, make_rational(1, 2), make_rational(1, 2))) ==
          Mat4Q::identity());
}

TEST_CASE("commutator bookkeeping rebuilds the preserved form symbolically") {
    Mat4S q = derive_q_from_commutators();
    Mat4S want = symbolic_q_form();
    CHECK(q == want);
    CHECK(q(0, 2) == -(SymPoly::vartheta() * SymPoly::hbar(-1)));
    CHECK(q(1, 2) == SymPoly(1));
    CHECK(q(0, 3) == SymPoly(-1));
    CHECK(q(1, 3) == SymPoly::Bcal() * SymPoly::hbar(-1));
    CHECK(q(0, 0).is_zero());
    CHECK(q(0, 1).is_zero());
}

TEST_CASE("symbolic polynomial arithmetic sanity") {
    SymPoly h = SymPoly::hbar();
    SymPoly hinv = SymPoly::hbar(-1);
    CHECK(h * hinv == SymPoly(1));
    SymPoly x = SymPoly::entry(0, 1);
    SymPoly y = SymPoly::vartheta();
    CHECK((x + y) * (x - y) == x * x - y * y);
    CHECK((x - x).is_zero());
    CHECK(SymPoly(make_rational(3, 4)).str() == "3/4");
    CHECK_THROWS_AS(SymPoly::variable(3, -1), std::invalid_argument);
}
