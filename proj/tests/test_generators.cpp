#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ncqm/generators.hpp"

using namespace ncqm;

namespace {

GaugeParams rand_params(std::mt19937& rng) {
    GaugeParams gp;
    gp.hbar = make_rational(rand_long(rng, 1, 9), rand_long(rng, 1, 5));
    gp.vartheta = rand_rational_nonzero(rng, 7, 5);
    gp.Bcal = rand_rational(rng, 7, 5);
    return gp;
}

}  // namespace

TEST_CASE("every realization reproduces its tabulated commutator table") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        GaugeParams gp = rand_params(rng);
        CaseConstants cc;
        cc.kappa = rand_rational(rng);
        cc.delta = rand_rational(rng);
        cc.kappa1 = rand_rational_nonzero(rng);
        cc.kappa2 = rand_rational_nonzero(rng);
        cc.c1 = rand_rational(rng);
        cc.c2 = rand_rational(rng);
        cc.c3 = rand_rational(rng);
        cc.c4 = rand_rational(rng);
        for (CaseLabel c : all_case_labels()) {
            if (c == CaseLabel::SymmetricGauge && gp.discriminant() < 0) continue;
            CAPTURE(case_label_name(c));
            auto table = commutator_table(gauge_generators(c, gp, cc));
            auto want = expected_commutator_table(c, gp, cc);
            for (int i = 0; i < 6; ++i) {
                CAPTURE(kCommutatorNames[static_cast<std::size_t>(i)]);
                CHECK(table[static_cast<std::size_t>(i)] == want[static_cast<std::size_t>(i)]);
            }
        }
    }
}

TEST_CASE("landau gauge symbols at unit parameters") {
    GaugeParams gp{Rational(1), Rational(1), Rational(1)};
    GeneratorSet g = landau_generators(gp);
    const Alphabet a = Alphabet::Real2D;
    CHECK(g.Q1 == WeylPolyX::position(a, 1) + CSqrt::i() * WeylPolyX::deriv(a, 2));
    CHECK(g.Q2 == WeylPolyX::position(a, 2));
    CHECK(g.P1 == -(CSqrt::i() * WeylPolyX::deriv(a, 1)));
    CHECK(g.P2 ==
          -(WeylPolyX::position(a, 1)) - CSqrt::i() * WeylPolyX::deriv(a, 2));
}

TEST_CASE("symmetric gauge stays exact with an irrational square root") {
    GaugeParams gp{Rational(2), Rational(1), Rational(2)};  // disc = 2
    GeneratorSet g = symmetric_gauge_generators(gp);
    auto table = commutator_table(g);
    auto want = expected_commutator_table(CaseLabel::SymmetricGauge, gp);
    for (int i = 0; i < 6; ++i)
        CHECK(table[static_cast<std::size_t>(i)] == want[static_cast<std::size_t>(i)]);
    // the radical really shows up in the symbols themselves
    bool radical_seen = false;
    for (const auto& [e, c] : g.P1.terms())
        if (!c.re.is_rational() || !c.im.is_rational()) radical_seen = true;
    CHECK(radical_seen);
}

TEST_CASE("reducibility witnesses vanish exactly on the degenerate boundary") {
    GaugeParams degen{Rational(1), Rational(2), make_rational(1, 2)};
    REQUIRE(degen.discriminant() == 0);
    for (CaseLabel c : {CaseLabel::Landau, CaseLabel::SymmetricGauge})
        for (const auto& w : degenerate_witnesses(c, degen)) CHECK(w.is_zero());

    GaugeParams generic{Rational(1), Rational(2), make_rational(1, 4)};
    REQUIRE(generic.discriminant() != 0);
    for (const auto& w : degenerate_witnesses(CaseLabel::Landau, generic))
        CHECK(!w.is_zero());
    for (const auto& w : degenerate_witnesses(CaseLabel::SymmetricGauge, generic))
        CHECK(!w.is_zero());
    CHECK(degenerate_witnesses(CaseLabel::SymmetricGauge, degen).size() == 2);
}

TEST_CASE("parameter validation") {
    GaugeParams bad;
    bad.hbar = 0;
    CHECK_THROWS_AS(standard_qm_generators(bad), std::invalid_argument);
    GaugeParams neg{Rational(1), Rational(3), Rational(1)};  // disc = -2
    CHECK_THROWS_AS(symmetric_gauge_generators(neg), std::invalid_argument);
    GaugeParams flat{Rational(1), Rational(0), Rational(1)};
    CHECK_THROWS_AS(symmetric_gauge_generators(flat), std::invalid_argument);
    CHECK_THROWS_AS(degenerate_surface_generators(flat, Rational(0), Rational(0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(degenerate_witnesses(CaseLabel::StandardQM, GaugeParams{}),
                    std::invalid_argument);
}

TEST_CASE("case labels round-trip through their names") {
    for (CaseLabel c : all_case_labels()) CHECK(parse_case_label(case_label_name(c)) == c);
    CHECK_THROWS_AS(parse_case_label("no-such-gauge"), std::invalid_argument);
    CHECK(all_case_labels().size() == 10);
}

TEST_CASE("dispatcher matches the typed constructors") {
    GaugeParams gp{make_rational(3, 2), make_rational(-2, 3), make_rational(1, 5)};
    CaseConstants cc;
    cc.kappa1 = make_rational(4, 7);
    cc.kappa2 = Rational(-2);
    CHECK(gauge_generators(CaseLabel::Landau, gp).Q1 == landau_generators(gp).Q1);
    CHECK(gauge_generators(CaseLabel::TwoNCPlanes, gp, cc).P2 ==
          two_nc_planes_generators(cc.kappa1, cc.kappa2).P2);
}
