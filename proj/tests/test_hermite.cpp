#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "ncqm/hermite.hpp"

using namespace ncqm;

namespace {

const CSqrt kI = CSqrt::i();

CSqrt root_q(long num, long den) { return CSqrt(QSqrt::sqrt_of(make_rational(num, den))); }

OscillatorParams constrained_osc() {
    // vartheta = Bcal with M Omega = 1; discriminant 16/25 is a perfect
    // square, so every derived scalar stays rational or one radical deep.
    OscillatorParams osc;
    osc.hbar = 1;
    osc.vartheta = make_rational(3, 5);
    osc.Bcal = make_rational(3, 5);
    osc.M = 1;
    osc.Omega = 1;
    return osc;
}

bool is_constant_equal(const WeylPolyX& p, const CSqrt& c) {
    return p.is_constant() && p.constant_value() == c;
}

double rand_uniform(std::mt19937& rng, double lo, double hi) {
    return lo + (hi - lo) * std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

}  // namespace

TEST_CASE("explicit sum reproduces the low order polynomials") {
    CHECK(hermite_nk(0, 0) == BiPoly::one());
    CHECK(hermite_nk(1, 0) == BiPoly::monomial(0, 1, CSqrt(1)));
    CHECK(hermite_nk(0, 1) == BiPoly::monomial(1, 0, CSqrt(1)));

    BiPoly h11 = BiPoly::monomial(1, 1, CSqrt(1)) - BiPoly::one();
    CHECK(hermite_nk(1, 1) == h11);

    // H_{2,0} = zbar^2 / sqrt(2)
    CHECK(hermite_nk(2, 0) == BiPoly::monomial(0, 2, root_q(1, 2)));
    CHECK(hermite_nk(0, 2) == BiPoly::monomial(2, 0, root_q(1, 2)));

    CHECK_THROWS_AS(hermite_nk(-1, 0), std::invalid_argument);
}

TEST_CASE("ladder, explicit, and Gaussian derivative constructions agree") {
    for (int n = 0; n <= 6; ++n)
        for (int k = 0; k <= 6; ++k)
            CHECK(hermite_nk_ladder(n, k) == hermite_nk(n, k));

    for (int n = 0; n <= 3; ++n)
        for (int k = 0; k <= 3; ++k)
            CHECK(hermite_nk_rodrigues(n, k) == hermite_nk(n, k));
}

TEST_CASE("base ladder symbols satisfy the canonical commutation relations") {
    const WeylPolyX one = WeylPolyX::one(Alphabet::ComplexZ);
    CHECK(commutator(ladder_a1(), ladder_a1_dag()) == one);
    CHECK(commutator(ladder_a2(), ladder_a2_dag()) == one);
    CHECK(commutator(ladder_a1(), ladder_a2()).is_zero());
    CHECK(commutator(ladder_a1_dag(), ladder_a2_dag()).is_zero());
    CHECK(commutator(ladder_a1(), ladder_a2_dag()).is_zero());
    CHECK(commutator(ladder_a2(), ladder_a1_dag()).is_zero());
}

TEST_CASE("moment rule inner product is exactly orthonormal") {
    CHECK(gauss_inner(BiPoly::one(), BiPoly::one()) == CSqrt(1));

    for (int n = 0; n <= 5; ++n)
        for (int k = 0; k <= 5; ++k) {
            BiPoly left = hermite_nk(n, k);
            for (int m = 0; m <= 5; ++m)
                for (int l = 0; l <= 5; ++l) {
                    CSqrt want(n == m && k == l ? 1 : 0);
                    CHECK(gauss_inner(left, hermite_nk(m, l)) == want);
                }
        }
}

TEST_CASE("polar quadrature validates the moment rule") {
    // conj(zbar^3) * zbar^3 = z^3 zbar^3, whose Gaussian integral is 3!.
    BiPolyD cube = BiPolyD::monomial(0, 3, {1.0, 0.0});
    std::complex<double> moment = gauss_inner(cube, cube);
    CHECK(std::abs(moment - 6.0) == 0.0);
    CHECK(std::abs(gauss_inner_quadrature(cube, cube) - 6.0) <= 1e-9);

    std::mt19937 rng(11);
    for (int trial = 0; trial < 4; ++trial) {
        BiPolyD p, r;
        for (int t = 0; t < 3; ++t) {
            p.add_term(rand_long(rng, 0, 3), rand_long(rng, 0, 3),
                       {rand_uniform(rng, -1, 1), rand_uniform(rng, -1, 1)});
            r.add_term(rand_long(rng, 0, 3), rand_long(rng, 0, 3),
                       {rand_uniform(rng, -1, 1), rand_uniform(rng, -1, 1)});
        }
        CHECK(std::abs(gauss_inner(p, r) - gauss_inner_quadrature(p, r)) <= 1e-9);
    }

    BiPolyD h21 = to_numeric(hermite_nk(2, 1));
    CHECK(std::abs(gauss_inner_quadrature(h21, h21) - 1.0) <= 1e-9);
    CHECK(std::abs(gauss_inner_quadrature(h21, to_numeric(hermite_nk(1, 2)))) <= 1e-9);
}

TEST_CASE("symmetric mixing matrix is admissible on its band") {
    DeformMatrix g = deform_matrix_sym(make_rational(3, 4));
    CHECK(g.g11 == root_q(3, 4));
    CHECK(g.g12 == kI * CSqrt(make_rational(1, 2)));
    CHECK(g.g21 == -g.g12);
    CHECK(g.g22 == g.g11);
    CHECK(g.det() == CSqrt(make_rational(1, 2)));
    CHECK(check_admissible(g));

    CHECK(deform_matrix_sym(1) == deform_identity());
    CHECK(check_admissible(deform_identity()));

    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        Rational nu = make_rational(1, 2) + make_rational(rand_long(rng, 1, 40), 80);
        CHECK(check_admissible(deform_matrix_sym(nu)));
    }

    CHECK_THROWS_AS(deform_matrix_sym(make_rational(1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(deform_matrix_sym(make_rational(1, 3)), std::invalid_argument);
    CHECK_THROWS_AS(deform_matrix_sym(make_rational(6, 5)), std::invalid_argument);
}

TEST_CASE("weakly coupled oscillator mixes almost nothing") {
    // s = 1 - 2^-39 keeps nu rational with 1 - nu = 2^-40, so the mixing
    // matrix collapses onto the identity well inside the 1e-6 budget.
    Rational s = 1 - make_rational(1, 1L << 39);
    OscillatorParams osc;
    osc.vartheta = 1;
    osc.Bcal = 1 - s * s;
    Rational nu = oscillator_nu(osc).as_rational();
    CHECK(nu == (1 + s) / 2);

    DeformMatrixD g = to_numeric(deform_matrix_sym(nu));
    CHECK(std::abs(g.g11 - 1.0) <= 1e-6);
    CHECK(std::abs(g.g12) <= 1e-6);
    CHECK(std::abs(g.g21) <= 1e-6);
    CHECK(std::abs(g.g22 - 1.0) <= 1e-6);
}

TEST_CASE("polar family matches the symmetric matrix at the forced corner") {
    OscillatorParams osc = constrained_osc();
    Rational nu = oscillator_nu(osc).as_rational();
    CHECK(nu == make_rational(9, 10));

    // r^2 = nu forces eps = pi/2 once the independence constraint holds.
    // The arcsin argument sits at the clamp point, so roundoff in it moves
    // eps by about sqrt(machine epsilon); allow for that in the comparison.
    double r = std::sqrt(to_double(nu));
    DeformMatrixD polar = deform_matrix_polar(r, 0.0, 3.0 * std::numbers::pi / 2.0, osc);
    DeformMatrixD sym = to_numeric(deform_matrix_sym(nu));
    CHECK(std::abs(polar.g11 - sym.g11) <= 1e-6);
    CHECK(std::abs(polar.g12 - sym.g12) <= 1e-6);
    CHECK(std::abs(polar.g21 - sym.g21) <= 1e-6);
    CHECK(std::abs(polar.g22 - sym.g22) <= 1e-6);
}

TEST_CASE("saturated window pins the polar radius") {
    OscillatorParams osc;
    osc.vartheta = 1;
    osc.Bcal = make_rational(1, 2);
    CHECK(osc.window_ratio() == 1);
    CHECK(osc.in_window());

    double r = 1.0 / std::sqrt(2.0);
    DeformMatrixD g = deform_matrix_polar(r, 0.25, 1.5, osc);
    CHECK(check_admissible(g, 1e-9));
    // eps = pi/2 at the collapsed band: the g12 phase sits at kappa + pi/2.
    CHECK(std::abs(std::arg(g.g12 / g.g11) - std::numbers::pi / 2.0) <= 1e-7);

    CHECK_THROWS_AS(deform_matrix_polar(0.6, 0.25, 1.5, osc), std::domain_error);
    CHECK_THROWS_AS(deform_matrix_polar(0.8, 0.25, 1.5, osc), std::domain_error);
    CHECK_THROWS_AS(deform_matrix_polar(0.0, 0.25, 1.5, osc), std::domain_error);
    CHECK_THROWS_AS(deform_matrix_polar(1.0, 0.25, 1.5, osc), std::domain_error);

    OscillatorParams flat;  // window ratio 0: no polar family
    CHECK_FALSE(flat.in_window());
    CHECK_THROWS_AS(deform_matrix_polar(0.7, 0.0, 0.0, flat), std::domain_error);
}

TEST_CASE("random polar matrices stay admissible with principal arcsin") {
    OscillatorParams osc = constrained_osc();
    const double t = to_double(osc.window_ratio());
    const double half_width = std::sqrt(0.25 - t * t / 4.0);
    const double lo = std::sqrt(0.5 - half_width), hi = std::sqrt(0.5 + half_width);

    std::mt19937 rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        double r = rand_uniform(rng, lo + 1e-6, hi - 1e-6);
        double kappa = rand_uniform(rng, -3.0, 3.0);
        double delta = rand_uniform(rng, -3.0, 3.0);
        DeformMatrixD g = deform_matrix_polar(r, kappa, delta, osc);
        CHECK(check_admissible(g, 1e-9));
        // det(gdag g) = 1 - t^2 with unit diagonal and +-it off the
        // diagonal, so |det g| = sqrt(1 - t^2) independently of r.
        CHECK(std::abs(std::abs(g.det()) - std::sqrt(1.0 - t * t)) <= 1e-12);

        double eps = std::asin(t / (2.0 * r * std::sqrt(1.0 - r * r)));
        CHECK(eps >= std::asin(t) - 1e-12);
        CHECK(eps <= std::numbers::pi / 2.0 + 1e-12);
    }
}

TEST_CASE("admissibility verdict matches the brute commutator expansion") {
    std::mt19937 rng(31);
    std::vector<DeformMatrix> pool = {
        deform_identity(),
        deform_matrix_sym(make_rational(3, 4)),
        deform_matrix_sym(make_rational(7, 8)),
        {CSqrt(1), CSqrt(1), CSqrt(0), CSqrt(1)},
        {CSqrt(2), CSqrt(0), CSqrt(0), CSqrt(1)},
    };
    for (int trial = 0; trial < 8; ++trial) {
        auto entry = [&] {
            return CSqrt(QSqrt(rand_rational(rng, 3, 3)), QSqrt(rand_rational(rng, 3, 3)));
        };
        pool.push_back({entry(), entry(), entry(), entry()});
    }

    for (const DeformMatrix& g : pool) {
        DeformedLadder lad = deformed_ladder(g);

        // Annihilation parts are plain combinations of the base pair, so
        // their commutator carries no information.
        CHECK(commutator(lad.a1, lad.a2).is_zero());
        CHECK(commutator(lad.a1_dag, lad.a2_dag).is_zero());

        // The executable content lives in the cross table, which must equal
        // the Gram matrix of the mixing coefficients.
        CSqrt h11 = g.g11.conj() * g.g11 + g.g21.conj() * g.g21;
        CSqrt h12 = g.g11.conj() * g.g12 + g.g21.conj() * g.g22;
        CSqrt h21 = g.g12.conj() * g.g11 + g.g22.conj() * g.g21;
        CSqrt h22 = g.g12.conj() * g.g12 + g.g22.conj() * g.g22;
        CHECK(is_constant_equal(commutator(lad.a1, lad.a1_dag), h11));
        CHECK(is_constant_equal(commutator(lad.a1, lad.a2_dag), h12));
        CHECK(is_constant_equal(commutator(lad.a2, lad.a1_dag), h21));
        CHECK(is_constant_equal(commutator(lad.a2, lad.a2_dag), h22));

        bool brute = h11 == CSqrt(1) && h22 == CSqrt(1) && h12.re.is_zero();
        CHECK(check_admissible(g) == brute);
    }

    CHECK_FALSE(check_admissible(DeformMatrix{CSqrt(1), CSqrt(1), CSqrt(0), CSqrt(1)}));
}

TEST_CASE("identity deformation reduces to the plain polynomials") {
    for (int n = 0; n <= 4; ++n)
        for (int k = 0; k <= 4; ++k) {
            CHECK(deformed_hermite(deform_identity(), n, k) == hermite_nk(n, k));
            CHECK(dual_deformed_hermite(deform_identity(), n, k) == hermite_nk(n, k));
        }
}

TEST_CASE("symmetric deformation is exactly biorthogonal") {
    DeformMatrix g = deform_matrix_sym(make_rational(3, 4));
    for (int n = 0; n <= 3; ++n)
        for (int k = 0; k <= 3; ++k) {
            BiPoly dual = dual_deformed_hermite(g, n, k);
            for (int m = 0; m <= 3; ++m)
                for (int l = 0; l <= 3; ++l) {
                    CSqrt want(n == m && k == l ? 1 : 0);
                    CHECK(gauss_inner(dual, deformed_hermite(g, m, l)) == want);
                }
        }

    // The primary family alone is not orthogonal, which is why the dual set
    // exists at all.
    CSqrt mixed = gauss_inner(deformed_hermite(g, 1, 0), deformed_hermite(g, 0, 1));
    CHECK(mixed == CSqrt(QSqrt(0), QSqrt::sqrt_of(make_rational(3, 4))));

    CHECK_THROWS_AS(dual_matrix(DeformMatrix{CSqrt(1), CSqrt(1), CSqrt(1), CSqrt(1)}),
                    std::domain_error);
}

TEST_CASE("random polar deformations are biorthogonal to float precision") {
    OscillatorParams osc = constrained_osc();
    const double t = to_double(osc.window_ratio());
    const double half_width = std::sqrt(0.25 - t * t / 4.0);
    const double lo = std::sqrt(0.5 - half_width), hi = std::sqrt(0.5 + half_width);

    std::mt19937 rng(47);
    for (int trial = 0; trial < 10; ++trial) {
        double r = rand_uniform(rng, lo + 1e-3, hi - 1e-3);
        DeformMatrixD g =
            deform_matrix_polar(r, rand_uniform(rng, -3, 3), rand_uniform(rng, -3, 3), osc);
        for (int n = 0; n <= 3; ++n)
            for (int k = 0; k <= 3; ++k) {
                BiPolyD dual = dual_deformed_hermite(g, n, k);
                for (int m = 0; m <= 3; ++m)
                    for (int l = 0; l <= 3; ++l) {
                        double want = (n == m && k == l) ? 1.0 : 0.0;
                        std::complex<double> got = gauss_inner(dual, deformed_hermite(g, m, l));
                        CHECK(std::abs(got - want) <= 1e-10);
                    }
            }
    }
}

TEST_CASE("coupled oscillator ladder closes on the deformed commutator table") {
    OscillatorParams osc;
    osc.hbar = 1;
    osc.vartheta = make_rational(2, 3);
    osc.Bcal = make_rational(1, 5);
    osc.M = 3;
    osc.Omega = make_rational(1, 2);
    CHECK_FALSE(osc.independence_constraint());

    NcLadder lad = nc_ladder(osc);
    Rational mo = osc.M * osc.Omega;
    CSqrt plus = kI * CSqrt(mo / (2 * osc.hbar) * (osc.vartheta + osc.Bcal / (mo * mo)));
    CSqrt minus = kI * CSqrt(mo / (2 * osc.hbar) * (osc.vartheta - osc.Bcal / (mo * mo)));

    CHECK(is_constant_equal(commutator(lad.a1, lad.a1_dag), CSqrt(1)));
    CHECK(is_constant_equal(commutator(lad.a2, lad.a2_dag), CSqrt(1)));
    CHECK(is_constant_equal(commutator(lad.a1, lad.a2_dag), plus));
    CHECK(is_constant_equal(commutator(lad.a2, lad.a1_dag), -plus));
    CHECK(is_constant_equal(commutator(lad.a1, lad.a2), minus));
}

TEST_CASE("independence constraint decouples the deformed bosons") {
    OscillatorParams osc = constrained_osc();
    CHECK(osc.independence_constraint());

    NcLadder lad = nc_ladder(osc);
    CHECK(commutator(lad.a1, lad.a2).is_zero());

    // The surviving cross commutator reads i vartheta M Omega / hbar.
    CSqrt residue = kI * CSqrt(osc.vartheta * osc.M * osc.Omega / osc.hbar);
    CHECK(is_constant_equal(commutator(lad.a1, lad.a2_dag), residue));
    CHECK(is_constant_equal(commutator(lad.a2, lad.a1_dag), -residue));
}

TEST_CASE("deformed creators mix the standard ones through the nu weights") {
    OscillatorParams osc = constrained_osc();
    Rational nu = oscillator_nu(osc).as_rational();
    CHECK(nu == make_rational(9, 10));
    CHECK(oscillator_m_omega(osc).as_rational() == make_rational(10, 9));

    NcLadder nc = nc_ladder(osc);
    NcLadder qm = standard_ladder(osc);
    CHECK(is_constant_equal(commutator(qm.a1, qm.a1_dag), CSqrt(1)));
    CHECK(is_constant_equal(commutator(qm.a2, qm.a2_dag), CSqrt(1)));
    CHECK(commutator(qm.a1, qm.a2_dag).is_zero());
    CHECK(commutator(qm.a1, qm.a2).is_zero());

    CSqrt root_nu(QSqrt::sqrt_of(nu));
    CSqrt root_co(QSqrt::sqrt_of(1 - nu));
    CHECK(nc.a1_dag == root_nu * qm.a1_dag + (-kI * root_co) * qm.a2_dag);
    CHECK(nc.a2_dag == (kI * root_co) * qm.a1_dag + root_nu * qm.a2_dag);

    // The same weights fill the symmetric mixing matrix.
    DeformMatrix g = deform_matrix_sym(nu);
    CHECK(g.g11 == root_nu);
    CHECK(g.g21 == -kI * root_co);

    OscillatorParams irrational = constrained_osc();
    irrational.Bcal = make_rational(1, 2);
    irrational.vartheta = 1;
    CHECK_THROWS_AS(standard_ladder(irrational), std::domain_error);
}

TEST_CASE("nu arithmetic at the quoted example point") {
    OscillatorParams osc;
    osc.hbar = 1;
    osc.vartheta = 1;
    osc.Bcal = make_rational(3, 4);
    CHECK(oscillator_nu(osc).as_rational() == make_rational(3, 4));

    DeformMatrix g = deform_matrix_sym(make_rational(3, 4));
    CHECK(g.g11 == root_q(3, 4));                     // sqrt(3)/2
    CHECK(g.g12 == kI * CSqrt(make_rational(1, 2)));  // i/2
}

TEST_CASE("zero discriminant collapses the two creators onto one ray") {
    OscillatorParams osc;
    osc.hbar = 1;
    osc.vartheta = 1;
    osc.Bcal = 1;
    CHECK(osc.discriminant() == 0);
    CHECK(osc.independence_constraint());
    CHECK_THROWS_AS(osc.validate(), std::invalid_argument);

    NcLadder lad = nc_ladder(osc);
    CHECK_FALSE(lad.a1_dag.is_zero());

    // Ratio of any matching pair of coefficients, then an exact identity.
    const auto& [e, lead] = *lad.a1_dag.terms().begin();
    CSqrt ratio = lad.a2_dag.terms().at(e) / lead;
    CHECK(ratio == kI);
    CHECK(lad.a2_dag == ratio * lad.a1_dag);
    CHECK(commutator(lad.a1_dag, lad.a2_dag).is_zero());

    // The half-weight mixing matrix is out of the admissible band, matching
    // the loss of independence.
    CHECK_THROWS_AS(deform_matrix_sym(make_rational(1, 2)), std::invalid_argument);
}

TEST_CASE("coupling geometry with unit constants") {
    OscillatorParams osc;  // M Omega = 1
    ExtensionParamsQ ep{1, 1, 1};
    GeometryConstraints geo = geometry_constraints(osc, ep);
    CHECK(geo.Kg == 1);
    CHECK(geo.zeta_ho == -1);
    CHECK(geo.tau_of_sigma(make_rational(-3, 2)) == make_rational(-3, 2));

    CHECK(geometry_admissible(geo, ep, 1, -1));
    CHECK(geometry_admissible(geo, ep, -1, 1));
    CHECK(geometry_admissible(geo, ep, 2, -1));
    CHECK_FALSE(geometry_admissible(geo, ep, 1, 1));
    CHECK_FALSE(geometry_admissible(geo, ep, -2, 1));
    CHECK_FALSE(geometry_admissible(geo, ep, make_rational(1, 2), -1));
    CHECK_FALSE(geometry_admissible(geo, ep, 0, -1));

    // Equality in rho >= -sigma beta M Omega / alpha lands on the vanishing
    // surface: the representative orbit is two dimensional with zeta_ho.
    DualVectorQ boundary;
    boundary.X = {0, 0, 0, 0, 1, -1, geo.tau_of_sigma(-1)};
    OrbitClass cls = classify(boundary, ep);
    auto* surf = std::get_if<Surface2D>(&cls);
    REQUIRE(surf != nullptr);
    CHECK(surf->rho == 1);
    CHECK(surf->zeta == geo.zeta_ho);
    CHECK(surf->kappa == 0);
    CHECK(surf->delta == 0);

    // Strict inequality keeps the full four dimensional family.
    DualVectorQ interior;
    interior.X = {0, 0, 0, 0, 2, -1, geo.tau_of_sigma(-1)};
    CHECK(std::holds_alternative<Generic4D>(classify(interior, ep)));
}

TEST_CASE("coupling geometry with skewed constants") {
    OscillatorParams osc;
    osc.M = make_rational(5, 2);
    osc.Omega = make_rational(2, 5);  // M Omega = 1
    ExtensionParamsQ ep{2, 3, make_rational(1, 2)};
    GeometryConstraints geo = geometry_constraints(osc, ep);
    CHECK(geo.Kg == 6);
    CHECK(geo.zeta_ho == make_rational(-3, 2));
    CHECK(geo.tau_of_sigma(-1) == -6);

    CHECK(geometry_admissible(geo, ep, 2, -1));
    CHECK(geometry_admissible(geo, ep, make_rational(3, 2), -1));
    CHECK_FALSE(geometry_admissible(geo, ep, 1, -1));

    DualVectorQ boundary;
    boundary.X = {0, 0, 0, 0, make_rational(3, 2), -1, -6};
    OrbitClass cls = classify(boundary, ep);
    auto* surf = std::get_if<Surface2D>(&cls);
    REQUIRE(surf != nullptr);
    CHECK(surf->zeta == geo.zeta_ho);
}

TEST_CASE("oscillator parameter bookkeeping") {
    OscillatorParams osc;
    CHECK_NOTHROW(osc.validate());
    CHECK(osc.window_ratio() == 0);
    CHECK_FALSE(osc.in_window());

    osc.vartheta = make_rational(1, 3);
    CHECK(osc.window_ratio() == make_rational(1, 3));
    CHECK(osc.in_window());
    osc.vartheta = 3;
    CHECK_FALSE(osc.in_window());

    OscillatorParams bad;
    bad.hbar = -1;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = OscillatorParams{};
    bad.M = 0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = OscillatorParams{};
    bad.vartheta = 2;
    bad.Bcal = 1;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    CHECK_THROWS_AS(oscillator_nu(bad), std::invalid_argument);
}

TEST_CASE("bipoly bookkeeping") {
    BiPoly p;
    CHECK(p.is_zero());
    p.add_term(1, 2, CSqrt(3));
    p.add_term(1, 2, CSqrt(-3));
    CHECK(p.is_zero());
    CHECK_THROWS_AS(p.add_term(-1, 0, CSqrt(1)), std::invalid_argument);

    CHECK(hermite_nk(1, 1).str() == "[-1] + [1] z zb");

    WeylPolyX wrong = WeylPolyX::position(Alphabet::Real2D, 1);
    CHECK_THROWS_AS(apply_complex_symbol(wrong, BiPoly::one()), std::invalid_argument);

    BiPolyD q = to_numeric(hermite_nk(1, 1));
    CHECK(std::abs(eval(q, {2.0, 1.0}) - std::complex<double>(4.0, 0.0)) <= 1e-14);
    CHECK(max_coeff_distance(q, BiPolyD::monomial(1, 1, {1.0, 0.0})) == 1.0);
}
