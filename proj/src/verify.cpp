#include "ncqm/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <thread>
#include <variant>

#include "ncqm/coadjoint.hpp"
#include "ncqm/gauge.hpp"
#include "ncqm/generators.hpp"
#include "ncqm/group.hpp"
#include "ncqm/hermite.hpp"
#include "ncqm/quadrature.hpp"
#include "ncqm/uir.hpp"

namespace ncqm {
namespace {

/// Accumulates assertion outcomes; the first failure pins the detail string.
struct Tally {
    CheckResult r;

    void fail(const char* what) {
        if (r.ok) {
            r.ok = false;
            r.detail = what;
        }
    }
    void exact(bool cond, const char* what) {
        ++r.assertions;
        if (!cond) fail(what);
    }
    void within(double err, double tol, const char* what) {
        ++r.assertions;
        if (std::isfinite(err))
            r.max_error = std::max(r.max_error, err);
        else
            err = 1.0, tol = 0.0;
        if (!(err <= tol)) fail(what);
    }
};

/// Decorrelates the per-check streams from the user seed; splitmix64 finisher.
std::uint32_t mix_seed(unsigned long seed, std::uint32_t salt) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (salt + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return static_cast<std::uint32_t>(z ^ (z >> 31));
}

Rational rand_positive(std::mt19937& rng, long max_num = 5, long max_den = 4) {
    return make_rational(rand_long(rng, 1, max_num), rand_long(rng, 1, max_den));
}

ExtensionParamsQ rand_params(std::mt19937& rng) {
    return {rand_positive(rng), rand_positive(rng), rand_positive(rng)};
}

/// Uniform double from the pinned mt19937 stream (no distribution objects, so
/// the values are identical across standard libraries).
double rand_uniform(std::mt19937& rng, double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng()) / 4294967296.0);
}

double max_abs_coeff(const WeylPolyD& p) {
    double m = 0.0;
    for (const auto& [e, c] : p.terms()) m = std::max(m, std::abs(c));
    return m;
}

template <std::size_t N>
double max_abs_entry(const SmallMatrix<double, N>& m) {
    double v = 0.0;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) v = std::max(v, std::abs(m(i, j)));
    return v;
}

Mat4D to_double_matrix(const Mat4Q& m) {
    return m.map([](const Rational& r) { return to_double(r); });
}

// ---------------------------------------------------------------------------
// 1. Group law against the matrix realization, plus associativity.

CheckResult check_group_law(unsigned long seed) {
    Tally t;
    std::mt19937 rng(mix_seed(seed, 1));
    for (int trial = 0; trial < 1000; ++trial) {
        ExtensionParamsQ ep = rand_params(rng);
        GroupElementQ g = rand_group_element(rng);
        GroupElementQ h = rand_group_element(rng);
        auto coords = to_matrix(compose(g, h, ep), ep);
        auto product = to_matrix(g, ep) * to_matrix(h, ep);
        t.exact(coords == product, "coordinate composition != 8x8 matrix product");
    }
    for (int trial = 0; trial < 500; ++trial) {
        ExtensionParamsQ ep = rand_params(rng);
        GroupElementQ g = rand_group_element(rng);
        GroupElementQ h = rand_group_element(rng);
        GroupElementQ k = rand_group_element(rng);
        t.exact(compose(compose(g, h, ep), k, ep) == compose(g, compose(h, k, ep), ep),
                "associativity");
    }
    return t.r;
}

// ---------------------------------------------------------------------------
// 2. Coadjoint action against bottom-row extraction; invariants.

DualVectorQ bottom_row(const SmallMatrix<Rational, 8>& m) {
    DualVectorQ F;
    F.X[4] = m(7, 0);
    F.X[5] = m(7, 1);
    F.X[6] = m(7, 2);
    F.X[2] = m(7, 3);
    F.X[3] = m(7, 4);
    F.X[0] = m(7, 5);
    F.X[1] = m(7, 6);
    return F;
}

CheckResult check_coadjoint(unsigned long seed) {
    Tally t;
    std::mt19937 rng(mix_seed(seed, 2));
    for (int trial = 0; trial < 500; ++trial) {
        ExtensionParamsQ ep = rand_params(rng);
        GroupElementQ g = rand_group_element(rng);
        DualVectorQ F = rand_dual_vector(rng);
        DualVectorQ moved = coadjoint_action(g, F, ep);
        auto conjugated = to_matrix(g, ep) * dual_matrix(F) * to_matrix(inverse(g), ep);
        t.exact(moved == bottom_row(conjugated), "coadjoint action != bottom row of g F g^-1");
        t.exact(central_invariants(moved) == central_invariants(F),
                "central invariants not preserved");
    }
    for (int trial = 0; trial < 100; ++trial) {
        ExtensionParamsQ ep = rand_params(rng);
        DualVectorQ F = rand_dual_vector(rng);
        F.X[4] = rand_rational_nonzero(rng);
        F.X[5] = rand_rational_nonzero(rng);
        F.X[6] = ep.alpha * ep.alpha * F.X[4] * F.X[4] / (ep.gamma * ep.beta * F.X[5]);
        t.exact(det_w(F, ep) == 0, "surface construction left the surface");
        GroupElementQ g = rand_group_element(rng);
        t.exact(rational_invariants(coadjoint_action(g, F, ep), ep) ==
                    rational_invariants(F, ep),
                "kappa/delta not constant along the surface orbit");
    }
    return t.r;
}

// ---------------------------------------------------------------------------
// 3. Orbit classification: round-trips, orbit moves, solvability.

std::vector<OrbitClass> family_samples(std::mt19937& rng, const ExtensionParamsQ& ep) {
    auto nz = [&] { return rand_rational_nonzero(rng); };
    auto any = [&] { return rand_rational(rng); };
    Rational rho = nz(), sigma = nz();
    Rational tau_g = nz();
    while (ep.alpha * ep.alpha * rho * rho == ep.gamma * ep.beta * sigma * tau_g)
        tau_g = nz();
    return {
        Generic4D{rho, sigma, tau_g},
        Surface2D{rho, rho / sigma, any(), any()},
        FourDSigmaOnly{rho, sigma},
        FourDTauOnly{rho, nz()},
        FourDRhoZero{sigma, nz()},
        FourDRhoOnly{rho},
        TwoDTau{any(), any(), nz()},
        TwoDSigma{any(), any(), nz()},
        Point0D{any(), any(), any(), any()},
    };
}

CheckResult check_orbits(unsigned long seed) {
    Tally t;
    std::mt19937 rng(mix_seed(seed, 3));
    for (int trial = 0; trial < 20; ++trial) {
        ExtensionParamsQ ep = rand_params(rng);
        for (const auto& c : family_samples(rng, ep))
            t.exact(classify(orbit_representative(c, ep), ep) == c,
                    "representative does not round-trip through classify");
    }
    for (int trial = 0; trial < 500; ++trial) {
        ExtensionParamsQ ep = rand_params(rng);
        auto classes = family_samples(rng, ep);
        const OrbitClass& c = classes[static_cast<std::size_t>(trial) % classes.size()];
        DualVectorQ rep = orbit_representative(c, ep);
        GroupElementQ g = rand_group_element(rng);
        t.exact(classify(coadjoint_action(g, rep, ep), ep) == classify(rep, ep),
                "classification changed along an orbit move");
    }
    for (int trial = 0; trial < 500; ++trial) {
        ExtensionParamsQ ep = rand_params(rng);
        DualVectorQ F = rand_dual_vector(rng);
        if (trial % 2 == 1) {
            // Force det W = 0 through one of its three rational branches.
            switch ((trial / 2) % 3) {
                case 0:
                    F.X[5] = rand_rational_nonzero(rng);
                    F.X[6] = ep.alpha * ep.alpha * F.X[4] * F.X[4] /
                             (ep.gamma * ep.beta * F.X[5]);
                    break;
                case 1: F.X[4] = 0; F.X[5] = 0; break;
                default: F.X[4] = 0; F.X[6] = 0; break;
            }
        }
        bool solvable = det_w(F, ep) != 0;
        if (solvable) {
            auto a = solve_vanishing_system(F, ep);
            GroupElementQ g;
            g.p = {a[0], a[1]};
            g.q = {a[2], a[3]};
            DualVectorQ moved = coadjoint_action(g, F, ep);
            t.exact(moved.X[0] == 0 && moved.X[1] == 0 && moved.X[2] == 0 && moved.X[3] == 0,
                    "vanishing system solution does not zero X1..X4");
        } else {
            bool threw = false;
            try {
                solve_vanishing_system(F, ep);
            } catch (const std::domain_error&) {
                threw = true;
            }
            t.exact(threw, "singular system unexpectedly solvable");
        }
    }
    return t.r;
}

// ---------------------------------------------------------------------------
// 4. Coset master equations, self-verified by exact 8x8 factorization.

CheckResult check_master(unsigned long seed) {
    Tally t;
    std::mt19937 rng(mix_seed(seed, 4));
    for (int trial = 0; trial < 200; ++trial) {
        ExtensionParamsQ ep = rand_params(rng);
        GroupElementQ g = rand_group_element(rng);
        bool ok = true;
        try {
            solve_master_4d(g, rand_rational(rng), rand_rational(rng), ep);
        } catch (const std::exception&) {
            ok = false;
        }
        t.exact(ok, "plane coset factorization failed");
    }
    for (int trial = 0; trial < 200; ++trial) {
        ExtensionParamsQ ep = rand_params(rng);
        GroupElementQ g = rand_group_element(rng);
        bool ok = true;
        try {
            solve_master_2d(g, rand_rational(rng), ep);
        } catch (const std::exception&) {
            ok = false;
        }
        t.exact(ok, "line coset factorization failed");
    }
    return t.r;
}

// ---------------------------------------------------------------------------
// 5. The ten tabulated commutator tables, exact.

CheckResult check_commutator_tables(unsigned long seed) {
    Tally t;
    std::mt19937 rng(mix_seed(seed, 5));
    for (int draw = 0; draw < 5; ++draw) {
        GaugeParams gp;
        gp.hbar = rand_positive(rng, 3, 2);
        gp.vartheta = rand_positive(rng, 3, 2);
        // Keep the discriminant positive so every realization is defined.
        gp.Bcal = gp.hbar * gp.hbar / (2 * gp.vartheta);
        CaseConstants cc;
        cc.kappa = rand_rational(rng);
        cc.delta = rand_rational(rng);
        cc.kappa1 = rand_rational_nonzero(rng);
        cc.kappa2 = rand_rational_nonzero(rng);
        cc.c1 = rand_rational(rng);
        cc.c2 = rand_rational(rng);
        cc.c3 = rand_rational(rng);
        cc.c4 = rand_rational(rng);
        for (CaseLabel label : all_case_labels()) {
            auto got = commutator_table(gauge_generators(label, gp, cc));
            auto want = expected_commutator_table(label, gp, cc);
            for (std::size_t i = 0; i < 6; ++i)
                t.exact(got[i] == want[i], "commutator table entry differs from tabulated");
        }
    }
    return t.r;
}

// ---------------------------------------------------------------------------
// 6. UIR homomorphism, unitarity, and flip conjugation.

std::vector<UirLabel> verification_labels(std::mt19937& rng) {
    auto nz = [&] { return rand_rational_nonzero(rng, 4, 3); };
    auto any = [&] { return rand_rational(rng, 4, 3); };
    return {
        UirGeneric{nz(), nz(), nz()},
        UirGenericTilde{nz(), nz(), nz()},
        UirTauZero{nz(), nz()},
        UirSigmaZero{nz(), nz()},
        UirRhoZero{nz(), nz()},
        UirRhoOnly{nz()},
        UirTwoDTau{any(), any(), nz()},
        UirTwoDSigma{any(), any(), nz()},
        UirTwoDSigmaTilde{any(), any(), nz()},
        // zeta stays small so the induced shift remains inside quadrature
        // reach for the unitarity norms.
        UirSurface{any(), any(), nz(), make_rational(1, 2)},
        UirZeroDim{any(), any(), any(), any()},
        UirSym{},
        UirSymAdjoint{},
    };
}

GroupElementQ small_element(std::mt19937& rng) {
    GroupElementQ g;
    g.theta = rand_rational(rng, 2, 2);
    g.phi = rand_rational(rng, 2, 2);
    g.psi = rand_rational(rng, 2, 2);
    for (int i : {0, 1}) {
        g.q[static_cast<std::size_t>(i)] = rand_rational(rng, 2, 2);
        g.p[static_cast<std::size_t>(i)] = rand_rational(rng, 2, 2);
    }
    return g;
}

CheckResult check_uir(unsigned long seed) {
    Tally t;
    std::mt19937 rng(mix_seed(seed, 6));
    const ExtensionParamsQ ep{Rational(2), Rational(1), Rational(1)};
    Fn2 f2 = gaussian2();
    Fn1 f1 = gaussian1();

    for (const UirLabel& label : verification_labels(rng)) {
        bool anti = std::holds_alternative<UirSymAdjoint>(label);
        for (int trial = 0; trial < 100; ++trial) {
            GroupElementQ g1 = rand_group_element(rng, 3, 3);
            GroupElementQ g2 = rand_group_element(rng, 3, 3);
            // The adjoint family composes contravariantly.
            GroupElementQ g12 = anti ? compose(g2, g1, ep) : compose(g1, g2, ep);
            double x = rand_uniform(rng, -1.5, 1.5);
            double y = rand_uniform(rng, -1.5, 1.5);
            std::complex<double> chained, direct;
            switch (uir_arity(label)) {
                case 2:
                    chained = apply_uir(label, g1, ep, uir_transform(label, g2, ep, f2), x, y);
                    direct = apply_uir(label, g12, ep, f2, x, y);
                    break;
                case 1:
                    chained = apply_uir(label, g1, ep, uir_transform(label, g2, ep, f1), x);
                    direct = apply_uir(label, g12, ep, f1, x);
                    break;
                default:
                    chained = apply_uir(label, g1, ep) * apply_uir(label, g2, ep);
                    direct = apply_uir(label, g12, ep);
            }
            t.within(std::abs(chained - direct), 1e-10, "homomorphism identity violated");
        }
        for (int trial = 0; trial < 4; ++trial) {
            GroupElementQ g = small_element(rng);
            switch (uir_arity(label)) {
                case 2: {
                    Fn2 f = (trial % 2) ? polynomial_gaussian2() : gaussian2(0.2, -0.1);
                    double ratio = norm_l2(uir_transform(label, g, ep, f)) / norm_l2(f);
                    t.within(std::abs(ratio - 1.0), 1e-8, "norm not preserved");
                    break;
                }
                case 1: {
                    Fn1 f = (trial % 2) ? polynomial_gaussian1() : gaussian1(0.3);
                    double ratio = norm_l2(uir_transform(label, g, ep, f)) / norm_l2(f);
                    t.within(std::abs(ratio - 1.0), 1e-8, "norm not preserved");
                    break;
                }
                default:
                    t.within(std::abs(std::abs(apply_uir(label, g, ep)) - 1.0), 1e-8,
                             "character not unimodular");
            }
        }
    }

    Fn2 h2 = gaussian2(0.3, -0.2);
    for (int trial = 0; trial < 50; ++trial) {
        Rational rho = rand_rational_nonzero(rng, 4, 3);
        Rational sigma = rand_rational_nonzero(rng, 4, 3);
        Rational tau = rand_rational_nonzero(rng, 4, 3);
        GroupElementQ g = rand_group_element(rng, 3, 3);
        double x = rand_uniform(rng, -1.5, 1.5);
        double y = rand_uniform(rng, -1.5, 1.5);
        Fn2 conjugated = intertwine_T(uir_transform(UirLabel(UirGeneric{rho, sigma, tau}), g,
                                                    ep, intertwine_T(h2)));
        auto rhs = apply_uir(UirLabel(UirGenericTilde{rho, sigma, tau}), g, ep, h2, x, y);
        t.within(std::abs(conjugated(x, y) - rhs), 1e-12,
                 "plane flip does not conjugate the two plane forms");
    }
    Fn1 h1 = gaussian1(0.25);
    for (int trial = 0; trial < 50; ++trial) {
        Rational c3 = rand_rational(rng, 4, 3);
        Rational c4 = rand_rational(rng, 4, 3);
        Rational sigma = rand_rational_nonzero(rng, 4, 3);
        GroupElementQ g = rand_group_element(rng, 3, 3);
        double x = rand_uniform(rng, -1.5, 1.5);
        Fn1 conjugated = intertwine_T(uir_transform(UirLabel(UirTwoDSigma{c3, c4, sigma}), g,
                                                    ep, intertwine_T(h1)));
        auto rhs = apply_uir(UirLabel(UirTwoDSigmaTilde{c3, c4, sigma}), g, ep, h1, x);
        t.within(std::abs(conjugated(x) - rhs), 1e-12,
                 "line flip does not conjugate the two line forms");
    }
    return t.r;
}

// ---------------------------------------------------------------------------
// 7. Finite-difference generators against the operator symbols.

void cross_check_case(Tally& t, const UirLabel& label, bool hat, const ExtensionParamsD& ep,
                      double C, const GeneratorSet& set) {
    const double step = 1e-4, tol = 1e-6;
    Fn2 f = gaussian2(0.1, -0.2);
    const std::pair<GroupDirection, const WeylPolyX*> pairs[] = {
        {GroupDirection::P1, &set.Q1},
        {GroupDirection::P2, &set.Q2},
        {GroupDirection::Q1, &set.P1},
        {GroupDirection::Q2, &set.P2},
    };
    const double points[][2] = {{0.3, -0.4}, {-0.7, 0.5}, {0.15, 0.9}};
    for (auto [dir, op] : pairs) {
        for (auto [x, y] : points) {
            auto curve = hat ? hat_uir_curve(label, dir, ep, f, x, y)
                             : uir_curve(label, dir, ep, f, x, y);
            auto got = numeric_generator(curve, C, step);
            auto want = apply_symbol(to_numeric(*op), f, x, y, step);
            t.within(std::abs(got - want), tol,
                     "finite-difference generator disagrees with the symbol");
        }
    }
}

CheckResult check_generator_cross(unsigned long) {
    Tally t;
    const ExtensionParamsD ep{2.0, 1.0, 1.0};
    GaugeParams base;
    base.hbar = make_rational(1, 2);  // 1/(rho alpha) at rho = 1, alpha = 2

    GaugeParams magnetic = base;
    magnetic.vartheta = make_rational(-1, 4);
    magnetic.Bcal = make_rational(-1, 4);
    cross_check_case(t, UirLabel(UirGeneric{Rational(1), Rational(1), Rational(1)}), true, ep,
                     0.5, landau_generators(magnetic));
    cross_check_case(t, UirLabel(UirRhoOnly{Rational(1)}), true, ep, 0.5,
                     standard_qm_generators(base));
    cross_check_case(t, UirLabel(UirSym{}), false, ep, 0.5,
                     symmetric_gauge_generators(magnetic));
    return t.r;
}

// ---------------------------------------------------------------------------
// 8. The form-preserving matrix group.

CheckResult check_form_preserving(unsigned long seed) {
    Tally t;
    std::mt19937 rng(mix_seed(seed, 8));
    CommRelParams params;
    params.hbar = 1;
    params.vartheta = make_rational(1, 2);
    params.Bcal = make_rational(1, 2);

    Mat4D qd = to_double_matrix(q_form(params));
    Mat4D M = landau_to_sym(params);
    t.within(max_abs_entry(M * qd * M.transpose() - qd), 1e-12,
             "explicit member does not preserve the form");

    Mat4Q Jq = induced_form(params);
    Mat4D Jd = to_double_matrix(Jq);
    for (int k = 0; k < 50; ++k) {
        Mat4Q m = random_preserving(params, static_cast<unsigned long>(rng()));
        t.exact(is_ncqm_preserving(m, params), "random member fails exact membership");
        Mat4D md = to_double_matrix(m);
        t.within(max_abs_entry(md * qd * md.transpose() - qd), 1e-10,
                 "random member fails float membership");
        Mat4Q s = to_sp4(m, params);
        t.exact(s * Jq * s.transpose() == Jq, "conjugated member leaves Sp(4)");
        Mat4D sd = to_double_matrix(s);
        t.within(max_abs_entry(sd * Jd * sd.transpose() - Jd), 1e-10,
                 "conjugated member fails float symplectic check");
    }

    bool derived_ok = true;
    try {
        derived_ok = derive_q_from_commutators() == symbolic_q_form();
    } catch (const std::exception&) {
        derived_ok = false;
    }
    t.exact(derived_ok, "commutator bookkeeping does not reproduce the form");
    return t.r;
}

// ---------------------------------------------------------------------------
// 9. Gauge transport of the generator quadruple.

CheckResult check_gauge_transport(unsigned long seed) {
    Tally t;
    std::mt19937 rng(mix_seed(seed, 9));
    CommRelParams params;
    params.hbar = 1;
    params.vartheta = make_rational(1, 2);
    params.Bcal = make_rational(1, 2);
    GaugeParams gp{params.hbar, params.vartheta, params.Bcal};

    GeneratorSetD moved = transform_generators(landau_to_sym(params),
                                               to_numeric(landau_generators(gp)));
    GeneratorSetD target = to_numeric(symmetric_gauge_generators(gp));
    t.within(max_coeff_distance(moved.Q1, target.Q1), 1e-12, "transported Q1 misses");
    t.within(max_coeff_distance(moved.Q2, target.Q2), 1e-12, "transported Q2 misses");
    t.within(max_coeff_distance(moved.P1, target.P1), 1e-12, "transported P1 misses");
    t.within(max_coeff_distance(moved.P2, target.P2), 1e-12, "transported P2 misses");

    auto base = commutator_table(landau_generators(gp));
    for (int k = 0; k < 20; ++k) {
        Mat4Q m = random_preserving(params, static_cast<unsigned long>(rng()));
        auto table = commutator_table(transform_generators(m, landau_generators(gp)));
        for (std::size_t i = 0; i < 6; ++i)
            t.exact(table[i] == base[i], "commutator table moved under a member");
    }
    return t.r;
}

// ---------------------------------------------------------------------------
// 10. The complex Hermite suite.

CheckResult check_hermite(unsigned long seed) {
    Tally t;
    std::mt19937 rng(mix_seed(seed, 10));

    for (int n = 0; n <= 3; ++n)
        for (int k = 0; k <= 3; ++k) {
            BiPoly direct = hermite_nk(n, k);
            t.exact(direct == hermite_nk_ladder(n, k), "ladder construction differs");
            t.exact(direct == hermite_nk_rodrigues(n, k),
                    "Gaussian-derivative construction differs");
        }

    for (int n = 0; n <= 5; ++n)
        for (int k = 0; k <= 5; ++k)
            for (int m = 0; m <= 5; ++m)
                for (int l = 0; l <= 5; ++l) {
                    CSqrt want((n == m && k == l) ? 1 : 0);
                    t.exact(gauss_inner(hermite_nk(n, k), hermite_nk(m, l)) == want,
                            "moment-rule orthonormality broken");
                }

    DeformMatrix gs = deform_matrix_sym(make_rational(3, 4));
    for (int n = 0; n <= 3; ++n)
        for (int k = 0; k <= 3; ++k) {
            BiPoly dual = dual_deformed_hermite(gs, n, k);
            for (int m = 0; m <= 3; ++m)
                for (int l = 0; l <= 3; ++l) {
                    std::complex<double> want((n == m && k == l) ? 1.0 : 0.0, 0.0);
                    auto got = gauss_inner(dual, deformed_hermite(gs, m, l)).to_complex();
                    t.within(std::abs(got - want), 1e-10,
                             "symmetric-matrix biorthogonality broken");
                }
        }

    OscillatorParams osc;
    osc.hbar = 1;
    osc.vartheta = make_rational(3, 5);
    osc.Bcal = make_rational(3, 5);
    const double tw = to_double(osc.window_ratio());
    const double half_width = std::sqrt(0.25 - tw * tw / 4.0);
    const double lo = std::sqrt(0.5 - half_width), hi = std::sqrt(0.5 + half_width);
    auto random_polar = [&] {
        double r = rand_uniform(rng, lo + 1e-3, hi - 1e-3);
        return deform_matrix_polar(r, rand_uniform(rng, -3, 3), rand_uniform(rng, -3, 3), osc);
    };

    for (int trial = 0; trial < 10; ++trial) {
        DeformMatrixD g = random_polar();
        for (int n = 0; n <= 3; ++n)
            for (int k = 0; k <= 3; ++k) {
                BiPolyD dual = dual_deformed_hermite(g, n, k);
                for (int m = 0; m <= 3; ++m)
                    for (int l = 0; l <= 3; ++l) {
                        std::complex<double> want((n == m && k == l) ? 1.0 : 0.0, 0.0);
                        auto got = gauss_inner(dual, deformed_hermite(g, m, l));
                        t.within(std::abs(got - want), 1e-10,
                                 "polar biorthogonality broken");
                    }
            }
    }

    for (int trial = 0; trial < 20; ++trial) {
        DeformMatrixD g = random_polar();
        t.exact(check_admissible(g, 1e-9), "polar matrix not admissible");
        DeformedLadderD lad = deformed_ladder(g);
        t.within(max_abs_coeff(commutator(lad.a1, lad.a2)), 1e-12,
                 "deformed annihilators do not commute");
    }

    OscillatorParams flat;
    flat.hbar = 1;
    flat.vartheta = 1;
    flat.Bcal = 1;
    t.exact(flat.discriminant() == 0, "degenerate point misconfigured");
    NcLadder lad = nc_ladder(flat);
    t.exact(!lad.a1_dag.is_zero(), "degenerate creator collapsed to zero");
    t.exact(lad.a2_dag == CSqrt::i() * lad.a1_dag,
            "creators not exactly proportional at zero discriminant");
    t.exact(commutator(lad.a1_dag, lad.a2_dag).is_zero(),
            "proportional creators fail to commute");
    return t.r;
}

// ---------------------------------------------------------------------------
// 11. Reducibility witnesses on the degenerate boundary.

CheckResult check_degenerate_witnesses(unsigned long) {
    Tally t;
    const GaugeParams points[] = {
        {Rational(1), make_rational(1, 2), Rational(2)},
        {Rational(1), make_rational(1, 3), Rational(3)},
        {make_rational(3, 2), make_rational(3, 4), Rational(3)},
    };
    for (const GaugeParams& gp : points) {
        t.exact(gp.discriminant() == 0, "witness point not on the boundary");
        auto landau = degenerate_witnesses(CaseLabel::Landau, gp);
        t.exact(landau.size() == 1, "magnetic gauge should expose one witness");
        for (const auto& w : landau) t.exact(w.is_zero(), "magnetic-gauge witness nonzero");
        auto sym = degenerate_witnesses(CaseLabel::SymmetricGauge, gp);
        t.exact(sym.size() == 2, "symmetric gauge should expose two witnesses");
        for (const auto& w : sym) t.exact(w.is_zero(), "symmetric-gauge witness nonzero");
    }
    return t.r;
}

// ---------------------------------------------------------------------------
// 12. Degenerate-surface geometry and the oscillator coupling plane.

DualVectorQ central_point(const SurfacePoint& p) {
    DualVectorQ F;
    F.X[4] = p.rho;
    F.X[5] = p.sigma;
    F.X[6] = p.tau;
    return F;
}

CheckResult check_surface_geometry(unsigned long) {
    Tally t;
    struct Setup {
        ExtensionParamsQ ep;
        Rational Kg;
        Rational momega;  // sqrt(gamma Kg / beta), exact by construction
    };
    const Setup setups[] = {
        {{Rational(2), Rational(1), Rational(1)}, Rational(4), Rational(2)},
        {{Rational(1), Rational(2), Rational(1)}, Rational(2), Rational(1)},
    };
    for (const Setup& s : setups) {
        GridRange ga{Rational(-2), Rational(2), 7};
        GridRange gb{Rational(-2), Rational(2), 7};

        auto cloud = surface_sample(SurfaceSampleKind::SRhoZeta, ga, gb, s.ep, s.Kg);
        t.exact(!cloud.empty(), "surface grid came back empty");
        for (const auto& p : cloud)
            t.exact(det_w(central_point(p), s.ep) == 0, "surface sample off the surface");

        GridRange wide{Rational(-3), Rational(3), 9};
        auto coupled = surface_sample(SurfaceSampleKind::CoupledBoson, wide, wide, s.ep, s.Kg);
        t.exact(!coupled.empty(), "coupling grid came back empty");
        for (const auto& p : coupled) {
            t.exact(p.tau == s.Kg * p.sigma, "coupling plane violated");
            t.exact(coupled_boson_admissible(p.rho, p.sigma, s.ep, s.Kg),
                    "inadmissible pair emitted");
            // Independent form of the constraint: opposite signs plus the
            // lower bound rho >= -sigma beta M Omega / alpha.
            bool signs = sign(p.rho) * sign(p.sigma) == -1;
            bool bound = p.rho >= -p.sigma * s.ep.beta * s.momega / s.ep.alpha;
            t.exact(signs && bound, "admissibility disagrees with the closed form");
        }

        Rational zeta_ho = -s.ep.beta * s.momega / s.ep.alpha;
        GridRange line{Rational(-3), Rational(3), 13};
        auto cut = surface_sample(SurfaceSampleKind::Intersection, line, line, s.ep, s.Kg);
        t.exact(!cut.empty(), "intersection line came back empty");
        for (const auto& p : cut) {
            OrbitClass c = classify(central_point(p), s.ep);
            const auto* surf = std::get_if<Surface2D>(&c);
            t.exact(surf != nullptr, "intersection point not on a surface orbit");
            if (surf) t.exact(surf->zeta == zeta_ho, "intersection slope is wrong");
        }
    }
    return t.r;
}

// ---------------------------------------------------------------------------

CheckResult safe_run(const AcceptanceCheck& check, unsigned long seed) {
    try {
        return check.run(seed);
    } catch (const std::exception& e) {
        CheckResult r;
        r.ok = false;
        r.detail = std::string("unexpected exception: ") + e.what();
        return r;
    } catch (...) {
        CheckResult r;
        r.ok = false;
        r.detail = "unexpected non-standard exception";
        return r;
    }
}

int thread_cap() {
    if (const char* env = std::getenv("NCQM_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) return static_cast<int>(std::min(v, 64L));
        return 1;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(std::min(hw, 8u)) : 1;
}

}  // namespace

const std::vector<AcceptanceCheck>& acceptance_checks() {
    static const std::vector<AcceptanceCheck> checks = {
        {"group-law", "group", check_group_law},
        {"coadjoint-fidelity", "orbits", check_coadjoint},
        {"orbit-classification", "orbits", check_orbits},
        {"master-equations", "uir", check_master},
        {"commutator-tables", "gauges", check_commutator_tables},
        {"uir-properties", "uir", check_uir},
        {"generator-cross-check", "uir", check_generator_cross},
        {"form-preserving-matrices", "gauges", check_form_preserving},
        {"gauge-transport", "gauges", check_gauge_transport},
        {"hermite-suite", "hermite", check_hermite},
        {"degenerate-witnesses", "gauges", check_degenerate_witnesses},
        {"surface-geometry", "orbits", check_surface_geometry},
    };
    return checks;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"group", "orbits", "gauges", "uir",
                                                   "hermite"};
    return names;
}

bool is_valid_suite(const std::string& name) {
    if (name == "all") return true;
    const auto& names = suite_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<const AcceptanceCheck*> suite_checks(const std::string& suite) {
    if (!is_valid_suite(suite))
        throw std::invalid_argument("unknown suite '" + suite +
                                    "' (expected group, orbits, gauges, uir, hermite, or all)");
    std::vector<const AcceptanceCheck*> sel;
    for (const auto& c : acceptance_checks())
        if (suite == "all" || suite == c.suite) sel.push_back(&c);
    return sel;
}

std::vector<CheckResult> run_suite(const std::string& suite, unsigned long seed) {
    auto sel = suite_checks(suite);
    std::vector<CheckResult> results(sel.size());
    int workers = std::min<int>(thread_cap(), static_cast<int>(sel.size()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < sel.size(); ++i) results[i] = safe_run(*sel[i], seed);
        return results;
    }
    std::atomic<std::size_t> next{0};
    auto drain = [&] {
        for (std::size_t i = next++; i < sel.size(); i = next++)
            results[i] = safe_run(*sel[i], seed);
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers - 1));
    for (int w = 1; w < workers; ++w) pool.emplace_back(drain);
    drain();
    for (auto& th : pool) th.join();
    return results;
}

}  // namespace ncqm
