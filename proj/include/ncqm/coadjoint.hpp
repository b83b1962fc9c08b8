#pragma once

#include <array>
#include <cmath>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "group.hpp"
#include "lie_algebra.hpp"
#include "matrix.hpp"
#include "rational.hpp"

namespace ncqm {

/// Dual-space vector sum_i X_i X^i* in the basis dual to
/// (Q_1, Q_2, P_1, P_2, Theta, Phi, Psi). The central components
/// (X_5, X_6, X_7) = (rho, sigma, tau) are invariants of the coadjoint action.
template <class S>
struct DualVector {
    std::array<S, 7> X{S(0), S(0), S(0), S(0), S(0), S(0), S(0)};

    friend bool operator==(const DualVector&, const DualVector&) = default;
};

using DualVectorQ = DualVector<Rational>;

/// Lower-triangular 8x8 realization of a dual vector; only the bottom row is
/// populated, in the order (X_5, X_6, X_7, X_3, X_4, X_1, X_2, 0).
template <class S>
SmallMatrix<S, 8> dual_matrix(const DualVector<S>& F) {
    SmallMatrix<S, 8> m;
    m(7, 0) = F.X[4];
    m(7, 1) = F.X[5];
    m(7, 2) = F.X[6];
    m(7, 3) = F.X[2];
    m(7, 4) = F.X[3];
    m(7, 5) = F.X[0];
    m(7, 6) = F.X[1];
    return m;
}

/// <F, X> = tr(F * algebra_matrix(X)) = sum_i x^i X_i.
template <class S>
S pairing(const DualVector<S>& F, const AlgebraElement<S>& X, const ExtensionParams<S>& ep) {
    return (dual_matrix(F) * algebra_matrix(X, ep)).trace();
}

/// Coadjoint action of g = (theta, phi, psi, q, p) on F; the central
/// components are untouched and the first four shear by the cocycle gradients.
/// Equals the bottom row of to_matrix(g) * dual_matrix(F) * to_matrix(g)^-1.
template <class S>
DualVector<S> coadjoint_action(const GroupElement<S>& g, const DualVector<S>& F,
                               const ExtensionParams<S>& ep) {
    ep.validate();
    const S half(S(1) / S(2));
    const S a2 = ep.alpha * half, b2 = ep.beta * half, c2 = ep.gamma * half;
    DualVector<S> out = F;
    out.X[0] = F.X[0] - a2 * g.q[0] * F.X[4] + b2 * g.p[1] * F.X[5];
    out.X[1] = F.X[1] - a2 * g.q[1] * F.X[4] - b2 * g.p[0] * F.X[5];
    out.X[2] = F.X[2] + c2 * g.q[1] * F.X[6] + a2 * g.p[0] * F.X[4];
    out.X[3] = F.X[3] - c2 * g.q[0] * F.X[6] + a2 * g.p[1] * F.X[4];
    return out;
}

/// Central invariants (rho, sigma, tau).
template <class S>
std::array<S, 3> central_invariants(const DualVector<S>& F) {
    return {F.X[4], F.X[5], F.X[6]};
}

/// det W for W = [[alpha X_5, beta X_6], [gamma X_7, alpha X_5]]:
/// alpha^2 X_5^2 - gamma beta X_6 X_7. Nonzero exactly when the first four
/// dual coordinates can be sheared to zero.
template <class S>
S det_w(const DualVector<S>& F, const ExtensionParams<S>& ep) {
    ep.validate();
    return ep.alpha * ep.alpha * F.X[4] * F.X[4] - ep.gamma * ep.beta * F.X[5] * F.X[6];
}

/// Solves the four shear equations for (a_1..a_4) = (p_1, p_2, q_1, q_2) so
/// that coadjoint_action of that group element zeroes X_1..X_4.
/// Requires det_w(F) != 0.
template <class S>
std::array<S, 4> solve_vanishing_system(const DualVector<S>& F, const ExtensionParams<S>& ep) {
    if (det_w(F, ep) == S(0))
        throw std::domain_error("vanishing system: det W = 0, system is singular");
    const S half(S(1) / S(2));
    const S a2 = ep.alpha * half, b2 = ep.beta * half, c2 = ep.gamma * half;
    // Rows: the vanishing conditions for X_1', X_4', X_2', X_3' as linear
    // equations M a = rhs in a = (a_1, a_2, a_3, a_4).
    SmallMatrix<S, 4> M;
    std::array<S, 4> rhs{-F.X[0], -F.X[3], -F.X[1], -F.X[2]};
    M(0, 1) = b2 * F.X[5];
    M(0, 2) = -a2 * F.X[4];
    M(1, 1) = a2 * F.X[4];
    M(1, 2) = -c2 * F.X[6];
    M(2, 0) = -b2 * F.X[5];
    M(2, 3) = -a2 * F.X[4];
    M(3, 0) = a2 * F.X[4];
    M(3, 3) = c2 * F.X[6];
    auto Minv = M.inverse();
    std::array<S, 4> a{S(0), S(0), S(0), S(0)};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) a[i] += Minv(i, j) * rhs[j];
    return a;
}

/// Rational invariants on the degenerate surface det W = 0 (with sigma != 0):
///   kappa = X_3 + alpha X_5 X_2 / (beta X_6)
///   delta = X_4 - alpha X_5 X_1 / (beta X_6)
template <class S>
std::array<S, 2> rational_invariants(const DualVector<S>& F, const ExtensionParams<S>& ep) {
    if (F.X[5] == S(0)) throw std::domain_error("rational invariants: sigma = 0");
    if (!(det_w(F, ep) == S(0)))
        throw std::domain_error("rational invariants: defined only on the surface det W = 0");
    S r = ep.alpha * F.X[4] / (ep.beta * F.X[5]);
    return {F.X[2] + r * F.X[1], F.X[3] - r * F.X[0]};
}

// --- Orbit classification -------------------------------------------------

struct Generic4D {
    Rational rho, sigma, tau;
    friend bool operator==(const Generic4D&, const Generic4D&) = default;
};
struct Surface2D {
    Rational rho, zeta, kappa, delta;
    friend bool operator==(const Surface2D&, const Surface2D&) = default;
};
struct FourDSigmaOnly {
    Rational rho, sigma;
    friend bool operator==(const FourDSigmaOnly&, const FourDSigmaOnly&) = default;
};
struct FourDTauOnly {
    Rational rho, tau;
    friend bool operator==(const FourDTauOnly&, const FourDTauOnly&) = default;
};
struct FourDRhoZero {
    Rational sigma, tau;
    friend bool operator==(const FourDRhoZero&, const FourDRhoZero&) = default;
};
struct FourDRhoOnly {
    Rational rho;
    friend bool operator==(const FourDRhoOnly&, const FourDRhoOnly&) = default;
};
struct TwoDTau {
    Rational c1, c2, tau;
    friend bool operator==(const TwoDTau&, const TwoDTau&) = default;
};
struct TwoDSigma {
    Rational c3, c4, sigma;
    friend bool operator==(const TwoDSigma&, const TwoDSigma&) = default;
};
struct Point0D {
    Rational c1, c2, c3, c4;
    friend bool operator==(const Point0D&, const Point0D&) = default;
};

using OrbitClass = std::variant<Generic4D, Surface2D, FourDSigmaOnly, FourDTauOnly, FourDRhoZero,
                                FourDRhoOnly, TwoDTau, TwoDSigma, Point0D>;

std::string family_name(const OrbitClass& c);
int orbit_dimension(const OrbitClass& c);

/// Exact orbit classification. Branch order: all central invariants zero
/// first, then the rho = 0 families, then the rho != 0 families with the
/// degenerate surface split off by det W = 0.
OrbitClass classify(const DualVectorQ& F, const ExtensionParamsQ& ep);

/// Float-input classification: each coordinate within tol of zero is snapped
/// to exactly zero, and if all three central invariants survive but |det W|
/// <= tol the vector is projected onto the surface before the exact branch
/// logic runs. Without a tolerance there is no float overload on purpose.
OrbitClass classify(const std::array<double, 7>& F, const ExtensionParamsQ& ep, double tol);

/// Canonical representative of an orbit family. The extension parameters are
/// needed to reconstruct the tau coordinate of a degenerate-surface
/// representative.
DualVectorQ orbit_representative(const OrbitClass& c, const ExtensionParamsQ& ep);

// --- Degenerate-surface sampling ------------------------------------------

enum class SurfaceSampleKind { SRhoZeta, CoupledBoson, Intersection };

/// Closed uniform rational grid; count == 1 emits lo alone.
struct GridRange {
    Rational lo, hi;
    int count = 1;
};

struct SurfacePoint {
    Rational rho, sigma, tau;
    friend bool operator==(const SurfacePoint&, const SurfacePoint&) = default;
};

/// Sign of a + b*sqrt(m) for rationals with m >= 0, decided exactly.
int sign_a_plus_b_sqrt(const Rational& a, const Rational& b, const Rational& m);

/// Admissibility of (rho, sigma) for the oscillator coupling tau = Kg sigma:
/// rho and sigma carry opposite signs and rho >= -sigma beta M Omega / alpha
/// with M Omega = sqrt(gamma Kg / beta). Decided exactly.
bool coupled_boson_admissible(const Rational& rho, const Rational& sigma,
                              const ExtensionParamsQ& ep, const Rational& Kg);

/// Point clouds in (rho, sigma, tau) space:
///  - SRhoZeta: grid over (rho, zeta), axes a x b, every point exactly on the
///    surface det W = 0 (sigma = rho/zeta, tau = zeta alpha^2 rho/(gamma beta)).
///  - CoupledBoson: grid over (rho, sigma), tau = Kg sigma, filtered by the
///    exact admissibility test.
///  - Intersection: grid over sigma (axis a, b ignored), the two half-lines
///    where the coupling plane meets the surface; requires gamma Kg / beta to
///    be a perfect rational square so the emitted points stay rational.
/// Ranges that exclude every admissible point yield an empty cloud.
std::vector<SurfacePoint> surface_sample(SurfaceSampleKind kind, const GridRange& a,
                                         const GridRange& b, const ExtensionParamsQ& ep,
                                         const Rational& Kg);

inline DualVectorQ rand_dual_vector(std::mt19937& rng, long max_num = 9, long max_den = 9) {
    DualVectorQ F;
    for (auto& c : F.X) c = rand_rational(rng, max_num, max_den);
    return F;
}

}  // namespace ncqm
