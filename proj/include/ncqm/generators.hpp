#pragma once

#include <array>
#include <string>
#include <vector>

#include "weyl.hpp"

namespace ncqm {

/// Physical constants entering the operator realizations: hbar > 0, the
/// position noncommutativity vartheta, and the magnetic-type scale Bcal.
/// The derived magnetic field is B = Bcal / hbar.
struct GaugeParams {
    Rational hbar{1};
    Rational vartheta{0};
    Rational Bcal{0};

    Rational magnetic_field() const { return Bcal / hbar; }
    /// hbar^2 - Bcal*vartheta, the discriminant separating the generic case
    /// from the reducible boundary.
    Rational discriminant() const { return hbar * hbar - Bcal * vartheta; }
    void validate() const;
};

/// Extra labels some realizations carry (orbit representative constants).
struct CaseConstants {
    Rational kappa{0}, delta{0};    // 1-D realization on the vanishing surface
    Rational kappa1{0}, kappa2{0};  // noncommutative plane strengths
    Rational c1{0}, c2{0}, c3{0}, c4{0};  // scalar generators of point orbits
};

/// The ten operator realizations of the position/momentum quadruple.
enum class CaseLabel {
    Landau,
    DegenerateSurface1D,
    ThetaOnly,
    LandauSystem,
    StandardQM,
    TwoNCPlanes,
    SingleNCPlaneMomentum,
    SingleNCPlanePosition,
    Trivial,
    SymmetricGauge,
};

std::string case_label_name(CaseLabel c);
CaseLabel parse_case_label(const std::string& name);
const std::vector<CaseLabel>& all_case_labels();

struct GeneratorSet {
    Alphabet alphabet;
    WeylPolyX Q1, Q2, P1, P2;
};

/// Landau-gauge operators on the plane:
///   Q1 = r1 + i vartheta d2,  Q2 = r2,
///   P1 = -i hbar d1,          P2 = -(Bcal/hbar) r1 - i hbar d2.
GeneratorSet landau_generators(const GaugeParams& gp);

/// One-dimensional operators attached to the degenerate (vanishing) surface,
/// labelled by the surface invariants kappa, delta:
///   Q1 = -r,  Q2 = i vartheta d,  P1 = hbar kappa + i hbar d,
///   P2 = hbar delta + (hbar/vartheta) r.
GeneratorSet degenerate_surface_generators(const GaugeParams& gp, const Rational& kappa,
                                           const Rational& delta);

/// Position noncommutativity only (Bcal = 0 structurally).
GeneratorSet theta_only_generators(const GaugeParams& gp);

/// Momentum noncommutativity only (vartheta = 0 structurally): a Landau
/// system for a charged particle.
GeneratorSet landau_system_generators(const GaugeParams& gp);

/// Standard quantum mechanics: Qi = ri, Pi = -i hbar di.
GeneratorSet standard_qm_generators(const GaugeParams& gp);

/// Two uncoupled noncommutative planes (positions and momenta separately):
///   Q1 = i kappa1 d2, Q2 = r2, P1 = -i d1, P2 = -kappa2 r1.
GeneratorSet two_nc_planes_generators(const Rational& kappa1, const Rational& kappa2);

/// A single noncommutative momentum plane; positions act as the constants
/// c1, c2:  Q1 = c1, Q2 = c2, P1 = kappa2 r, P2 = -i d.
GeneratorSet single_nc_plane_momentum_generators(const Rational& c1, const Rational& c2,
                                                 const Rational& kappa2);

/// A single noncommutative position plane; momenta act as the constants
/// c3, c4:  Q1 = -kappa1 s, Q2 = i ds, P1 = c3, P2 = c4.
GeneratorSet single_nc_plane_position_generators(const Rational& c3, const Rational& c4,
                                                 const Rational& kappa1);

/// Everything central: four commuting constants.
GeneratorSet trivial_generators(const Rational& c1, const Rational& c2, const Rational& c3,
                                const Rational& c4);

/// Symmetric-gauge operators; with s = sqrt(hbar^2 - Bcal*vartheta):
///   Q1 = r1 + (i vartheta/2) d2,            Q2 = r2 - (i vartheta/2) d1,
///   P1 = ((hbar-s)/vartheta) r2 - (i(hbar+s)/2) d1,
///   P2 = ((s-hbar)/vartheta) r1 - (i(hbar+s)/2) d2.
/// Requires discriminant >= 0 and vartheta != 0; the boundary value 0 is
/// admitted so the reducibility witnesses can be checked there exactly.
GeneratorSet symmetric_gauge_generators(const GaugeParams& gp);

/// Uniform dispatcher over all ten realizations.
GeneratorSet gauge_generators(CaseLabel c, const GaugeParams& gp,
                              const CaseConstants& cc = {});

/// Order in which the six pairwise commutators are reported.
inline constexpr std::array<const char*, 6> kCommutatorNames = {
    "[Q1,P1]", "[Q2,P2]", "[Q1,Q2]", "[P1,P2]", "[Q1,P2]", "[Q2,P1]"};

std::array<WeylPolyX, 6> commutator_table(const GeneratorSet& g);

/// The tabulated scalar table for each realization, as multiples of the
/// identity symbol in the realization's alphabet.
std::array<WeylPolyX, 6> expected_commutator_table(CaseLabel c, const GaugeParams& gp,
                                                   const CaseConstants& cc = {});

/// Symbols that must vanish exactly at the reducible boundary
/// hbar^2 = Bcal*vartheta (Landau: one witness; symmetric gauge: two).
std::vector<WeylPolyX> degenerate_witnesses(CaseLabel c, const GaugeParams& gp);

}  // namespace ncqm
