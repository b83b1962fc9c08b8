#include "ncqm/generators.hpp"

#include <stdexcept>

namespace ncqm {

namespace {

constexpr Alphabet k2 = Alphabet::Real2D;
constexpr Alphabet k1 = Alphabet::Real1D;

WeylPolyX pos(Alphabet a, int i) { return WeylPolyX::position(a, i); }
WeylPolyX der(Alphabet a, int i) { return WeylPolyX::deriv(a, i); }
WeylPolyX cst(Alphabet a, const CSqrt& c) { return WeylPolyX::constant(a, c); }

CSqrt imag(const Rational& r) { return CSqrt(QSqrt(0), QSqrt(r)); }
CSqrt imag(const QSqrt& q) { return CSqrt(QSqrt(0), q); }

}  // namespace

void GaugeParams::validate() const {
    if (hbar <= 0) throw std::invalid_argument("generators: hbar must be positive");
}

std::string case_label_name(CaseLabel c) {
    switch (c) {
        case CaseLabel::Landau: return "landau";
        case CaseLabel::DegenerateSurface1D: return "degenerate-surface-1d";
        case CaseLabel::ThetaOnly: return "theta-only";
        case CaseLabel::LandauSystem: return "landau-system";
        case CaseLabel::StandardQM: return "standard-qm";
        case CaseLabel::TwoNCPlanes: return "two-nc-planes";
        case CaseLabel::SingleNCPlaneMomentum: return "single-nc-plane-momentum";
        case CaseLabel::SingleNCPlanePosition: return "single-nc-plane-position";
        case CaseLabel::Trivial: return "trivial";
        case CaseLabel::SymmetricGauge: return "symmetric-gauge";
    }
    throw std::logic_error("generators: unknown case label");
}

CaseLabel parse_case_label(const std::string& name) {
    for (CaseLabel c : all_case_labels())
        if (case_label_name(c) == name) return c;
    throw std::invalid_argument("generators: unknown case '" + name + "'");
}

const std::vector<CaseLabel>& all_case_labels() {
    static const std::vector<CaseLabel> all = {
        CaseLabel::Landau,
        CaseLabel::DegenerateSurface1D,
        CaseLabel::ThetaOnly,
        CaseLabel::LandauSystem,
        CaseLabel::StandardQM,
        CaseLabel::TwoNCPlanes,
        CaseLabel::SingleNCPlaneMomentum,
        CaseLabel::SingleNCPlanePosition,
        CaseLabel::Trivial,
        CaseLabel::SymmetricGauge,
    };
    return all;
}

GeneratorSet landau_generators(const GaugeParams& gp) {
    gp.validate();
    return {k2,
            pos(k2, 1) + imag(gp.vartheta) * der(k2, 2),
            pos(k2, 2),
            imag(-gp.hbar) * der(k2, 1),
            CSqrt(-gp.Bcal / gp.hbar) * pos(k2, 1) + imag(-gp.hbar) * der(k2, 2)};
}

GeneratorSet degenerate_surface_generators(const GaugeParams& gp, const Rational& kappa,
                                           const Rational& delta) {
    gp.validate();
    if (gp.vartheta == 0)
        throw std::invalid_argument("generators: surface realization needs vartheta != 0");
    return {k1,
            -pos(k1, 1),
            imag(gp.vartheta) * der(k1, 1),
            cst(k1, CSqrt(gp.hbar * kappa)) + imag(gp.hbar) * der(k1, 1),
            cst(k1, CSqrt(gp.hbar * delta)) + CSqrt(gp.hbar / gp.vartheta) * pos(k1, 1)};
}

GeneratorSet theta_only_generators(const GaugeParams& gp) {
    gp.validate();
    return {k2,
            pos(k2, 1) + imag(gp.vartheta) * der(k2, 2),
            pos(k2, 2),
            imag(-gp.hbar) * der(k2, 1),
            imag(-gp.hbar) * der(k2, 2)};
}

GeneratorSet landau_system_generators(const GaugeParams& gp) {
    gp.validate();
    return {k2,
            pos(k2, 1),
            pos(k2, 2),
            imag(-gp.hbar) * der(k2, 1),
            CSqrt(-gp.Bcal / gp.hbar) * pos(k2, 1) + imag(-gp.hbar) * der(k2, 2)};
}

GeneratorSet standard_qm_generators(const GaugeParams& gp) {
    gp.validate();
    return {k2, pos(k2, 1), pos(k2, 2), imag(-gp.hbar) * der(k2, 1),
            imag(-gp.hbar) * der(k2, 2)};
}

GeneratorSet two_nc_planes_generators(const Rational& kappa1, const Rational& kappa2) {
    return {k2, imag(kappa1) * der(k2, 2), pos(k2, 2), imag(Rational(-1)) * der(k2, 1),
            CSqrt(-kappa2) * pos(k2, 1)};
}

GeneratorSet single_nc_plane_momentum_generators(const Rational& c1, const Rational& c2,
                                                 const Rational& kappa2) {
    return {k1, cst(k1, CSqrt(c1)), cst(k1, CSqrt(c2)), CSqrt(kappa2) * pos(k1, 1),
            imag(Rational(-1)) * der(k1, 1)};
}

GeneratorSet single_nc_plane_position_generators(const Rational& c3, const Rational& c4,
                                                 const Rational& kappa1) {
    return {k1, CSqrt(-kappa1) * pos(k1, 1), imag(Rational(1)) * der(k1, 1),
            cst(k1, CSqrt(c3)), cst(k1, CSqrt(c4))};
}

GeneratorSet trivial_generators(const Rational& c1, const Rational& c2, const Rational& c3,
                                const Rational& c4) {
    return {k2, cst(k2, CSqrt(c1)), cst(k2, CSqrt(c2)), cst(k2, CSqrt(c3)),
            cst(k2, CSqrt(c4))};
}

GeneratorSet symmetric_gauge_generators(const GaugeParams& gp) {
    gp.validate();
    if (gp.vartheta == 0)
        throw std::invalid_argument("generators: symmetric gauge needs vartheta != 0");
    Rational disc = gp.discriminant();
    if (disc < 0)
        throw std::invalid_argument("generators: symmetric gauge needs hbar^2 >= Bcal*vartheta");
    QSqrt s = QSqrt::sqrt_of(disc);
    QSqrt h{gp.hbar};
    QSqrt half{make_rational(1, 2)};
    QSqrt inv_t = QSqrt(Rational(1) / gp.vartheta);
    return {k2,
            pos(k2, 1) + imag(gp.vartheta / 2) * der(k2, 2),
            pos(k2, 2) + imag(-gp.vartheta / 2) * der(k2, 1),
            CSqrt((h - s) * inv_t) * pos(k2, 2) + imag(-(h + s) * half) * der(k2, 1),
            CSqrt((s - h) * inv_t) * pos(k2, 1) + imag(-(h + s) * half) * der(k2, 2)};
}

GeneratorSet gauge_generators(CaseLabel c, const GaugeParams& gp, const CaseConstants& cc) {
    switch (c) {
        case CaseLabel::Landau: return landau_generators(gp);
        case CaseLabel::DegenerateSurface1D:
            return degenerate_surface_generators(gp, cc.kappa, cc.delta);
        case CaseLabel::ThetaOnly: return theta_only_generators(gp);
        case CaseLabel::LandauSystem: return landau_system_generators(gp);
        case CaseLabel::StandardQM: return standard_qm_generators(gp);
        case CaseLabel::TwoNCPlanes: return two_nc_planes_generators(cc.kappa1, cc.kappa2);
        case CaseLabel::SingleNCPlaneMomentum:
            return single_nc_plane_momentum_generators(cc.c1, cc.c2, cc.kappa2);
        case CaseLabel::SingleNCPlanePosition:
            return single_nc_plane_position_generators(cc.c3, cc.c4, cc.kappa1);
        case CaseLabel::Trivial: return trivial_generators(cc.c1, cc.c2, cc.c3, cc.c4);
        case CaseLabel::SymmetricGauge: return symmetric_gauge_generators(gp);
    }
    throw std::logic_error("generators: unknown case label");
}

std::array<WeylPolyX, 6> commutator_table(const GeneratorSet& g) {
    return {commutator(g.Q1, g.P1), commutator(g.Q2, g.P2), commutator(g.Q1, g.Q2),
            commutator(g.P1, g.P2), commutator(g.Q1, g.P2), commutator(g.Q2, g.P1)};
}

std::array<WeylPolyX, 6> expected_commutator_table(CaseLabel c, const GaugeParams& gp,
                                                   const CaseConstants& cc) {
    Alphabet a = k2;
    std::array<CSqrt, 6> s{};
    CSqrt ih = imag(gp.hbar);
    switch (c) {
        case CaseLabel::Landau:
            s = {ih, ih, imag(gp.vartheta), imag(gp.Bcal), CSqrt(0), CSqrt(0)};
            break;
        case CaseLabel::DegenerateSurface1D:
            a = k1;
            s = {ih, ih, imag(gp.vartheta), imag(gp.hbar * gp.hbar / gp.vartheta), CSqrt(0),
                 CSqrt(0)};
            break;
        case CaseLabel::ThetaOnly:
            s = {ih, ih, imag(gp.vartheta), CSqrt(0), CSqrt(0), CSqrt(0)};
            break;
        case CaseLabel::LandauSystem:
            s = {ih, ih, CSqrt(0), imag(gp.Bcal), CSqrt(0), CSqrt(0)};
            break;
        case CaseLabel::StandardQM:
            s = {ih, ih, CSqrt(0), CSqrt(0), CSqrt(0), CSqrt(0)};
            break;
        case CaseLabel::TwoNCPlanes:
            s = {CSqrt(0), CSqrt(0), imag(cc.kappa1), imag(cc.kappa2), CSqrt(0), CSqrt(0)};
            break;
        case CaseLabel::SingleNCPlaneMomentum:
            a = k1;
            s = {CSqrt(0), CSqrt(0), CSqrt(0), imag(cc.kappa2), CSqrt(0), CSqrt(0)};
            break;
        case CaseLabel::SingleNCPlanePosition:
            a = k1;
            s = {CSqrt(0), CSqrt(0), imag(cc.kappa1), CSqrt(0), CSqrt(0), CSqrt(0)};
            break;
        case CaseLabel::Trivial:
            break;
        case CaseLabel::SymmetricGauge:
            s = {ih, ih, imag(gp.vartheta), imag(gp.Bcal), CSqrt(0), CSqrt(0)};
            break;
    }
    std::array<WeylPolyX, 6> out = {WeylPolyX(a), WeylPolyX(a), WeylPolyX(a),
                                    WeylPolyX(a), WeylPolyX(a), WeylPolyX(a)};
    for (int i = 0; i < 6; ++i)
        if (!s[static_cast<std::size_t>(i)].is_zero())
            out[static_cast<std::size_t>(i)] = cst(a, s[static_cast<std::size_t>(i)]);
    return out;
}

std::vector<WeylPolyX> degenerate_witnesses(CaseLabel c, const GaugeParams& gp) {
    if (gp.vartheta == 0)
        throw std::invalid_argument("generators: witnesses need vartheta != 0");
    CSqrt ratio{gp.hbar / gp.vartheta};
    if (c == CaseLabel::Landau) {
        GeneratorSet g = landau_generators(gp);
        return {g.P2 + ratio * g.Q1};
    }
    if (c == CaseLabel::SymmetricGauge) {
        GeneratorSet g = symmetric_gauge_generators(gp);
        return {g.P2 + ratio * g.Q1, g.P1 - ratio * g.Q2};
    }
    throw std::invalid_argument(
        "generators: reducibility witnesses exist for the Landau and symmetric gauges only");
}

}  // namespace ncqm
