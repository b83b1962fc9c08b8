#include "ncqm/hermite.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ncqm/quadrature.hpp"

namespace ncqm {

namespace {

constexpr Alphabet kZ = Alphabet::ComplexZ;

Rational fact(int n) { return factorial(static_cast<unsigned>(n)); }

/// m! / (m - c)! as an exact rational.
Rational falling(int m, int c) {
    Rational f = 1;
    for (int j = 0; j < c; ++j) f *= (m - j);
    return f;
}

void check_indices(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("hermite: indices must be nonnegative");
}

void require_positive_part(const OscillatorParams& osc) {
    if (osc.hbar <= 0) throw std::invalid_argument("oscillator: hbar must be positive");
    if (osc.M <= 0 || osc.Omega <= 0)
        throw std::invalid_argument("oscillator: mass and frequency must be positive");
    if (osc.discriminant() < 0)
        throw std::invalid_argument("oscillator: hbar^2 - Bcal vartheta must not be negative");
}

}  // namespace

BiPolyD to_numeric(const BiPoly& p) {
    BiPolyD out;
    for (const auto& [key, c] : p.terms()) out.add_term(key.first, key.second, c.to_complex());
    return out;
}

double max_coeff_distance(const BiPolyD& a, const BiPolyD& b) {
    double worst = 0.0;
    auto scan = [&](const BiPolyD& x, const BiPolyD& y) {
        for (const auto& [key, c] : x.terms()) {
            std::complex<double> other{};
            auto it = y.terms().find(key);
            if (it != y.terms().end()) other = it->second;
            worst = std::max(worst, std::abs(c - other));
        }
    };
    scan(a, b);
    scan(b, a);
    return worst;
}

std::complex<double> eval(const BiPolyD& p, std::complex<double> z) {
    std::complex<double> acc{};
    const std::complex<double> zb = std::conj(z);
    for (const auto& [key, c] : p.terms())
        acc += c * std::pow(z, key.first) * std::pow(zb, key.second);
    return acc;
}

WeylPolyX ladder_a1() { return WeylPolyX::deriv(kZ, 2); }
WeylPolyX ladder_a1_dag() { return WeylPolyX::position(kZ, 2) - WeylPolyX::deriv(kZ, 1); }
WeylPolyX ladder_a2() { return WeylPolyX::deriv(kZ, 1); }
WeylPolyX ladder_a2_dag() { return WeylPolyX::position(kZ, 1) - WeylPolyX::deriv(kZ, 2); }

namespace {

template <class C>
BiPolyT<C> apply_impl(const WeylPoly<C>& op, const BiPolyT<C>& f) {
    if (op.alphabet() != kZ)
        throw std::invalid_argument("hermite: operator must use the complex alphabet");
    BiPolyT<C> out;
    for (const auto& [e, c] : op.terms())
        for (const auto& [key, fc] : f.terms()) {
            const auto [m, n] = key;
            if (m < e[2] || n < e[3]) continue;
            Rational scale = falling(m, e[2]) * falling(n, e[3]);
            out.add_term(m - e[2] + e[0], n - e[3] + e[1],
                         c * fc * WeylCoeffOps<C>::from_rational(scale));
        }
    return out;
}

}  // namespace

BiPoly apply_complex_symbol(const WeylPolyX& op, const BiPoly& f) { return apply_impl(op, f); }
BiPolyD apply_complex_symbol(const WeylPolyD& op, const BiPolyD& f) { return apply_impl(op, f); }

BiPoly hermite_nk(int n, int k) {
    check_indices(n, k);
    CSqrt scale(QSqrt::sqrt_of(fact(n) * fact(k)));
    BiPoly out;
    for (int j = 0; j <= std::min(n, k); ++j) {
        Rational c = Rational(j % 2 == 0 ? 1 : -1) / (fact(j) * fact(n - j) * fact(k - j));
        out.add_term(k - j, n - j, scale * CSqrt(QSqrt(c)));
    }
    return out;
}

BiPoly hermite_nk_ladder(int n, int k) {
    check_indices(n, k);
    WeylPolyX op = pow(ladder_a1_dag(), static_cast<unsigned>(n)) *
                   pow(ladder_a2_dag(), static_cast<unsigned>(k));
    CSqrt scale(QSqrt::sqrt_of(Rational(1) / (fact(n) * fact(k))));
    return scale * apply_complex_symbol(op, BiPoly::one());
}

BiPoly hermite_nk_rodrigues(int n, int k) {
    check_indices(n, k);
    // Conjugating a bare derivative by the Gaussian weight turns d/dz into
    // d/dz - zbar and d/dzbar into d/dzbar - z.
    WeylPolyX dz = WeylPolyX::deriv(kZ, 1) - WeylPolyX::position(kZ, 2);
    WeylPolyX dzb = WeylPolyX::deriv(kZ, 2) - WeylPolyX::position(kZ, 1);
    BiPoly f = BiPoly::one();
    for (int j = 0; j < k; ++j) f = apply_complex_symbol(dzb, f);
    for (int j = 0; j < n; ++j) f = apply_complex_symbol(dz, f);
    QSqrt scale = QSqrt::sqrt_of(Rational(1) / (fact(n) * fact(k)));
    if ((n + k) % 2 != 0) scale = -scale;
    return CSqrt(scale) * f;
}

CSqrt gauss_inner(const BiPoly& P, const BiPoly& R) {
    CSqrt acc;
    for (const auto& [kp, cp] : P.terms())
        for (const auto& [kr, cr] : R.terms()) {
            if (kp.second + kr.first != kp.first + kr.second) continue;
            acc += cp.conj() * cr * CSqrt(QSqrt(fact(kp.second + kr.first)));
        }
    return acc;
}

std::complex<double> gauss_inner(const BiPolyD& P, const BiPolyD& R) {
    std::complex<double> acc{};
    for (const auto& [kp, cp] : P.terms())
        for (const auto& [kr, cr] : R.terms()) {
            if (kp.second + kr.first != kp.first + kr.second) continue;
            acc += std::conj(cp) * cr * to_double(fact(kp.second + kr.first));
        }
    return acc;
}

std::complex<double> gauss_inner_quadrature(const BiPolyD& P, const BiPolyD& R, int nodes) {
    QuadRule radial = gauss_legendre(nodes, 0.0, 10.0);
    QuadRule angular = gauss_legendre(nodes, 0.0, 2.0 * std::numbers::pi);
    std::complex<double> acc{};
    for (std::size_t i = 0; i < radial.nodes.size(); ++i) {
        const double r = radial.nodes[i];
        const double damp = std::exp(-r * r) * r * radial.weights[i];
        for (std::size_t j = 0; j < angular.nodes.size(); ++j) {
            std::complex<double> z = std::polar(r, angular.nodes[j]);
            acc += damp * angular.weights[j] * std::conj(eval(P, z)) * eval(R, z);
        }
    }
    return acc / std::numbers::pi;
}

bool OscillatorParams::independence_constraint() const {
    return vartheta * M * M * Omega * Omega == Bcal;
}

bool OscillatorParams::in_window() const {
    Rational t = window_ratio();
    return t > 0 && t <= 1;
}

void OscillatorParams::validate() const {
    require_positive_part(*this);
    if (discriminant() == 0)
        throw std::invalid_argument("oscillator: hbar^2 - Bcal vartheta must be positive");
}

QSqrt oscillator_nu(const OscillatorParams& osc) {
    require_positive_part(osc);
    QSqrt s = QSqrt::sqrt_of(osc.discriminant());
    return (QSqrt(osc.hbar) + s) / QSqrt(2 * osc.hbar);
}

QSqrt oscillator_m_omega(const OscillatorParams& osc) {
    require_positive_part(osc);
    QSqrt s = QSqrt::sqrt_of(osc.discriminant());
    return QSqrt(2 * osc.hbar * osc.M * osc.Omega) / (QSqrt(osc.hbar) + s);
}

DeformMatrixD to_numeric(const DeformMatrix& g) {
    return {g.g11.to_complex(), g.g12.to_complex(), g.g21.to_complex(), g.g22.to_complex()};
}

DeformMatrix deform_identity() { return {CSqrt(1), CSqrt(0), CSqrt(0), CSqrt(1)}; }

DeformMatrix deform_matrix_sym(const Rational& nu) {
    if (nu <= make_rational(1, 2) || nu > 1)
        throw std::invalid_argument("deform: nu must lie in (1/2, 1]");
    QSqrt rn = QSqrt::sqrt_of(nu);
    QSqrt rc = QSqrt::sqrt_of(1 - nu);
    return {CSqrt(rn), CSqrt(QSqrt(0), rc), CSqrt(QSqrt(0), -rc), CSqrt(rn)};
}

DeformMatrixD deform_matrix_polar(double r, double kappa, double delta,
                                  const OscillatorParams& osc) {
    osc.validate();
    if (!osc.in_window())
        throw std::domain_error("deform: vartheta M Omega / hbar must lie in (0, 1]");
    if (r <= 0.0 || r >= 1.0) throw std::domain_error("deform: r must lie in (0, 1)");
    const double t = to_double(osc.window_ratio());
    double arg = t / (2.0 * r * std::sqrt(1.0 - r * r));
    if (arg > 1.0 + 1e-12) throw std::domain_error("deform: r outside the admissible band");
    arg = std::min(arg, 1.0);
    const double eps = std::asin(arg);
    const double co = std::sqrt(1.0 - r * r);
    return {std::polar(r, kappa), std::polar(co, kappa + eps), std::polar(co, delta),
            -std::polar(r, delta - eps)};
}

DeformMatrix dual_matrix(const DeformMatrix& g) {
    CSqrt d = g.det();
    if (d.is_zero()) throw std::domain_error("deform: singular matrix has no dual");
    CSqrt dd = d.conj();
    return {g.g22.conj() / dd, -g.g21.conj() / dd, -g.g12.conj() / dd, g.g11.conj() / dd};
}

DeformMatrixD dual_matrix(const DeformMatrixD& g) {
    std::complex<double> d = g.det();
    if (std::abs(d) < 1e-12) throw std::domain_error("deform: singular matrix has no dual");
    std::complex<double> dd = std::conj(d);
    return {std::conj(g.g22) / dd, -std::conj(g.g21) / dd, -std::conj(g.g12) / dd,
            std::conj(g.g11) / dd};
}

DeformedLadder deformed_ladder(const DeformMatrix& g) {
    DeformedLadder out;
    out.a1_dag = g.g11 * ladder_a1_dag() + g.g21 * ladder_a2_dag();
    out.a2_dag = g.g12 * ladder_a1_dag() + g.g22 * ladder_a2_dag();
    out.a1 = g.g11.conj() * ladder_a1() + g.g21.conj() * ladder_a2();
    out.a2 = g.g12.conj() * ladder_a1() + g.g22.conj() * ladder_a2();
    return out;
}

DeformedLadderD deformed_ladder(const DeformMatrixD& g) {
    const WeylPolyD a1 = to_numeric(ladder_a1());
    const WeylPolyD a2 = to_numeric(ladder_a2());
    const WeylPolyD a1d = to_numeric(ladder_a1_dag());
    const WeylPolyD a2d = to_numeric(ladder_a2_dag());
    DeformedLadderD out;
    out.a1_dag = g.g11 * a1d + g.g21 * a2d;
    out.a2_dag = g.g12 * a1d + g.g22 * a2d;
    out.a1 = std::conj(g.g11) * a1 + std::conj(g.g21) * a2;
    out.a2 = std::conj(g.g12) * a1 + std::conj(g.g22) * a2;
    return out;
}

bool check_admissible(const DeformMatrix& g) {
    CSqrt h11 = g.g11.conj() * g.g11 + g.g21.conj() * g.g21;
    CSqrt h22 = g.g12.conj() * g.g12 + g.g22.conj() * g.g22;
    CSqrt h12 = g.g11.conj() * g.g12 + g.g21.conj() * g.g22;
    return h11 == CSqrt(1) && h22 == CSqrt(1) && h12.re.is_zero();
}

bool check_admissible(const DeformMatrixD& g, double tol) {
    std::complex<double> h11 = std::conj(g.g11) * g.g11 + std::conj(g.g21) * g.g21;
    std::complex<double> h22 = std::conj(g.g12) * g.g12 + std::conj(g.g22) * g.g22;
    std::complex<double> h12 = std::conj(g.g11) * g.g12 + std::conj(g.g21) * g.g22;
    return std::abs(h11 - 1.0) <= tol && std::abs(h22 - 1.0) <= tol &&
           std::abs(h12.real()) <= tol;
}

BiPoly deformed_hermite(const DeformMatrix& g, int n, int k) {
    check_indices(n, k);
    DeformedLadder lad = deformed_ladder(g);
    WeylPolyX op =
        pow(lad.a1_dag, static_cast<unsigned>(n)) * pow(lad.a2_dag, static_cast<unsigned>(k));
    CSqrt scale(QSqrt::sqrt_of(Rational(1) / (fact(n) * fact(k))));
    return scale * apply_complex_symbol(op, BiPoly::one());
}

BiPolyD deformed_hermite(const DeformMatrixD& g, int n, int k) {
    check_indices(n, k);
    DeformedLadderD lad = deformed_ladder(g);
    WeylPolyD op =
        pow(lad.a1_dag, static_cast<unsigned>(n)) * pow(lad.a2_dag, static_cast<unsigned>(k));
    std::complex<double> scale(1.0 / std::sqrt(to_double(fact(n) * fact(k))), 0.0);
    return scale * apply_complex_symbol(op, BiPolyD::one());
}

BiPoly dual_deformed_hermite(const DeformMatrix& g, int n, int k) {
    return deformed_hermite(dual_matrix(g), n, k);
}

BiPolyD dual_deformed_hermite(const DeformMatrixD& g, int n, int k) {
    return deformed_hermite(dual_matrix(g), n, k);
}

NcLadder nc_ladder(const OscillatorParams& osc) {
    require_positive_part(osc);
    GeneratorSet sym = symmetric_gauge_generators(osc.gauge());
    CSqrt pref(QSqrt::sqrt_of(osc.M * osc.Omega / (2 * osc.hbar)));
    CSqrt step = CSqrt::i() * CSqrt(QSqrt(Rational(1) / (osc.M * osc.Omega)));
    NcLadder out;
    out.a1_dag = pref * (sym.Q1 - step * sym.P1);
    out.a2_dag = pref * (sym.Q2 - step * sym.P2);
    out.a1 = pref * (sym.Q1 + step * sym.P1);
    out.a2 = pref * (sym.Q2 + step * sym.P2);
    return out;
}

NcLadder standard_ladder(const OscillatorParams& osc) {
    require_positive_part(osc);
    Rational mw = oscillator_m_omega(osc).as_rational();
    GeneratorSet qm = standard_qm_generators(osc.gauge());
    CSqrt pref(QSqrt::sqrt_of(mw / (2 * osc.hbar)));
    CSqrt step = CSqrt::i() * CSqrt(QSqrt(Rational(1) / mw));
    NcLadder out;
    out.a1_dag = pref * (qm.Q1 - step * qm.P1);
    out.a2_dag = pref * (qm.Q2 - step * qm.P2);
    out.a1 = pref * (qm.Q1 + step * qm.P1);
    out.a2 = pref * (qm.Q2 + step * qm.P2);
    return out;
}

GeometryConstraints geometry_constraints(const OscillatorParams& osc,
                                         const ExtensionParamsQ& ep) {
    require_positive_part(osc);
    ep.validate();
    Rational mo = osc.M * osc.Omega;
    return {ep.beta * mo * mo / ep.gamma, -ep.beta * mo / ep.alpha};
}

bool geometry_admissible(const GeometryConstraints& geo, const ExtensionParamsQ& ep,
                         const Rational& rho, const Rational& sigma) {
    return coupled_boson_admissible(rho, sigma, ep, geo.Kg);
}

}  // namespace ncqm
