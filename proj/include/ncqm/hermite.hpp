#pragma once

#include <complex>
#include <map>
#include <string>
#include <utility>

#include "coadjoint.hpp"
#include "generators.hpp"
#include "qsqrt.hpp"
#include "weyl.hpp"

namespace ncqm {

/// Polynomial in z and conj(z), the value type for complex Hermite
/// polynomials on the Gaussian-weighted plane. Keys are (power of z,
/// power of zbar); zero coefficients are never stored.
template <class C>
class BiPolyT {
public:
    using Ops = WeylCoeffOps<C>;
    using Key = std::pair<int, int>;

    BiPolyT() = default;

    static BiPolyT one() { return constant(C(1)); }

    static BiPolyT constant(const C& c) {
        BiPolyT p;
        p.add_term(0, 0, c);
        return p;
    }

    static BiPolyT monomial(int m, int n, const C& c) {
        BiPolyT p;
        p.add_term(m, n, c);
        return p;
    }

    void add_term(int m, int n, const C& c) {
        if (m < 0 || n < 0) throw std::invalid_argument("bipoly: negative exponent");
        if (Ops::is_zero(c)) return;
        auto it = terms_.find({m, n});
        if (it == terms_.end()) {
            terms_.emplace(Key{m, n}, c);
        } else {
            it->second += c;
            if (Ops::is_zero(it->second)) terms_.erase(it);
        }
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, C>& terms() const { return terms_; }

    BiPolyT operator-() const {
        BiPolyT r;
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
        return r;
    }

    BiPolyT& operator+=(const BiPolyT& o) {
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
        return *this;
    }
    BiPolyT& operator-=(const BiPolyT& o) {
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
        return *this;
    }

    friend BiPolyT operator+(BiPolyT a, const BiPolyT& b) { return a += b; }
    friend BiPolyT operator-(BiPolyT a, const BiPolyT& b) { return a -= b; }

    friend BiPolyT operator*(const C& s, const BiPolyT& p) {
        BiPolyT r;
        for (const auto& [k, c] : p.terms_) r.add_term(k.first, k.second, s * c);
        return r;
    }

    friend bool operator==(const BiPolyT& a, const BiPolyT& b) { return a.terms_ == b.terms_; }

    std::string str() const;

private:
    std::map<Key, C> terms_;
};

using BiPoly = BiPolyT<CSqrt>;
using BiPolyD = BiPolyT<std::complex<double>>;

BiPolyD to_numeric(const BiPoly& p);
double max_coeff_distance(const BiPolyD& a, const BiPolyD& b);
std::complex<double> eval(const BiPolyD& p, std::complex<double> z);

/// Ladder operators on the Gaussian-weighted plane as symbols over the
/// complex alphabet (z, zbar, dz, dzbar):
///   a1 = dzbar, a1dag = zbar - dz, a2 = dz, a2dag = z - dzbar.
/// Each adjoint pair satisfies [a, adag] = 1 and the two pairs commute.
WeylPolyX ladder_a1();
WeylPolyX ladder_a1_dag();
WeylPolyX ladder_a2();
WeylPolyX ladder_a2_dag();

/// Action of a complex-alphabet symbol on a polynomial; derivatives act
/// exactly on monomials.
BiPoly apply_complex_symbol(const WeylPolyX& op, const BiPoly& f);
BiPolyD apply_complex_symbol(const WeylPolyD& op, const BiPolyD& f);

/// Complex Hermite polynomial H_{n,k} via the explicit double-factorial sum.
BiPoly hermite_nk(int n, int k);
/// Same polynomial from (a1dag)^n (a2dag)^k / sqrt(n! k!) applied to 1.
BiPoly hermite_nk_ladder(int n, int k);
/// Same polynomial from the Gaussian-conjugated derivative form
/// (-1)^{n+k}/sqrt(n! k!) e^{|z|^2} dz^n dzbar^k e^{-|z|^2}.
BiPoly hermite_nk_rodrigues(int n, int k);

/// Inner product on L^2(C, e^{-|z|^2} dx dy / pi) through the exact monomial
/// moment rule: <z^m zbar^n, z^c zbar^d> = (n+c)! when n+c = m+d, else 0.
CSqrt gauss_inner(const BiPoly& P, const BiPoly& R);
std::complex<double> gauss_inner(const BiPolyD& P, const BiPolyD& R);
/// Validation oracle for the moment rule: polar-grid Gauss-Legendre
/// quadrature of conj(P) R e^{-|z|^2} over the plane.
std::complex<double> gauss_inner_quadrature(const BiPolyD& P, const BiPolyD& R, int nodes = 128);

/// Oscillator data for the deformed ladder construction: the phase-space
/// constants together with a mass and an angular frequency.
struct OscillatorParams {
    Rational hbar{1};
    Rational vartheta{0};
    Rational Bcal{0};
    Rational M{1};
    Rational Omega{1};

    GaugeParams gauge() const { return {hbar, vartheta, Bcal}; }
    Rational discriminant() const { return hbar * hbar - Bcal * vartheta; }
    /// True when vartheta = Bcal / (M Omega)^2, the coupling that keeps the
    /// two deformed bosons independent.
    bool independence_constraint() const;
    /// vartheta M Omega / hbar, constrained to (0, 1] for the polar family.
    Rational window_ratio() const { return vartheta * M * Omega / hbar; }
    bool in_window() const;
    /// hbar, M, Omega positive and positive discriminant.
    void validate() const;
};

/// nu = (hbar + sqrt(hbar^2 - Bcal vartheta)) / (2 hbar), the mixing weight
/// of the deformed creation operators.
QSqrt oscillator_nu(const OscillatorParams& osc);
/// m omega = 2 hbar M Omega / (hbar + sqrt(hbar^2 - Bcal vartheta)), the
/// effective mass-frequency product of the auxiliary standard oscillator.
QSqrt oscillator_m_omega(const OscillatorParams& osc);

/// 2x2 complex matrix mixing the two creation operators,
/// a1gdag = g11 a1dag + g21 a2dag and a2gdag = g12 a1dag + g22 a2dag.
struct DeformMatrix {
    CSqrt g11, g12, g21, g22;

    CSqrt det() const { return g11 * g22 - g12 * g21; }
    friend bool operator==(const DeformMatrix&, const DeformMatrix&) = default;
};

struct DeformMatrixD {
    std::complex<double> g11, g12, g21, g22;

    std::complex<double> det() const { return g11 * g22 - g12 * g21; }
};

DeformMatrixD to_numeric(const DeformMatrix& g);

DeformMatrix deform_identity();
/// [[sqrt(nu), i sqrt(1-nu)], [-i sqrt(1-nu), sqrt(nu)]] for nu in (1/2, 1].
DeformMatrix deform_matrix_sym(const Rational& nu);
/// The admissible polar family
///   [[r e^{i kappa},            sqrt(1-r^2) e^{i(kappa+eps)}],
///    [sqrt(1-r^2) e^{i delta}, -r e^{i(delta-eps)}]]
/// with eps(r) = arcsin(vartheta M Omega / (2 hbar r sqrt(1-r^2))); r must
/// keep the arcsin argument inside [-1, 1], which together with the window
/// ratio in (0, 1] pins r to a band around 1/sqrt(2).
DeformMatrixD deform_matrix_polar(double r, double kappa, double delta,
                                  const OscillatorParams& osc);
/// The matrix (gdag)^{-1} generating the biorthogonal dual polynomials.
DeformMatrix dual_matrix(const DeformMatrix& g);
DeformMatrixD dual_matrix(const DeformMatrixD& g);

/// Deformed ladder symbols over the complex alphabet; the annihilation
/// operators are the formal adjoints (conjugated coefficients on a1, a2).
struct DeformedLadder {
    WeylPolyX a1{Alphabet::ComplexZ}, a2{Alphabet::ComplexZ};
    WeylPolyX a1_dag{Alphabet::ComplexZ}, a2_dag{Alphabet::ComplexZ};
};
struct DeformedLadderD {
    WeylPolyD a1{Alphabet::ComplexZ}, a2{Alphabet::ComplexZ};
    WeylPolyD a1_dag{Alphabet::ComplexZ}, a2_dag{Alphabet::ComplexZ};
};

DeformedLadder deformed_ladder(const DeformMatrix& g);
DeformedLadderD deformed_ladder(const DeformMatrixD& g);

/// A mixing matrix is admissible when the deformed quadruple still closes on
/// a noncommutative phase-space algebra with the same hbar: the commutators
/// [ai^g, ajdag^g] = (gdag g)_{ij} must have unit diagonal and purely
/// imaginary off-diagonal part.
bool check_admissible(const DeformMatrix& g);
bool check_admissible(const DeformMatrixD& g, double tol = 1e-9);

/// H^g_{n,k} = (a1gdag)^n (a2gdag)^k / sqrt(n! k!) applied to 1.
BiPoly deformed_hermite(const DeformMatrix& g, int n, int k);
BiPolyD deformed_hermite(const DeformMatrixD& g, int n, int k);
/// Dual family built from (gdag)^{-1}; biorthogonal to the primary family.
BiPoly dual_deformed_hermite(const DeformMatrix& g, int n, int k);
BiPolyD dual_deformed_hermite(const DeformMatrixD& g, int n, int k);

/// Deformed creation and annihilation operators of the coupled oscillator,
/// realized over the symmetric-gauge position/momentum quadruple:
///   ai^nc(dag) = sqrt(M Omega / 2 hbar) (Qhat_i -+ (i / M Omega) Phat_i).
/// The zero-discriminant boundary is accepted; there the two creation
/// operators become proportional and the construction degenerates.
struct NcLadder {
    WeylPolyX a1{Alphabet::Real2D}, a2{Alphabet::Real2D};
    WeylPolyX a1_dag{Alphabet::Real2D}, a2_dag{Alphabet::Real2D};
};

NcLadder nc_ladder(const OscillatorParams& osc);

/// Standard oscillator ladder built on the plain Schroedinger quadruple with
/// the effective m omega; requires m omega / (2 hbar) to be rational so the
/// prefactor stays one square root deep.
NcLadder standard_ladder(const OscillatorParams& osc);

/// Representation-side consequences of the independence constraint.
struct GeometryConstraints {
    Rational Kg;       // beta (M Omega)^2 / gamma
    Rational zeta_ho;  // -beta M Omega / alpha

    Rational tau_of_sigma(const Rational& sigma) const { return Kg * sigma; }
};

GeometryConstraints geometry_constraints(const OscillatorParams& osc,
                                         const ExtensionParamsQ& ep);
/// (rho, sigma) pairs compatible with the coupled oscillator: opposite signs
/// and rho >= -sigma beta M Omega / alpha.
bool geometry_admissible(const GeometryConstraints& geo, const ExtensionParamsQ& ep,
                         const Rational& rho, const Rational& sigma);

template <class C>
std::string BiPolyT<C>::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
        if (!out.empty()) out += " + ";
        std::string coeff;
        if constexpr (std::is_same_v<C, CSqrt>)
            coeff = c.str();
        else
            coeff = "(" + std::to_string(c.real()) + "," + std::to_string(c.imag()) + ")";
        out += "[" + coeff + "]";
        for (int rep = 0; rep < k.first; ++rep) out += " z";
        for (int rep = 0; rep < k.second; ++rep) out += " zb";
    }
    return out;
}

}  // namespace ncqm
