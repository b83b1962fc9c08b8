#pragma once

#include <complex>
#include <functional>
#include <string>
#include <variant>

#include "group.hpp"
#include "qsqrt.hpp"
#include "weyl.hpp"

namespace ncqm {

/// Labels of the unitary irreducible representations, one variant per orbit
/// family plus the flipped (tilde) and symmetric-gauge forms. The rho/sigma/tau
/// entries are the central characters; c and kappa/delta entries are the orbit
/// representative constants.
struct UirGeneric {
    Rational rho, sigma, tau;
};
struct UirGenericTilde {
    Rational rho, sigma, tau;
};
struct UirTauZero {
    Rational rho, sigma;
};
struct UirSigmaZero {
    Rational rho, tau;
};
struct UirRhoZero {
    Rational sigma, tau;
};
struct UirRhoOnly {
    Rational rho;
};
struct UirTwoDTau {
    Rational c1, c2, tau;
};
struct UirTwoDSigma {
    Rational c3, c4, sigma;
};
struct UirTwoDSigmaTilde {
    Rational c3, c4, sigma;
};
struct UirSurface {
    Rational kappa, delta, rho, zeta;
};
struct UirZeroDim {
    Rational c1, c2, c3, c4;
};
/// Symmetric-gauge representation (unit central labels); needs
/// alpha^2 - beta*gamma > 0.
struct UirSym {};
/// Its adjoint; an anti-homomorphism, used for pointwise unitarity checks.
struct UirSymAdjoint {};

using UirLabel =
    std::variant<UirGeneric, UirGenericTilde, UirTauZero, UirSigmaZero, UirRhoZero,
                 UirRhoOnly, UirTwoDTau, UirTwoDSigma, UirTwoDSigmaTilde, UirSurface,
                 UirZeroDim, UirSym, UirSymAdjoint>;

/// 2 for plane representations, 1 for line representations, 0 for characters.
int uir_arity(const UirLabel& label);
std::string uir_label_name(const UirLabel& label);
/// Enforces the per-family nonzero-ness constraints (throws invalid_argument).
void validate_uir_label(const UirLabel& label, const ExtensionParamsQ& ep);

/// One application of U(g) in affine form: the value at a point x (or (x,y))
/// is exp(i(a0 + ax x + ay y)) * f(x + bx, y + by). Line representations use
/// a0, ax, bx only; characters use a0 only.
template <class F>
struct UirActionT {
    F a0{}, ax{}, ay{}, bx{}, by{};
};
using UirAction = UirActionT<QSqrt>;
using UirActionD = UirActionT<double>;

UirAction uir_action(const UirLabel& label, const GroupElementQ& g,
                     const ExtensionParamsQ& ep);
UirActionD uir_action(const UirLabel& label, const GroupElementD& g,
                      const ExtensionParamsD& ep);

/// Configuration-space form of the four-dimensional rho != 0 families: the
/// tilde representation conjugated by the partial Fourier transform in the
/// second variable (kernel scale hbar = 1/(rho*alpha)). Its generators are the
/// magnetic-gauge operator tables. Accepts Generic, GenericTilde, TauZero,
/// SigmaZero, RhoOnly.
UirAction hat_uir_action(const UirLabel& label, const GroupElementQ& g,
                         const ExtensionParamsQ& ep);
UirActionD hat_uir_action(const UirLabel& label, const GroupElementD& g,
                          const ExtensionParamsD& ep);

std::complex<double> apply_action(const UirActionD& act, const Fn2& f, double x, double y);
std::complex<double> apply_action(const UirActionD& act, const Fn1& f, double x);
UirActionD action_to_double(const UirAction& act);

std::complex<double> apply_uir(const UirLabel& label, const GroupElementQ& g,
                               const ExtensionParamsQ& ep, const Fn2& f, double x, double y);
std::complex<double> apply_uir(const UirLabel& label, const GroupElementQ& g,
                               const ExtensionParamsQ& ep, const Fn1& f, double x);
/// Character value of a 0-dimensional label.
std::complex<double> apply_uir(const UirLabel& label, const GroupElementQ& g,
                               const ExtensionParamsQ& ep);
std::complex<double> apply_uir(const UirLabel& label, const GroupElementD& g,
                               const ExtensionParamsD& ep, const Fn2& f, double x, double y);
std::complex<double> apply_uir(const UirLabel& label, const GroupElementD& g,
                               const ExtensionParamsD& ep, const Fn1& f, double x);

/// The closure U(g)f as a new test function.
Fn2 uir_transform(const UirLabel& label, const GroupElementQ& g, const ExtensionParamsQ& ep,
                  Fn2 f);
Fn1 uir_transform(const UirLabel& label, const GroupElementQ& g, const ExtensionParamsQ& ep,
                  Fn1 f);

/// Involution intertwiners: plane flip (x,y) -> (x,-y), line flip x -> -x.
Fn2 intertwine_T(Fn2 f);
Fn1 intertwine_T(Fn1 f);

/// Closed-form solution of the coset factorization delta(point) * g =
/// h(C,D,E,...) * delta(shifted point). The constructor verifies the
/// factorization by exact 8x8 multiplication and throws logic_error on
/// mismatch (which would indicate an implementation bug).
struct MasterUnknowns {
    Rational A, B, C, D, E, F, G;
};
MasterUnknowns solve_master_4d(const GroupElementQ& g, const Rational& r1, const Rational& s2,
                               const ExtensionParamsQ& ep);
MasterUnknowns solve_master_2d(const GroupElementQ& g, const Rational& r,
                               const ExtensionParamsQ& ep);

enum class GroupDirection { Theta, Phi, Psi, Q1, Q2, P1, P2 };
std::string direction_name(GroupDirection d);
GroupDirection parse_direction(const std::string& name);

/// eta -> (U(eta e_dir) f)(point) for the plain and configuration-space forms.
std::function<std::complex<double>(double)> uir_curve(const UirLabel& label,
                                                      GroupDirection dir,
                                                      const ExtensionParamsD& ep, Fn2 f,
                                                      double x, double y);
std::function<std::complex<double>(double)> uir_curve(const UirLabel& label,
                                                      GroupDirection dir,
                                                      const ExtensionParamsD& ep, Fn1 f,
                                                      double x);
std::function<std::complex<double>(double)> hat_uir_curve(const UirLabel& label,
                                                          GroupDirection dir,
                                                          const ExtensionParamsD& ep, Fn2 f,
                                                          double x, double y);

/// -iC * d/deta curve(eta) at eta = 0 by a central difference of width step.
std::complex<double> numeric_generator(
    const std::function<std::complex<double>(double)>& curve, double C, double step);

ExtensionParamsD params_to_double(const ExtensionParamsQ& ep);
GroupElementD element_to_double(const GroupElementQ& g);

/// Shipped rapidly decaying test functions.
Fn2 gaussian2(double cx = 0, double cy = 0);
Fn1 gaussian1(double c = 0);
/// (x + i y) exp(-(x^2+y^2)/2) and x exp(-x^2/2).
Fn2 polynomial_gaussian2();
Fn1 polynomial_gaussian1();

}  // namespace ncqm
