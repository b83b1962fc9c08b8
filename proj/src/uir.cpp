#include "ncqm/uir.hpp"

#include <cmath>
#include <stdexcept>

namespace ncqm {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

/// Scalar field used for the affine action data: exact radicals over the
/// rational path, plain doubles over the floating path.
template <class S>
struct UField;

template <>
struct UField<Rational> {
    using F = QSqrt;
    static F lift(const Rational& v) { return QSqrt(v); }
    static F sqrt_disc(const Rational& v) { return QSqrt::sqrt_of(v); }
};

template <>
struct UField<double> {
    using F = double;
    static double lift(double v) { return v; }
    static double lift(const Rational& v) { return to_double(v); }
    static double sqrt_disc(double v) { return std::sqrt(v); }
};

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

template <class S>
UirActionT<typename UField<S>::F> action_impl(const UirLabel& label, const GroupElement<S>& g,
                                              const ExtensionParams<S>& ep) {
    using U = UField<S>;
    using F = typename U::F;
    const F th = U::lift(g.theta), ph = U::lift(g.phi), ps = U::lift(g.psi);
    const F q1 = U::lift(g.q[0]), q2 = U::lift(g.q[1]);
    const F p1 = U::lift(g.p[0]), p2 = U::lift(g.p[1]);
    const F al = U::lift(ep.alpha), be = U::lift(ep.beta), ga = U::lift(ep.gamma);
    const F half = U::lift(make_rational(1, 2));
    const F two = U::lift(Rational(2));
    UirActionT<F> act;

    auto generic4 = [&](const Rational& rho, const Rational& sigma, const Rational& tau,
                        bool tilde) {
        const F r = U::lift(rho), s = U::lift(sigma), t = U::lift(tau);
        act.a0 = r * (th + half * al * q1 * p1 - half * al * q2 * p2) +
                 s * (ph - half * be * p1 * p2) + t * (ps + half * ga * q2 * q1);
        act.ax = r * al * p1 + t * ga * q2;
        F c = r * al * q2 + s * be * p1;
        act.ay = tilde ? c : -c;
        act.bx = q1;
        act.by = tilde ? -p2 : p2;
    };

    auto line_sigma = [&](const Rational& c3, const Rational& c4, const Rational& sigma,
                          bool tilde) {
        const F s = U::lift(sigma);
        act.a0 = U::lift(c3) * q1 + U::lift(c4) * q2 + s * (ph - half * be * p1 * p2);
        F m = s * be * p1;
        act.ax = tilde ? m : -m;
        act.bx = tilde ? -p2 : p2;
    };

    auto sym = [&]() {
        const F w = U::sqrt_disc(ep.alpha * ep.alpha - ep.beta * ep.gamma);
        act.a0 = th + ph + ps + half * w * (p1 * q1 + p2 * q2);
        act.ax = al * p1 + (al * (al - w) / be) * q2;
        act.ay = al * p2 - (al * (al - w) / be) * q1;
        act.bx = -(be / (two * al)) * p2 + ((al + w) / (two * al)) * q1;
        act.by = (be / (two * al)) * p1 + ((al + w) / (two * al)) * q2;
    };

    std::visit(
        overloaded{
            [&](const UirGeneric& l) { generic4(l.rho, l.sigma, l.tau, false); },
            [&](const UirGenericTilde& l) { generic4(l.rho, l.sigma, l.tau, true); },
            [&](const UirTauZero& l) { generic4(l.rho, l.sigma, Rational(0), false); },
            [&](const UirSigmaZero& l) { generic4(l.rho, Rational(0), l.tau, false); },
            [&](const UirRhoZero& l) { generic4(Rational(0), l.sigma, l.tau, false); },
            [&](const UirRhoOnly& l) { generic4(l.rho, Rational(0), Rational(0), false); },
            [&](const UirTwoDTau& l) {
                const F t = U::lift(l.tau);
                act.a0 = U::lift(l.c1) * p1 + U::lift(l.c2) * p2 +
                         t * (ps - half * ga * q1 * q2);
                act.ax = -(t * ga * q1);
                act.bx = q2;
            },
            [&](const UirTwoDSigma& l) { line_sigma(l.c3, l.c4, l.sigma, false); },
            [&](const UirTwoDSigmaTilde& l) { line_sigma(l.c3, l.c4, l.sigma, true); },
            [&](const UirSurface& l) {
                const F k = U::lift(l.kappa), d = U::lift(l.delta);
                const F r = U::lift(l.rho), z = U::lift(l.zeta);
                act.a0 = k * q1 + d * q2 +
                         r * (th - half * al * q1 * p1 - half * z * al * al * q1 * q2 / be) +
                         (r / z) * (ph + half * z * al * q2 * p2 + half * be * p1 * p2) +
                         (z * r * al * al / (ga * be)) * ps;
                act.ax = -(r * al * q1) + (r / z) * be * p2;
                act.bx = p1 + z * al * q2 / be;
            },
            [&](const UirZeroDim& l) {
                act.a0 = U::lift(l.c1) * p1 + U::lift(l.c2) * p2 + U::lift(l.c3) * q1 +
                         U::lift(l.c4) * q2;
            },
            [&](const UirSym&) { sym(); },
            [&](const UirSymAdjoint&) {
                // The adjoint of a unitary is its inverse, and the
                // representation property turns that into evaluation at the
                // inverse group element.
                act = action_impl<S>(UirLabel(UirSym{}), inverse(g), ep);
            },
        },
        label);
    return act;
}

template <class S>
UirActionT<typename UField<S>::F> hat_action_impl(const UirLabel& label,
                                                  const GroupElement<S>& g,
                                                  const ExtensionParams<S>& ep) {
    Rational rho(0), sigma(0), tau(0);
    bool supported = true;
    std::visit(overloaded{
                   [&](const UirGeneric& l) { rho = l.rho, sigma = l.sigma, tau = l.tau; },
                   [&](const UirGenericTilde& l) { rho = l.rho, sigma = l.sigma, tau = l.tau; },
                   [&](const UirTauZero& l) { rho = l.rho, sigma = l.sigma; },
                   [&](const UirSigmaZero& l) { rho = l.rho, tau = l.tau; },
                   [&](const UirRhoOnly& l) { rho = l.rho; },
                   [&](const auto&) { supported = false; },
               },
               label);
    require(supported,
            "uir: configuration-space form exists for the rho != 0 plane families only");
    require(rho != 0, "uir: configuration-space form needs rho != 0");

    using U = UField<S>;
    using F = typename U::F;
    const F th = U::lift(g.theta), ph = U::lift(g.phi), ps = U::lift(g.psi);
    const F q1 = U::lift(g.q[0]), q2 = U::lift(g.q[1]);
    const F p1 = U::lift(g.p[0]), p2 = U::lift(g.p[1]);
    const F al = U::lift(ep.alpha), be = U::lift(ep.beta), ga = U::lift(ep.gamma);
    const F half = U::lift(make_rational(1, 2));
    const F r = U::lift(rho), s = U::lift(sigma), t = U::lift(tau);

    // Partial Fourier transform of the flipped representation in the second
    // variable, kernel exp(i s2 r2 / hbar) with hbar = 1/(rho alpha):
    //   phase a' + b r1 + (r2 + hbar c) p2 / hbar,  argument (r1+q1, r2 + hbar c),
    // where b, c are the r1, s2 phase slopes of the flipped form.
    F b = r * al * p1 + t * ga * q2;
    F c = r * al * q2 + s * be * p1;
    UirActionT<F> act;
    act.a0 = r * (th + half * al * q1 * p1 - half * al * q2 * p2) +
             s * (ph - half * be * p1 * p2) + t * (ps + half * ga * q2 * q1) + c * p2;
    act.ax = b;
    act.ay = r * al * p2;
    act.bx = q1;
    act.by = c / (r * al);
    return act;
}

}  // namespace

int uir_arity(const UirLabel& label) {
    return std::visit(
        overloaded{
            [](const UirGeneric&) { return 2; }, [](const UirGenericTilde&) { return 2; },
            [](const UirTauZero&) { return 2; }, [](const UirSigmaZero&) { return 2; },
            [](const UirRhoZero&) { return 2; }, [](const UirRhoOnly&) { return 2; },
            [](const UirTwoDTau&) { return 1; }, [](const UirTwoDSigma&) { return 1; },
            [](const UirTwoDSigmaTilde&) { return 1; }, [](const UirSurface&) { return 1; },
            [](const UirZeroDim&) { return 0; }, [](const UirSym&) { return 2; },
            [](const UirSymAdjoint&) { return 2; }},
        label);
}

std::string uir_label_name(const UirLabel& label) {
    return std::visit(
        overloaded{[](const UirGeneric&) { return "generic"; },
                   [](const UirGenericTilde&) { return "generic-tilde"; },
                   [](const UirTauZero&) { return "tau-zero"; },
                   [](const UirSigmaZero&) { return "sigma-zero"; },
                   [](const UirRhoZero&) { return "rho-zero"; },
                   [](const UirRhoOnly&) { return "rho-only"; },
                   [](const UirTwoDTau&) { return "plane-tau"; },
                   [](const UirTwoDSigma&) { return "plane-sigma"; },
                   [](const UirTwoDSigmaTilde&) { return "plane-sigma-tilde"; },
                   [](const UirSurface&) { return "surface"; },
                   [](const UirZeroDim&) { return "character"; },
                   [](const UirSym&) { return "sym"; },
                   [](const UirSymAdjoint&) { return "sym-adjoint"; }},
        label);
}

void validate_uir_label(const UirLabel& label, const ExtensionParamsQ& ep) {
    ep.validate();
    std::visit(
        overloaded{
            [](const UirGeneric& l) {
                require(l.rho != 0 && l.sigma != 0 && l.tau != 0,
                        "uir: generic label needs rho, sigma, tau all nonzero");
            },
            [](const UirGenericTilde& l) {
                require(l.rho != 0 && l.sigma != 0 && l.tau != 0,
                        "uir: generic label needs rho, sigma, tau all nonzero");
            },
            [](const UirTauZero& l) {
                require(l.rho != 0 && l.sigma != 0, "uir: label needs rho, sigma nonzero");
            },
            [](const UirSigmaZero& l) {
                require(l.rho != 0 && l.tau != 0, "uir: label needs rho, tau nonzero");
            },
            [](const UirRhoZero& l) {
                require(l.sigma != 0 && l.tau != 0, "uir: label needs sigma, tau nonzero");
            },
            [](const UirRhoOnly& l) { require(l.rho != 0, "uir: label needs rho nonzero"); },
            [](const UirTwoDTau& l) { require(l.tau != 0, "uir: label needs tau nonzero"); },
            [](const UirTwoDSigma& l) {
                require(l.sigma != 0, "uir: label needs sigma nonzero");
            },
            [](const UirTwoDSigmaTilde& l) {
                require(l.sigma != 0, "uir: label needs sigma nonzero");
            },
            [](const UirSurface& l) {
                require(l.rho != 0 && l.zeta != 0, "uir: surface label needs rho, zeta nonzero");
            },
            [](const UirZeroDim&) {},
            [&](const UirSym&) {
                require(ep.alpha * ep.alpha - ep.beta * ep.gamma > 0,
                        "uir: symmetric-gauge form needs alpha^2 > beta*gamma");
            },
            [&](const UirSymAdjoint&) {
                require(ep.alpha * ep.alpha - ep.beta * ep.gamma > 0,
                        "uir: symmetric-gauge form needs alpha^2 > beta*gamma");
            }},
        label);
}

UirAction uir_action(const UirLabel& label, const GroupElementQ& g,
                     const ExtensionParamsQ& ep) {
    validate_uir_label(label, ep);
    return action_impl(label, g, ep);
}

UirActionD uir_action(const UirLabel& label, const GroupElementD& g,
                      const ExtensionParamsD& ep) {
    return action_impl(label, g, ep);
}

UirAction hat_uir_action(const UirLabel& label, const GroupElementQ& g,
                         const ExtensionParamsQ& ep) {
    ep.validate();
    return hat_action_impl(label, g, ep);
}

UirActionD hat_uir_action(const UirLabel& label, const GroupElementD& g,
                          const ExtensionParamsD& ep) {
    return hat_action_impl(label, g, ep);
}

std::complex<double> apply_action(const UirActionD& act, const Fn2& f, double x, double y) {
    std::complex<double> phase = std::exp(std::complex<double>(0.0, act.a0 + act.ax * x + act.ay * y));
    return phase * f(x + act.bx, y + act.by);
}

std::complex<double> apply_action(const UirActionD& act, const Fn1& f, double x) {
    std::complex<double> phase = std::exp(std::complex<double>(0.0, act.a0 + act.ax * x));
    return phase * f(x + act.bx);
}

UirActionD action_to_double(const UirAction& act) {
    return {act.a0.to_double(), act.ax.to_double(), act.ay.to_double(), act.bx.to_double(),
            act.by.to_double()};
}

std::complex<double> apply_uir(const UirLabel& label, const GroupElementQ& g,
                               const ExtensionParamsQ& ep, const Fn2& f, double x, double y) {
    require(uir_arity(label) == 2, "uir: label does not act on the plane");
    return apply_action(action_to_double(uir_action(label, g, ep)), f, x, y);
}

std::complex<double> apply_uir(const UirLabel& label, const GroupElementQ& g,
                               const ExtensionParamsQ& ep, const Fn1& f, double x) {
    require(uir_arity(label) == 1, "uir: label does not act on the line");
    return apply_action(action_to_double(uir_action(label, g, ep)), f, x);
}

std::complex<double> apply_uir(const UirLabel& label, const GroupElementQ& g,
                               const ExtensionParamsQ& ep) {
    require(uir_arity(label) == 0, "uir: label is not a character");
    UirAction act = uir_action(label, g, ep);
    return std::exp(std::complex<double>(0.0, act.a0.to_double()));
}

std::complex<double> apply_uir(const UirLabel& label, const GroupElementD& g,
                               const ExtensionParamsD& ep, const Fn2& f, double x, double y) {
    require(uir_arity(label) == 2, "uir: label does not act on the plane");
    return apply_action(uir_action(label, g, ep), f, x, y);
}

std::complex<double> apply_uir(const UirLabel& label, const GroupElementD& g,
                               const ExtensionParamsD& ep, const Fn1& f, double x) {
    require(uir_arity(label) == 1, "uir: label does not act on the line");
    return apply_action(uir_action(label, g, ep), f, x);
}

Fn2 uir_transform(const UirLabel& label, const GroupElementQ& g, const ExtensionParamsQ& ep,
                  Fn2 f) {
    require(uir_arity(label) == 2, "uir: label does not act on the plane");
    UirActionD act = action_to_double(uir_action(label, g, ep));
    return [act, f = std::move(f)](double x, double y) { return apply_action(act, f, x, y); };
}

Fn1 uir_transform(const UirLabel& label, const GroupElementQ& g, const ExtensionParamsQ& ep,
                  Fn1 f) {
    require(uir_arity(label) == 1, "uir: label does not act on the line");
    UirActionD act = action_to_double(uir_action(label, g, ep));
    return [act, f = std::move(f)](double x) { return apply_action(act, f, x); };
}

Fn2 intertwine_T(Fn2 f) {
    return [f = std::move(f)](double x, double y) { return f(x, -y); };
}

Fn1 intertwine_T(Fn1 f) {
    return [f = std::move(f)](double x) { return f(-x); };
}

namespace {

GroupElementQ section_plane(const Rational& r1, const Rational& s2) {
    GroupElementQ d;
    d.q[0] = r1;
    d.p[1] = s2;
    return d;
}

GroupElementQ subgroup_plane(const Rational& th, const Rational& ph, const Rational& ps,
                             const Rational& p1, const Rational& q2) {
    GroupElementQ h;
    h.theta = th;
    h.phi = ph;
    h.psi = ps;
    h.p[0] = p1;
    h.q[1] = q2;
    return h;
}

GroupElementQ section_line(const Rational& r) {
    GroupElementQ d;
    d.q[1] = r;
    return d;
}

GroupElementQ subgroup_line(const Rational& th, const Rational& ph, const Rational& ps,
                            const Rational& p1, const Rational& p2, const Rational& q1) {
    GroupElementQ h;
    h.theta = th;
    h.phi = ph;
    h.psi = ps;
    h.p = {p1, p2};
    h.q[0] = q1;
    return h;
}

}  // namespace

MasterUnknowns solve_master_4d(const GroupElementQ& g, const Rational& r1, const Rational& s2,
                               const ExtensionParamsQ& ep) {
    ep.validate();
    const Rational half = make_rational(1, 2);
    MasterUnknowns u;
    u.A = g.p[0];
    u.B = g.q[1];
    u.G = r1 + g.q[0];
    u.F = s2 + g.p[1];
    u.C = g.theta - ep.alpha * g.q[1] * s2 + ep.alpha * g.p[0] * r1 +
          half * ep.alpha * g.q[0] * g.p[0] - half * ep.alpha * g.q[1] * g.p[1];
    u.D = g.phi - ep.beta * g.p[0] * s2 - half * ep.beta * g.p[0] * g.p[1];
    u.E = g.psi + ep.gamma * g.q[1] * r1 + half * ep.gamma * g.q[0] * g.q[1];
    auto lhs = to_matrix(section_plane(r1, s2), ep) * to_matrix(g, ep);
    auto rhs = to_matrix(subgroup_plane(u.C, u.D, u.E, u.A, u.B), ep) *
               to_matrix(section_plane(u.G, u.F), ep);
    if (!(lhs == rhs)) throw std::logic_error("uir: plane coset factorization failed");
    return u;
}

MasterUnknowns solve_master_2d(const GroupElementQ& g, const Rational& r,
                               const ExtensionParamsQ& ep) {
    ep.validate();
    const Rational half = make_rational(1, 2);
    MasterUnknowns u;
    u.A = g.p[0];
    u.B = g.p[1];
    u.C = g.q[0];
    u.G = g.q[1] + r;
    u.D = g.theta + ep.alpha * g.p[1] * r + half * ep.alpha * g.p[1] * g.q[1];
    u.E = g.phi;
    u.F = g.psi - ep.gamma * g.q[0] * r - half * ep.gamma * g.q[0] * g.q[1];
    auto lhs = to_matrix(section_line(r), ep) * to_matrix(g, ep);
    auto rhs = to_matrix(subgroup_line(u.D, u.E, u.F, u.A, u.B, u.C), ep) *
               to_matrix(section_line(u.G), ep);
    if (!(lhs == rhs)) throw std::logic_error("uir: line coset factorization failed");
    return u;
}

std::string direction_name(GroupDirection d) {
    switch (d) {
        case GroupDirection::Theta: return "theta";
        case GroupDirection::Phi: return "phi";
        case GroupDirection::Psi: return "psi";
        case GroupDirection::Q1: return "q1";
        case GroupDirection::Q2: return "q2";
        case GroupDirection::P1: return "p1";
        case GroupDirection::P2: return "p2";
    }
    throw std::logic_error("uir: unknown direction");
}

GroupDirection parse_direction(const std::string& name) {
    for (GroupDirection d : {GroupDirection::Theta, GroupDirection::Phi, GroupDirection::Psi,
                             GroupDirection::Q1, GroupDirection::Q2, GroupDirection::P1,
                             GroupDirection::P2})
        if (direction_name(d) == name) return d;
    throw std::invalid_argument("uir: unknown direction '" + name + "'");
}

namespace {

GroupElementD one_parameter(GroupDirection dir, double eta) {
    GroupElementD g;
    switch (dir) {
        case GroupDirection::Theta: g.theta = eta; break;
        case GroupDirection::Phi: g.phi = eta; break;
        case GroupDirection::Psi: g.psi = eta; break;
        case GroupDirection::Q1: g.q[0] = eta; break;
        case GroupDirection::Q2: g.q[1] = eta; break;
        case GroupDirection::P1: g.p[0] = eta; break;
        case GroupDirection::P2: g.p[1] = eta; break;
    }
    return g;
}

}  // namespace

std::function<std::complex<double>(double)> uir_curve(const UirLabel& label, GroupDirection dir,
                                                      const ExtensionParamsD& ep, Fn2 f,
                                                      double x, double y) {
    require(uir_arity(label) == 2, "uir: label does not act on the plane");
    return [=, f = std::move(f)](double eta) {
        return apply_uir(label, one_parameter(dir, eta), ep, f, x, y);
    };
}

std::function<std::complex<double>(double)> uir_curve(const UirLabel& label, GroupDirection dir,
                                                      const ExtensionParamsD& ep, Fn1 f,
                                                      double x) {
    require(uir_arity(label) == 1, "uir: label does not act on the line");
    return [=, f = std::move(f)](double eta) {
        return apply_uir(label, one_parameter(dir, eta), ep, f, x);
    };
}

std::function<std::complex<double>(double)> hat_uir_curve(const UirLabel& label,
                                                          GroupDirection dir,
                                                          const ExtensionParamsD& ep, Fn2 f,
                                                          double x, double y) {
    return [=, f = std::move(f)](double eta) {
        return apply_action(hat_uir_action(label, one_parameter(dir, eta), ep), f, x, y);
    };
}

std::complex<double> numeric_generator(
    const std::function<std::complex<double>(double)>& curve, double C, double step) {
    std::complex<double> slope = (curve(step) - curve(-step)) / (2.0 * step);
    return std::complex<double>(0.0, -C) * slope;
}

ExtensionParamsD params_to_double(const ExtensionParamsQ& ep) {
    return {to_double(ep.alpha), to_double(ep.beta), to_double(ep.gamma)};
}

GroupElementD element_to_double(const GroupElementQ& g) {
    GroupElementD out;
    out.theta = to_double(g.theta);
    out.phi = to_double(g.phi);
    out.psi = to_double(g.psi);
    out.q = {to_double(g.q[0]), to_double(g.q[1])};
    out.p = {to_double(g.p[0]), to_double(g.p[1])};
    return out;
}

Fn2 gaussian2(double cx, double cy) {
    return [cx, cy](double x, double y) {
        return std::complex<double>(std::exp(-0.5 * ((x - cx) * (x - cx) + (y - cy) * (y - cy))),
                                    0.0);
    };
}

Fn1 gaussian1(double c) {
    return [c](double x) { return std::complex<double>(std::exp(-0.5 * (x - c) * (x - c)), 0.0); };
}

Fn2 polynomial_gaussian2() {
    return [](double x, double y) {
        return std::complex<double>(x, y) * std::exp(-0.5 * (x * x + y * y));
    };
}

Fn1 polynomial_gaussian1() {
    return [](double x) { return std::complex<double>(x * std::exp(-0.5 * x * x), 0.0); };
}

}  // namespace ncqm
