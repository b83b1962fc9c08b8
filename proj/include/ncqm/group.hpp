#pragma once

#include <array>
#include <random>
#include <stdexcept>

#include "matrix.hpp"
#include "rational.hpp"

namespace ncqm {

/// Central-extension strengths. All three must be positive; each operation
/// takes them explicitly, nothing is stored globally.
template <class S>
struct ExtensionParams {
    S alpha, beta, gamma;

    void validate() const {
        if (!(alpha > S(0) && beta > S(0) && gamma > S(0)))
            throw std::invalid_argument("extension params: alpha, beta, gamma must be > 0");
    }
};

using ExtensionParamsQ = ExtensionParams<Rational>;
using ExtensionParamsD = ExtensionParams<double>;

/// Group element (theta, phi, psi, q, p): a translation (q, p) of R^4 together
/// with three central coordinates.
template <class S>
struct GroupElement {
    S theta{0}, phi{0}, psi{0};
    std::array<S, 2> q{S(0), S(0)};
    std::array<S, 2> p{S(0), S(0)};

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

using GroupElementQ = GroupElement<Rational>;
using GroupElementD = GroupElement<double>;

template <class S>
GroupElement<S> group_identity() {
    return {};
}

namespace detail {
template <class S>
S dot2(const std::array<S, 2>& a, const std::array<S, 2>& b) {
    return a[0] * b[0] + a[1] * b[1];
}
template <class S>
S wedge2(const std::array<S, 2>& a, const std::array<S, 2>& b) {
    return a[0] * b[1] - a[1] * b[0];
}
}  // namespace detail

/// Group law: translations add, the central coordinates pick up the three
/// antisymmetric cocycles
///   theta'' = theta + theta' + (alpha/2) (<q, p'> - <p, q'>)
///   phi''   = phi + phi' + (beta/2) (p ^ p')
///   psi''   = psi + psi' + (gamma/2) (q ^ q')
template <class S>
GroupElement<S> compose(const GroupElement<S>& g, const GroupElement<S>& h,
                        const ExtensionParams<S>& ep) {
    ep.validate();
    const S half(S(1) / S(2));
    GroupElement<S> out;
    out.theta = g.theta + h.theta +
                ep.alpha * half * (detail::dot2(g.q, h.p) - detail::dot2(g.p, h.q));
    out.phi = g.phi + h.phi + ep.beta * half * detail::wedge2(g.p, h.p);
    out.psi = g.psi + h.psi + ep.gamma * half * detail::wedge2(g.q, h.q);
    out.q = {g.q[0] + h.q[0], g.q[1] + h.q[1]};
    out.p = {g.p[0] + h.p[0], g.p[1] + h.p[1]};
    return out;
}

/// The cocycles vanish on (g, g^{-1}), so the inverse is plain negation.
template <class S>
GroupElement<S> inverse(const GroupElement<S>& g) {
    GroupElement<S> out;
    out.theta = -g.theta;
    out.phi = -g.phi;
    out.psi = -g.psi;
    out.q = {-g.q[0], -g.q[1]};
    out.p = {-g.p[0], -g.p[1]};
    return out;
}

/// Faithful 8x8 unipotent realization; matrix product reproduces the group
/// law, so it doubles as the independent oracle for compose().
template <class S>
SmallMatrix<S, 8> to_matrix(const GroupElement<S>& g, const ExtensionParams<S>& ep) {
    ep.validate();
    const S half(S(1) / S(2));
    const S a2 = ep.alpha * half, b2 = ep.beta * half, c2 = ep.gamma * half;
    auto m = SmallMatrix<S, 8>::identity();
    m(0, 3) = -a2 * g.p[0];
    m(0, 4) = -a2 * g.p[1];
    m(0, 5) = a2 * g.q[0];
    m(0, 6) = a2 * g.q[1];
    m(0, 7) = g.theta;
    m(1, 5) = -b2 * g.p[1];
    m(1, 6) = b2 * g.p[0];
    m(1, 7) = g.phi;
    m(2, 3) = -c2 * g.q[1];
    m(2, 4) = c2 * g.q[0];
    m(2, 7) = g.psi;
    m(3, 7) = g.q[0];
    m(4, 7) = g.q[1];
    m(5, 7) = g.p[0];
    m(6, 7) = g.p[1];
    return m;
}

/// Reads the coordinates back off a matrix in the image of to_matrix.
template <class S>
GroupElement<S> from_matrix(const SmallMatrix<S, 8>& m) {
    GroupElement<S> g;
    g.theta = m(0, 7);
    g.phi = m(1, 7);
    g.psi = m(2, 7);
    g.q = {m(3, 7), m(4, 7)};
    g.p = {m(5, 7), m(6, 7)};
    return g;
}

inline GroupElementQ rand_group_element(std::mt19937& rng, long max_num = 9, long max_den = 9) {
    GroupElementQ g;
    g.theta = rand_rational(rng, max_num, max_den);
    g.phi = rand_rational(rng, max_num, max_den);
    g.psi = rand_rational(rng, max_num, max_den);
    g.q = {rand_rational(rng, max_num, max_den), rand_rational(rng, max_num, max_den)};
    g.p = {rand_rational(rng, max_num, max_den), rand_rational(rng, max_num, max_den)};
    return g;
}

}  // namespace ncqm
