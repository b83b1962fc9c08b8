#pragma once

#include <array>
#include <random>
#include <stdexcept>

#include "group.hpp"
#include "matrix.hpp"
#include "rational.hpp"

namespace ncqm {

/// Lie algebra element sum_i x^i X_i in the fixed basis
///   (X_1..X_7) = (Q_1, Q_2, P_1, P_2, Theta, Phi, Psi),
/// where (x^1, x^2) are the p-directions, (x^3, x^4) the q-directions and
/// (x^5, x^6, x^7) the central directions. Nonzero brackets:
///   [P_i, Q_j] = alpha delta_ij Theta, [Q_1, Q_2] = beta Phi,
///   [P_1, P_2] = gamma Psi.
template <class S>
struct AlgebraElement {
    std::array<S, 7> x{S(0), S(0), S(0), S(0), S(0), S(0), S(0)};

    friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
};

using AlgebraElementQ = AlgebraElement<Rational>;

template <class S>
AlgebraElement<S> basis_element(int i) {
    if (i < 1 || i > 7) throw std::invalid_argument("algebra basis index out of range");
    AlgebraElement<S> e;
    e.x[static_cast<std::size_t>(i - 1)] = S(1);
    return e;
}

/// Structure constants; everything lands in the center, so the first four
/// output coordinates are always zero (the algebra is two-step nilpotent).
template <class S>
AlgebraElement<S> bracket(const AlgebraElement<S>& X, const AlgebraElement<S>& Y,
                          const ExtensionParams<S>& ep) {
    ep.validate();
    const auto& x = X.x;
    const auto& y = Y.x;
    AlgebraElement<S> out;
    out.x[4] = ep.alpha * (x[2] * y[0] - x[0] * y[2] + x[3] * y[1] - x[1] * y[3]);
    out.x[5] = ep.beta * (x[0] * y[1] - x[1] * y[0]);
    out.x[6] = ep.gamma * (x[2] * y[3] - x[3] * y[2]);
    return out;
}

/// Strictly upper-triangular 8x8 realization; its commutator reproduces
/// bracket(), which the tests use as the oracle.
template <class S>
SmallMatrix<S, 8> algebra_matrix(const AlgebraElement<S>& X, const ExtensionParams<S>& ep) {
    ep.validate();
    const S half(S(1) / S(2));
    const S a2 = ep.alpha * half, b2 = ep.beta * half, c2 = ep.gamma * half;
    const auto& x = X.x;
    SmallMatrix<S, 8> m;
    m(0, 3) = -a2 * x[0];
    m(0, 4) = -a2 * x[1];
    m(0, 5) = a2 * x[2];
    m(0, 6) = a2 * x[3];
    m(0, 7) = x[4];
    m(1, 5) = -b2 * x[1];
    m(1, 6) = b2 * x[0];
    m(1, 7) = x[5];
    m(2, 3) = -c2 * x[3];
    m(2, 4) = c2 * x[2];
    m(2, 7) = x[6];
    m(3, 7) = x[2];
    m(4, 7) = x[3];
    m(5, 7) = x[0];
    m(6, 7) = x[1];
    return m;
}

/// exp via the terminating matrix series I + N + N^2/2 (N^3 = 0), then
/// pattern-matching group coordinates off the result. For this realization the
/// quadratic term never touches the coordinate slots, so exponential
/// coordinates coincide with the group parametrization.
template <class S>
GroupElement<S> exp_to_group(const AlgebraElement<S>& X, const ExtensionParams<S>& ep) {
    auto n = algebra_matrix(X, ep);
    auto n2 = n * n;
    if (!(n2 * n == SmallMatrix<S, 8>{}))
        throw std::logic_error("algebra exp: series did not terminate at N^3");
    const S half(S(1) / S(2));
    auto e = SmallMatrix<S, 8>::identity() + n + half * n2;
    GroupElement<S> g = from_matrix(e);
    // Cross-check the linear slots too: the (0,3..6) entries of e must agree
    // with to_matrix(g), otherwise the pattern match was ambiguous.
    if (!(to_matrix(g, ep) == e)) throw std::logic_error("algebra exp: pattern match failed");
    return g;
}

inline AlgebraElementQ rand_algebra_element(std::mt19937& rng, long max_num = 9,
                                            long max_den = 9) {
    AlgebraElementQ X;
    for (auto& c : X.x) c = rand_rational(rng, max_num, max_den);
    return X;
}

}  // namespace ncqm
