#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace ncqm {

struct QuadRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss-Hermite rule for weight e^{-x^2} on the real line.
QuadRule gauss_hermite(int n);

/// Gauss-Hermite rule with the weight folded into the coefficients, so that
/// integral f ~= sum W_i f(x_i) for f with Gaussian-type decay.
QuadRule gauss_hermite_folded(int n);

/// Gauss-Legendre rule on [a, b].
QuadRule gauss_legendre(int n, double a, double b);

/// L2 norm of a function on the line / plane via folded Gauss-Hermite.
double norm_l2(const std::function<std::complex<double>(double)>& f, int nodes = 64);
double norm_l2(const std::function<std::complex<double>(double, double)>& f, int nodes = 64);

}  // namespace ncqm
