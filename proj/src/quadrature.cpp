#include "ncqm/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace ncqm {

namespace {

constexpr double kPi = 3.14159265358979323846;

}  // namespace

QuadRule gauss_hermite(int n) {
    if (n < 1) throw std::invalid_argument("quadrature: need at least one node");
    QuadRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    const int half = (n + 1) / 2;
    double z = 0, z1 = 0, pp = 0;
    for (int i = 0; i < half; ++i) {
        // standard initial guesses for the ith largest root
        if (i == 0) {
            z = std::sqrt(2.0 * n + 1) - 1.85575 * std::pow(2.0 * n + 1, -1.0 / 6.0);
        } else if (i == 1) {
            z -= 1.14 * std::pow(static_cast<double>(n), 0.426) / z;
        } else if (i == 2) {
            z = 1.86 * z - 0.86 * rule.nodes[0];
        } else if (i == 3) {
            z = 1.91 * z - 0.91 * rule.nodes[1];
        } else {
            z = 2.0 * z - rule.nodes[static_cast<std::size_t>(i - 2)];
        }
        for (int iter = 0; iter < 100; ++iter) {
            // orthonormal Hermite recurrence, stable for large n
            double p1 = std::pow(kPi, -0.25);
            double p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = z * std::sqrt(2.0 / (j + 1)) * p2 -
                     std::sqrt(static_cast<double>(j) / (j + 1)) * p3;
            }
            pp = std::sqrt(2.0 * n) * p2;
            z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) < 1e-15) break;
        }
        rule.nodes[static_cast<std::size_t>(i)] = z;
        rule.nodes[static_cast<std::size_t>(n - 1 - i)] = -z;
        rule.weights[static_cast<std::size_t>(i)] = 2.0 / (pp * pp);
        rule.weights[static_cast<std::size_t>(n - 1 - i)] = rule.weights[static_cast<std::size_t>(i)];
    }
    return rule;
}

QuadRule gauss_hermite_folded(int n) {
    QuadRule rule = gauss_hermite(n);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        rule.weights[i] *= std::exp(rule.nodes[i] * rule.nodes[i]);
    return rule;
}

QuadRule gauss_legendre(int n, double a, double b) {
    if (n < 1) throw std::invalid_argument("quadrature: need at least one node");
    QuadRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    const int half = (n + 1) / 2;
    const double xm = 0.5 * (b + a), xl = 0.5 * (b - a);
    for (int i = 0; i < half; ++i) {
        double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double z1 = 0, pp = 0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) < 1e-15) break;
        }
        rule.nodes[static_cast<std::size_t>(i)] = xm - xl * z;
        rule.nodes[static_cast<std::size_t>(n - 1 - i)] = xm + xl * z;
        rule.weights[static_cast<std::size_t>(i)] = 2.0 * xl / ((1.0 - z * z) * pp * pp);
        rule.weights[static_cast<std::size_t>(n - 1 - i)] = rule.weights[static_cast<std::size_t>(i)];
    }
    return rule;
}

double norm_l2(const std::function<std::complex<double>(double)>& f, int nodes) {
    QuadRule rule = gauss_hermite_folded(nodes);
    double acc = 0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        acc += rule.weights[i] * std::norm(f(rule.nodes[i]));
    return std::sqrt(acc);
}

double norm_l2(const std::function<std::complex<double>(double, double)>& f, int nodes) {
    QuadRule rule = gauss_hermite_folded(nodes);
    double acc = 0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        for (std::size_t j = 0; j < rule.nodes.size(); ++j)
            acc += rule.weights[i] * rule.weights[j] * std::norm(f(rule.nodes[i], rule.nodes[j]));
    return std::sqrt(acc);
}

}  // namespace ncqm
