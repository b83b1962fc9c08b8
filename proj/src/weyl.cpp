#include "ncqm/weyl.hpp"

#include <cmath>

namespace ncqm {

namespace {

std::complex<double> partial2(const Fn2& f, double x, double y, int cx, int cy, double h) {
    if (cx > 0)
        return (partial2(f, x + h / 2, y, cx - 1, cy, h) -
                partial2(f, x - h / 2, y, cx - 1, cy, h)) /
               h;
    if (cy > 0)
        return (partial2(f, x, y + h / 2, cx, cy - 1, h) -
                partial2(f, x, y - h / 2, cx, cy - 1, h)) /
               h;
    return f(x, y);
}

std::complex<double> partial1(const Fn1& f, double x, int c, double h) {
    if (c > 0) return (partial1(f, x + h / 2, c - 1, h) - partial1(f, x - h / 2, c - 1, h)) / h;
    return f(x);
}

}  // namespace

WeylPolyD to_numeric(const WeylPolyX& p) {
    return p.map_coeffs([](const CSqrt& c) { return c.to_complex(); });
}

double max_coeff_distance(const WeylPolyD& a, const WeylPolyD& b) {
    if (a.alphabet() != b.alphabet()) throw std::invalid_argument("weyl: mixed alphabets");
    double worst = 0.0;
    auto scan = [&](const WeylPolyD& lhs, const WeylPolyD& rhs) {
        for (const auto& [e, c] : lhs.terms()) {
            auto it = rhs.terms().find(e);
            std::complex<double> other = it == rhs.terms().end() ? std::complex<double>{} : it->second;
            worst = std::max(worst, std::abs(c - other));
        }
    };
    scan(a, b);
    scan(b, a);
    return worst;
}

std::string alphabet_name(Alphabet a) {
    switch (a) {
        case Alphabet::Real2D: return "real2d";
        case Alphabet::Real1D: return "real1d";
        case Alphabet::ComplexZ: return "complexz";
    }
    return "?";
}

std::complex<double> apply_symbol(const WeylPolyD& p, const Fn2& f, double x, double y,
                                  double step) {
    if (p.alphabet() != Alphabet::Real2D)
        throw std::invalid_argument("weyl: apply_symbol(f(x,y)) needs the 2-D real alphabet");
    std::complex<double> acc = 0.0;
    for (const auto& [e, c] : p.terms())
        acc += c * std::pow(x, e[0]) * std::pow(y, e[1]) * partial2(f, x, y, e[2], e[3], step);
    return acc;
}

std::complex<double> apply_symbol(const WeylPolyD& p, const Fn1& f, double x, double step) {
    if (p.alphabet() != Alphabet::Real1D)
        throw std::invalid_argument("weyl: apply_symbol(f(x)) needs the 1-D real alphabet");
    std::complex<double> acc = 0.0;
    for (const auto& [e, c] : p.terms())
        acc += c * std::pow(x, e[0]) * partial1(f, x, e[2], step);
    return acc;
}

}  // namespace ncqm
