#pragma once

#include <array>
#include <complex>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>

#include "qsqrt.hpp"
#include "rational.hpp"

namespace ncqm {

/// Variable alphabets for differential-operator symbols. Exponent slots are
/// fixed as (pos1, pos2, deriv1, deriv2):
///   Real2D:   (r1, r2, d/dr1, d/dr2)
///   Real1D:   (r, -, d/dr, -) with the second position/derivative unused
///   ComplexZ: (z, zbar, d/dz, d/dzbar)
enum class Alphabet { Real2D, Real1D, ComplexZ };

template <class C>
struct WeylCoeffOps;

template <>
struct WeylCoeffOps<CSqrt> {
    static CSqrt from_rational(const Rational& r) { return CSqrt(QSqrt(r)); }
    static bool is_zero(const CSqrt& c) { return c.is_zero(); }
};

template <>
struct WeylCoeffOps<std::complex<double>> {
    static std::complex<double> from_rational(const Rational& r) { return {to_double(r), 0.0}; }
    static bool is_zero(const std::complex<double>& c) { return c == std::complex<double>{}; }
};

/// Element of the Weyl algebra in normal order: positions left of
/// derivatives, sum of coeff * pos1^a pos2^b deriv1^c deriv2^d. The product
/// commutes derivatives past positions with the full Leibniz cascade, so the
/// representation stays canonical.
template <class C>
class WeylPoly {
public:
    using Exponents = std::array<int, 4>;
    using Ops = WeylCoeffOps<C>;

    explicit WeylPoly(Alphabet a) : alphabet_(a) {}

    static WeylPoly zero(Alphabet a) { return WeylPoly(a); }

    static WeylPoly constant(Alphabet a, const C& c) {
        WeylPoly p(a);
        p.add_term({0, 0, 0, 0}, c);
        return p;
    }

    static WeylPoly one(Alphabet a) { return constant(a, C(1)); }

    static WeylPoly monomial(Alphabet a, const Exponents& e, const C& c) {
        WeylPoly p(a);
        p.add_term(e, c);
        return p;
    }

    /// Multiplication symbol for position index i (1-based).
    static WeylPoly position(Alphabet a, int i) {
        check_index(a, i);
        Exponents e{0, 0, 0, 0};
        e[static_cast<std::size_t>(i - 1)] = 1;
        return monomial(a, e, C(1));
    }

    /// Derivative symbol for index i (1-based).
    static WeylPoly deriv(Alphabet a, int i) {
        check_index(a, i);
        Exponents e{0, 0, 0, 0};
        e[static_cast<std::size_t>(i + 1)] = 1;
        return monomial(a, e, C(1));
    }

    Alphabet alphabet() const { return alphabet_; }
    const std::map<Exponents, C>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0, 0, 0});
    }

    C constant_value() const {
        if (terms_.empty()) return C(0);
        if (!is_constant()) throw std::domain_error("weyl: symbol is not a constant");
        return terms_.begin()->second;
    }

    WeylPoly operator-() const {
        WeylPoly out(alphabet_);
        for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
        return out;
    }

    WeylPoly& operator+=(const WeylPoly& o) {
        check_same(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    WeylPoly& operator-=(const WeylPoly& o) { return *this += -o; }

    friend WeylPoly operator+(WeylPoly a, const WeylPoly& b) { return a += b; }
    friend WeylPoly operator-(WeylPoly a, const WeylPoly& b) { return a -= b; }

    friend WeylPoly operator*(const C& s, const WeylPoly& p) {
        WeylPoly out(p.alphabet_);
        for (const auto& [e, c] : p.terms_) out.add_term(e, s * c);
        return out;
    }

    /// Normal-ordered product: deriv^c pos^e = sum_k C(c,k) e!/(e-k)!
    /// pos^(e-k) deriv^(c-k), independently in each variable pair.
    friend WeylPoly operator*(const WeylPoly& a, const WeylPoly& b) {
        a.check_same(b);
        WeylPoly out(a.alphabet_);
        for (const auto& [e1, c1] : a.terms_)
            for (const auto& [e2, c2] : b.terms_) {
                for (int k1 = 0; k1 <= std::min(e1[2], e2[0]); ++k1)
                    for (int k2 = 0; k2 <= std::min(e1[3], e2[1]); ++k2) {
                        Rational f = reorder_factor(e1[2], e2[0], k1) *
                                     reorder_factor(e1[3], e2[1], k2);
                        Exponents e{e1[0] + e2[0] - k1, e1[1] + e2[1] - k2,
                                    e1[2] + e2[2] - k1, e1[3] + e2[3] - k2};
                        out.add_term(e, c1 * c2 * Ops::from_rational(f));
                    }
            }
        return out;
    }

    friend WeylPoly commutator(const WeylPoly& a, const WeylPoly& b) { return a * b - b * a; }

    friend WeylPoly pow(const WeylPoly& a, unsigned n) {
        WeylPoly out = one(a.alphabet_);
        for (unsigned i = 0; i < n; ++i) out = out * a;
        return out;
    }

    friend bool operator==(const WeylPoly& a, const WeylPoly& b) {
        return a.alphabet_ == b.alphabet_ && a.terms_ == b.terms_;
    }

    template <class F>
    auto map_coeffs(F f) const {
        WeylPoly<decltype(f(terms_.begin()->second))> out(alphabet_);
        for (const auto& [e, c] : terms_) out.add_term(e, f(c));
        return out;
    }

    void add_term(const Exponents& e, const C& c) {
        validate_exponents(alphabet_, e);
        if (Ops::is_zero(c)) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (Ops::is_zero(it->second)) terms_.erase(it);
        }
    }

    std::string str() const;

private:
    static void check_index(Alphabet a, int i) {
        if (i < 1 || i > 2) throw std::invalid_argument("weyl: variable index must be 1 or 2");
        if (a == Alphabet::Real1D && i == 2)
            throw std::invalid_argument("weyl: one-dimensional alphabet has a single variable");
    }

    static void validate_exponents(Alphabet a, const Exponents& e) {
        for (int v : e)
            if (v < 0) throw std::invalid_argument("weyl: negative exponent");
        if (a == Alphabet::Real1D && (e[1] != 0 || e[3] != 0))
            throw std::invalid_argument("weyl: second variable used in 1-D alphabet");
    }

    /// C(c,k) * e!/(e-k)! as an exact rational (an integer).
    static Rational reorder_factor(int c, int e, int k) {
        mpz_class bin;
        mpz_bin_uiui(bin.get_mpz_t(), static_cast<unsigned long>(c),
                     static_cast<unsigned long>(k));
        mpz_class fall = 1;
        for (int j = 0; j < k; ++j) fall *= (e - j);
        return Rational(bin * fall);
    }

    void check_same(const WeylPoly& o) const {
        if (alphabet_ != o.alphabet_)
            throw std::invalid_argument("weyl: mixed alphabets");
    }

    Alphabet alphabet_;
    std::map<Exponents, C> terms_;
};

using WeylPolyX = WeylPoly<CSqrt>;
using WeylPolyD = WeylPoly<std::complex<double>>;

/// Exact -> floating coefficient conversion.
WeylPolyD to_numeric(const WeylPolyX& p);

/// Largest coefficient distance between two float symbols (union of terms).
double max_coeff_distance(const WeylPolyD& a, const WeylPolyD& b);

std::string alphabet_name(Alphabet a);

using Fn1 = std::function<std::complex<double>(double)>;
using Fn2 = std::function<std::complex<double>(double, double)>;

/// Numeric action of a 2-D symbol on a test function at a point; derivatives
/// by iterated central differences with the given step.
std::complex<double> apply_symbol(const WeylPolyD& p, const Fn2& f, double x, double y,
                                  double step);
std::complex<double> apply_symbol(const WeylPolyD& p, const Fn1& f, double x, double step);

template <class C>
std::string WeylPoly<C>::str() const {
    if (terms_.empty()) return "0";
    static const char* names2[4] = {"r1", "r2", "d1", "d2"};
    static const char* names1[4] = {"r", "?", "dr", "?"};
    static const char* namesz[4] = {"z", "zb", "dz", "dzb"};
    const char** names = alphabet_ == Alphabet::Real2D   ? names2
                         : alphabet_ == Alphabet::Real1D ? names1
                                                         : namesz;
    std::string out;
    for (const auto& [e, c] : terms_) {
        if (!out.empty()) out += " + ";
        std::string coeff;
        if constexpr (std::is_same_v<C, CSqrt>)
            coeff = c.str();
        else
            coeff = "(" + std::to_string(c.real()) + "," + std::to_string(c.imag()) + ")";
        out += "[" + coeff + "]";
        for (int v = 0; v < 4; ++v)
            for (int rep = 0; rep < e[static_cast<std::size_t>(v)]; ++rep)
                out += std::string(" ") + names[v];
    }
    return out;
}

}  // namespace ncqm
