#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace ncqm {

/// Exact rational scalar. Canonical form (lowest terms, positive denominator)
/// is maintained by GMP as long as values are built through the helpers below.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "p/q", "p", or a plain decimal like "-0.125" (decimals are exact).
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("rational: empty string");
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        std::size_t frac_len = text.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+")
            throw std::invalid_argument("rational: bad decimal '" + text + "'");
        mpz_class num(digits, 10);
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
        Rational r(num, den);
        r.canonicalize();
        return r;
    }
    Rational r;
    if (r.set_str(text, 10) != 0)
        throw std::invalid_argument("rational: cannot parse '" + text + "'");
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline double to_double(const Rational& r) { return r.get_d(); }

inline int sign(const Rational& r) { return sgn(r); }

inline Rational pow_int(const Rational& base, unsigned exp) {
    Rational out(1);
    Rational b = base;
    unsigned e = exp;
    while (e) {
        if (e & 1u) out *= b;
        b *= b;
        e >>= 1u;
    }
    return out;
}

inline Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

/// Deterministic helpers on top of mt19937 (the raw output stream is pinned by
/// the C++ standard; std::uniform_int_distribution is not).
inline long rand_long(std::mt19937& rng, long lo, long hi) {
    unsigned long span = static_cast<unsigned long>(hi - lo + 1);
    return lo + static_cast<long>(rng() % span);
}

/// Small random rational, never huge, suitable for exact property tests.
inline Rational rand_rational(std::mt19937& rng, long max_num = 9, long max_den = 9) {
    return make_rational(rand_long(rng, -max_num, max_num), rand_long(rng, 1, max_den));
}

/// Small random nonzero rational.
inline Rational rand_rational_nonzero(std::mt19937& rng, long max_num = 9, long max_den = 9) {
    Rational r;
    do {
        r = rand_rational(rng, max_num, max_den);
    } while (r == 0);
    return r;
}

}  // namespace ncqm
