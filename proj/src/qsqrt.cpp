#include "ncqm/qsqrt.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace ncqm {

namespace {

/// n = s^2 * d with d squarefree; returns (s, d). Trial division is plenty:
/// every radicand in this codebase comes from small factorials and parameter
/// rationals. A leftover cofactor beyond the trial bound is either a perfect
/// square or squarefree (two distinct primes), both handled.
std::pair<mpz_class, mpz_class> squarefree_decompose(mpz_class n) {
    mpz_class s = 1, d = 1;
    mpz_class f = 2;
    const unsigned long bound = 1000000;
    while (mpz_cmp_ui(f.get_mpz_t(), bound) <= 0 && f * f <= n) {
        if (n % f == 0) {
            unsigned mult = 0;
            while (n % f == 0) {
                n /= f;
                ++mult;
            }
            for (unsigned i = 0; i < mult / 2; ++i) s *= f;
            if (mult % 2) d *= f;
        }
        f += (f == 2) ? 1 : 2;
    }
    if (n > 1) {
        if (mpz_perfect_square_p(n.get_mpz_t())) {
            mpz_class r;
            mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
            s *= r;
        } else {
            d *= n;
        }
    }
    return {s, d};
}

mpz_class smallest_prime_factor(const mpz_class& n) {
    mpz_class f = 2;
    while (f * f <= n) {
        if (n % f == 0) return f;
        f += (f == 2) ? 1 : 2;
    }
    return n;
}

}  // namespace

void QSqrt::set_term(const mpz_class& rad, const Rational& c) {
    if (c == 0) {
        terms_.erase(rad);
        return;
    }
    terms_[rad] = c;
}

QSqrt QSqrt::sqrt_of(const Rational& r) {
    if (r < 0) throw std::domain_error("qsqrt: negative radicand");
    if (r == 0) return QSqrt();
    // sqrt(p/q) = sqrt(p q) / q.
    mpz_class pq = r.get_num() * r.get_den();
    auto [s, d] = squarefree_decompose(pq);
    QSqrt out;
    out.set_term(d, Rational(s) / Rational(r.get_den()));
    return out;
}

bool QSqrt::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

Rational QSqrt::as_rational() const {
    if (terms_.empty()) return Rational(0);
    if (!is_rational()) throw std::domain_error("qsqrt: value is irrational: " + str());
    return terms_.begin()->second;
}

double QSqrt::to_double() const {
    double total = 0;
    for (const auto& [rad, c] : terms_) total += c.get_d() * std::sqrt(rad.get_d());
    return total;
}

QSqrt QSqrt::operator-() const {
    QSqrt out = *this;
    for (auto& [rad, c] : out.terms_) c = -c;
    return out;
}

QSqrt& QSqrt::operator+=(const QSqrt& o) {
    for (const auto& [rad, c] : o.terms_) {
        auto it = terms_.find(rad);
        if (it == terms_.end()) {
            terms_.emplace(rad, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

QSqrt& QSqrt::operator-=(const QSqrt& o) { return *this += -o; }

QSqrt& QSqrt::operator*=(const QSqrt& o) {
    QSqrt out;
    for (const auto& [d1, c1] : terms_)
        for (const auto& [d2, c2] : o.terms_) {
            // sqrt(d1) sqrt(d2) = g sqrt(d1 d2 / g^2), g = gcd(d1, d2); the
            // reduced radicand is again squarefree since d1/g and d2/g are
            // coprime squarefree numbers.
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), d1.get_mpz_t(), d2.get_mpz_t());
            mpz_class rad = (d1 / g) * (d2 / g);
            Rational c = c1 * c2 * Rational(g);
            auto it = out.terms_.find(rad);
            if (it == out.terms_.end()) {
                out.terms_.emplace(rad, c);
            } else {
                it->second += c;
                if (it->second == 0) out.terms_.erase(it);
            }
        }
    terms_ = std::move(out.terms_);
    return *this;
}

QSqrt QSqrt::inverse() const {
    if (is_zero()) throw std::domain_error("qsqrt: division by zero");
    QSqrt x = *this;
    QSqrt acc(Rational(1));
    // Strip one prime radical per pass: x = A + B sqrt(p) with A, B free of
    // sqrt(p); multiplying by the conjugate A - B sqrt(p) eliminates p.
    while (!x.is_rational()) {
        mpz_class p = 0;
        for (const auto& [rad, c] : x.terms_)
            if (rad > 1) {
                p = smallest_prime_factor(rad);
                break;
            }
        QSqrt conj;
        for (const auto& [rad, c] : x.terms_) conj.set_term(rad, rad % p == 0 ? -c : c);
        acc *= conj;
        x *= conj;
    }
    Rational r = x.as_rational();
    if (r == 0) throw std::logic_error("qsqrt: conjugation collapsed to zero");
    return acc * QSqrt(Rational(1) / r);
}

std::string QSqrt::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [rad, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        if (rad == 1) {
            out += a.get_str();
        } else {
            if (a != 1) out += a.get_str() + "*";
            out += "sqrt(" + rad.get_str() + ")";
        }
        first = false;
    }
    return out;
}

std::string CSqrt::str() const {
    if (im.is_zero()) return re.str();
    std::string imag = "(" + im.str() + ")i";
    if (re.is_zero()) return imag;
    return "(" + re.str() + ") + " + imag;
}

}  // namespace ncqm
