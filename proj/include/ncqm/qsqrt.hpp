#pragma once

#include <complex>
#include <map>
#include <string>

#include "rational.hpp"

namespace ncqm {

/// Exact scalar of the form sum_d c_d sqrt(d) with d positive squarefree
/// integers (d = 1 carries the rational part) and c_d rational. Closed under
/// ring operations; division works through radical conjugation. Nested
/// radicals (sqrt of a non-rational) are outside this field and raise.
class QSqrt {
public:
    QSqrt() = default;
    QSqrt(const Rational& r) { set_term(1, r); }
    QSqrt(long n) : QSqrt(Rational(n)) {}
    QSqrt(int n) : QSqrt(Rational(n)) {}

    /// sqrt of a nonnegative rational, e.g. sqrt_of(3/4) = (1/2) sqrt(3).
    static QSqrt sqrt_of(const Rational& r);

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    /// Throws unless the value is free of radicals.
    Rational as_rational() const;

    double to_double() const;

    QSqrt operator-() const;
    QSqrt& operator+=(const QSqrt& o);
    QSqrt& operator-=(const QSqrt& o);
    QSqrt& operator*=(const QSqrt& o);
    QSqrt& operator/=(const QSqrt& o) { return *this *= o.inverse(); }

    friend QSqrt operator+(QSqrt a, const QSqrt& b) { return a += b; }
    friend QSqrt operator-(QSqrt a, const QSqrt& b) { return a -= b; }
    friend QSqrt operator*(QSqrt a, const QSqrt& b) { return a *= b; }
    friend QSqrt operator/(QSqrt a, const QSqrt& b) { return a /= b; }

    /// Multiplicative inverse via repeated radical conjugation.
    QSqrt inverse() const;

    friend bool operator==(const QSqrt& a, const QSqrt& b) { return a.terms_ == b.terms_; }

    const std::map<mpz_class, Rational>& terms() const { return terms_; }

    std::string str() const;

private:
    void set_term(const mpz_class& rad, const Rational& c);
    std::map<mpz_class, Rational> terms_;  // squarefree radicand -> coefficient
};

/// Complex scalar with exact QSqrt real and imaginary parts; i is exact.
struct CSqrt {
    QSqrt re, im;

    CSqrt() = default;
    CSqrt(const QSqrt& r) : re(r) {}
    CSqrt(const Rational& r) : re(r) {}
    CSqrt(long n) : re(n) {}
    CSqrt(int n) : re(n) {}
    CSqrt(QSqrt r, QSqrt i) : re(std::move(r)), im(std::move(i)) {}

    static CSqrt i() { return CSqrt(QSqrt(0), QSqrt(1)); }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    CSqrt conj() const { return {re, -im}; }
    std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }

    CSqrt operator-() const { return {-re, -im}; }
    CSqrt& operator+=(const CSqrt& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    CSqrt& operator-=(const CSqrt& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    CSqrt& operator*=(const CSqrt& o) {
        QSqrt r = re * o.re - im * o.im;
        QSqrt i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    CSqrt& operator/=(const CSqrt& o) {
        QSqrt n = (o.re * o.re + o.im * o.im).inverse();
        CSqrt prod = *this * o.conj();
        re = prod.re * n;
        im = prod.im * n;
        return *this;
    }

    friend CSqrt operator+(CSqrt a, const CSqrt& b) { return a += b; }
    friend CSqrt operator-(CSqrt a, const CSqrt& b) { return a -= b; }
    friend CSqrt operator*(CSqrt a, const CSqrt& b) { return a *= b; }
    friend CSqrt operator/(CSqrt a, const CSqrt& b) { return a /= b; }
    friend bool operator==(const CSqrt& a, const CSqrt& b) {
        return a.re == b.re && a.im == b.im;
    }

    std::string str() const;
};

}  // namespace ncqm
