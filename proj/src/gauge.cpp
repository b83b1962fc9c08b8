#include "ncqm/gauge.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace ncqm {

void require_invertible(const CommRelParams& params) {
    params.validate();
    if (params.discriminant() == 0)
        throw std::invalid_argument("gauge: hbar^2 - Bcal*vartheta must be nonzero");
}

Mat4Q q_form(const CommRelParams& params) {
    require_invertible(params);
    const Rational th = params.vartheta / params.hbar;
    const Rational bh = params.Bcal / params.hbar;
    Mat4Q q;
    q(0, 2) = -th;
    q(0, 3) = Rational(-1);
    q(1, 2) = Rational(1);
    q(1, 3) = bh;
    q(2, 0) = th;
    q(2, 1) = Rational(-1);
    q(3, 0) = Rational(1);
    q(3, 1) = -bh;
    return q;
}

Mat4Q u_matrix(const CommRelParams& params) {
    require_invertible(params);
    Mat4Q u = Mat4Q::identity();
    u(0, 0) = Rational(-1);
    u(0, 1) = params.vartheta / params.hbar;
    u(1, 0) = params.Bcal / params.hbar;
    u(1, 1) = Rational(-1);
    return u;
}

Mat4Q induced_form(const CommRelParams& params) {
    Mat4Q uinv = u_matrix(params).inverse();
    return uinv * q_form(params) * uinv.transpose();
}

Mat4Q to_sp4(const Mat4Q& m, const CommRelParams& params) {
    Mat4Q u = u_matrix(params);
    return u.inverse() * m * u;
}

Mat4D to_sp4(const Mat4D& m, const CommRelParams& params) {
    Mat4D u = u_matrix(params).map([](const Rational& r) { return to_double(r); });
    return u.inverse() * m * u;
}

bool is_ncqm_preserving(const Mat4Q& m, const CommRelParams& params) {
    Mat4Q q = q_form(params);
    return m * q * m.transpose() == q;
}

bool is_ncqm_preserving(const Mat4D& m, const CommRelParams& params, double tol) {
    Mat4D q = q_form(params).map([](const Rational& r) { return to_double(r); });
    Mat4D lhs = m * q * m.transpose();
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (std::abs(lhs(i, j) - q(i, j)) > tol) return false;
    return true;
}

Mat4D landau_to_sym(const CommRelParams& params) {
    require_invertible(params);
    if (params.discriminant() < 0)
        throw std::invalid_argument("gauge: hbar^2 - Bcal*vartheta must be positive");
    if (params.vartheta == 0)
        throw std::invalid_argument("gauge: vartheta must be nonzero");
    const double h = to_double(params.hbar);
    const double t = to_double(params.vartheta);
    const double b = to_double(params.Bcal);
    const double d = to_double(params.discriminant());
    const double s = std::sqrt(d);
    Mat4D m;
    m(0, 0) = 1.0 + b * t / (2.0 * d);
    m(0, 1) = t * h / (2.0 * d);
    m(1, 0) = b * (2.0 * h * s - b * t) / (2.0 * d * (h + s));
    m(1, 1) = h * (3.0 * s - h) / (2.0 * d);
    m(2, 2) = 1.0;
    m(2, 3) = t / (2.0 * h);
    m(3, 2) = (h - s) / t;
    m(3, 3) = (h + s) / (2.0 * h);
    return m;
}

GeneratorSetD to_numeric(const GeneratorSet& gens) {
    GeneratorSetD out;
    out.alphabet = gens.alphabet;
    out.Q1 = to_numeric(gens.Q1);
    out.Q2 = to_numeric(gens.Q2);
    out.P1 = to_numeric(gens.P1);
    out.P2 = to_numeric(gens.P2);
    return out;
}

std::array<WeylPolyD, 6> commutator_table(const GeneratorSetD& g) {
    return {commutator(g.Q1, g.P1), commutator(g.Q2, g.P2), commutator(g.Q1, g.Q2),
            commutator(g.P1, g.P2), commutator(g.Q1, g.P2), commutator(g.Q2, g.P1)};
}

namespace {

template <class Mat, class Set, class Lift>
Set apply_matrix(const Mat& m, const Set& gens, Lift lift) {
    const std::array in{&gens.Q1, &gens.P2, &gens.Q2, &gens.P1};
    auto row = [&](std::size_t i) {
        auto acc = lift(m(i, 0)) * (*in[0]);
        for (std::size_t j = 1; j < 4; ++j) acc += lift(m(i, j)) * (*in[j]);
        return acc;
    };
    return Set{gens.alphabet, row(0), row(2), row(3), row(1)};
}

}  // namespace

GeneratorSet transform_generators(const Mat4Q& m, const GeneratorSet& gens) {
    return apply_matrix(m, gens, [](const Rational& r) { return CSqrt(QSqrt(r)); });
}

GeneratorSetD transform_generators(const Mat4D& m, const GeneratorSetD& gens) {
    return apply_matrix(m, gens, [](double v) { return std::complex<double>(v, 0.0); });
}

Mat4Q random_preserving(const CommRelParams& params, unsigned long seed) {
    require_invertible(params);
    std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
    Mat4Q u = u_matrix(params);
    Mat4Q uinv = u.inverse();
    Mat4Q jinv = induced_form(params).inverse();
    // Membership is exact by construction; the retry loop additionally keeps
    // the entries small so that checking the preserved form in doubles stays
    // meaningful at absolute tolerances. Later attempts shrink the draws, so
    // acceptance is quick; if every attempt is wild the last one still is an
    // exact member.
    Mat4Q candidate;
    for (int attempt = 0; attempt < 200; ++attempt) {
        bool shrink = attempt >= 8;
        long shears = shrink ? 1 : rand_long(rng, 2, 4);
        long mag = shrink ? 1 : 2;
        Mat4Q s = Mat4Q::identity();
        for (long t = 0; t < shears; ++t) {
            std::array<Rational, 4> v;
            for (auto& x : v) x = rand_rational(rng, mag, 2);
            Rational c = rand_rational_nonzero(rng, mag, 2);
            // I + c v v^T J^{-1} preserves J because v^T J^{-1} v = 0.
            Mat4Q shear = Mat4Q::identity();
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j) {
                    Rational dot(0);
                    for (std::size_t k = 0; k < 4; ++k) dot += v[k] * jinv(k, j);
                    shear(i, j) += c * v[i] * dot;
                }
            s = s * shear;
        }
        bool tame = true;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                tame = tame && s(i, j) <= 8 && s(i, j) >= -8;
        candidate = u * s * uinv;
        if (tame) return candidate;
    }
    return candidate;
}

SymPoly::SymPoly(long v) {
    if (v != 0) terms_.emplace(Key{}, Rational(v));
}

SymPoly::SymPoly(const Rational& r) {
    if (r != 0) terms_.emplace(Key{}, r);
}

SymPoly SymPoly::variable(int index, int power) {
    if (index < 0 || index >= kVars) throw std::invalid_argument("sympoly: bad variable");
    if (power < 0 && index != 16)
        throw std::invalid_argument("sympoly: only hbar may carry negative powers");
    SymPoly p;
    if (power == 0) return SymPoly(1);
    Key k{};
    k[static_cast<std::size_t>(index)] = power;
    p.terms_.emplace(k, Rational(1));
    return p;
}

SymPoly SymPoly::entry(int row, int col) {
    if (row < 0 || row > 3 || col < 0 || col > 3)
        throw std::invalid_argument("sympoly: bad matrix entry");
    return variable(4 * row + col);
}

SymPoly SymPoly::hbar(int power) { return variable(16, power); }
SymPoly SymPoly::vartheta() { return variable(17); }
SymPoly SymPoly::Bcal() { return variable(18); }

void SymPoly::add(const Key& k, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SymPoly SymPoly::operator-() const {
    SymPoly out;
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
    return out;
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
    SymPoly out;
    for (const auto& [k1, c1] : a.terms_)
        for (const auto& [k2, c2] : b.terms_) {
            SymPoly::Key k;
            for (int i = 0; i < SymPoly::kVars; ++i) k[i] = k1[i] + k2[i];
            out.add(k, c1 * c2);
        }
    return out;
}

SymPoly SymPoly::coeff_of_pair(int r1, int c1, int r2, int c2) const {
    Key want{};
    want[static_cast<std::size_t>(4 * r1 + c1)] += 1;
    want[static_cast<std::size_t>(4 * r2 + c2)] += 1;
    SymPoly out;
    for (const auto& [k, c] : terms_) {
        bool match = true;
        for (int i = 0; i < 16 && match; ++i) match = (k[i] == want[i]);
        if (!match) continue;
        Key rest{};
        for (int i = 16; i < kVars; ++i) rest[i] = k[i];
        out.add(rest, c);
    }
    return out;
}

std::string SymPoly::str() const {
    if (terms_.empty()) return "0";
    static const char* params[3] = {"hbar", "vartheta", "Bcal"};
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        os << (first ? "" : " + ") << to_string(c);
        first = false;
        for (int i = 0; i < kVars; ++i) {
            if (k[i] == 0) continue;
            if (i < 16)
                os << "*m(" << i / 4 << "," << i % 4 << ")";
            else
                os << "*" << params[i - 16];
            if (k[i] != 1) os << "^" << k[i];
        }
    }
    return os.str();
}

Mat4S symbolic_q_form() {
    SymPoly th = SymPoly::vartheta() * SymPoly::hbar(-1);
    SymPoly bh = SymPoly::Bcal() * SymPoly::hbar(-1);
    Mat4S q;
    q(0, 2) = -th;
    q(0, 3) = SymPoly(-1);
    q(1, 2) = SymPoly(1);
    q(1, 3) = bh;
    q(2, 0) = th;
    q(2, 1) = SymPoly(-1);
    q(3, 0) = SymPoly(1);
    q(3, 1) = -bh;
    return q;
}

Mat4S derive_q_from_commutators() {
    const Alphabet A = Alphabet::Real2D;
    auto imag = [](const SymPoly& p) { return SymCoeff(SymPoly(), p); };
    WeylPolyS pos1 = WeylPolyS::position(A, 1);
    WeylPolyS pos2 = WeylPolyS::position(A, 2);
    WeylPolyS d1 = WeylPolyS::deriv(A, 1);
    WeylPolyS d2 = WeylPolyS::deriv(A, 2);

    // Magnetic-gauge quadruple with symbolic parameters, in the frozen
    // ordering (Q1, P2, Q2, P1).
    std::array<WeylPolyS, 4> base = {
        pos1 + imag(SymPoly::vartheta()) * d2,
        SymCoeff(-(SymPoly::Bcal() * SymPoly::hbar(-1)), SymPoly()) * pos1 +
            imag(-SymPoly::hbar()) * d2,
        pos2,
        imag(-SymPoly::hbar()) * d1,
    };

    std::array<WeylPolyS, 4> primed = {WeylPolyS::zero(A), WeylPolyS::zero(A),
                                       WeylPolyS::zero(A), WeylPolyS::zero(A)};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            primed[r] += SymCoeff(SymPoly::entry(r, c), SymPoly()) * base[c];

    Mat4S tilde;
    bool have = false;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            if (a == b) continue;
            WeylPolyS k = commutator(primed[a], primed[b]);
            if (!k.is_constant())
                throw std::logic_error("gauge: transformed commutator is not central");
            SymCoeff v = k.constant_value();
            if (!v.re.is_zero())
                throw std::logic_error("gauge: transformed commutator is not i * real");
            Mat4S cur;
            SymPoly rebuilt;
            for (int c = 0; c < 4; ++c)
                for (int d = 0; d < 4; ++d) {
                    cur(c, d) = v.im.coeff_of_pair(a, c, b, d);
                    rebuilt += SymPoly::entry(a, c) * SymPoly::entry(b, d) * cur(c, d);
                }
            if (!(rebuilt == v.im))
                throw std::logic_error("gauge: commutator has terms outside the pair pattern");
            if (!have) {
                tilde = cur;
                have = true;
            } else if (!(tilde == cur)) {
                throw std::logic_error("gauge: inconsistent reconstruction between pairs");
            }
        }

    // The constants table is -hbar times the preserved form.
    Mat4S q;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) q(i, j) = -(SymPoly::hbar(-1) * tilde(i, j));
    if (!(q == symbolic_q_form()))
        throw std::logic_error("gauge: reconstructed form disagrees with the closed form");
    return q;
}

}  // namespace ncqm
