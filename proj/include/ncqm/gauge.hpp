#pragma once

#include <array>
#include <map>
#include <string>

#include "generators.hpp"
#include "matrix.hpp"
#include "rational.hpp"
#include "weyl.hpp"

namespace ncqm {

/// 4x4 matrices over the frozen variable ordering (Q1, P2, Q2, P1). Every
/// matrix in this header is stated against that ordering.
using Mat4Q = SmallMatrix<Rational, 4>;
using Mat4D = SmallMatrix<double, 4>;

/// The gauge parameter triple doubles as the commutation-relation data; the
/// matrix-group operations additionally need hbar^2 - Bcal*vartheta != 0.
using CommRelParams = GaugeParams;

/// Throws invalid_argument unless hbar > 0 and hbar^2 - Bcal*vartheta != 0.
void require_invertible(const CommRelParams& params);

/// The antisymmetric form [[0, Q], [-Q^T, 0]], Q = [[-vartheta/hbar, -1],
/// [1, Bcal/hbar]], whose preservation M q M^T = q characterizes the group of
/// transformations keeping the commutation relations intact.
Mat4Q q_form(const CommRelParams& params);

/// Conjugator onto Sp(4): members M correspond to u^{-1} M u.
Mat4Q u_matrix(const CommRelParams& params);

/// The symplectic form seen after conjugation, J = u^{-1} q u^{-T}.
Mat4Q induced_form(const CommRelParams& params);

Mat4Q to_sp4(const Mat4Q& m, const CommRelParams& params);
Mat4D to_sp4(const Mat4D& m, const CommRelParams& params);

/// Membership test M q M^T = q, exact over rationals or within tol.
bool is_ncqm_preserving(const Mat4Q& m, const CommRelParams& params);
bool is_ncqm_preserving(const Mat4D& m, const CommRelParams& params, double tol = 1e-10);

/// The explicit member carrying the magnetic-gauge operator quadruple onto
/// the symmetric-gauge one. Square roots force doubles. Needs a positive
/// discriminant and vartheta != 0.
Mat4D landau_to_sym(const CommRelParams& params);

/// Float mirror of GeneratorSet for transformed quadruples.
struct GeneratorSetD {
    Alphabet alphabet = Alphabet::Real2D;
    WeylPolyD Q1{Alphabet::Real2D};
    WeylPolyD Q2{Alphabet::Real2D};
    WeylPolyD P1{Alphabet::Real2D};
    WeylPolyD P2{Alphabet::Real2D};
};

GeneratorSetD to_numeric(const GeneratorSet& gens);
std::array<WeylPolyD, 6> commutator_table(const GeneratorSetD& gens);

/// The quadruple M * (Q1, P2, Q2, P1)^T as new symbols.
GeneratorSet transform_generators(const Mat4Q& m, const GeneratorSet& gens);
GeneratorSetD transform_generators(const Mat4D& m, const GeneratorSetD& gens);

/// Seeded random member: a product of symplectic shears of the induced form,
/// conjugated back through u_matrix. Exact, so membership holds identically.
Mat4Q random_preserving(const CommRelParams& params, unsigned long seed);

/// Laurent polynomial over the rationals in the 16 entries of a generic
/// member matrix plus (hbar, vartheta, Bcal); hbar alone may carry negative
/// powers. Just enough ring structure to run the commutator bookkeeping that
/// reconstructs the preserved form.
class SymPoly {
public:
    static constexpr int kVars = 19;  // m(r,c) -> 4r+c; 16 hbar, 17 vartheta, 18 Bcal
    using Key = std::array<int, kVars>;

    SymPoly() = default;
    SymPoly(long v);
    explicit SymPoly(const Rational& r);

    static SymPoly variable(int index, int power = 1);
    static SymPoly entry(int row, int col);
    static SymPoly hbar(int power = 1);
    static SymPoly vartheta();
    static SymPoly Bcal();

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Rational>& terms() const { return terms_; }

    SymPoly operator-() const;
    SymPoly& operator+=(const SymPoly& o);
    SymPoly& operator-=(const SymPoly& o);
    friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
    friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
    friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
    friend bool operator==(const SymPoly& a, const SymPoly& b) {
        return a.terms_ == b.terms_;
    }

    /// Coefficient of the monomial m(r1,c1)*m(r2,c2), as a polynomial in the
    /// parameter variables; the matrix part of the key must match exactly.
    SymPoly coeff_of_pair(int r1, int c1, int r2, int c2) const;

    std::string str() const;

private:
    void add(const Key& k, const Rational& c);
    std::map<Key, Rational> terms_;
};

/// Complexification of SymPoly, the coefficient field for symbolic operator
/// bookkeeping.
struct SymCoeff {
    SymPoly re, im;
    SymCoeff() = default;
    SymCoeff(long v) : re(v) {}
    SymCoeff(SymPoly r, SymPoly i) : re(std::move(r)), im(std::move(i)) {}

    SymCoeff operator-() const { return {-re, -im}; }
    SymCoeff& operator+=(const SymCoeff& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    friend SymCoeff operator+(SymCoeff a, const SymCoeff& b) { return a += b; }
    friend SymCoeff operator-(SymCoeff a, const SymCoeff& b) { return a += -b; }
    friend SymCoeff operator*(const SymCoeff& a, const SymCoeff& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const SymCoeff& a, const SymCoeff& b) {
        return a.re == b.re && a.im == b.im;
    }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

template <>
struct WeylCoeffOps<SymCoeff> {
    static SymCoeff from_rational(const Rational& r) { return {SymPoly(r), SymPoly()}; }
    static bool is_zero(const SymCoeff& c) { return c.is_zero(); }
};

using WeylPolyS = WeylPoly<SymCoeff>;
using Mat4S = SmallMatrix<SymPoly, 4>;

/// q_form with (hbar, vartheta, Bcal) as indeterminates.
Mat4S symbolic_q_form();

/// Expands the commutators of a generic transformed quadruple against the
/// magnetic-gauge table with symbolic parameters, extracts the coefficient of
/// every m(a,c)m(b,d) monomial, and rebuilds the preserved form from the
/// scalar constraints. Throws logic_error if the reconstruction is
/// inconsistent between pairs or disagrees with symbolic_q_form().
Mat4S derive_q_from_commutators();

}  // namespace ncqm
