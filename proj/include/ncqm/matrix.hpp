#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>

namespace ncqm {

/// Dense fixed-size square matrix over a field type T. Just what the 8x8
/// group/algebra realizations and the 4x4 gauge matrices need: ring ops,
/// exact Gauss-Jordan inverse, transpose, trace.
template <class T, std::size_t N>
class SmallMatrix {
public:
    SmallMatrix() {
        for (auto& row : a_)
            for (auto& v : row) v = T(0);
    }

    static SmallMatrix identity() {
        SmallMatrix m;
        for (std::size_t i = 0; i < N; ++i) m.a_[i][i] = T(1);
        return m;
    }

    T& operator()(std::size_t i, std::size_t j) { return a_[i][j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i][j]; }

    friend SmallMatrix operator+(const SmallMatrix& x, const SmallMatrix& y) {
        SmallMatrix m;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) m.a_[i][j] = x.a_[i][j] + y.a_[i][j];
        return m;
    }

    friend SmallMatrix operator-(const SmallMatrix& x, const SmallMatrix& y) {
        SmallMatrix m;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) m.a_[i][j] = x.a_[i][j] - y.a_[i][j];
        return m;
    }

    friend SmallMatrix operator*(const SmallMatrix& x, const SmallMatrix& y) {
        SmallMatrix m;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t k = 0; k < N; ++k) {
                const T& xik = x.a_[i][k];
                if (xik == T(0)) continue;
                for (std::size_t j = 0; j < N; ++j) m.a_[i][j] += xik * y.a_[k][j];
            }
        return m;
    }

    friend SmallMatrix operator*(const T& s, const SmallMatrix& x) {
        SmallMatrix m;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) m.a_[i][j] = s * x.a_[i][j];
        return m;
    }

    friend bool operator==(const SmallMatrix& x, const SmallMatrix& y) { return x.a_ == y.a_; }

    SmallMatrix transpose() const {
        SmallMatrix m;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) m.a_[j][i] = a_[i][j];
        return m;
    }

    T trace() const {
        T t(0);
        for (std::size_t i = 0; i < N; ++i) t += a_[i][i];
        return t;
    }

    /// Gauss-Jordan with partial pivot-by-nonzero; exact over rationals.
    SmallMatrix inverse() const {
        SmallMatrix work = *this;
        SmallMatrix inv = identity();
        for (std::size_t col = 0; col < N; ++col) {
            std::size_t pivot = col;
            while (pivot < N && work.a_[pivot][col] == T(0)) ++pivot;
            if (pivot == N) throw std::domain_error("matrix: singular, no inverse");
            if (pivot != col) {
                std::swap(work.a_[pivot], work.a_[col]);
                std::swap(inv.a_[pivot], inv.a_[col]);
            }
            T d = work.a_[col][col];
            for (std::size_t j = 0; j < N; ++j) {
                work.a_[col][j] = work.a_[col][j] / d;
                inv.a_[col][j] = inv.a_[col][j] / d;
            }
            for (std::size_t i = 0; i < N; ++i) {
                if (i == col) continue;
                T f = work.a_[i][col];
                if (f == T(0)) continue;
                for (std::size_t j = 0; j < N; ++j) {
                    work.a_[i][j] -= f * work.a_[col][j];
                    inv.a_[i][j] -= f * inv.a_[col][j];
                }
            }
        }
        return inv;
    }

    /// Entrywise conversion, e.g. map(to_double) for an exact -> float copy.
    template <class F>
    auto map(F f) const {
        SmallMatrix<decltype(f(a_[0][0])), N> m;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) m(i, j) = f(a_[i][j]);
        return m;
    }

private:
    std::array<std::array<T, N>, N> a_;
};

}  // namespace ncqm
