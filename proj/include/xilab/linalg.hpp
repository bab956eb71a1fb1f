#pragma once

#include "xilab/real.hpp"

#include <cstddef>
#include <vector>

namespace xilab {

/// Dense square complex matrix, row-major.
class CMatrix {
public:
    CMatrix() = default;
    explicit CMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

    static CMatrix identity(int n) {
        CMatrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = Complex(1);
        return m;
    }

    int size() const { return n_; }
    Complex& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const Complex& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const std::vector<Complex>& data() const { return a_; }

    CMatrix adjoint() const {
        CMatrix r(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r(i, j) = conj((*this)(j, i));
        return r;
    }

    CMatrix& operator+=(const CMatrix& o) {
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }
    CMatrix& operator-=(const CMatrix& o) {
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }
    CMatrix& operator*=(const Real& c) {
        for (auto& z : a_) z = z * Complex(c);
        return *this;
    }

    Real frobenius_sq() const {
        Real s(0);
        for (const auto& z : a_) s += norm(z);
        return s;
    }

private:
    int n_ = 0;
    std::vector<Complex> a_;
};

inline CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
inline CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
inline CMatrix operator*(CMatrix a, const Real& c) { return a *= c; }

inline CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    const int n = a.size();
    CMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const Complex& aik = a(i, k);
            if (aik.re == 0 && aik.im == 0) continue;
            for (int j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
        }
    return r;
}

/// Solves A x = b (A is n x n, row-major) by Gaussian elimination with partial
/// pivoting. Returns false if a pivot falls below `singular_tol` times the
/// largest entry.
inline bool solve_dense(std::vector<Real> A, std::vector<Real> b, std::vector<Real>& x, const Real& singular_tol) {
    const std::size_t n = b.size();
    Real scale(0);
    for (const auto& v : A) scale = std::max(scale, Real(abs(v)));
    if (scale == 0) return false;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (abs(A[r * n + col]) > abs(A[piv * n + col])) piv = r;
        if (abs(A[piv * n + col]) <= singular_tol * scale) return false;
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(A[piv * n + j], A[col * n + j]);
            std::swap(b[piv], b[col]);
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            const Real f = A[r * n + col] / A[col * n + col];
            if (f == 0) continue;
            for (std::size_t j = col; j < n; ++j) A[r * n + j] -= f * A[col * n + j];
            b[r] -= f * b[col];
        }
    }
    x.assign(n, Real(0));
    for (std::size_t i = n; i-- > 0;) {
        Real acc = b[i];
        for (std::size_t j = i + 1; j < n; ++j) acc -= A[i * n + j] * x[j];
        x[i] = acc / A[i * n + i];
    }
    return true;
}

}  // namespace xilab
