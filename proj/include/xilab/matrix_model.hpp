#pragma once

// Matrix-model potential V(A) and the biorthogonal characteristic polynomial
// Q_N(b) = <det(b - B)>, computed by three independent routes plus the
// Jacobi (multiplication-by-b) matrix whose characteristic polynomial it is.

#include "xilab/polynomial.hpp"
#include "xilab/real.hpp"
#include "xilab/scaling.hpp"
#include "xilab/series.hpp"

#include <cstddef>
#include <vector>

namespace xilab {

namespace detail {
inline Real binomial(int n, int k) {
    Real r(1);
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}
inline Real factorial(int n) {
    Real r(1);
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}
}  // namespace detail

/// V(A) = sum_k v_k (A^k/k - 1/k). Every basis element vanishes at A = 1.
class PotentialV {
public:
    PotentialV() = default;
    explicit PotentialV(std::vector<Real> v) : v_(std::move(v)) {}

    /// From Taylor coefficients of V(1+u) in u; w[0] must be zero.
    static PotentialV from_shifted(const std::vector<Real>& w) {
        if (!w.empty() && w[0] != 0)
            throw Error(ErrorKind::InvalidArgument, "V(1) must vanish");
        const int deg = static_cast<int>(w.size()) - 1;
        // monomial coefficients of sum_j w_j (A-1)^j
        std::vector<Real> mono(static_cast<std::size_t>(deg + 1), Real(0));
        for (int j = 1; j <= deg; ++j)
            for (int i = 0; i <= j; ++i)
                mono[i] += w[j] * detail::binomial(j, i) * (((j - i) % 2 == 0) ? 1 : -1);
        std::vector<Real> v(static_cast<std::size_t>(std::max(deg, 0)));
        for (int k = 1; k <= deg; ++k) v[k - 1] = mono[k] * k;
        return PotentialV(std::move(v));
    }

    /// V(A) = -(A-1)^2/4: the (2,1) model whose Q_N is the scaled Hermite polynomial.
    static PotentialV gaussian() { return from_shifted({Real(0), Real(0), Real(-1) / 4}); }

    int degree() const { return static_cast<int>(v_.size()); }
    const std::vector<Real>& basis_coeffs() const { return v_; }

    /// Taylor coefficients w_0..w_p of V(1+u).
    std::vector<Real> shifted() const {
        const int p = degree();
        std::vector<Real> w(static_cast<std::size_t>(p + 1), Real(0));
        for (int k = 1; k <= p; ++k)
            for (int j = 1; j <= k; ++j) w[j] += v_[k - 1] * detail::binomial(k, j) / k;
        return w;
    }

    Real value(const Real& a) const {
        Real acc(0), ak(1);
        for (int k = 1; k <= degree(); ++k) {
            ak *= a;
            acc += v_[k - 1] * (ak - 1) / k;
        }
        return acc;
    }

    /// Monomial coefficients of V'(A): V'(A) = sum_k v_k A^{k-1}.
    const std::vector<Real>& derivative_coeffs() const { return v_; }

    Real derivative(const Real& a) const {
        Real acc(0);
        for (std::size_t k = v_.size(); k-- > 0;) acc = acc * a + v_[k];
        return acc;
    }

private:
    std::vector<Real> v_;
};

/// V = V_p + sum_k s_k eps^{p-k} V_k with V_n(A) = -sum_{k<=n} (A^k/k - 1/k).
inline PotentialV build_potential(const ModelParams& params) {
    const int p = params.p;
    std::vector<Real> c(static_cast<std::size_t>(p + 1), Real(0));  // weight of V_n
    c[p] = 1;
    for (int k = 1; k < p; ++k) c[k] = params.coupling(k) * pow(params.epsilon, p - k);
    std::vector<Real> v(static_cast<std::size_t>(p), Real(0));
    Real tail(0);
    for (int k = p; k >= 1; --k) {
        tail += c[k];
        v[k - 1] = -tail;
    }
    return PotentialV(std::move(v));
}

/// Q_0..Q_N from the derivative formula, expanded as a series in a:
/// Q_n(b) = (g d/da)^n exp((V(1+a) - a b)/g) |_{a=0} = g^n n! [a^n] exp(...).
/// This exponent/derivative sign pairing is the one under which the
/// derivative formula agrees with the generating function.
inline std::vector<CharPolynomial> q_polynomials(const ModelParams& params, const PotentialV& V, int N) {
    if (N < 0) throw Error(ErrorKind::InvalidArgument, "N must be >= 0");
    const std::vector<Real> w = V.shifted();
    const std::size_t K = static_cast<std::size_t>(N);
    BiSeries f(K);
    for (std::size_t m = 1; m <= K && m < w.size(); ++m) f[m] = PolyCoeffs{w[m] / params.g};
    if (K >= 1) {
        f[1].resize(2, Real(0));
        f[1][1] = Real(-1) / params.g;
    }
    const BiSeries e = biseries_exp(f);
    std::vector<CharPolynomial> out;
    out.reserve(K + 1);
    Real scale(1);  // g^n n!
    for (std::size_t n = 0; n <= K; ++n) {
        if (n > 0) scale *= params.g * n;
        std::vector<Real> c(n + 1, Real(0));
        for (std::size_t i = 0; i < e[n].size() && i <= n; ++i) c[i] = e[n][i] * scale;
        out.emplace_back(std::move(c));
    }
    return out;
}

inline CharPolynomial q_polynomial(const ModelParams& params, const PotentialV& V, int N) {
    return q_polynomials(params, V, N).back();
}

/// Q_N(y) as N! [t^N] of exp(V(g t + 1)/g) exp(-y t).
inline CharPolynomial q_polynomial_gf(const ModelParams& params, const PotentialV& V, int N) {
    if (N < 0) throw Error(ErrorKind::InvalidArgument, "N must be >= 0");
    const std::size_t K = static_cast<std::size_t>(N);
    const std::vector<Real> w = V.shifted();
    TaylorSeries vs(std::max<std::size_t>(K, 1));
    for (std::size_t j = 0; j < w.size() && j <= vs.order(); ++j) vs[j] = w[j];
    TaylorSeries inner(vs.order());
    if (inner.order() >= 1) inner[1] = params.g;
    const TaylorSeries W = series_compose(vs, inner) * Real(Real(1) / params.g);
    const TaylorSeries E = series_exp(W);
    std::vector<Real> c(K + 1, Real(0));
    // N! sum_j E_{N-j} (-y)^j / j!
    Real nfact = detail::factorial(N);
    Real jfact(1);
    for (std::size_t j = 0; j <= K; ++j) {
        if (j > 0) jfact *= j;
        c[j] = E[K - j] * nfact / jfact * ((j % 2 == 0) ? 1 : -1);
    }
    return CharPolynomial(std::move(c));
}

/// (g/4)^{N/2} H_N(b/sqrt(g)), physicists' Hermite. Coefficient of b^{N-2m} is
/// (-1)^m N! g^m / (m! (N-2m)! 4^m).
inline CharPolynomial hermite_q(int N, const Real& g) {
    if (N < 0) throw Error(ErrorKind::InvalidArgument, "N must be >= 0");
    if (g <= 0) throw Error(ErrorKind::NonPositiveG, "hermite_q needs g > 0");
    std::vector<Real> c(static_cast<std::size_t>(N + 1), Real(0));
    const Real nfact = detail::factorial(N);
    for (int m = 0; 2 * m <= N; ++m) {
        Real term = nfact * pow(g / 4, m) / (detail::factorial(m) * detail::factorial(N - 2 * m));
        c[N - 2 * m] = (m % 2 == 0) ? term : Real(-term);
    }
    return CharPolynomial(std::move(c));
}

/// Lower-Hessenberg matrix (one superdiagonal), row-major.
class HessenbergMatrix {
public:
    explicit HessenbergMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, Real(0)) {}

    int size() const { return n_; }
    Real& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const Real& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    /// det(b I - J) by Gaussian elimination with partial pivoting.
    Real det_shifted(const Real& b) const {
        std::vector<Real> m(a_.size());
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) m[i * n_ + j] = (i == j ? b : Real(0)) - (*this)(i, j);
        Real det(1);
        for (int col = 0; col < n_; ++col) {
            int piv = col;
            for (int r = col + 1; r < n_; ++r)
                if (abs(m[r * n_ + col]) > abs(m[piv * n_ + col])) piv = r;
            if (m[piv * n_ + col] == 0) return Real(0);
            if (piv != col) {
                for (int j = 0; j < n_; ++j) std::swap(m[piv * n_ + j], m[col * n_ + j]);
                det = -det;
            }
            const Real d = m[col * n_ + col];
            det *= d;
            for (int r = col + 1; r < n_; ++r) {
                const Real f = m[r * n_ + col] / d;
                if (f == 0) continue;
                for (int j = col; j < n_; ++j) m[r * n_ + j] -= f * m[col * n_ + j];
            }
        }
        return det;
    }

    /// Coefficients of det(b I - J) from the Hessenberg minor recurrence
    /// D_k = sum_i (-1)^{k-1-i} M_{k-1,i} (prod_{j=i}^{k-2} M_{j,j+1}) D_i, M = bI - J.
    CharPolynomial characteristic_polynomial() const {
        std::vector<PolyCoeffs> D;
        D.push_back(PolyCoeffs{Real(1)});
        for (int k = 1; k <= n_; ++k) {
            PolyCoeffs acc{Real(0)};
            Real super_prod(1);
            for (int i = k - 1; i >= 0; --i) {
                if (i < k - 1) super_prod *= -(*this)(i, i + 1);
                PolyCoeffs entry = (i == k - 1) ? PolyCoeffs{-(*this)(k - 1, k - 1), Real(1)}
                                                : PolyCoeffs{-(*this)(k - 1, i)};
                const Real sign = ((k - 1 - i) % 2 == 0) ? Real(1) : Real(-1);
                poly_axpy(acc, sign * super_prod, poly_mul(entry, D[i]));
            }
            acc.resize(static_cast<std::size_t>(k + 1), Real(0));
            D.push_back(std::move(acc));
        }
        return CharPolynomial(D.back());
    }

private:
    int n_;
    std::vector<Real> a_;
};

/// Matrix of multiplication by b in the Q-basis: b Q_n = sum_{m<=n+1} J_{n,m} Q_m,
/// leading N x N block. det(bI - J) = (-1)^N Q_N.
inline HessenbergMatrix jacobi_matrix(const std::vector<CharPolynomial>& Q) {
    if (Q.size() < 2) throw Error(ErrorKind::InvalidArgument, "jacobi_matrix needs Q_0..Q_N with N >= 1");
    const int N = static_cast<int>(Q.size()) - 1;
    for (int n = 0; n <= N; ++n)
        if (Q[n].degree() != n || Q[n].leading() == 0)
            throw Error(ErrorKind::DegenerateBasis, "Q_" + std::to_string(n) + " has degree < n");
    HessenbergMatrix J(N);
    for (int n = 0; n < N; ++n) {
        std::vector<Real> r(static_cast<std::size_t>(n + 2), Real(0));  // b * Q_n
        for (int k = 0; k <= n; ++k) r[k + 1] = Q[n][k];
        for (int m = n + 1; m >= 0; --m) {
            const Real c = r[m] / Q[m].leading();
            for (int k = 0; k <= m; ++k) r[k] -= c * Q[m][k];
            if (m < N) J(n, m) = c;
        }
    }
    return J;
}

inline HessenbergMatrix jacobi_matrix(const ModelParams& params, const PotentialV& V, int N) {
    return jacobi_matrix(q_polynomials(params, V, N));
}

}  // namespace xilab
