#pragma once

// Truncated power series in one variable, and series whose coefficients are
// polynomials in a second variable (used to expand exp(a*b/g)).

#include "xilab/real.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace xilab {

/// Dense truncated series c_0 + c_1 x + ... + c_K x^K.
class TaylorSeries {
public:
    TaylorSeries() : coeffs_(1, Real(0)) {}
    explicit TaylorSeries(std::size_t order) : coeffs_(order + 1, Real(0)) {}
    explicit TaylorSeries(std::vector<Real> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) coeffs_.emplace_back(0);
    }
    TaylorSeries(std::initializer_list<Real> coeffs) : TaylorSeries(std::vector<Real>(coeffs)) {}

    static TaylorSeries constant(const Real& c, std::size_t order) {
        TaylorSeries s(order);
        s[0] = c;
        return s;
    }
    /// x itself, truncated at `order` (order >= 1).
    static TaylorSeries identity(std::size_t order) {
        TaylorSeries s(order);
        if (order >= 1) s[1] = 1;
        return s;
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    const std::vector<Real>& coeffs() const { return coeffs_; }
    Real& operator[](std::size_t n) { return coeffs_[n]; }
    const Real& operator[](std::size_t n) const { return coeffs_[n]; }

    TaylorSeries truncated(std::size_t order) const {
        std::vector<Real> c(coeffs_.begin(), coeffs_.begin() + std::min(order, this->order()) + 1);
        c.resize(order + 1, Real(0));
        return TaylorSeries(std::move(c));
    }

    Real evaluate(const Real& x) const {
        Real acc = coeffs_.back();
        for (std::size_t n = coeffs_.size() - 1; n-- > 0;) acc = acc * x + coeffs_[n];
        return acc;
    }

    Real max_abs() const {
        Real m(0);
        for (const auto& c : coeffs_) m = std::max(m, Real(abs(c)));
        return m;
    }

private:
    std::vector<Real> coeffs_;
};

inline TaylorSeries series_add(const TaylorSeries& s, const TaylorSeries& t) {
    const std::size_t k = std::min(s.order(), t.order());
    TaylorSeries r(k);
    for (std::size_t n = 0; n <= k; ++n) r[n] = s[n] + t[n];
    return r;
}

inline TaylorSeries series_sub(const TaylorSeries& s, const TaylorSeries& t) {
    const std::size_t k = std::min(s.order(), t.order());
    TaylorSeries r(k);
    for (std::size_t n = 0; n <= k; ++n) r[n] = s[n] - t[n];
    return r;
}

inline TaylorSeries series_scale(const TaylorSeries& s, const Real& c) {
    TaylorSeries r(s.order());
    for (std::size_t n = 0; n <= s.order(); ++n) r[n] = s[n] * c;
    return r;
}

/// Cauchy product truncated to the smaller order.
inline TaylorSeries series_mul(const TaylorSeries& s, const TaylorSeries& t) {
    const std::size_t k = std::min(s.order(), t.order());
    TaylorSeries r(k);
    for (std::size_t i = 0; i <= k; ++i) {
        if (s[i] == 0) continue;
        for (std::size_t j = 0; i + j <= k; ++j) r[i + j] += s[i] * t[j];
    }
    return r;
}

inline TaylorSeries operator+(const TaylorSeries& s, const TaylorSeries& t) { return series_add(s, t); }
inline TaylorSeries operator-(const TaylorSeries& s, const TaylorSeries& t) { return series_sub(s, t); }
inline TaylorSeries operator*(const TaylorSeries& s, const TaylorSeries& t) { return series_mul(s, t); }
inline TaylorSeries operator*(const TaylorSeries& s, const Real& c) { return series_scale(s, c); }
inline TaylorSeries operator*(const Real& c, const TaylorSeries& s) { return series_scale(s, c); }

inline TaylorSeries series_derivative(const TaylorSeries& s) {
    if (s.order() == 0) return TaylorSeries(0);
    TaylorSeries r(s.order() - 1);
    for (std::size_t n = 1; n <= s.order(); ++n) r[n - 1] = s[n] * n;
    return r;
}

/// exp(f) from (exp f)' = f' exp f:  n e_n = sum_{k=1}^n k f_k e_{n-k}.
inline TaylorSeries series_exp(const TaylorSeries& f) {
    const std::size_t K = f.order();
    TaylorSeries e(K);
    e[0] = exp(f[0]);
    for (std::size_t n = 1; n <= K; ++n) {
        Real acc(0);
        for (std::size_t k = 1; k <= n; ++k) acc += f[k] * e[n - k] * k;
        e[n] = acc / n;
    }
    return e;
}

/// log(f) from (log f)' = f'/f:  n l_n f_0 = n f_n - sum_{k=1}^{n-1} k l_k f_{n-k}.
inline TaylorSeries series_log(const TaylorSeries& f) {
    if (f[0] <= 0)
        throw Error(ErrorKind::NonPositiveConstantTerm,
                    "series_log needs c_0 > 0, got " + to_short(f[0]));
    const std::size_t K = f.order();
    TaylorSeries l(K);
    l[0] = log(f[0]);
    for (std::size_t n = 1; n <= K; ++n) {
        Real acc = f[n] * n;
        for (std::size_t k = 1; k < n; ++k) acc -= l[k] * f[n - k] * k;
        l[n] = acc / (f[0] * n);
    }
    return l;
}

/// f(g(x)) for g(0) = 0, Horner form truncated at min(order f, order g).
inline TaylorSeries series_compose(const TaylorSeries& f, const TaylorSeries& g) {
    if (g[0] != 0)
        throw Error(ErrorKind::NonzeroInnerConstant,
                    "series_compose needs g(0) = 0, got " + to_short(g[0]));
    const std::size_t K = std::min(f.order(), g.order());
    TaylorSeries acc = TaylorSeries::constant(f[K], K);
    const TaylorSeries inner = g.truncated(K);
    for (std::size_t n = K; n-- > 0;) {
        acc = series_mul(acc, inner);
        acc[0] += f[n];
    }
    return acc;
}

/// exp(c x) to the given order.
inline TaylorSeries exp_linear(const Real& c, std::size_t order) {
    TaylorSeries s(order);
    Real term(1);
    for (std::size_t n = 0; n <= order; ++n) {
        s[n] = term;
        term = term * c / (n + 1);
    }
    return s;
}

/// Polynomial in one variable, coefficients lowest degree first.
using PolyCoeffs = std::vector<Real>;

inline PolyCoeffs poly_mul(const PolyCoeffs& p, const PolyCoeffs& q) {
    if (p.empty() || q.empty()) return {};
    PolyCoeffs r(p.size() + q.size() - 1, Real(0));
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
    }
    return r;
}

inline void poly_axpy(PolyCoeffs& acc, const Real& a, const PolyCoeffs& x) {
    if (acc.size() < x.size()) acc.resize(x.size(), Real(0));
    for (std::size_t i = 0; i < x.size(); ++i) acc[i] += a * x[i];
}

/// Series in `a` whose coefficient of a^m is a polynomial in `b`.
/// Built from exponents whose a^m coefficient has b-degree <= m, a property
/// that products and exp preserve.
class BiSeries {
public:
    explicit BiSeries(std::size_t order) : coeffs_(order + 1, PolyCoeffs{Real(0)}) {}

    std::size_t order() const { return coeffs_.size() - 1; }
    PolyCoeffs& operator[](std::size_t m) { return coeffs_[m]; }
    const PolyCoeffs& operator[](std::size_t m) const { return coeffs_[m]; }

    /// Highest b-power carrying a nonzero coefficient in the a^m slot (-1 if zero).
    int b_degree(std::size_t m) const {
        const auto& c = coeffs_[m];
        for (std::size_t i = c.size(); i-- > 0;)
            if (c[i] != 0) return static_cast<int>(i);
        return -1;
    }

    bool is_triangular() const {
        for (std::size_t m = 0; m <= order(); ++m)
            if (b_degree(m) > static_cast<int>(m)) return false;
        return true;
    }

private:
    std::vector<PolyCoeffs> coeffs_;
};

/// exp of a BiSeries with a b-free constant term, same recurrence as series_exp.
inline BiSeries biseries_exp(const BiSeries& f) {
    if (f.b_degree(0) > 0)
        throw Error(ErrorKind::InvalidArgument, "biseries_exp needs a b-free constant term");
    const std::size_t K = f.order();
    BiSeries e(K);
    e[0] = PolyCoeffs{exp(f[0][0])};
    for (std::size_t n = 1; n <= K; ++n) {
        PolyCoeffs acc{Real(0)};
        for (std::size_t k = 1; k <= n; ++k) {
            PolyCoeffs term = poly_mul(f[k], e[n - k]);
            poly_axpy(acc, Real(k), term);
        }
        for (auto& c : acc) c /= n;
        e[n] = std::move(acc);
    }
    return e;
}

}  // namespace xilab
