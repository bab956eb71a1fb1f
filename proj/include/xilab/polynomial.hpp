#pragma once

#include "xilab/real.hpp"
#include "xilab/series.hpp"

#include <algorithm>
#include <cstddef>
#include <vector>

namespace xilab {

/// Degree-N polynomial in b, coefficients q_0..q_N (lowest degree first).
struct CharPolynomial {
    std::vector<Real> coeffs;

    CharPolynomial() = default;
    explicit CharPolynomial(std::vector<Real> c) : coeffs(std::move(c)) {}

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    const Real& operator[](std::size_t k) const { return coeffs[k]; }
    Real& operator[](std::size_t k) { return coeffs[k]; }
    const Real& leading() const { return coeffs.back(); }

    template <typename T>
    T evaluate(const T& x) const {
        T acc = T(coeffs.back());
        for (std::size_t k = coeffs.size() - 1; k-- > 0;) {
            acc = acc * x;
            acc += T(coeffs[k]);
        }
        return acc;
    }

    CharPolynomial derivative() const {
        if (coeffs.size() <= 1) return CharPolynomial({Real(0)});
        std::vector<Real> d(coeffs.size() - 1);
        for (std::size_t k = 1; k < coeffs.size(); ++k) d[k - 1] = coeffs[k] * k;
        return CharPolynomial(std::move(d));
    }

    CharPolynomial scaled(const Real& c) const {
        CharPolynomial r = *this;
        for (auto& q : r.coeffs) q *= c;
        return r;
    }

    CharPolynomial monic() const { return scaled(Real(1) / leading()); }

    /// Q(b + c) by repeated synthetic division (Taylor shift).
    CharPolynomial shifted(const Real& c) const {
        std::vector<Real> a = coeffs;
        const std::size_t n = a.size();
        for (std::size_t i = 0; i + 1 < n; ++i)
            for (std::size_t k = n - 1; k-- > i;) a[k] += c * a[k + 1];
        return CharPolynomial(std::move(a));
    }

    Real max_abs_coeff() const {
        Real m(0);
        for (const auto& q : coeffs) m = std::max(m, Real(abs(q)));
        return m;
    }

    /// Ratio of largest to smallest nonzero coefficient magnitude.
    Real coefficient_spread() const {
        Real lo(0), hi(0);
        for (const auto& q : coeffs) {
            if (q == 0) continue;
            const Real a = abs(q);
            if (lo == 0 || a < lo) lo = a;
            if (a > hi) hi = a;
        }
        return lo == 0 ? Real(1) : Real(hi / lo);
    }
};

/// Product of (b - r_i) times `lead`, complex arithmetic, real parts returned.
inline std::vector<Complex> expand_from_roots(const std::vector<Complex>& roots, const Real& lead) {
    std::vector<Complex> c{Complex(lead)};
    for (const auto& r : roots) {
        std::vector<Complex> next(c.size() + 1);
        for (std::size_t k = 0; k < c.size(); ++k) {
            next[k + 1] += c[k];
            next[k] -= c[k] * r;
        }
        c = std::move(next);
    }
    return c;
}

}  // namespace xilab
