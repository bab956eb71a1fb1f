#pragma once

#include "xilab/real.hpp"

#include <map>
#include <mutex>
#include <utility>
#include <vector>

namespace xilab {

struct GaussLegendreRule {
    std::vector<Real> nodes;    // on [-1, 1], ascending
    std::vector<Real> weights;
};

namespace detail {

/// P_n(x) and P_n'(x) by the three-term recurrence.
inline std::pair<Real, Real> legendre_with_derivative(int n, const Real& x) {
    Real p0(1), p1 = x;
    for (int k = 2; k <= n; ++k) {
        Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = std::move(p1);
        p1 = std::move(p2);
    }
    const Real dp = n * (x * p1 - p0) / (x * x - 1);
    return {p1, dp};
}

inline GaussLegendreRule compute_gauss_legendre(int n) {
    GaussLegendreRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    const Real p = pi();
    const Real tol = tiny(static_cast<int>(working_precision()) + 2);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        Real x = cos(p * (i + Real(3) / 4) / (n + Real(1) / 2));
        Real dp;
        for (int it = 0; it < 100; ++it) {
            auto [pn, d] = legendre_with_derivative(n, x);
            const Real dx = pn / d;
            x -= dx;
            dp = d;
            if (abs(dx) < tol) break;
        }
        dp = legendre_with_derivative(n, x).second;
        const Real w = 2 / ((1 - x * x) * dp * dp);
        rule.nodes[n - 1 - i] = x;
        rule.nodes[i] = -x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

}  // namespace detail

/// n-point Gauss-Legendre rule at the current working precision (cached).
inline const GaussLegendreRule& gauss_legendre(int n) {
    static std::mutex mu;
    static std::map<std::pair<int, unsigned>, GaussLegendreRule> cache;
    const auto key = std::make_pair(n, working_precision());
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, detail::compute_gauss_legendre(n)).first;
    return it->second;
}

}  // namespace xilab
