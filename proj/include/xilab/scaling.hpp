#pragma once

// Normalization of a Taylor-expanded potential into the (p,1) model form
// x^{p+1}/(p+1) + sum_n s_{n-1} x^n / n + a_0, and the double-scaling
// parameters epsilon and g.

#include "xilab/real.hpp"
#include "xilab/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace xilab {

/// Normalized potential. `s[k-1]` holds s_k for k = 1..p-1; s_k multiplies
/// x^{k+1}/(k+1). The degree-p coupling s_{p-1} vanishes for even kernels.
struct ScaledPotential {
    int p = 0;
    std::vector<Real> s;
    Real a0{0};
    Real lambda{1};
    Real linear_residual{0};  // coefficient of x in the normalized form (absent from the model)

    const Real& coupling(int k) const { return s.at(static_cast<std::size_t>(k - 1)); }

    /// Coefficient of x^n in the normalized form, n = 2..p.
    Real normalized_coefficient(int n) const { return coupling(n - 1) / n; }

    /// Coefficient of x^p, absent from the even-kernel model form.
    Real top_residual() const { return s.empty() ? Real(0) : Real(s.back() / p); }

    /// U_p(x) rebuilt from the couplings (including the linear residual).
    TaylorSeries to_series() const {
        TaylorSeries u(static_cast<std::size_t>(p + 1));
        u[0] = a0;
        u[1] = linear_residual;
        for (int n = 2; n <= p; ++n) u[n] = coupling(n - 1) / n;
        u[p + 1] = Real(1) / (p + 1);
        return u;
    }
};

/// lambda = (a_{p+1}(p+1))^{1/(p+1)},  s_{n-1} = n a_n lambda^{-n}  for n = 2..p.
inline ScaledPotential rescale_potential(const TaylorSeries& u, int p) {
    if (p < 2) throw Error(ErrorKind::InvalidArgument, "rescale_potential needs p >= 2");
    if (u.order() < static_cast<std::size_t>(p + 1))
        throw Error(ErrorKind::IncompatibleOrder,
                    "series order " + std::to_string(u.order()) + " < p+1 = " + std::to_string(p + 1));
    const Real& lead = u[p + 1];
    if (lead <= 0)
        throw Error(ErrorKind::NonPositiveLeadingCoefficient,
                    "a_{p+1} = " + to_short(lead) + " must be positive");
    ScaledPotential sp;
    sp.p = p;
    sp.lambda = pow(Real(lead * (p + 1)), Real(1) / (p + 1));
    sp.a0 = u[0];
    sp.linear_residual = u[1] / sp.lambda;
    sp.s.reserve(static_cast<std::size_t>(p - 1));
    Real lam_pow = sp.lambda;
    for (int n = 2; n <= p; ++n) {
        lam_pow *= sp.lambda;
        sp.s.push_back(u[n] * n / lam_pow);
    }
    return sp;
}

/// Closed-form couplings of the cosh potential: s_{2j+1} = (p!)^{(2j+2)/(p+1)} / (2j+1)!.
inline ScaledPotential cosh_couplings(int p) {
    if (p < 3 || p % 2 == 0) throw Error(ErrorKind::InvalidArgument, "cosh_couplings needs odd p >= 3");
    Real pfact(1);
    for (int i = 2; i <= p; ++i) pfact *= i;
    ScaledPotential sp;
    sp.p = p;
    sp.a0 = 1;
    sp.lambda = pow(pfact, Real(-1) / (p + 1));
    sp.s.assign(static_cast<std::size_t>(p - 1), Real(0));
    Real kfact(1);
    for (int k = 1; k <= p - 2; ++k) {
        kfact *= k;
        if (k % 2 == 1) sp.s[k - 1] = pow(pfact, Real(k + 1) / (p + 1)) / kfact;
    }
    return sp;
}

enum class GMode { Corrected, Plain, Explicit };

inline std::string to_string(GMode m) {
    switch (m) {
    case GMode::Corrected: return "corrected";
    case GMode::Plain: return "plain";
    case GMode::Explicit: return "explicit";
    }
    return "unknown";
}

inline GMode g_mode_from_string(const std::string& s) {
    if (s == "corrected") return GMode::Corrected;
    if (s == "plain") return GMode::Plain;
    if (s == "explicit") return GMode::Explicit;
    throw Error(ErrorKind::InvalidArgument, "unknown g-mode '" + s + "'");
}

struct ModelParams {
    int p = 2;
    int N = 1;
    Real epsilon{1};
    Real g{1};
    std::vector<Real> s;  // s_1..s_{p-1}, absent entries are zero
    GMode g_mode = GMode::Corrected;

    Real coupling(int k) const {
        return k >= 1 && static_cast<std::size_t>(k) <= s.size() ? s[k - 1] : Real(0);
    }
};

/// epsilon = N^{-1/(p+1)};  g = (1/N)(1 + sum_k s_k eps^{p-k}) in corrected mode,
/// 1/N in plain mode, or a caller-supplied value in explicit mode.
inline ModelParams double_scaling(int p, int N, std::vector<Real> s, GMode mode = GMode::Corrected,
                                  std::optional<Real> explicit_g = std::nullopt) {
    if (N < 1) throw Error(ErrorKind::InvalidArgument, "N must be >= 1");
    if (p < 2) throw Error(ErrorKind::InvalidArgument, "p must be >= 2");
    if (static_cast<int>(s.size()) > p - 1)
        throw Error(ErrorKind::InvalidArgument, "at most p-1 couplings allowed");
    ModelParams mp;
    mp.p = p;
    mp.N = N;
    mp.s = std::move(s);
    mp.g_mode = mode;
    mp.epsilon = pow(Real(N), Real(-1) / (p + 1));
    switch (mode) {
    case GMode::Plain:
        mp.g = Real(1) / N;
        break;
    case GMode::Corrected: {
        Real corr(1);
        for (int k = 1; k <= static_cast<int>(mp.s.size()); ++k)
            corr += mp.s[k - 1] * pow(mp.epsilon, p - k);
        mp.g = corr / N;
        break;
    }
    case GMode::Explicit:
        if (!explicit_g) throw Error(ErrorKind::InvalidArgument, "explicit g-mode needs a g value");
        mp.g = *explicit_g;
        break;
    }
    if (mp.g <= 0)
        throw Error(ErrorKind::NonPositiveG, "g = " + to_short(mp.g) + " (couplings outside model validity)");
    return mp;
}

inline ModelParams double_scaling(const ScaledPotential& sp, int N, GMode mode = GMode::Corrected,
                                  std::optional<Real> explicit_g = std::nullopt) {
    return double_scaling(sp.p, N, sp.s, mode, std::move(explicit_g));
}

}  // namespace xilab
