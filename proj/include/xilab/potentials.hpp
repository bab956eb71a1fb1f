#pragma once

// The Fourier kernels Phi(x) and potentials U(x) = -log Phi(x), with point
// evaluation and exact Taylor expansion at x = 0.

#include "xilab/real.hpp"
#include "xilab/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace xilab {

enum class KernelKind { RiemannXi, RamanujanL, EtaGamma, Cosh, Monomial, Explicit };

inline std::string to_string(KernelKind k) {
    switch (k) {
    case KernelKind::RiemannXi: return "riemann";
    case KernelKind::RamanujanL: return "ramanujan";
    case KernelKind::EtaGamma: return "eta_gamma";
    case KernelKind::Cosh: return "cosh";
    case KernelKind::Monomial: return "monomial";
    case KernelKind::Explicit: return "explicit";
    }
    return "unknown";
}

inline KernelKind kernel_kind_from_string(const std::string& name) {
    if (name == "riemann" || name == "riemann_xi") return KernelKind::RiemannXi;
    if (name == "ramanujan" || name == "ramanujan_l") return KernelKind::RamanujanL;
    if (name == "eta_gamma" || name == "etagamma" || name == "eta") return KernelKind::EtaGamma;
    if (name == "cosh") return KernelKind::Cosh;
    if (name == "monomial") return KernelKind::Monomial;
    if (name == "explicit") return KernelKind::Explicit;
    throw Error(ErrorKind::InvalidArgument, "unknown potential kind '" + name + "'");
}

struct PotentialSpec {
    KernelKind kind = KernelKind::RiemannXi;
    int degree = 0;         // Monomial: U = x^degree / degree, degree even and positive
    int p = 0;              // Explicit: leading term x^{p+1}/(p+1)
    std::vector<Real> s;    // Explicit: s_1, s_2, ...; U gets s_k x^{k+1}/(k+1)
    int max_terms = 64;
    std::optional<Real> term_tolerance;  // default 10^{-(precision+10)}

    static PotentialSpec riemann() { return {KernelKind::RiemannXi}; }
    static PotentialSpec ramanujan() { return {KernelKind::RamanujanL}; }
    static PotentialSpec eta_gamma() { return {KernelKind::EtaGamma}; }
    static PotentialSpec cosh_kernel() { return {KernelKind::Cosh}; }
    static PotentialSpec monomial(int degree) {
        PotentialSpec sp{KernelKind::Monomial};
        sp.degree = degree;
        sp.validate();
        return sp;
    }
    static PotentialSpec explicit_couplings(int p, std::vector<Real> s) {
        PotentialSpec sp{KernelKind::Explicit};
        sp.p = p;
        sp.s = std::move(s);
        sp.validate();
        return sp;
    }

    Real tolerance() const {
        return term_tolerance ? *term_tolerance : tiny(static_cast<int>(working_precision()) + 10);
    }

    void validate() const {
        if (kind == KernelKind::Monomial && (degree <= 0 || degree % 2 != 0))
            throw Error(ErrorKind::InvalidArgument, "monomial degree must be a positive even integer");
        if (kind == KernelKind::Explicit) {
            if (p < 2) throw Error(ErrorKind::InvalidArgument, "explicit potential needs p >= 2");
            if (static_cast<int>(s.size()) > p - 1)
                throw Error(ErrorKind::InvalidArgument, "explicit potential has more than p-1 couplings");
        }
        if (max_terms < 1) throw Error(ErrorKind::InvalidArgument, "max_terms must be positive");
    }

    /// Whether U(-x) = U(x) holds by construction.
    bool is_even() const {
        switch (kind) {
        case KernelKind::RiemannXi:
        case KernelKind::RamanujanL:
        case KernelKind::Cosh:
        case KernelKind::Monomial:
            return true;
        case KernelKind::EtaGamma:
            return false;
        case KernelKind::Explicit:
            if ((p + 1) % 2 != 0) return false;
            for (std::size_t k = 0; k < s.size(); ++k)
                if ((k + 2) % 2 != 0 && s[k] != 0) return false;
            return true;
        }
        return false;
    }

    std::string describe() const;
};

struct KernelValue {
    Real phi;
    std::optional<Real> phi_prime;
};

/// Phi(x) = sum_n (4 pi^2 n^4 e^{9x/2} - 6 pi n^2 e^{5x/2}) exp(-pi n^2 e^{2x}) and its
/// derivative. Negative x is evaluated through Phi(-x) = Phi(x), where the theta
/// sum converges fastest.
inline KernelValue phi_riemann(const Real& x, int max_terms, const Real& term_tolerance) {
    const bool flip = x < 0;
    const Real y = flip ? Real(-x) : x;
    const Real p = pi();
    const Real e2 = exp(2 * y);
    const Real e9 = exp(9 * y / 2);
    const Real e5 = exp(5 * y / 2);
    const Real e13 = exp(13 * y / 2);
    Real phi(0), dphi(0);
    for (int n = 1;; ++n) {
        const Real n2 = Real(n) * n;
        const Real damp = exp(-p * n2 * e2);
        const Real t = (4 * p * p * n2 * n2 * e9 - 6 * p * n2 * e5) * damp;
        const Real dt = (30 * p * p * n2 * n2 * e9 - 15 * p * n2 * e5 - 8 * p * p * p * n2 * n2 * n2 * e13) * damp;
        phi += t;
        dphi += dt;
        if (abs(t) < term_tolerance && abs(dt) < term_tolerance) break;
        if (n >= max_terms)
            throw Error(ErrorKind::NonConvergence,
                        "Riemann theta sum not converged after " + std::to_string(max_terms) + " terms");
    }
    if (flip) dphi = -dphi;
    return {phi, dphi};
}

/// Phi_L(x) = e^{-6x} e^{-2 pi e^{-x}} prod_n (1 - e^{-2 pi n e^{-x}})^24. Even in x;
/// positive x is evaluated at -x where the product converges fastest.
inline KernelValue phi_ramanujan(const Real& x, int max_terms, const Real& term_tolerance) {
    const Real y = x > 0 ? Real(-x) : x;
    const Real w = 2 * pi() * exp(-y);
    Real log_prod(0);
    for (int n = 1;; ++n) {
        const Real qn = exp(-w * n);
        log_prod += 24 * log1p(-qn);
        // factor (1 - q^n)^24 differs from 1 by about 24 q^n
        if (24 * qn < term_tolerance) break;
        if (n >= max_terms)
            throw Error(ErrorKind::NonConvergence,
                        "Ramanujan product not converged after " + std::to_string(max_terms) + " factors");
    }
    return {exp(-6 * y - w + log_prod), std::nullopt};
}

/// U(x) for the Gamma * eta kernel: (x + log 2)/2 + e^{-(x + log 2)} + 1.
inline Real u_eta_gamma(const Real& x) {
    const Real t = x + ln2();
    return t / 2 + exp(-t) + 1;
}

/// Closed form of U'(x) for the Gamma * eta kernel.
inline Real du_eta_gamma(const Real& x) { return Real(1) / 2 - exp(-(x + ln2())); }

/// Point value of U(x) = -log Phi(x) for any potential kind.
inline Real u_value(const PotentialSpec& spec, const Real& x) {
    switch (spec.kind) {
    case KernelKind::RiemannXi:
        return -log(phi_riemann(x, spec.max_terms, spec.tolerance()).phi);
    case KernelKind::RamanujanL:
        return -log(phi_ramanujan(x, spec.max_terms, spec.tolerance()).phi);
    case KernelKind::EtaGamma:
        return u_eta_gamma(x);
    case KernelKind::Cosh:
        return cosh(x);
    case KernelKind::Monomial:
        return pow(x, spec.degree) / spec.degree;
    case KernelKind::Explicit: {
        Real acc = pow(x, spec.p + 1) / (spec.p + 1);
        for (std::size_t k = 0; k < spec.s.size(); ++k) {
            const int n = static_cast<int>(k) + 2;
            acc += spec.s[k] * pow(x, n) / n;
        }
        return acc;
    }
    }
    return Real(0);
}

namespace detail {

inline TaylorSeries riemann_phi_series(std::size_t order, int max_terms, const Real& tol,
                                       bool derivative) {
    const Real p = pi();
    const TaylorSeries e2 = exp_linear(Real(2), order);
    const TaylorSeries e9 = exp_linear(Real(9) / 2, order);
    const TaylorSeries e5 = exp_linear(Real(5) / 2, order);
    const TaylorSeries e13 = exp_linear(Real(13) / 2, order);
    TaylorSeries sum(order);
    for (int n = 1;; ++n) {
        const Real n2 = Real(n) * n;
        const TaylorSeries damp = series_exp(e2 * Real(-p * n2));
        TaylorSeries prefactor = derivative
            ? e9 * Real(30 * p * p * n2 * n2) - e5 * Real(15 * p * n2) - e13 * Real(8 * p * p * p * n2 * n2 * n2)
            : e9 * Real(4 * p * p * n2 * n2) - e5 * Real(6 * p * n2);
        const TaylorSeries term = prefactor * damp;
        sum = sum + term;
        if (term.max_abs() < tol) break;
        if (n >= max_terms)
            throw Error(ErrorKind::NonConvergence,
                        "Riemann theta series not converged after " + std::to_string(max_terms) + " terms");
    }
    return sum;
}

inline TaylorSeries ramanujan_phi_series(std::size_t order, int max_terms, const Real& tol) {
    const Real two_pi = 2 * pi();
    const TaylorSeries em = exp_linear(Real(-1), order);
    TaylorSeries product = TaylorSeries::constant(Real(1), order);
    for (int n = 1;; ++n) {
        const TaylorSeries qn = series_exp(em * Real(-two_pi * n));
        const TaylorSeries one_minus = TaylorSeries::constant(Real(1), order) - qn;
        const TaylorSeries factor = series_exp(series_log(one_minus) * Real(24));
        product = product * factor;
        const TaylorSeries dev = factor - TaylorSeries::constant(Real(1), order);
        if (dev.max_abs() < tol) break;
        if (n >= max_terms)
            throw Error(ErrorKind::NonConvergence,
                        "Ramanujan product series not converged after " + std::to_string(max_terms) + " factors");
    }
    TaylorSeries prefix(order);  // -6x - 2 pi e^{-x}
    if (order >= 1) prefix[1] = -6;
    prefix = prefix - em * two_pi;
    return series_exp(prefix) * product;
}

}  // namespace detail

/// Taylor series of Phi'(x) for the Riemann kernel, summed term by term.
inline TaylorSeries riemann_phi_prime_series(std::size_t order, int max_terms, const Real& tol) {
    return detail::riemann_phi_series(order, max_terms, tol, true);
}

inline TaylorSeries riemann_phi_series(std::size_t order, int max_terms, const Real& tol) {
    return detail::riemann_phi_series(order, max_terms, tol, false);
}

/// Taylor expansion of U at 0 by exact series composition.
inline TaylorSeries taylor_u(const PotentialSpec& spec, std::size_t order) {
    if (order < 2) throw Error(ErrorKind::InvalidArgument, "taylor_u needs order >= 2");
    spec.validate();
    switch (spec.kind) {
    case KernelKind::RiemannXi:
        return series_log(riemann_phi_series(order, spec.max_terms, spec.tolerance())) * Real(-1);
    case KernelKind::RamanujanL:
        return series_log(detail::ramanujan_phi_series(order, spec.max_terms, spec.tolerance())) * Real(-1);
    case KernelKind::EtaGamma: {
        TaylorSeries lin(order);
        lin[0] = ln2() / 2 + 1;
        lin[1] = Real(1) / 2;
        return lin + exp_linear(Real(-1), order) * Real(Real(1) / 2);
    }
    case KernelKind::Cosh: {
        const TaylorSeries e = series_compose(exp_linear(Real(1), order), TaylorSeries::identity(order));
        const TaylorSeries em = exp_linear(Real(-1), order);
        return (e + em) * Real(Real(1) / 2);
    }
    case KernelKind::Monomial: {
        TaylorSeries u(order);
        if (static_cast<std::size_t>(spec.degree) <= order) u[spec.degree] = Real(1) / spec.degree;
        return u;
    }
    case KernelKind::Explicit: {
        TaylorSeries u(order);
        if (static_cast<std::size_t>(spec.p + 1) <= order) u[spec.p + 1] = Real(1) / (spec.p + 1);
        for (std::size_t k = 0; k < spec.s.size(); ++k) {
            const std::size_t n = k + 2;
            if (n <= order) u[n] += spec.s[k] / n;
        }
        return u;
    }
    }
    return TaylorSeries(order);
}

inline std::string PotentialSpec::describe() const {
    switch (kind) {
    case KernelKind::RiemannXi: return "-log Phi(x)";
    case KernelKind::RamanujanL: return "-log Phi_L(x)";
    case KernelKind::EtaGamma: return "(x+log2)/2 + exp(-(x+log2)) + 1";
    case KernelKind::Cosh: return "cosh(x)";
    case KernelKind::Monomial: return "x^" + std::to_string(degree) + "/" + std::to_string(degree);
    case KernelKind::Explicit: {
        std::string d = "x^" + std::to_string(p + 1) + "/" + std::to_string(p + 1);
        for (std::size_t k = 0; k < s.size(); ++k) {
            if (s[k] == 0) continue;
            const int n = static_cast<int>(k) + 2;
            d += " + " + to_short(s[k]) + " x^" + std::to_string(n) + "/" + std::to_string(n);
        }
        return d;
    }
    }
    return "";
}

}  // namespace xilab
