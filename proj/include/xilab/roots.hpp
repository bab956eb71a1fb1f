#pragma once

// All complex roots of a real polynomial by Aberth-Ehrlich iteration at
// working precision, with real/complex-pair classification.

#include "xilab/polynomial.hpp"
#include "xilab/real.hpp"

#include <algorithm>
#include <cstddef>
#include <vector>

namespace xilab {

struct RootOptions {
    int max_sweeps = 200;
    Real start_angle{Real(7) / 10};  // deterministic offset of the initial circle
    int polish_steps = 2;
};

struct RootSet {
    std::vector<Complex> roots;
    std::vector<Real> residuals;   // backward error |Q(z)| / sum |q_k| |z|^k
    std::vector<bool> is_real;
    std::vector<int> pair_id;      // -1 for real roots; partners share an id
    Real im_tolerance{0};
    bool on_critical_line = false;
    int sweeps = 0;

    std::size_t size() const { return roots.size(); }

    int complex_pair_count() const {
        int m = -1;
        for (int id : pair_id) m = std::max(m, id);
        return m + 1;
    }

    /// Real roots in ascending order.
    std::vector<Real> real_roots() const {
        std::vector<Real> r;
        for (std::size_t i = 0; i < roots.size(); ++i)
            if (is_real[i]) r.push_back(roots[i].re);
        std::sort(r.begin(), r.end());
        return r;
    }

    /// One representative (positive imaginary part) per conjugate pair.
    std::vector<Complex> complex_pairs() const {
        std::vector<Complex> out;
        for (std::size_t i = 0; i < roots.size(); ++i)
            if (!is_real[i] && roots[i].im > 0) out.push_back(roots[i]);
        std::sort(out.begin(), out.end(), [](const Complex& a, const Complex& b) { return a.re < b.re; });
        return out;
    }

    Real max_residual() const {
        Real m(0);
        for (const auto& r : residuals) m = std::max(m, r);
        return m;
    }
};

namespace detail {

inline void eval_with_derivative(const CharPolynomial& q, const Complex& z, Complex& p, Complex& dp) {
    p = Complex(q.leading());
    dp = Complex(0);
    for (std::size_t k = q.coeffs.size() - 1; k-- > 0;) {
        dp = dp * z + p;
        p = p * z + Complex(q[k]);
    }
}

inline Real backward_error(const CharPolynomial& q, const Complex& z) {
    const Real az = abs(z);
    Real scale(0), zk(1);
    for (const auto& c : q.coeffs) {
        scale += abs(c) * zk;
        zk *= az;
    }
    const Real v = abs(q.evaluate(z));
    return scale == 0 ? v : Real(v / scale);
}

/// Fujiwara bound on |root| of sum c_k x^k.
inline Real fujiwara_bound(const CharPolynomial& q) {
    const int n = q.degree();
    const Real lead = abs(q.leading());
    Real bound(0);
    for (int k = 1; k <= n; ++k) {
        Real ratio = abs(q[n - k]) / lead;
        if (k == n) ratio /= 2;
        if (ratio == 0) continue;
        bound = std::max(bound, Real(pow(ratio, Real(1) / k)));
    }
    return 2 * bound;
}

}  // namespace detail

inline Real default_im_tolerance() { return tiny(8); }

/// Marks a root real iff |Im| < tol (1 + |Re|), then symmetrizes: real roots get
/// Im = 0 exactly, complex roots are paired with their nearest conjugate and
/// replaced by an exact conjugate pair.
inline RootSet classify(RootSet rs, const Real& im_tolerance) {
    const std::size_t n = rs.roots.size();
    rs.im_tolerance = im_tolerance;
    rs.is_real.assign(n, false);
    rs.pair_id.assign(n, -1);
    std::vector<std::size_t> complex_idx;
    for (std::size_t i = 0; i < n; ++i) {
        if (abs(rs.roots[i].im) < im_tolerance * (1 + abs(rs.roots[i].re))) {
            rs.is_real[i] = true;
            rs.roots[i].im = 0;
        } else {
            complex_idx.push_back(i);
        }
    }
    std::vector<bool> used(n, false);
    int next_id = 0;
    for (std::size_t a : complex_idx) {
        if (used[a]) continue;
        std::size_t best = n;
        Real best_d(0);
        for (std::size_t b : complex_idx) {
            if (b == a || used[b]) continue;
            const Real d = abs(rs.roots[b] - conj(rs.roots[a]));
            if (best == n || d < best_d) {
                best = b;
                best_d = d;
            }
        }
        used[a] = true;
        if (best == n) {
            // unpaired complex root of a real polynomial: cannot happen at adequate precision
            throw Error(ErrorKind::NoConvergence, "complex root without conjugate partner");
        }
        used[best] = true;
        const Real re = (rs.roots[a].re + rs.roots[best].re) / 2;
        const Real im = (abs(rs.roots[a].im) + abs(rs.roots[best].im)) / 2;
        rs.roots[a] = Complex(re, rs.roots[a].im > 0 ? im : Real(-im));
        rs.roots[best] = conj(rs.roots[a]);
        rs.pair_id[a] = rs.pair_id[best] = next_id++;
    }
    rs.on_critical_line = complex_idx.empty();
    return rs;
}

inline RootSet find_roots(const CharPolynomial& q, const RootOptions& opt = {}) {
    const int n = q.degree();
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "find_roots needs degree >= 1");
    if (q.leading() == 0) throw Error(ErrorKind::InvalidArgument, "leading coefficient is zero");
    const int prec = static_cast<int>(working_precision());
    const Real step_tol = tiny(prec - 8);
    const Real accept_tol = tiny(prec / 2);

    // start on a circle around the root centroid
    const Real center = -q[n - 1] / (q.leading() * n);
    const Real radius = std::max(detail::fujiwara_bound(q.shifted(center)), Real(tiny(3)));
    const Real two_pi = 2 * pi();
    std::vector<Complex> z(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        z[k] = Complex(center) + polar(radius, two_pi * k / n + opt.start_angle);

    RootSet rs;
    std::vector<Complex> delta(static_cast<std::size_t>(n));
    int sweep = 0;
    for (; sweep < opt.max_sweeps; ++sweep) {
        bool small = true;
        for (int k = 0; k < n; ++k) {
            Complex p, dp;
            detail::eval_with_derivative(q, z[k], p, dp);
            if (p.re == 0 && p.im == 0) {
                delta[k] = Complex(0);
                continue;
            }
            const Complex w = p / dp;
            Complex s(0);
            for (int j = 0; j < n; ++j)
                if (j != k) s += Complex(1) / (z[k] - z[j]);
            delta[k] = w / (Complex(1) - w * s);
            if (abs(delta[k]) > step_tol * (1 + abs(z[k]))) small = false;
        }
        for (int k = 0; k < n; ++k) z[k] -= delta[k];
        if (small) {
            ++sweep;
            break;
        }
    }

    for (int k = 0; k < n; ++k) {
        for (int it = 0; it < opt.polish_steps; ++it) {
            Complex p, dp;
            detail::eval_with_derivative(q, z[k], p, dp);
            if (dp.re == 0 && dp.im == 0) break;
            const Complex cand = z[k] - p / dp;
            if (detail::backward_error(q, cand) <= detail::backward_error(q, z[k])) z[k] = cand;
        }
    }

    rs.roots = z;
    rs.sweeps = sweep;
    rs.residuals.reserve(z.size());
    for (const auto& r : z) {
        rs.residuals.push_back(detail::backward_error(q, r));
        if (rs.residuals.back() >= accept_tol)
            throw Error(ErrorKind::NoConvergence,
                        "Aberth iteration did not reach backward error 1e-" + std::to_string(prec / 2) +
                            " (precision too low for the coefficient spread?)");
    }
    return classify(std::move(rs), default_im_tolerance());
}

/// max_k |recon_k - q_k| / max_k |q_k| where recon = q_N prod (b - r_i).
inline Real reconstruction_error(const CharPolynomial& q, const RootSet& rs) {
    const std::vector<Complex> recon = expand_from_roots(rs.roots, q.leading());
    Real err(0);
    for (std::size_t k = 0; k < q.coeffs.size(); ++k)
        err = std::max(err, Real(abs(recon[k] - Complex(q[k]))));
    return err / q.max_abs_coeff();
}

/// 10^{-(P - 15 - log10 kappa)}, kappa the coefficient spread.
inline Real reconstruction_bound(const CharPolynomial& q) {
    const Real digits = Real(working_precision()) - 15 - log10(q.coefficient_spread());
    return pow(Real(10), -digits);
}

}  // namespace xilab
