#pragma once

// Baker-Akhiezer functions psi(z) = int e^{-U(x)} e^{izx} dx by composite
// Gauss-Legendre quadrature, real-zero location, and reference zero tables.

#include "xilab/potentials.hpp"
#include "xilab/quadrature.hpp"
#include "xilab/real.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace xilab {

struct BAOptions {
    int nodes_per_panel = 64;
    Real max_u_step{5};          // max variation of U across one panel
    Real max_panel_width{1};
    int refine = 1;              // split every panel into this many equal parts
    std::optional<Real> x_max;   // symmetric cutoff override; default solves U(X) = (P+5) ln 10
};

class BAFunction {
public:
    using Potential = std::function<Real(const Real&)>;

    BAFunction(Potential u, bool even, const BAOptions& opt = {}) : u_(std::move(u)), even_(even) {
        build(opt);
    }

    static BAFunction from_spec(const PotentialSpec& spec, const BAOptions& opt = {}) {
        return BAFunction([spec](const Real& x) { return u_value(spec, x); }, spec.is_even(), opt);
    }

    bool is_even() const { return even_; }
    const Real& x_lo() const { return x_lo_; }
    const Real& x_hi() const { return x_hi_; }
    std::size_t panel_count() const { return panels_; }
    std::size_t node_count() const { return nodes_.size(); }
    Real potential(const Real& x) const { return u_(x); }

    /// sum_i w_i e^{-U(x_i)} e^{i z x_i}. For even U and real z the imaginary
    /// part cancels analytically and is set to zero.
    Complex psi(const Complex& z) const {
        Real re(0), im(0);
        const bool real_axis = z.im == 0;
        for (std::size_t i = 0; i < nodes_.size(); ++i) {
            const Real& x = nodes_[i];
            Real mag = weights_[i];
            if (!real_axis) mag *= exp(-z.im * x);
            const Real ph = z.re * x;
            re += mag * cos(ph);
            if (!(even_ && real_axis)) im += mag * sin(ph);
        }
        return {re, im};
    }

    Real psi_real(const Real& z) const { return psi(Complex(z)).re; }

private:
    Real find_cutoff(const Real& target, int dir) const {
        Real lo(0), hi(dir);
        for (int it = 0; u_(hi) < target; ++it) {
            lo = hi;
            hi *= 2;
            if (it > 60) throw Error(ErrorKind::TailNotNegligible, "U does not grow fast enough for a cutoff");
        }
        const Real tol = tiny(12);
        while (abs(hi - lo) > tol * (1 + abs(hi))) {
            const Real mid = (lo + hi) / 2;
            if (u_(mid) < target) lo = mid;
            else hi = mid;
        }
        return hi;
    }

    void build(const BAOptions& opt) {
        const int prec = static_cast<int>(working_precision());
        const Real target = (prec + 5) * log(Real(10));
        if (opt.x_max) {
            x_hi_ = *opt.x_max;
            x_lo_ = -*opt.x_max;
        } else {
            x_hi_ = find_cutoff(target, +1);
            x_lo_ = even_ ? Real(-x_hi_) : find_cutoff(target, -1);
        }
        if (u_(x_hi_) < target || u_(x_lo_) < target)
            throw Error(ErrorKind::TailNotNegligible,
                        "e^{-U} at the cutoff exceeds 1e-" + std::to_string(prec + 5));

        std::vector<std::pair<Real, Real>> panels;
        Real a = x_lo_;
        Real ua = u_(a);
        while (a < x_hi_) {
            Real w = opt.max_panel_width;
            if (a + w > x_hi_) w = x_hi_ - a;
            Real ub = u_(a + w);
            while (abs(ub - ua) > opt.max_u_step && w > tiny(6)) {
                w /= 2;
                ub = u_(a + w);
            }
            const Real b = a + w;
            for (int r = 0; r < opt.refine; ++r)
                panels.emplace_back(a + w * r / opt.refine, a + w * (r + 1) / opt.refine);
            a = b;
            ua = ub;
        }
        panels_ = panels.size();

        const GaussLegendreRule& rule = gauss_legendre(opt.nodes_per_panel);
        nodes_.reserve(panels.size() * rule.nodes.size());
        weights_.reserve(nodes_.capacity());
        for (const auto& [lo, hi] : panels) {
            const Real half = (hi - lo) / 2;
            const Real mid = (hi + lo) / 2;
            for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
                const Real x = mid + half * rule.nodes[i];
                nodes_.push_back(x);
                weights_.push_back(half * rule.weights[i] * exp(-u_(x)));
            }
        }
    }

    Potential u_;
    bool even_;
    Real x_lo_, x_hi_;
    std::size_t panels_ = 0;
    std::vector<Real> nodes_;
    std::vector<Real> weights_;  // w_i e^{-U(x_i)}
};

enum class ZeroProvenance { Table, Quadrature };

struct ReferenceZeros {
    std::string id;
    std::vector<Real> zeros;
    ZeroProvenance provenance = ZeroProvenance::Table;
};

/// First `count` positive zeros of Re psi on the real axis: scan in steps of
/// `scan_step`, then bisect each sign change to `tolerance`.
inline ReferenceZeros psi_zeros(const BAFunction& f, int count, const Real& scan_step,
                                const Real& z_max = Real(60), const Real& tolerance = Real("1e-10")) {
    if (!f.is_even())
        throw Error(ErrorKind::InvalidArgument,
                    "psi_zeros needs an even potential (use psi_magnitude_minima otherwise)");
    ReferenceZeros out{"quadrature", {}, ZeroProvenance::Quadrature};
    Real z0 = scan_step / 2;
    Real f0 = f.psi_real(z0);
    while (static_cast<int>(out.zeros.size()) < count && z0 < z_max) {
        const Real z1 = z0 + scan_step;
        const Real f1 = f.psi_real(z1);
        if ((f0 < 0) != (f1 < 0)) {
            Real lo = z0, hi = z1, flo = f0;
            while (hi - lo > tolerance) {
                const Real mid = (lo + hi) / 2;
                const Real fm = f.psi_real(mid);
                if ((fm < 0) == (flo < 0)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            out.zeros.push_back((lo + hi) / 2);
        }
        z0 = z1;
        f0 = f1;
    }
    if (static_cast<int>(out.zeros.size()) < count)
        throw Error(ErrorKind::InsufficientZerosFound,
                    "found " + std::to_string(out.zeros.size()) + " of " + std::to_string(count) +
                        " zeros below z = " + to_short(z_max));
    return out;
}

/// Local minima of |psi| on a real grid with |psi| < ratio * |psi(0)|. Heuristic,
/// for complex-valued psi (non-even U); used for plotting only.
inline std::vector<Real> psi_magnitude_minima(const BAFunction& f, const Real& z_lo, const Real& z_hi,
                                              const Real& step, const Real& ratio = Real("1e-8")) {
    const Real ref = abs(f.psi(Complex(0)));
    std::vector<Real> out;
    Real zprev = z_lo, z = z_lo + step;
    Real mprev = abs(f.psi(Complex(zprev))), m = abs(f.psi(Complex(z)));
    while (z + step <= z_hi) {
        const Real znext = z + step;
        const Real mnext = abs(f.psi(Complex(znext)));
        if (m < mprev && m < mnext) {
            // golden-section refinement on [zprev, znext]
            Real a = zprev, b = znext;
            const Real phi = (sqrt(Real(5)) - 1) / 2;
            for (int it = 0; it < 60; ++it) {
                const Real c = b - phi * (b - a), d = a + phi * (b - a);
                if (abs(f.psi(Complex(c))) < abs(f.psi(Complex(d)))) b = d;
                else a = c;
            }
            const Real zm = (a + b) / 2;
            if (abs(f.psi(Complex(zm))) < ratio * ref) out.push_back(zm);
        }
        zprev = z;
        mprev = m;
        z = znext;
        m = mnext;
    }
    return out;
}

/// Zero tables quoted with the published results (not recomputed).
inline ReferenceZeros reference_table(const std::string& id) {
    auto make = [&](std::initializer_list<const char*> v) {
        ReferenceZeros r{id, {}, ZeroProvenance::Table};
        for (const char* s : v) r.zeros.emplace_back(s);
        return r;
    };
    if (id == "riemann" || id == "eta_gamma") return make({"14.1347", "21.022", "25.0109"});
    if (id == "ramanujan") return make({"9.22238", "13.90755", "17.442777"});
    if (id == "kbessel") return make({"2.96255", "4.53449", "5.87987"});
    if (id == "airy") return make({"-2.33811", "-4.08795", "-5.52056"});
    if (id == "airy7") return make({"2.56503", "5.08746", "7.53357"});
    if (id == "airy7_m1_3_0") return make({"2.89881", "5.99627", "8.6996"});
    if (id == "airy7_1_3_3") return make({"4.17486", "7.69736", "10.9217"});
    throw Error(ErrorKind::UnknownReference, "no reference zeros for '" + id + "'");
}

inline std::vector<std::string> reference_ids() {
    return {"airy", "riemann", "ramanujan", "airy7", "airy7_m1_3_0", "airy7_1_3_3", "kbessel", "eta_gamma"};
}

}  // namespace xilab
