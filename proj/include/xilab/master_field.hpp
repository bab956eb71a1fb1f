#pragma once

// Quenched master-field equations as nonlinear least squares, and the
// saddle-point eigenvalue equations of the (p,1) model.
//
//   E = i(p_k - p_l) a_kl + (1/g) V'(a + I)_kl - (1/g) b_kl - eta1_kl
//   F = i(p_k - p_l) b_kl - (1/g) a_kl - eta2_kl
//   C = sum |E_kl|^2 + |F_kl|^2

#include "xilab/linalg.hpp"
#include "xilab/matrix_model.hpp"
#include "xilab/real.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace xilab {

enum class MomentaMode { Uniform, Fixed };

struct MasterConfig {
    int N = 4;
    Real g{1};
    PotentialV potential;
    std::uint64_t seed = 1;
    MomentaMode momenta_mode = MomentaMode::Uniform;
    Real momentum_bound = pi();         // uniform on [-bound, bound]
    std::vector<Real> momenta;          // MomentaMode::Fixed
    Real sigma{0};                      // noise scale for eta1, eta2
    bool hermitian = true;              // false: a and b are general complex matrices
    int max_iters = 200;
    int restarts = 4;
    Real init_scale{Real(1) / 2};
    std::optional<Real> tau;            // default 1e-10 (1 + C at a = b = 0)

    void validate() const {
        if (N < 1) throw Error(ErrorKind::InvalidArgument, "N must be >= 1");
        if (sigma < 0) throw Error(ErrorKind::InvalidArgument, "sigma must be >= 0");
        if (g == 0) throw Error(ErrorKind::NonPositiveG, "g must be nonzero");
        if (momenta_mode == MomentaMode::Fixed && static_cast<int>(momenta.size()) != N)
            throw Error(ErrorKind::InvalidArgument, "fixed momenta list must have N entries");
        if (max_iters < 0 || restarts < 1) throw Error(ErrorKind::InvalidArgument, "bad optimizer settings");
    }
};

/// Momenta and noise drawn once per (config, seed).
struct MasterInstance {
    std::vector<Real> momenta;
    CMatrix eta1, eta2;
};

struct MasterState {
    CMatrix a, b;
};

struct MasterResult {
    Real cost{0};
    Real tau{0};
    MasterState state;
    int iterations = 0;
    bool obstruction = false;
    std::vector<Real> trace;          // cost after every accepted step of the best restart
    std::vector<Real> restart_costs;
    int best_restart = 0;
};

namespace detail {

inline Real gaussian(std::mt19937_64& rng) {
    std::normal_distribution<double> d(0.0, 1.0);
    return Real(d(rng));
}

inline CMatrix random_matrix(std::mt19937_64& rng, int n, const Real& scale, bool hermitian) {
    CMatrix m(n);
    for (int i = 0; i < n; ++i) {
        if (hermitian) {
            m(i, i) = Complex(scale * gaussian(rng));
            for (int j = i + 1; j < n; ++j) {
                m(i, j) = Complex(scale * gaussian(rng), scale * gaussian(rng)) / sqrt(Real(2));
                m(j, i) = conj(m(i, j));
            }
        } else {
            for (int j = 0; j < n; ++j) m(i, j) = Complex(scale * gaussian(rng), scale * gaussian(rng));
        }
    }
    return m;
}

/// L(X)_kl = i (p_k - p_l) X_kl
inline CMatrix momentum_op(const std::vector<Real>& p, const CMatrix& X) {
    const int n = X.size();
    CMatrix r(n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            const Real d = p[k] - p[l];
            r(k, l) = Complex(-d * X(k, l).im, d * X(k, l).re);
        }
    return r;
}

/// Powers M^0 .. M^m.
inline std::vector<CMatrix> matrix_powers(const CMatrix& M, int m) {
    std::vector<CMatrix> pw{CMatrix::identity(M.size())};
    for (int j = 1; j <= m; ++j) pw.push_back(pw.back() * M);
    return pw;
}

}  // namespace detail

inline MasterInstance make_instance(const MasterConfig& cfg) {
    cfg.validate();
    std::mt19937_64 rng(cfg.seed);
    MasterInstance inst;
    if (cfg.momenta_mode == MomentaMode::Fixed) {
        inst.momenta = cfg.momenta;
    } else {
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        for (int k = 0; k < cfg.N; ++k) inst.momenta.push_back(cfg.momentum_bound * Real(u(rng)));
    }
    inst.eta1 = detail::random_matrix(rng, cfg.N, cfg.sigma, cfg.hermitian);
    inst.eta2 = detail::random_matrix(rng, cfg.N, cfg.sigma, cfg.hermitian);
    return inst;
}

/// V'(M) = sum_k v_k M^{k-1}.
inline CMatrix matrix_vprime(const PotentialV& V, const CMatrix& M) {
    const auto& v = V.derivative_coeffs();
    CMatrix acc(M.size());
    if (v.empty()) return acc;
    const auto pw = detail::matrix_powers(M, static_cast<int>(v.size()) - 1);
    for (std::size_t k = 0; k < v.size(); ++k)
        if (v[k] != 0) acc += pw[k] * v[k];
    return acc;
}

inline std::pair<CMatrix, CMatrix> residuals(const MasterConfig& cfg, const MasterInstance& inst,
                                             const MasterState& st) {
    const Real ig = Real(1) / cfg.g;
    const CMatrix M = st.a + CMatrix::identity(cfg.N);
    CMatrix E = detail::momentum_op(inst.momenta, st.a) + (matrix_vprime(cfg.potential, M) - st.b) * ig;
    E -= inst.eta1;
    CMatrix F = detail::momentum_op(inst.momenta, st.b) - st.a * ig;
    F -= inst.eta2;
    return {std::move(E), std::move(F)};
}

inline Real cost(const CMatrix& E, const CMatrix& F) { return E.frobenius_sq() + F.frobenius_sq(); }

inline Real cost(const MasterConfig& cfg, const MasterInstance& inst, const MasterState& st) {
    const auto [E, F] = residuals(cfg, inst, st);
    return cost(E, F);
}

// ---- real parameterization -------------------------------------------------
// Hermitian: per matrix, N diagonal reals then (Re, Im) of each upper entry.
// General: (Re, Im) of every entry, row-major. Layout is [a-block, b-block].

inline std::size_t parameter_count(const MasterConfig& cfg) {
    const std::size_t n = static_cast<std::size_t>(cfg.N);
    return 2 * (cfg.hermitian ? n * n : 2 * n * n);
}

namespace detail {

inline void pack_matrix(const CMatrix& m, bool hermitian, std::vector<Real>& out) {
    const int n = m.size();
    if (hermitian) {
        for (int i = 0; i < n; ++i) out.push_back(m(i, i).re);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                out.push_back(m(i, j).re);
                out.push_back(m(i, j).im);
            }
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                out.push_back(m(i, j).re);
                out.push_back(m(i, j).im);
            }
    }
}

inline CMatrix unpack_matrix(int n, bool hermitian, const std::vector<Real>& x, std::size_t& pos) {
    CMatrix m(n);
    if (hermitian) {
        for (int i = 0; i < n; ++i) m(i, i) = Complex(x[pos++]);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                m(i, j) = Complex(x[pos], x[pos + 1]);
                m(j, i) = conj(m(i, j));
                pos += 2;
            }
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                m(i, j) = Complex(x[pos], x[pos + 1]);
                pos += 2;
            }
    }
    return m;
}

/// dC/dparams from the matrix gradient G (dC = 2 Re sum conj(G) dX).
inline void gradient_params(const CMatrix& G, bool hermitian, std::vector<Real>& out) {
    const int n = G.size();
    if (hermitian) {
        for (int i = 0; i < n; ++i) out.push_back(2 * G(i, i).re);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                out.push_back(2 * (G(i, j).re + G(j, i).re));
                out.push_back(2 * (G(i, j).im - G(j, i).im));
            }
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                out.push_back(2 * G(i, j).re);
                out.push_back(2 * G(i, j).im);
            }
    }
}

}  // namespace detail

inline std::vector<Real> pack(const MasterConfig& cfg, const MasterState& st) {
    std::vector<Real> x;
    x.reserve(parameter_count(cfg));
    detail::pack_matrix(st.a, cfg.hermitian, x);
    detail::pack_matrix(st.b, cfg.hermitian, x);
    return x;
}

inline MasterState unpack(const MasterConfig& cfg, const std::vector<Real>& x) {
    if (x.size() != parameter_count(cfg)) throw Error(ErrorKind::InvalidArgument, "parameter vector has wrong size");
    std::size_t pos = 0;
    MasterState st;
    st.a = detail::unpack_matrix(cfg.N, cfg.hermitian, x, pos);
    st.b = detail::unpack_matrix(cfg.N, cfg.hermitian, x, pos);
    return st;
}

/// Analytic gradient of C in the real parameterization.
///   G_a = L^+(E) + (1/g) sum_k v_k sum_j (M^+)^j E (M^+)^{k-2-j} - F/g
///   G_b = -E/g + L^+(F)
inline std::vector<Real> gradient(const MasterConfig& cfg, const MasterInstance& inst, const MasterState& st) {
    const auto [E, F] = residuals(cfg, inst, st);
    const Real ig = Real(1) / cfg.g;
    std::vector<Real> neg_p;
    for (const auto& p : inst.momenta) neg_p.push_back(-p);

    const CMatrix Md = (st.a + CMatrix::identity(cfg.N)).adjoint();
    const auto& v = cfg.potential.derivative_coeffs();
    const auto pw = detail::matrix_powers(Md, std::max<int>(static_cast<int>(v.size()) - 2, 0));
    CMatrix chain(cfg.N);
    for (std::size_t k = 2; k <= v.size(); ++k) {  // v[k-1] multiplies M^{k-1}
        if (v[k - 1] == 0) continue;
        for (std::size_t j = 0; j + 2 <= k; ++j) chain += (pw[j] * E * pw[k - 2 - j]) * v[k - 1];
    }
    const CMatrix Ga = detail::momentum_op(neg_p, E) + (chain - F) * ig;
    const CMatrix Gb = detail::momentum_op(neg_p, F) - E * ig;

    std::vector<Real> out;
    out.reserve(parameter_count(cfg));
    detail::gradient_params(Ga, cfg.hermitian, out);
    detail::gradient_params(Gb, cfg.hermitian, out);
    return out;
}

namespace detail {

/// Residual vector [Re E, Im E, Re F, Im F] flattened.
inline std::vector<Real> flatten(const CMatrix& E, const CMatrix& F) {
    std::vector<Real> r;
    r.reserve(4 * E.data().size());
    for (const auto* m : {&E, &F})
        for (const auto& z : m->data()) {
            r.push_back(z.re);
            r.push_back(z.im);
        }
    return r;
}

/// Jacobian of the flattened residual, column j = directional derivative along e_j.
inline std::vector<std::vector<Real>> jacobian(const MasterConfig& cfg, const MasterInstance& inst,
                                               const MasterState& st) {
    const std::size_t np = parameter_count(cfg);
    const Real ig = Real(1) / cfg.g;
    const CMatrix M = st.a + CMatrix::identity(cfg.N);
    const auto& v = cfg.potential.derivative_coeffs();
    const auto pw = matrix_powers(M, std::max<int>(static_cast<int>(v.size()) - 2, 0));
    std::vector<std::vector<Real>> cols;
    cols.reserve(np);
    std::vector<Real> e(np, Real(0));
    const std::size_t half = np / 2;
    for (std::size_t j = 0; j < np; ++j) {
        e[j] = 1;
        std::size_t pos = 0;
        const CMatrix dA = unpack_matrix(cfg.N, cfg.hermitian, e, pos);
        const CMatrix dB = unpack_matrix(cfg.N, cfg.hermitian, e, pos);
        e[j] = 0;
        CMatrix dE(cfg.N), dF(cfg.N);
        if (j < half) {
            CMatrix dV(cfg.N);
            for (std::size_t k = 2; k <= v.size(); ++k) {
                if (v[k - 1] == 0) continue;
                for (std::size_t i = 0; i + 2 <= k; ++i) dV += (pw[i] * dA * pw[k - 2 - i]) * v[k - 1];
            }
            dE = momentum_op(inst.momenta, dA) + dV * ig;
            dF = dA * Real(-ig);
        } else {
            dE = dB * Real(-ig);
            dF = momentum_op(inst.momenta, dB);
        }
        cols.push_back(flatten(dE, dF));
    }
    return cols;
}

struct LocalRun {
    MasterState state;
    Real cost{0};
    int iterations = 0;
    std::vector<Real> trace;
};

/// Levenberg-Marquardt: damped Gauss-Newton steps, a step is accepted only if
/// it lowers C, otherwise the damping grows (backtracking).
inline LocalRun levenberg_marquardt(const MasterConfig& cfg, const MasterInstance& inst, MasterState st) {
    const int prec = static_cast<int>(working_precision());
    const Real floor_cost = tiny(2 * prec - 10);
    std::vector<Real> x = pack(cfg, st);
    const std::size_t np = x.size();
    auto [E, F] = residuals(cfg, inst, st);
    Real c = cost(E, F);
    LocalRun run;
    run.trace.push_back(c);
    Real mu = tiny(3);
    int it = 0;
    for (; it < cfg.max_iters && c > floor_cost; ++it) {
        const auto J = jacobian(cfg, inst, st);
        const std::vector<Real> r = flatten(E, F);
        std::vector<Real> JtJ(np * np, Real(0)), Jtr(np, Real(0));
        for (std::size_t a = 0; a < np; ++a) {
            for (std::size_t m = 0; m < r.size(); ++m) Jtr[a] += J[a][m] * r[m];
            for (std::size_t b = a; b < np; ++b) {
                Real s(0);
                for (std::size_t m = 0; m < r.size(); ++m) s += J[a][m] * J[b][m];
                JtJ[a * np + b] = s;
                JtJ[b * np + a] = s;
            }
        }
        bool accepted = false;
        for (int tries = 0; tries < 40 && !accepted; ++tries) {
            std::vector<Real> A = JtJ, rhs(np), dx;
            for (std::size_t a = 0; a < np; ++a) {
                A[a * np + a] += mu * (1 + JtJ[a * np + a]);
                rhs[a] = -Jtr[a];
            }
            if (solve_dense(A, rhs, dx, tiny(prec + 5))) {
                std::vector<Real> xn = x;
                for (std::size_t a = 0; a < np; ++a) xn[a] += dx[a];
                MasterState sn = unpack(cfg, xn);
                auto [En, Fn] = residuals(cfg, inst, sn);
                const Real cn = cost(En, Fn);
                if (cn < c) {
                    x = std::move(xn);
                    st = std::move(sn);
                    E = std::move(En);
                    F = std::move(Fn);
                    c = cn;
                    run.trace.push_back(c);
                    mu = std::max(Real(mu / 5), Real(tiny(prec)));
                    accepted = true;
                    break;
                }
            }
            mu *= 4;
        }
        if (!accepted) break;  // damping exhausted: stationary to working precision
    }
    run.state = std::move(st);
    run.cost = c;
    run.iterations = it;
    return run;
}

}  // namespace detail

/// Best of `restarts` seeded local runs. Restart 0 starts from a = b = 0.
inline MasterResult optimize(const MasterConfig& cfg) {
    const MasterInstance inst = make_instance(cfg);
    MasterState zero{CMatrix(cfg.N), CMatrix(cfg.N)};
    const Real c0 = cost(cfg, inst, zero);
    MasterResult best;
    best.tau = cfg.tau ? *cfg.tau : Real(tiny(10) * (1 + c0));
    std::mt19937_64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
    for (int r = 0; r < cfg.restarts; ++r) {
        MasterState init = zero;
        if (r > 0) {
            init.a = detail::random_matrix(rng, cfg.N, cfg.init_scale, cfg.hermitian);
            init.b = detail::random_matrix(rng, cfg.N, cfg.init_scale, cfg.hermitian);
        }
        detail::LocalRun run = detail::levenberg_marquardt(cfg, inst, std::move(init));
        best.restart_costs.push_back(run.cost);
        if (r == 0 || run.cost < best.cost) {
            best.cost = run.cost;
            best.state = std::move(run.state);
            best.iterations = run.iterations;
            best.trace = std::move(run.trace);
            best.best_restart = r;
        }
    }
    best.obstruction = best.cost > best.tau;
    return best;
}

// ---- saddle-point eigenvalue equations ----------------------------------------
//   R1_i = -(1/g) V'(1 + a_i) + (1/g) b_i + sum_{j != i} 1/(a_i - a_j)
//   R2_i =  (1/g) a_i + sum_{j != i} 1/(b_i - b_j)

struct SaddleConfig {
    int N = 2;
    Real g{1};
    PotentialV potential;
    int max_iters = 100;
    Real tolerance{Real("1e-10")};
    std::vector<Real> initial_spreads{Real(1), Real(2), Real(4), Real(1) / 2, Real(3), Real(6)};
    std::optional<std::vector<Real>> initial_a, initial_b;  // overrides the grids
};

struct SaddleResult {
    std::vector<Real> a, b;
    Real residual{0};
    int iterations = 0;
    bool converged = false;
    int retries = 0;  // damping retries after singular Jacobians
};

inline std::vector<Real> saddle_residuals(const SaddleConfig& cfg, const std::vector<Real>& a,
                                          const std::vector<Real>& b) {
    const int n = static_cast<int>(a.size());
    const Real ig = Real(1) / cfg.g;
    std::vector<Real> r(static_cast<std::size_t>(2 * n), Real(0));
    for (int i = 0; i < n; ++i) {
        Real ca(0), cb(0);
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            ca += 1 / (a[i] - a[j]);
            cb += 1 / (b[i] - b[j]);
        }
        r[i] = (b[i] - cfg.potential.derivative(1 + a[i])) * ig + ca;
        r[n + i] = a[i] * ig + cb;
    }
    return r;
}

inline Real vector_norm(const std::vector<Real>& r) {
    Real s(0);
    for (const auto& v : r) s += v * v;
    return sqrt(s);
}

namespace detail {

inline Real vprime_derivative(const PotentialV& V, const Real& x) {
    const auto& v = V.derivative_coeffs();
    Real acc(0);
    for (std::size_t k = v.size(); k-- > 1;) acc = acc * x + v[k] * k;
    return acc;
}

inline std::vector<Real> saddle_jacobian(const SaddleConfig& cfg, const std::vector<Real>& a,
                                         const std::vector<Real>& b) {
    const int n = static_cast<int>(a.size());
    const int m = 2 * n;
    const Real ig = Real(1) / cfg.g;
    std::vector<Real> J(static_cast<std::size_t>(m * m), Real(0));
    for (int i = 0; i < n; ++i) {
        Real da(0), db(0);
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            const Real ia = 1 / ((a[i] - a[j]) * (a[i] - a[j]));
            const Real ib = 1 / ((b[i] - b[j]) * (b[i] - b[j]));
            J[i * m + j] = ia;
            J[(n + i) * m + n + j] = ib;
            da -= ia;
            db -= ib;
        }
        J[i * m + i] = da - vprime_derivative(cfg.potential, 1 + a[i]) * ig;
        J[i * m + n + i] = ig;
        J[(n + i) * m + i] = ig;
        J[(n + i) * m + n + i] = db;
    }
    return J;
}

inline SaddleResult newton_from(const SaddleConfig& cfg, std::vector<Real> a, std::vector<Real> b) {
    const int n = cfg.N;
    const int prec = static_cast<int>(working_precision());
    SaddleResult res;
    std::vector<Real> r = saddle_residuals(cfg, a, b);
    Real rn = vector_norm(r);
    Real mu(0);
    int it = 0;
    for (; it < cfg.max_iters && rn >= cfg.tolerance * tiny(prec / 3); ++it) {
        const auto J = saddle_jacobian(cfg, a, b);
        const int m = 2 * n;
        std::vector<Real> dx, rhs(static_cast<std::size_t>(m));
        for (int k = 0; k < m; ++k) rhs[k] = -r[k];
        bool solved = false;
        for (int attempt = 0; attempt < 6 && !solved; ++attempt) {
            std::vector<Real> A = J;
            if (mu > 0) {
                // Levenberg fallback on the normal equations
                std::vector<Real> JtJ(static_cast<std::size_t>(m * m), Real(0)), Jtr(static_cast<std::size_t>(m), Real(0));
                for (int p = 0; p < m; ++p) {
                    for (int q = 0; q < m; ++q) {
                        Real s(0);
                        for (int k = 0; k < m; ++k) s += J[k * m + p] * J[k * m + q];
                        JtJ[p * m + q] = s;
                    }
                    for (int k = 0; k < m; ++k) Jtr[p] += J[k * m + p] * rhs[k];
                    JtJ[p * m + p] += mu;
                }
                A = std::move(JtJ);
                solved = solve_dense(A, Jtr, dx, tiny(prec + 5));
            } else {
                solved = solve_dense(A, rhs, dx, tiny(prec - 5));
            }
            if (!solved) {
                mu = mu == 0 ? Real(tiny(8)) : Real(mu * 100);
                ++res.retries;
            }
        }
        if (!solved) throw Error(ErrorKind::SingularJacobian, "saddle Jacobian singular after damping retries");
        // backtracking on the residual norm
        Real t(1);
        bool moved = false;
        for (int ls = 0; ls < 40; ++ls, t /= 2) {
            std::vector<Real> an = a, bn = b;
            for (int i = 0; i < n; ++i) {
                an[i] += t * dx[i];
                bn[i] += t * dx[n + i];
            }
            const std::vector<Real> rn_vec = saddle_residuals(cfg, an, bn);
            const Real cand = vector_norm(rn_vec);
            if (cand < rn) {
                a = std::move(an);
                b = std::move(bn);
                r = rn_vec;
                rn = cand;
                moved = true;
                break;
            }
        }
        if (!moved) break;
        mu = 0;
    }
    res.a = std::move(a);
    res.b = std::move(b);
    res.residual = rn;
    res.iterations = it;
    res.converged = rn < cfg.tolerance;
    return res;
}

}  // namespace detail

/// Damped Newton from interleaved grids of several spreads (or the supplied
/// initial vectors). Returns the best run; `converged` says whether the
/// residual norm reached the tolerance.
inline SaddleResult saddle_solve(const SaddleConfig& cfg) {
    if (cfg.N < 2) throw Error(ErrorKind::InvalidArgument, "saddle_solve needs N >= 2");
    if (cfg.g == 0) throw Error(ErrorKind::NonPositiveG, "g must be nonzero");
    std::vector<std::pair<std::vector<Real>, std::vector<Real>>> starts;
    if (cfg.initial_a || cfg.initial_b) {
        if (!cfg.initial_a || !cfg.initial_b || static_cast<int>(cfg.initial_a->size()) != cfg.N ||
            static_cast<int>(cfg.initial_b->size()) != cfg.N)
            throw Error(ErrorKind::InvalidArgument, "initial a and b must both have N entries");
        starts.emplace_back(*cfg.initial_a, *cfg.initial_b);
    } else {
        for (const auto& s : cfg.initial_spreads) {
            std::vector<Real> a, b;
            for (int i = 0; i < cfg.N; ++i) {
                const Real x = Real(i) - Real(cfg.N - 1) / 2;
                a.push_back(s * x);
                b.push_back(-cfg.g * x / s);  // b_i - b_j ~ -g/(a_i - a_j) from the second equation
            }
            starts.emplace_back(std::move(a), std::move(b));
        }
    }
    std::optional<SaddleResult> best;
    std::optional<Error> last_error;
    for (auto& [a, b] : starts) {
        try {
            SaddleResult r = detail::newton_from(cfg, a, b);
            if (!best || r.residual < best->residual) best = std::move(r);
            if (best->converged) break;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::SingularJacobian) throw;
            last_error = e;
        }
    }
    if (!best) throw *last_error;
    return *best;
}

/// Reduced ansatz for N = 2: a = (alpha, -alpha), b = (n + beta, n - beta).
/// The summed equations force a_1 + a_2 = 0; the second pair gives
/// beta = -g/(2 alpha); the first pair then reduces to
/// V'(1 + alpha) = V'(1 - alpha), solved by bracketing and bisection on alpha > 0.
inline SaddleResult saddle_reduced_n2(const PotentialV& V, const Real& g, const Real& alpha_max = Real(20),
                                      int scan_points = 2000) {
    auto h = [&](const Real& al) { return V.derivative(1 + al) - V.derivative(1 - al); };
    const Real step = alpha_max / scan_points;
    Real lo = step, hlo = h(lo);
    bool found = false;
    Real hi = lo;
    for (int k = 2; k <= scan_points; ++k) {
        hi = step * k;
        const Real hhi = h(hi);
        if (hlo == 0) {
            hi = lo;
            found = true;
            break;
        }
        if ((hlo < 0) != (hhi < 0)) {
            found = true;
            break;
        }
        lo = hi;
        hlo = hhi;
    }
    if (!found)
        throw Error(ErrorKind::NoConvergence,
                    "reduced ansatz: V'(1+alpha) - V'(1-alpha) has no positive root below " + to_short(alpha_max));
    const Real tol = tiny(static_cast<int>(working_precision()) - 5);
    while (hi - lo > tol * (1 + abs(hi))) {
        const Real mid = (lo + hi) / 2;
        if ((h(mid) < 0) == (hlo < 0)) lo = mid;
        else hi = mid;
    }
    const Real alpha = (lo + hi) / 2;
    const Real beta = -g / (2 * alpha);
    const Real n = (V.derivative(1 + alpha) + V.derivative(1 - alpha)) / 2;
    SaddleResult r;
    r.a = {alpha, -alpha};
    r.b = {n + beta, n - beta};
    SaddleConfig cfg;
    cfg.N = 2;
    cfg.g = g;
    cfg.potential = V;
    r.residual = vector_norm(saddle_residuals(cfg, r.a, r.b));
    r.converged = r.residual < cfg.tolerance;
    return r;
}

/// log |Delta(a)| = sum_{i>j} log |a_i - a_j|
inline Real log_vandermonde(const std::vector<Real>& a) {
    Real s(0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) s += log(abs(a[i] - a[j]));
    return s;
}

/// sum_{j != i} 1/(a_i - a_j), the Coulomb term of the saddle equations.
inline Real coulomb_term(const std::vector<Real>& a, std::size_t i) {
    Real s(0);
    for (std::size_t j = 0; j < a.size(); ++j)
        if (j != i) s += 1 / (a[i] - a[j]);
    return s;
}

}  // namespace xilab
