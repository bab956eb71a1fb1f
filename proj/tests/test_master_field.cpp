#include "helpers.hpp"
#include "xilab/master_field.hpp"
#include "xilab/scaling.hpp"

using namespace xilab;
using testing::rel_err;

namespace {

MasterConfig p2_config(int N, const Real& sigma = Real(0), std::uint64_t seed = 1) {
    const ModelParams mp = double_scaling(2, 4, {});
    MasterConfig cfg;
    cfg.N = N;
    cfg.g = mp.g;
    cfg.potential = build_potential(mp);
    cfg.sigma = sigma;
    cfg.seed = seed;
    return cfg;
}

PotentialV quartic_demo() { return PotentialV::from_shifted({Real(0), Real(0), Real(1), Real(0), Real(-1) / 8}); }

}  // namespace

TEST_CASE("N = 1 reaches the closed-form solution", "[master_field]") {
    PrecisionScope prec(60);
    const MasterConfig cfg = p2_config(1, Real("0.3"), 7);
    const MasterInstance inst = make_instance(cfg);
    const MasterResult r = optimize(cfg);
    REQUIRE(r.cost < tiny(40));
    REQUIRE_FALSE(r.obstruction);
    // a = -g eta2, b = V'(1 + a) - g eta1
    const Real a = -cfg.g * inst.eta2(0, 0).re;
    const Real b = cfg.potential.derivative(1 + a) - cfg.g * inst.eta1(0, 0).re;
    REQUIRE(abs(r.state.a(0, 0).re - a) < tiny(20));
    REQUIRE(abs(r.state.b(0, 0).re - b) < tiny(20));
}

TEST_CASE("p = 2 at N = 4 without noise is solvable", "[master_field]") {
    PrecisionScope prec(60);
    const MasterResult r = optimize(p2_config(4));
    REQUIRE(r.cost < tiny(12));
    REQUIRE_FALSE(r.obstruction);
    for (std::size_t i = 1; i < r.trace.size(); ++i) REQUIRE(r.trace[i] <= r.trace[i - 1]);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            REQUIRE(r.state.a(i, j).re == r.state.a(j, i).re);
            REQUIRE(r.state.a(i, j).im == -r.state.a(j, i).im);
        }
}

TEST_CASE("analytic gradient matches central differences", "[master_field]") {
    PrecisionScope prec(60);
    for (bool herm : {true, false}) {
        MasterConfig cfg = p2_config(3, Real("0.2"), 11);
        cfg.potential = quartic_demo();
        cfg.hermitian = herm;
        const MasterInstance inst = make_instance(cfg);
        std::mt19937_64 rng(5);
        MasterState st{detail::random_matrix(rng, 3, Real("0.4"), herm), detail::random_matrix(rng, 3, Real("0.4"), herm)};
        const auto x = pack(cfg, st);
        REQUIRE(x.size() == parameter_count(cfg));
        const auto g = gradient(cfg, inst, st);
        const Real h = tiny(20);
        for (std::size_t k = 0; k < x.size(); ++k) {
            auto xp = x, xm = x;
            xp[k] += h;
            xm[k] -= h;
            const Real fd = (cost(cfg, inst, unpack(cfg, xp)) - cost(cfg, inst, unpack(cfg, xm))) / (2 * h);
            REQUIRE(abs(g[k] - fd) < tiny(15) * (1 + abs(fd)));
        }
    }
}

TEST_CASE("pack and unpack round trip", "[master_field]") {
    PrecisionScope prec(40);
    for (bool herm : {true, false}) {
        MasterConfig cfg = p2_config(3);
        cfg.hermitian = herm;
        std::mt19937_64 rng(3);
        MasterState st{detail::random_matrix(rng, 3, Real(1), herm), detail::random_matrix(rng, 3, Real(1), herm)};
        const MasterState back = unpack(cfg, pack(cfg, st));
        REQUIRE((back.a - st.a).frobenius_sq() == 0);
        REQUIRE((back.b - st.b).frobenius_sq() == 0);
    }
}

TEST_CASE("fixed seed gives identical runs", "[master_field]") {
    PrecisionScope prec(40);
    MasterConfig cfg = p2_config(3, Real("0.5"), 42);
    cfg.max_iters = 20;
    cfg.restarts = 2;
    const MasterResult a = optimize(cfg), b = optimize(cfg);
    REQUIRE(a.cost == b.cost);
    REQUIRE(a.trace == b.trace);
    REQUIRE((a.state.a - b.state.a).frobenius_sq() == 0);
    cfg.seed = 43;
    REQUIRE(make_instance(cfg).momenta != make_instance(p2_config(3, Real("0.5"), 42)).momenta);
}

TEST_CASE("master config validation", "[master_field]") {
    PrecisionScope prec(30);
    MasterConfig cfg = p2_config(2);
    cfg.momenta_mode = MomentaMode::Fixed;
    cfg.momenta = {Real(1)};
    REQUIRE_THROWS_AS(make_instance(cfg), Error);
    cfg.momenta = {Real(1), Real(-1)};
    REQUIRE(make_instance(cfg).momenta[1] == -1);
    cfg.sigma = -1;
    REQUIRE_THROWS_AS(cfg.validate(), Error);
}

TEST_CASE("quartic saddle agrees with the reduced ansatz", "[master_field]") {
    PrecisionScope prec(60);
    SaddleConfig cfg;
    cfg.N = 2;
    cfg.g = Real(1) / 2;
    cfg.potential = quartic_demo();
    const SaddleResult s = saddle_solve(cfg);
    REQUIRE(s.converged);
    REQUIRE(s.residual < Real("1e-10"));
    const SaddleResult o = saddle_reduced_n2(cfg.potential, cfg.g);
    REQUIRE(abs(o.a[0] - 2) < tiny(40));
    REQUIRE(abs(o.b[0] + Real("0.125")) < tiny(40));
    const Real a_hi = std::max(s.a[0], s.a[1]);
    REQUIRE(abs(a_hi - o.a[0]) < Real("1e-8"));
    const Real b_of_hi = s.a[0] > s.a[1] ? s.b[0] : s.b[1];
    REQUIRE(abs(b_of_hi - o.b[0]) < Real("1e-8"));
}

// a_1 + a_2 = 0 and V'(1 + alpha) = V'(1 - alpha) force alpha = 0 for a quadratic V
TEST_CASE("p = 2 saddle at N = 2 has no solution", "[master_field]") {
    PrecisionScope prec(40);
    const ModelParams mp = double_scaling(2, 2, {});
    SaddleConfig cfg;
    cfg.N = 2;
    cfg.g = mp.g;
    cfg.potential = build_potential(mp);
    REQUIRE_FALSE(saddle_solve(cfg).converged);
    try {
        saddle_reduced_n2(cfg.potential, cfg.g);
        FAIL("no throw");
    } catch (const Error& e) {
        REQUIRE(e.kind() == ErrorKind::NoConvergence);
    }
}

TEST_CASE("Vandermonde helpers", "[master_field]") {
    PrecisionScope prec(30);
    const std::vector<Real> a = {Real(0), Real(1), Real(3)};
    REQUIRE(abs(log_vandermonde(a) - log(Real(6))) < tiny(25));
    REQUIRE(abs(coulomb_term(a, 0) - (Real(-1) - Real(1) / 3)) < tiny(25));
}
