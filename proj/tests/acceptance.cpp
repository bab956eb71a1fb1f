// Acceptance checks, one PASS/FAIL line per criterion.
// Usage: acceptance [criterion-number]

#include "xilab/baker_akhiezer.hpp"
#include "xilab/master_field.hpp"
#include "xilab/pipeline.hpp"

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

using namespace xilab;

namespace {

struct Criterion {
    int number;
    std::string title;
    std::vector<std::string> lines;
    bool ok = true;

    void check(bool pass, const std::string& what) {
        lines.push_back(std::string(pass ? "ok   " : "FAIL ") + what);
        ok = ok && pass;
    }
    void note(const std::string& what) { lines.push_back("note " + what); }
};

Real rel(const Real& got, const Real& want) { return want == 0 ? Real(abs(got)) : Real(abs(got - want) / abs(want)); }

std::string s6(const Real& x) { return to_short(x, 6); }

// got vs want within relative tol; message shows both
void close(Criterion& c, const std::string& what, const Real& got, const char* want, const char* tol) {
    const Real w(want);
    c.check(rel(got, w) < Real(tol), what + " = " + s6(got) + " (want " + want + ", rel " + tol + ")");
}

void close_list(Criterion& c, const std::string& what, const std::vector<Real>& got,
                const std::vector<const char*>& want, const char* tol) {
    Real worst(0);
    std::size_t at = 0;
    bool size_ok = got.size() >= want.size();
    for (std::size_t i = 0; size_ok && i < want.size(); ++i) {
        const Real e = rel(got[i], Real(want[i]));
        if (e > worst) {
            worst = e;
            at = i;
        }
    }
    std::string msg = what + ": worst rel error " + to_short(worst, 3);
    if (size_ok && !want.empty()) msg += " at entry " + std::to_string(at) + " (" + s6(got[at]) + " vs " + want[at] + ")";
    if (!size_ok) msg += " (only " + std::to_string(got.size()) + " values)";
    c.check(size_ok && worst < Real(tol), msg + ", tol " + tol);
}

void complex_pair(Criterion& c, const RootSet& rs, const char* re, const char* im, const char* tol) {
    c.check(rs.complex_pair_count() == 1, "complex pairs = " + std::to_string(rs.complex_pair_count()) + " (want 1)");
    if (rs.complex_pair_count() < 1) return;
    const Complex z = rs.complex_pairs()[0];
    const bool hit = abs(z.re - Real(re)) < Real(tol) && abs(z.im - Real(im)) < Real(tol);
    c.check(hit, "pair at " + s6(z.re) + " +- " + s6(z.im) + "i (want " + re + " +- " + im + "i, abs " + tol + ")");
}

const RowResult& row(const std::string& id) {
    static std::map<std::string, RowResult> cache;
    auto it = cache.find(id);
    if (it == cache.end()) it = cache.emplace(id, run_row(id)).first;
    return it->second;
}

std::vector<Real> quadrature_zeros(const PotentialSpec& spec, int count = 3) {
    return psi_zeros(BAFunction::from_spec(spec), count, Real("0.25")).zeros;
}

// ---------------------------------------------------------------------------

void hermite(Criterion& c) {
    const ModelParams mp = double_scaling(2, 16, {}, GMode::Plain);
    const CharPolynomial q = q_polynomial(mp, PotentialV::gaussian(), 16);
    const CharPolynomial h = hermite_q(16, mp.g);
    std::vector<Real> even;
    const CharPolynomial m = q.monic();
    for (int k = 16; k >= 0; k -= 2) even.push_back(m[k]);
    close_list(c, "monic Q_16 even coefficients", even,
               {"1", "-3.75", "5.33203", "-3.66577", "1.28875", "-0.225531", "0.0176196", "-0.000471954", "1.84357e-6"},
               "1e-4");
    Real worst(0);
    for (int k = 0; k <= 16; ++k) worst = std::max(worst, Real(abs(q[k] - h[k]) / (1 + abs(h[k]))));
    c.check(worst < tiny(40), "q_polynomial vs hermite_q max error " + to_short(worst, 3) + " (tol 1e-40)");
    const RootSet rs = find_roots(q);
    const auto r = rs.real_roots();
    c.check(r.size() == 16, "real roots: " + std::to_string(r.size()));
    std::vector<Real> all(r.begin(), r.end());
    close_list(c, "roots", all,
               {"-1.17218", "-0.967362", "-0.79425", "-0.636551", "-0.487947", "-0.345065", "-0.205738", "-0.0683703",
                "0.0683703", "0.205738", "0.345065", "0.487947", "0.636551", "0.79425", "0.967362", "1.17218"},
               "1e-4");
}

void airy(Criterion& c) {
    const RowResult& r = row("airy");
    close_list(c, "mapped top three roots", r.estimates, {"-2.17335", "-4.01259", "-5.56709"}, "1e-4");
    const Real gap = abs(r.estimates.at(2) - Real("-5.52056"));
    c.check(abs(gap - Real("0.0465")) < Real("5e-4"), "third-zero gap to exact " + s6(gap) + " (expected ~0.0465)");
}

void riemann(Criterion& c) {
    const TaylorSeries u = taylor_u(PotentialSpec::riemann(), 8);
    const std::pair<int, const char*> printed[] = {
        {0, "0.112728"}, {2, "9.3634"}, {4, "5.95896"}, {6, "-2.09194"}, {8, "3.53296"}};
    for (const auto& [n, v] : printed) close(c, "taylor_u a_" + std::to_string(n), u[n], v, "1e-3");

    const ScaledPotential kernel = rescale_potential(u, 7);
    close_list(c, "couplings from the kernel expansion", {kernel.coupling(1), kernel.coupling(3), kernel.coupling(5)},
               {"8.12192", "4.48349", "-1.02395"}, "1e-3");
    const ScaledPotential pub = riemann_published_potential();
    c.note("couplings from the printed a_n: " + s6(pub.coupling(1)) + ", " + s6(pub.coupling(3)) + ", " +
           s6(pub.coupling(5)));

    const std::vector<const char*> q_printed = {
        "1",          "141.088",    "8952.1",     "338149",     "8.48406e6",  "1.49383e8",
        "1.90155e9",  "1.77654e10", "1.2243e11",  "6.20423e11", "2.28714e12", "6.01787e12",
        "1.09783e13", "1.33068e13", "1.00497e13", "4.23563e12", "7.61563e11"};
    std::string matched;
    for (GMode mode : {GMode::Corrected, GMode::Plain}) {
        const ModelParams mp = double_scaling(pub, 16, mode);
        const CharPolynomial q = q_polynomial(mp, build_potential(mp), 16).monic();
        bool ok = true;
        for (int k = 16; k >= 0; --k) ok = ok && rel(q[k], Real(q_printed[16 - k])) < Real("1e-3");
        if (ok) {
            matched = to_string(mode);
            break;
        }
    }
    c.check(!matched.empty(), "Q_16 reproduces the published coefficients (g-mode: " +
                                  (matched.empty() ? std::string("none") : matched) + ")");

    const RowResult& r = row("riemann");
    complex_pair(c, r.roots, "-0.677917", "0.213125", "1e-2");
    close(c, "A", r.cal.A, "2.20867", "1e-3");
    close(c, "c", r.cal.c, "64.5702", "1e-3");
    close(c, "z3", r.estimates.at(2), "26.5505", "1e-3");
    c.note("exact third zero 25.0109; quadrature gives " + s6(quadrature_zeros(PotentialSpec::riemann()).at(2)));
}

void ramanujan(Criterion& c) {
    const RowResult& r = row("ramanujan");
    close_list(c, "couplings", {r.potential->coupling(1), r.potential->coupling(3), r.potential->coupling(5)},
               {"7.99487", "4.0958", "-1.22159"}, "1e-3");
    complex_pair(c, r.roots, "-0.506603", "0.513116", "1e-2");
    close(c, "A", r.cal.A, "1.52532", "1e-3");
    close(c, "c", r.cal.c, "42.3072", "1e-3");
    close(c, "z3", r.estimates.at(2), "17.6636", "1e-3");
    c.note("exact third zero 17.442777, g = " + s6(r.params.g) + " taken from the Riemann row");
}

void cosh_row(Criterion& c) {
    const ScaledPotential sp = cosh_couplings(7);
    close_list(c, "closed-form couplings", {sp.coupling(1), sp.coupling(3), sp.coupling(5)},
               {"8.42573", "11.8322", "4.98473"}, "1e-4");
    const RowResult& r = row("kbessel");
    c.check(r.roots.on_critical_line && r.roots.real_roots().size() == 16, "all 16 roots real");
    close(c, "A", r.cal.A, "0.193542", "1e-3");
    close(c, "c", r.cal.c, "16.0687", "1e-3");
    close(c, "z3", r.estimates.at(2), "5.80583", "1e-3");
    close_list(c, "quadrature zeros of int e^{-cosh x} e^{izx} dx", quadrature_zeros(PotentialSpec::cosh_kernel()),
               {"2.96255", "4.53449", "5.87987"}, "1e-3");
}

void families(Criterion& c) {
    struct Fam {
        const char* id;
        std::vector<Real> s;
        const char* z3;
        const char* exact;
    };
    const std::vector<Fam> fams = {{"airy7", {}, "7.13834", "7.53357"},
                                   {"airy7_m1_3_0", {Real(-1), 0, Real(3)}, "8.50607", "8.6996"},
                                   {"airy7_1_3_3", {Real(1), 0, Real(3), 0, Real(3)}, "10.5535", "10.9217"}};
    for (const auto& f : fams) {
        const RowResult& r = row(f.id);
        c.check(r.roots.on_critical_line, std::string(f.id) + ": all roots real");
        close(c, std::string(f.id) + " calibrated z3", r.estimates.at(2), f.z3, "1e-3");
        const auto z = quadrature_zeros(PotentialSpec::explicit_couplings(7, f.s));
        close(c, std::string(f.id) + " quadrature z3", z.at(2), f.exact, "1e-3");
    }
    const auto alt = quadrature_zeros(PotentialSpec::explicit_couplings(7, {Real(1), 0, Real(3), 0, Real("4.5")}));
    c.note("with 4.5 x^6/6 instead of 3 x^6/6 the quadrature zeros are " + s6(alt[0]) + ", " + s6(alt[1]) + ", " +
           s6(alt[2]));
}

void eta_gamma(Criterion& c) {
    const RowResult& r = row("eta_gamma");
    std::vector<Real> got;
    for (int n = 2; n <= 19; ++n) got.push_back(r.potential->normalized_coefficient(n));
    close_list(c, "normalized coefficients", got,
               {"13.6947", "-33.7861", "62.5149", "-92.538", "114.15", "-120.693", "111.66", "-91.8254", "67.9625",
                "-45.7281", "28.2038", "-16.0572", "8.48885", "-4.18855", "1.93754", "-0.843543", "0.34685",
                "-0.135112"},
               "1e-3");
    complex_pair(c, r.roots, "0.594787", "0.166798", "1e-2");
    close(c, "A", r.cal.A, "2.7621", "1e-3");
    close(c, "c", r.cal.c, "61.2001", "1e-3");
    close(c, "z3", r.estimates.at(2), "26.527", "1e-3");
}

void oracle_equivalence(Criterion& c) {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> S(-3, 3);
    const int ps[] = {3, 5, 7};
    Real worst_gf(0), worst_det(0);
    int resampled = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const int p = ps[rng() % 3];
        const int N = 1 + static_cast<int>(rng() % 8);
        ModelParams mp;
        for (;;) {
            std::vector<Real> s;
            for (int k = 1; k < p; ++k) s.push_back(Real(S(rng)));
            try {
                mp = double_scaling(p, N, s);
                break;
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::NonPositiveG) throw;
                ++resampled;
            }
        }
        const PotentialV V = build_potential(mp);
        const auto Q = q_polynomials(mp, V, N);
        const CharPolynomial gf = q_polynomial_gf(mp, V, N);
        for (int k = 0; k <= N; ++k)
            worst_gf = std::max(worst_gf, Real(abs(Q[N][k] - gf[k]) / Q[N].max_abs_coeff()));
        const HessenbergMatrix J = jacobi_matrix(Q);
        const Real sign = N % 2 == 0 ? 1 : -1;
        for (int i = 0; i <= 2 * N; ++i) {
            const Real b = Real(-3) + Real(6) * i / (2 * N);
            const Real want = sign * Q[N].evaluate(b);
            // error relative to the size of the terms that cancel in Q_N(b)
            Real mag(0), bk(1);
            for (int k = 0; k <= N; ++k, bk *= abs(b)) mag += abs(Q[N][k]) * bk;
            worst_det = std::max(worst_det, Real(abs(J.det_shifted(b) - want) / mag));
        }
    }
    c.check(worst_gf < tiny(30), "derivative vs generating function: max rel " + to_short(worst_gf, 3) + " (tol 1e-30)");
    c.check(worst_det < tiny(25), "det(bI - J) vs (-1)^N Q_N: max rel " + to_short(worst_det, 3) + " (tol 1e-25)");
    c.note("20 sets, " + std::to_string(resampled) + " resampled for g <= 0");
}

void root_properties(Criterion& c) {
    std::vector<std::pair<std::string, CharPolynomial>> polys;
    polys.emplace_back("hermite", hermite_q(16, Real(1) / 16));
    for (const auto& id : all_row_ids()) polys.emplace_back(id, row(id).q);
    bool recon = true, sym = true, inv = true;
    std::string detail_msg;
    for (const auto& [id, q] : polys) {
        const RootSet rs = find_roots(q);
        const Real err = reconstruction_error(q, rs), bound = reconstruction_bound(q);
        if (!(err < bound)) {
            recon = false;
            detail_msg += " " + id + ":" + to_short(err, 3) + ">" + to_short(bound, 3);
        }
        for (std::size_t i = 0; i < rs.size(); ++i) {
            if (rs.is_real[i]) {
                sym = sym && rs.roots[i].im == 0;
                continue;
            }
            int partners = 0;
            for (std::size_t j = 0; j < rs.size(); ++j)
                if (j != i && rs.pair_id[j] == rs.pair_id[i]) {
                    ++partners;
                    sym = sym && rs.roots[j].re == rs.roots[i].re && rs.roots[j].im == -rs.roots[i].im;
                }
            sym = sym && partners == 1;
        }
        for (const char* k : {"1e-9", "-2.5", "1e15"}) {
            const RootSet scaled = find_roots(q.scaled(Real(k)));
            inv = inv && scaled.complex_pair_count() == rs.complex_pair_count() &&
                  scaled.real_roots().size() == rs.real_roots().size();
        }
    }
    c.check(recon, "reconstruction within the backward-error bound for " + std::to_string(polys.size()) +
                       " polynomials" + detail_msg);
    c.check(sym, "conjugate pairs exact, real roots have zero imaginary part");
    c.check(inv, "classification unchanged under Q -> k Q");
}

void master(Criterion& c) {
    const ModelParams mp = double_scaling(2, 4, {});
    MasterConfig one;
    one.N = 1;
    one.g = mp.g;
    one.potential = build_potential(mp);
    one.sigma = Real("0.3");
    one.seed = 3;
    const MasterResult r1 = optimize(one);
    c.check(r1.cost < tiny(20), "N = 1: C = " + to_short(r1.cost, 3) + " (want < 1e-20)");

    MasterConfig four = one;
    four.N = 4;
    four.sigma = 0;
    const MasterResult r4 = optimize(four);
    c.check(r4.cost < tiny(12), "p = 2, sigma = 0, N = 4: C = " + to_short(r4.cost, 3) + " (want < 1e-12)");
    bool mono = true;
    for (std::size_t i = 1; i < r4.trace.size(); ++i) mono = mono && r4.trace[i] <= r4.trace[i - 1];
    c.check(mono, "cost trace monotone over " + std::to_string(r4.trace.size()) + " accepted steps");

    MasterConfig gcfg = four;
    gcfg.N = 3;
    gcfg.sigma = Real("0.2");
    const MasterInstance inst = make_instance(gcfg);
    std::mt19937_64 rng(17);
    const MasterState st{detail::random_matrix(rng, 3, Real("0.4"), true),
                         detail::random_matrix(rng, 3, Real("0.4"), true)};
    const auto x = pack(gcfg, st);
    const auto g = gradient(gcfg, inst, st);
    Real worst(0);
    const Real h = tiny(20);
    for (std::size_t k = 0; k < x.size(); ++k) {
        auto xp = x, xm = x;
        xp[k] += h;
        xm[k] -= h;
        const Real fd = (cost(gcfg, inst, unpack(gcfg, xp)) - cost(gcfg, inst, unpack(gcfg, xm))) / (2 * h);
        worst = std::max(worst, Real(abs(g[k] - fd) / (1 + abs(fd))));
    }
    c.check(worst < tiny(6), "gradient vs finite differences: max rel " + to_short(worst, 3) + " (tol 1e-6)");

    MasterConfig rep = four;
    rep.sigma = Real("0.5");
    rep.seed = 99;
    rep.max_iters = 30;
    const MasterResult a = optimize(rep), b = optimize(rep);
    c.check(a.cost == b.cost && a.trace == b.trace && (a.state.a - b.state.a).frobenius_sq() == 0,
            "fixed seed reproduces the run bit for bit");

    // saddle at N = 2, p = 2 against the reduced ansatz
    const ModelParams mp2 = double_scaling(2, 2, {});
    SaddleConfig sc;
    sc.N = 2;
    sc.g = mp2.g;
    sc.potential = build_potential(mp2);
    const SaddleResult s = saddle_solve(sc);
    c.check(s.residual < Real("1e-10"),
            "saddle N = 2, p = 2: residual " + to_short(s.residual, 3) + " (want < 1e-10)");
    try {
        const SaddleResult o = saddle_reduced_n2(sc.potential, sc.g);
        const Real d = std::max(abs(std::max(s.a[0], s.a[1]) - o.a[0]), abs(std::min(s.a[0], s.a[1]) - o.a[1]));
        c.check(d < Real("1e-8"), "saddle vs reduced ansatz: " + to_short(d, 3));
    } catch (const Error& e) {
        c.check(false, std::string("reduced ansatz: ") + e.what());
    }
    SaddleConfig quartic;
    quartic.N = 2;
    quartic.g = Real(1) / 2;
    quartic.potential = PotentialV::from_shifted({Real(0), Real(0), Real(1), Real(0), Real(-1) / 8});
    const SaddleResult q = saddle_solve(quartic);
    const SaddleResult qo = saddle_reduced_n2(quartic.potential, quartic.g);
    c.note("quartic V(1+u) = u^2 - u^4/8, g = 1/2: residual " + to_short(q.residual, 3) + ", alpha " +
           s6(std::max(q.a[0], q.a[1])) + " vs ansatz " + s6(qo.a[0]));

    MasterConfig rz;
    rz.N = 4;
    const ModelParams mpr = double_scaling(riemann_published_potential(), 4);
    rz.g = mpr.g;
    rz.potential = build_potential(mpr);
    rz.restarts = 2;
    const MasterResult rr = optimize(rz);
    c.note("Riemann potential, N = 4, sigma = 0: C = " + to_short(rr.cost, 3) + ", obstruction " +
           (rr.obstruction ? "true" : "false") + " (reported only)");
}

}  // namespace

int main(int argc, char** argv) {
    set_working_precision(60);
    const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> all = {
        {"Hermite closed form", hermite},
        {"Airy mapping", airy},
        {"Riemann pipeline", riemann},
        {"Ramanujan pipeline", ramanujan},
        {"cosh / K_iz(1)", cosh_row},
        {"real-zero families at p = 7", families},
        {"EtaGamma at p = 19", eta_gamma},
        {"oracle equivalence", oracle_equivalence},
        {"root properties", root_properties},
        {"master field and saddle", master},
    };
    int only = 0;
    if (argc > 1) {
        only = std::atoi(argv[1]);
        if (only < 1 || only > static_cast<int>(all.size())) {
            std::fprintf(stderr, "criterion must be 1..%zu\n", all.size());
            return 2;
        }
    }
    bool all_ok = true;
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (only && static_cast<int>(i) + 1 != only) continue;
        Criterion c{static_cast<int>(i) + 1, all[i].first, {}};
        try {
            all[i].second(c);
        } catch (const Error& e) {
            c.check(false, std::string("error ") + std::string(to_string(e.kind())) + ": " + e.what());
        }
        std::printf("[%s] criterion %d: %s\n", c.ok ? "PASS" : "FAIL", c.number, c.title.c_str());
        for (const auto& l : c.lines) std::printf("    %s\n", l.c_str());
        std::fflush(stdout);
        all_ok = all_ok && c.ok;
    }
    return all_ok ? 0 : 1;
}
