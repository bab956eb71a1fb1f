// xilab: command-line front end for the (p,1) two-matrix-model pipeline.
//
// Exit codes: 0 ok, 2 configuration / spec error, 3 numerical failure.

#include "xilab/io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace xilab;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

struct Common {
    unsigned precision = kDefaultPrecision;
    bool json = false;
    std::string out;       // JSON file
    std::string csv;       // CSV file
    std::string config;    // JSON config file
};

struct SpecArgs {
    std::string kind = "riemann";
    int p = 7;
    int degree = 0;
    std::string s;
    int max_terms = 64;
    std::string term_tolerance;
    std::string source = "kernel";  // riemann only: kernel | printed
};

std::vector<Real> parse_list(const std::string& text) {
    std::vector<Real> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(parse_real(item));
    return out;
}

Json load_config(const std::string& path, const std::set<std::string>& allowed) {
    if (path.empty()) return Json::object();
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open config '" + path + "'");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::InvalidArgument, std::string("config is not valid JSON: ") + e.what());
    }
    reject_unknown_keys(j, allowed, "config");
    return j;
}

void add_spec_options(CLI::App* app, SpecArgs& a) {
    app->add_option("--kind", a.kind, "riemann | ramanujan | eta_gamma | cosh | monomial | explicit");
    app->add_option("--p", a.p, "model order p");
    app->add_option("--degree", a.degree, "monomial degree");
    app->add_option("--s", a.s, "explicit couplings s_1,s_2,... (comma separated)");
    app->add_option("--max-terms", a.max_terms, "kernel series cap");
    app->add_option("--term-tolerance", a.term_tolerance, "kernel series tolerance");
}

PotentialSpec spec_from(const SpecArgs& a, const Json& cfg) {
    PotentialSpec sp;
    if (cfg.contains("potential")) return potential_spec_from_json(cfg["potential"]);
    sp.kind = kernel_kind_from_string(a.kind);
    sp.p = a.p;
    sp.degree = a.degree;
    sp.s = parse_list(a.s);
    sp.max_terms = a.max_terms;
    if (!a.term_tolerance.empty()) sp.term_tolerance = parse_real(a.term_tolerance);
    if (sp.kind != KernelKind::Explicit && !sp.s.empty())
        throw Error(ErrorKind::InvalidArgument, "--s is only valid with --kind explicit");
    sp.validate();
    return sp;
}

ScaledPotential scaled_for(const PotentialSpec& sp, int p, const std::string& source) {
    if (source == "printed") {
        if (sp.kind != KernelKind::RiemannXi)
            throw Error(ErrorKind::InvalidArgument, "--source printed is only available for riemann");
        return rescale_potential(riemann_printed_series(), p);
    }
    if (source != "kernel") throw Error(ErrorKind::InvalidArgument, "--source must be kernel or printed");
    if (sp.kind == KernelKind::Explicit) {
        ScaledPotential s;
        s.p = sp.p;
        s.s = sp.s;
        s.s.resize(static_cast<std::size_t>(sp.p - 1), Real(0));
        if (p != sp.p) throw Error(ErrorKind::IncompatibleOrder, "--p must equal the explicit potential's p");
        return s;
    }
    return rescale_potential(taylor_u(sp, static_cast<std::size_t>(p + 1)), p);
}

void emit(const Common& c, const std::string& command, Json result, const std::string& text) {
    Json doc{{"meta", metadata(command)}, {"result", std::move(result)}};
    if (c.json) std::cout << doc.dump(2) << "\n";
    else std::cout << text;
    if (!c.out.empty()) {
        std::ofstream f(c.out);
        if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write '" + c.out + "'");
        f << doc.dump(2) << "\n";
    }
}

template <typename Fn>
void write_csv(const std::string& path, Fn&& fn) {
    if (path.empty()) return;
    std::ofstream f(path);
    if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
    fn(f);
}

std::string short_list(const std::vector<Real>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_short(v[i]);
    return s;
}

std::string complex_short(const Complex& z) {
    if (z.im == 0) return to_short(z.re);
    return to_short(z.re) + (z.im < 0 ? " - " : " + ") + to_short(abs(z.im)) + "i";
}

/// Named potentials for master / saddle: table rows, "p2" (build_potential at p = 2),
/// "gaussian" and "quartic" (V(1+u) = u^2 - u^4/8, the solvable N = 2 saddle).
std::pair<PotentialV, Real> named_potential(const std::string& id, int N) {
    if (id == "p2") {
        const ModelParams mp = double_scaling(2, N, {});
        return {build_potential(mp), mp.g};
    }
    if (id == "gaussian") return {PotentialV::gaussian(), Real(1) / N};
    if (id == "quartic") return {PotentialV::from_shifted({0, 0, Real(1), 0, Real(-1) / 8}), Real(1) / 2};
    const ScaledPotential sp = row_potential(id, Profile::Published);
    const ModelParams mp = double_scaling(sp, N);
    return {build_potential(mp), mp.g};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"xilab: biorthogonal characteristic polynomials, Baker-Akhiezer zeros and master fields"};
    app.require_subcommand(1);
    Common common;
    if (const char* env = std::getenv("XI_LAB_PRECISION")) {
        try {
            common.precision = static_cast<unsigned>(std::stoul(env));
        } catch (const std::exception&) {
            std::cerr << "error: XI_LAB_PRECISION is not an integer\n";
            return kExitConfig;
        }
    }
    app.add_option("--precision", common.precision, "working precision in decimal digits (env XI_LAB_PRECISION, default 60)");
    app.add_flag("--json", common.json, "print the JSON document instead of text");
    app.add_option("--out", common.out, "also write the JSON document to this file");
    app.add_option("--config", common.config, "JSON config file (unknown keys are rejected)");

    // expand
    SpecArgs ex;
    auto* cmd_expand = app.add_subcommand("expand", "Taylor coefficients of U and couplings s_n");
    add_spec_options(cmd_expand, ex);
    cmd_expand->add_option("--source", ex.source, "riemann: kernel (exact series) or printed (published a_n)");

    // solve
    SpecArgs sv;
    int solve_N = 16;
    bool hermite = false;
    std::string g_mode = "corrected", g_value, roots_csv, poly_csv;
    auto* cmd_solve = app.add_subcommand("solve", "Q_N(b), its roots and classification");
    add_spec_options(cmd_solve, sv);
    cmd_solve->add_option("--source", sv.source, "riemann: kernel or printed");
    cmd_solve->add_option("--N", solve_N, "polynomial degree N");
    cmd_solve->add_flag("--hermite", hermite, "Gaussian p = 2 model (Hermite polynomial)");
    cmd_solve->add_option("--g-mode", g_mode, "corrected | plain | explicit");
    cmd_solve->add_option("--g", g_value, "coupling g (explicit mode, or the Hermite model)");
    cmd_solve->add_option("--csv", roots_csv, "roots CSV: index,re,im,real,pair");
    cmd_solve->add_option("--poly-csv", poly_csv, "coefficients CSV: power,coeff");

    // psi
    SpecArgs ps;
    std::string z_min = "0", z_max = "30", psi_csv;
    int z_steps = 300;
    auto* cmd_psi = app.add_subcommand("psi", "Baker-Akhiezer function on a real z grid");
    add_spec_options(cmd_psi, ps);
    cmd_psi->add_option("--z-min", z_min, "grid start");
    cmd_psi->add_option("--z-max", z_max, "grid end");
    cmd_psi->add_option("--steps", z_steps, "number of grid intervals");
    cmd_psi->add_option("--csv", psi_csv, "CSV: z,re,im");

    // zeros
    SpecArgs zs;
    int zero_count = 3;
    std::string scan_step = "0.25", scan_max = "60", reference;
    bool minima = false;
    auto* cmd_zeros = app.add_subcommand("zeros", "real zeros of psi by quadrature, or a reference table");
    add_spec_options(cmd_zeros, zs);
    cmd_zeros->add_option("--count", zero_count, "number of positive zeros");
    cmd_zeros->add_option("--scan-step", scan_step, "sign-change scan step");
    cmd_zeros->add_option("--scan-max", scan_max, "give up beyond this z (exit 3)");
    cmd_zeros->add_option("--reference", reference, "print a hard-coded table instead: " + [] {
        std::string s;
        for (const auto& id : reference_ids()) s += id + " ";
        return s;
    }());
    cmd_zeros->add_flag("--minima", minima, "non-even U: heuristic minima of |psi| (plots only)");

    // calibrate
    std::string cal_row = "riemann", cal_profile = "published", cal_order = "auto", cal_roots, cal_ref;
    int cal_N = 16;
    bool airy_fit = false;
    auto* cmd_cal = app.add_subcommand("calibrate", "fit z = A b + c and estimate zeros");
    cmd_cal->add_option("--row", cal_row, "table row id");
    cmd_cal->add_option("--profile", cal_profile, "published | consistent");
    cmd_cal->add_option("--order", cal_order, "auto | ascending | descending");
    cmd_cal->add_option("--N", cal_N, "polynomial degree N");
    cmd_cal->add_flag("--airy-fit", airy_fit, "airy row: fit instead of the fixed map");
    cmd_cal->add_option("--roots", cal_roots, "fit these real roots instead of running a row");
    cmd_cal->add_option("--reference", cal_ref, "reference id for --roots");

    // table1
    std::string rows_arg, t_profile = "published", table_csv;
    int t_N = 16;
    auto* cmd_table = app.add_subcommand("table1", "zero estimates for all eight reference rows");
    cmd_table->add_option("--rows", rows_arg, "comma separated subset of row ids");
    cmd_table->add_option("--profile", t_profile, "published | consistent");
    cmd_table->add_option("--N", t_N, "polynomial degree N");
    cmd_table->add_option("--csv", table_csv, "CSV: id,z3_estimated,z3_exact,on_critical_line,complex_pairs,A,c,error");

    // master
    int m_N = 4, m_iters = 200, m_restarts = 4;
    std::string m_potential = "riemann", m_sigma = "0", m_tau, m_g, m_seeds = "1", trace_csv;
    bool m_general = false;
    auto* cmd_master = app.add_subcommand("master", "quenched master-field least squares");
    cmd_master->add_option("--N", m_N, "matrix size");
    cmd_master->add_option("--potential", m_potential, "row id, p2, gaussian or quartic");
    cmd_master->add_option("--g", m_g, "override g");
    cmd_master->add_option("--sigma", m_sigma, "noise scale");
    cmd_master->add_option("--seeds", m_seeds, "comma separated seeds");
    cmd_master->add_option("--tau", m_tau, "obstruction threshold (default 1e-10 (1 + C_initial))");
    cmd_master->add_option("--max-iters", m_iters, "iterations per restart");
    cmd_master->add_option("--restarts", m_restarts, "local runs, the first from a = b = 0");
    cmd_master->add_flag("--general", m_general, "general complex a, b instead of Hermitian");
    cmd_master->add_option("--trace-csv", trace_csv, "CSV: step,cost (first seed)");

    // saddle
    int s_N = 2;
    std::string s_potential = "quartic", s_g;
    bool s_oracle = false;
    auto* cmd_saddle = app.add_subcommand("saddle", "saddle-point eigenvalue equations");
    cmd_saddle->add_option("--N", s_N, "number of eigenvalues");
    cmd_saddle->add_option("--potential", s_potential, "row id, p2, gaussian or quartic");
    cmd_saddle->add_option("--g", s_g, "override g");
    cmd_saddle->add_flag("--oracle", s_oracle, "N = 2: compare with the reduced symmetric ansatz");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        const Json cfg = load_config(common.config, {"precision", "potential", "N", "g_mode", "g", "seed", "profile"});
        if (cfg.contains("precision") && app.get_option("--precision")->count() == 0)
            common.precision = static_cast<unsigned>(int_from_json(cfg["precision"], "precision"));
        set_working_precision(common.precision);
        auto cfg_int = [&](const char* key, int& target, CLI::App* sub) {
            if (cfg.contains(key) && sub->get_option("--N")->count() == 0) target = int_from_json(cfg[key], key);
        };

        if (*cmd_expand) {
            const PotentialSpec sp = spec_from(ex, cfg);
            const ScaledPotential sc = scaled_for(sp, ex.p, ex.source);
            Json res{{"spec", to_json(sp)}, {"source", ex.source}, {"scaled", to_json(sc)}};
            std::string text = "potential: " + sp.describe() + "\n";
            if (ex.source == "kernel" && sp.kind != KernelKind::Explicit) {
                const TaylorSeries u = taylor_u(sp, static_cast<std::size_t>(ex.p + 1));
                res["taylor"] = num_list(u.coeffs());
                text += "a_n: " + short_list(u.coeffs()) + "\n";
            }
            text += "lambda = " + to_short(sc.lambda) + "\n";
            for (int k = 1; k <= static_cast<int>(sc.s.size()); ++k)
                text += "s_" + std::to_string(k) + " = " + to_short(sc.coupling(k)) + "\n";
            emit(common, "expand", res, text);
        } else if (*cmd_solve) {
            cfg_int("N", solve_N, cmd_solve);
            if (cfg.contains("g_mode") && cmd_solve->get_option("--g-mode")->count() == 0)
                g_mode = cfg["g_mode"].get<std::string>();
            if (cfg.contains("g") && cmd_solve->get_option("--g")->count() == 0)
                g_value = to_decimal(real_from_json(cfg["g"], "g"));
            ModelParams mp;
            PotentialV V;
            Json res;
            if (hermite) {
                const Real g = g_value.empty() ? Real(Real(1) / solve_N) : parse_real(g_value);
                mp = double_scaling(2, solve_N, {}, GMode::Explicit, g);
                V = PotentialV::gaussian();
                res["model"] = "gaussian";
            } else {
                const PotentialSpec sp = spec_from(sv, cfg);
                const ScaledPotential sc = scaled_for(sp, sv.p, sv.source);
                const GMode mode = g_mode_from_string(g_mode);
                std::optional<Real> gx;
                if (!g_value.empty()) gx = parse_real(g_value);
                mp = double_scaling(sc, solve_N, mode, gx);
                V = build_potential(mp);
                res["scaled"] = to_json(sc);
            }
            const CharPolynomial q = q_polynomial(mp, V, solve_N);
            const RootSet rs = find_roots(q);
            res["params"] = to_json(mp);
            res["polynomial"] = to_json(q);
            res["roots"] = to_json(rs);
            res["reconstruction_error"] = num(reconstruction_error(q, rs));
            res["reconstruction_bound"] = num(reconstruction_bound(q));
            std::string text = "g = " + to_short(mp.g, 9) + " (" + to_string(mp.g_mode) + ")\nQ_" +
                               std::to_string(solve_N) + " monic coefficients (b^N first):\n";
            const CharPolynomial m = q.monic();
            for (int k = m.degree(); k >= 0; --k) text += "  b^" + std::to_string(k) + ": " + to_short(m[k]) + "\n";
            text += "roots:\n";
            for (const auto& r : rs.roots) text += "  " + complex_short(r) + "\n";
            text += std::string("on critical line: ") + (rs.on_critical_line ? "yes" : "no") + ", complex pairs: " +
                    std::to_string(rs.complex_pair_count()) + "\n";
            write_csv(roots_csv, [&](std::ostream& os) { write_roots_csv(os, rs); });
            write_csv(poly_csv, [&](std::ostream& os) { write_poly_csv(os, q); });
            emit(common, "solve", res, text);
        } else if (*cmd_psi) {
            const PotentialSpec sp = spec_from(ps, cfg);
            const BAFunction f = BAFunction::from_spec(sp);
            if (z_steps < 1) throw Error(ErrorKind::InvalidArgument, "--steps must be positive");
            const Real lo = parse_real(z_min), hi = parse_real(z_max);
            std::vector<Real> zs_grid;
            std::vector<Complex> vals;
            for (int i = 0; i <= z_steps; ++i) {
                zs_grid.push_back(lo + (hi - lo) * i / z_steps);
                vals.push_back(f.psi(Complex(zs_grid.back())));
            }
            Json pts = Json::array();
            for (std::size_t i = 0; i < vals.size(); ++i)
                pts.push_back(Json{{"z", num(zs_grid[i])}, {"re", num(vals[i].re)}, {"im", num(vals[i].im)}});
            Json res{{"spec", to_json(sp)}, {"x_lo", num(f.x_lo())}, {"x_hi", num(f.x_hi())},
                     {"panels", f.panel_count()}, {"points", pts}};
            std::ostringstream text;
            write_psi_csv(text, zs_grid, vals);
            write_csv(psi_csv, [&](std::ostream& os) { write_psi_csv(os, zs_grid, vals); });
            emit(common, "psi", res, text.str());
        } else if (*cmd_zeros) {
            Json res;
            std::string text;
            if (!reference.empty()) {
                const ReferenceZeros z = reference_table(reference);
                res = to_json(z);
                text = reference + ": " + short_list(z.zeros) + "\n";
            } else {
                const PotentialSpec sp = spec_from(zs, cfg);
                const BAFunction f = BAFunction::from_spec(sp);
                if (minima || !f.is_even()) {
                    const auto m = psi_magnitude_minima(f, Real(0), parse_real(scan_max), parse_real(scan_step));
                    res = Json{{"spec", to_json(sp)}, {"heuristic_minima", num_list(m)}};
                    text = "|psi| minima (heuristic): " + short_list(m) + "\n";
                } else {
                    const ReferenceZeros z = psi_zeros(f, zero_count, parse_real(scan_step), parse_real(scan_max));
                    res = to_json(z);
                    res["spec"] = to_json(sp);
                    text = "zeros: " + short_list(z.zeros) + "\n";
                }
            }
            emit(common, "zeros", res, text);
        } else if (*cmd_cal) {
            if (cfg.contains("profile") && cmd_cal->get_option("--profile")->count() == 0)
                cal_profile = cfg["profile"].get<std::string>();
            Json res;
            std::string text;
            if (!cal_roots.empty()) {
                if (cal_ref.empty()) throw Error(ErrorKind::InvalidArgument, "--roots needs --reference");
                const ReferenceZeros ref = reference_table(cal_ref);
                std::vector<Real> roots = parse_list(cal_roots);
                RootOrder o = resolve_order(root_order_from_string(cal_order), ref);
                std::sort(roots.begin(), roots.end());
                if (o == RootOrder::Descending) std::reverse(roots.begin(), roots.end());
                Calibration cal = fit_linear(roots, ref);
                cal.order = o;
                const auto est = estimate_zeros(cal, roots);
                res = Json{{"calibration", to_json(cal)}, {"estimates", num_list(est)}};
                text = "A = " + to_short(cal.A) + ", c = " + to_short(cal.c) + "\nestimates: " + short_list(est) + "\n";
            } else {
                RowOptions opt;
                opt.N = cal_N;
                opt.profile = profile_from_string(cal_profile);
                opt.order = root_order_from_string(cal_order);
                opt.airy_fixed_map = !airy_fit;
                const RowResult r = run_row(cal_row, opt);
                res = Json{{"row", r.id},
                           {"profile", to_string(opt.profile)},
                           {"params", to_json(r.params)},
                           {"calibration", to_json(r.cal)},
                           {"estimates", num_list(r.estimates)},
                           {"reference", to_json(r.reference)},
                           {"note", r.note}};
                text = r.label + ": A = " + to_short(r.cal.A) + ", c = " + to_short(r.cal.c) +
                       "\nestimates: " + short_list(std::vector<Real>(r.estimates.begin(),
                                                                     r.estimates.begin() + std::min<std::size_t>(3, r.estimates.size()))) +
                       "\nreference: " + short_list(r.reference.zeros) + "\n";
            }
            emit(common, "calibrate", res, text);
        } else if (*cmd_table) {
            if (cfg.contains("profile") && cmd_table->get_option("--profile")->count() == 0)
                t_profile = cfg["profile"].get<std::string>();
            std::vector<std::string> ids;
            if (rows_arg.empty()) {
                ids = all_row_ids();
            } else {
                std::stringstream ss(rows_arg);
                std::string id;
                while (std::getline(ss, id, ','))
                    if (!id.empty()) ids.push_back(id);
            }
            RowOptions opt;
            opt.N = t_N;
            opt.profile = profile_from_string(t_profile);
            const auto outcomes = run_rows(ids, opt);
            const ZeroReport rep = build_table1(ids, outcomes, t_N);
            Json res = to_json(rep);
            res["profile"] = to_string(opt.profile);
            write_csv(table_csv, [&](std::ostream& os) { write_table_csv(os, rep); });
            emit(common, "table1", res, format_table(rep));
            for (const auto& r : rep.rows)
                if (!r.ok()) return kExitNumerical;
        } else if (*cmd_master) {
            cfg_int("N", m_N, cmd_master);
            if (cfg.contains("seed") && cmd_master->get_option("--seeds")->count() == 0)
                m_seeds = std::to_string(int_from_json(cfg["seed"], "seed"));
            auto [V, g] = named_potential(m_potential, m_N);
            MasterConfig mc;
            mc.N = m_N;
            mc.potential = V;
            mc.g = m_g.empty() ? g : parse_real(m_g);
            mc.sigma = parse_real(m_sigma);
            mc.max_iters = m_iters;
            mc.restarts = m_restarts;
            mc.hermitian = !m_general;
            if (!m_tau.empty()) mc.tau = parse_real(m_tau);
            Json runs = Json::array();
            std::string text;
            bool first = true;
            for (const auto& sv_seed : parse_list(m_seeds)) {
                mc.seed = static_cast<std::uint64_t>(sv_seed.convert_to<long long>());
                const MasterResult r = optimize(mc);
                Json j = to_json(r);
                j["seed"] = mc.seed;
                runs.push_back(std::move(j));
                text += "seed " + std::to_string(mc.seed) + ": C = " + to_short(r.cost) + ", tau = " + to_short(r.tau) +
                        ", obstruction = " + (r.obstruction ? "yes" : "no") + ", iterations = " +
                        std::to_string(r.iterations) + "\n";
                if (first) write_csv(trace_csv, [&](std::ostream& os) { write_trace_csv(os, r.trace); });
                first = false;
            }
            Json res{{"potential", m_potential}, {"N", m_N}, {"g", num(mc.g)},
                     {"sigma", num(mc.sigma)},   {"hermitian", mc.hermitian}, {"runs", runs}};
            emit(common, "master", res, text);
        } else if (*cmd_saddle) {
            cfg_int("N", s_N, cmd_saddle);
            auto [V, g] = named_potential(s_potential, s_N);
            SaddleConfig sc;
            sc.N = s_N;
            sc.potential = V;
            sc.g = s_g.empty() ? g : parse_real(s_g);
            const SaddleResult r = saddle_solve(sc);
            Json res{{"potential", s_potential}, {"N", s_N}, {"g", num(sc.g)}, {"solution", to_json(r)}};
            std::string text = "a: " + short_list(r.a) + "\nb: " + short_list(r.b) + "\nresidual: " +
                               to_short(r.residual) + (r.converged ? " (converged)\n" : " (NOT converged)\n");
            if (s_oracle) {
                if (s_N != 2) throw Error(ErrorKind::InvalidArgument, "--oracle needs N = 2");
                try {
                    const SaddleResult o = saddle_reduced_n2(V, sc.g);
                    res["oracle"] = to_json(o);
                    text += "oracle a: " + short_list(o.a) + ", b: " + short_list(o.b) + "\n";
                } catch (const Error& e) {
                    res["oracle_error"] = e.what();
                    text += std::string("oracle: ") + e.what() + "\n";
                }
            }
            emit(common, "saddle", res, text);
            if (!r.converged) return kExitNumerical;
        }
    } catch (const Error& e) {
        std::cerr << "error [" << to_string(e.kind()) << "]: " << e.what() << "\n";
        return is_numerical(e.kind()) ? kExitNumerical : kExitConfig;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error [config]: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return 0;
}
