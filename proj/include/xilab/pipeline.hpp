#pragma once

// End-to-end rows: potential -> couplings -> Q_N -> roots -> calibration.

#include "xilab/baker_akhiezer.hpp"
#include "xilab/calibration.hpp"
#include "xilab/matrix_model.hpp"
#include "xilab/potentials.hpp"
#include "xilab/roots.hpp"
#include "xilab/scaling.hpp"

#include <future>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace xilab {

/// Published: reproduce the numbers as printed (Riemann from the printed
/// a_n, Ramanujan with the Riemann g). Consistent: every row from its own
/// kernel with corrected g.
enum class Profile { Published, Consistent };

inline std::string to_string(Profile p) { return p == Profile::Published ? "published" : "consistent"; }

inline Profile profile_from_string(const std::string& s) {
    if (s == "published") return Profile::Published;
    if (s == "consistent") return Profile::Consistent;
    throw Error(ErrorKind::InvalidArgument, "unknown profile '" + s + "'");
}

struct RowOptions {
    int N = 16;
    Profile profile = Profile::Published;
    bool airy_fixed_map = true;
    RootOrder order = RootOrder::Auto;
    RootOptions root_options{};
};

struct RowResult {
    std::string id;
    std::string label;
    std::string u_description;
    std::optional<ScaledPotential> potential;  // absent for the Hermite/Airy row
    ModelParams params;
    CharPolynomial q;
    RootSet roots;
    Calibration cal;
    std::vector<Real> estimates;
    ReferenceZeros reference;
    std::string note;
};

/// a_0..a_8 of -log Phi as printed for the Riemann kernel.
inline TaylorSeries riemann_printed_series() {
    TaylorSeries u(8);
    u[0] = Real("0.112728");
    u[2] = Real("9.3634");
    u[4] = Real("5.95896");
    u[6] = Real("-2.09194");
    u[8] = Real("3.53296");
    return u;
}

inline ScaledPotential riemann_published_potential() { return rescale_potential(riemann_printed_series(), 7); }

struct RowRecipe {
    std::string id;
    std::string label;
    std::string u_description;
    std::string reference_id;
};

inline const std::vector<RowRecipe>& row_recipes() {
    static const std::vector<RowRecipe> recipes = {
        {"airy", "Ai(z)", "i x^3/3", "airy"},
        {"riemann", "Riemann Xi(z)", "-log Phi(x)", "riemann"},
        {"ramanujan", "Ramanujan Xi_L(z)", "-log Phi_L(x)", "ramanujan"},
        {"airy7", "Ai_(7,1)(z)", "x^8/8", "airy7"},
        {"airy7_m1_3_0", "Ai_(7,1)(z,-1,3,0)", "x^8/8 + 3x^4/4 - x^2/2", "airy7_m1_3_0"},
        {"airy7_1_3_3", "Ai_(7,1)(z,1,3,3)", "x^8/8 + 3x^6/6 + 3x^4/4 + x^2/2", "airy7_1_3_3"},
        {"kbessel", "K_iz(1)", "cosh(x)", "kbessel"},
        {"eta_gamma", "Gamma(iz+1/2) eta(iz+1/2)", "(x + log 2)/2 + e^{-(x + log 2)} + 1", "eta_gamma"},
    };
    return recipes;
}

inline const RowRecipe& row_recipe(const std::string& id) {
    for (const auto& r : row_recipes())
        if (r.id == id) return r;
    throw Error(ErrorKind::UnknownReference, "unknown table row '" + id + "'");
}

/// Couplings of a row's potential (all rows except airy).
inline ScaledPotential row_potential(const std::string& id, Profile profile) {
    if (id == "riemann")
        return profile == Profile::Published ? riemann_published_potential()
                                             : rescale_potential(taylor_u(PotentialSpec::riemann(), 8), 7);
    if (id == "ramanujan") return rescale_potential(taylor_u(PotentialSpec::ramanujan(), 8), 7);
    if (id == "eta_gamma") return rescale_potential(taylor_u(PotentialSpec::eta_gamma(), 20), 19);
    if (id == "kbessel") return cosh_couplings(7);
    auto explicit_sp = [](std::vector<int> s) {
        ScaledPotential sp;
        sp.p = 7;
        for (int v : s) sp.s.emplace_back(v);
        return sp;
    };
    if (id == "airy7") return explicit_sp({0, 0, 0, 0, 0, 0});
    if (id == "airy7_m1_3_0") return explicit_sp({-1, 0, 3, 0, 0, 0});
    if (id == "airy7_1_3_3") return explicit_sp({1, 0, 3, 0, 3, 0});
    throw Error(ErrorKind::UnknownReference, "row '" + id + "' has no scaled potential");
}

/// The potential spec whose e^{-U} defines the row's Baker-Akhiezer function.
inline std::optional<PotentialSpec> row_ba_spec(const std::string& id) {
    if (id == "riemann") return PotentialSpec::riemann();
    if (id == "ramanujan") return PotentialSpec::ramanujan();
    if (id == "eta_gamma") return PotentialSpec::eta_gamma();
    if (id == "kbessel") return PotentialSpec::cosh_kernel();
    if (id == "airy7" || id == "airy7_m1_3_0" || id == "airy7_1_3_3") {
        const ScaledPotential sp = row_potential(id, Profile::Consistent);
        return PotentialSpec::explicit_couplings(7, sp.s);
    }
    return std::nullopt;
}

inline RowResult run_row(const std::string& id, const RowOptions& opt = {}) {
    const RowRecipe& recipe = row_recipe(id);
    RowResult r;
    r.id = id;
    r.label = recipe.label;
    r.u_description = recipe.u_description;
    r.reference = reference_table(recipe.reference_id);

    PotentialV V;
    if (id == "airy") {
        r.params = double_scaling(2, opt.N, {}, GMode::Plain);
        V = PotentialV::gaussian();
        r.note = "Gaussian V(A) = -(A-1)^2/4, g = 1/N";
    } else {
        r.potential = row_potential(id, opt.profile);
        if (id == "ramanujan" && opt.profile == Profile::Published) {
            const ModelParams rz = double_scaling(riemann_published_potential(), opt.N);
            r.params = double_scaling(*r.potential, opt.N, GMode::Explicit, rz.g);
            r.note = "g taken from the Riemann row";
        } else {
            r.params = double_scaling(*r.potential, opt.N);
        }
        if (id == "riemann" && opt.profile == Profile::Published) r.note = "couplings from the printed a_n";
        V = build_potential(r.params);
    }
    r.q = q_polynomial(r.params, V, opt.N);
    r.roots = find_roots(r.q, opt.root_options);
    if (id == "airy" && opt.airy_fixed_map) {
        r.cal = airy_fixed_map();
    } else {
        r.cal = calibrate(r.roots, r.reference, opt.order);
    }
    r.estimates = estimate_zeros(r.cal, r.roots);
    return r;
}

inline ZeroReportRow report_row(const RowResult& r) {
    ZeroReportRow row;
    row.id = r.id;
    row.label = r.label;
    row.u_description = r.u_description;
    if (r.estimates.size() >= 3) row.z3_estimated = r.estimates[2];
    if (r.reference.zeros.size() >= 3) row.z3_exact = r.reference.zeros[2];
    row.on_critical_line = r.roots.on_critical_line;
    row.complex_pairs = r.roots.complex_pair_count();
    row.A = r.cal.A;
    row.c = r.cal.c;
    return row;
}

struct RowOutcome {
    std::string id;
    std::optional<RowResult> result;
    std::string error;
};

/// One report row per requested id, in the requested order. Failed rows carry
/// their error message; ids with no outcome at all raise MissingPipeline.
inline ZeroReport build_table1(const std::vector<std::string>& ids, const std::vector<RowOutcome>& outcomes,
                               int N = 16) {
    ZeroReport rep;
    rep.precision = working_precision();
    rep.N = N;
    for (const auto& id : ids) {
        const RowOutcome* hit = nullptr;
        for (const auto& o : outcomes)
            if (o.id == id) hit = &o;
        if (!hit) throw Error(ErrorKind::MissingPipeline, "no pipeline result for row '" + id + "'");
        if (hit->result) {
            rep.rows.push_back(report_row(*hit->result));
        } else {
            const RowRecipe& rc = row_recipe(id);
            ZeroReportRow row;
            row.id = id;
            row.label = rc.label;
            row.u_description = rc.u_description;
            row.error = hit->error.empty() ? "unknown failure" : hit->error;
            rep.rows.push_back(std::move(row));
        }
    }
    return rep;
}

inline std::vector<std::string> all_row_ids() {
    std::vector<std::string> ids;
    for (const auto& r : row_recipes()) ids.push_back(r.id);
    return ids;
}

/// Runs rows concurrently. Precision is process-global and must be set before the call.
inline std::vector<RowOutcome> run_rows(const std::vector<std::string>& ids, const RowOptions& opt = {}) {
    for (const auto& id : ids) row_recipe(id);  // reject unknown ids before launching
    std::vector<std::future<RowOutcome>> jobs;
    for (const auto& id : ids) {
        jobs.push_back(std::async(std::launch::async, [id, opt] {
            RowOutcome o{id, std::nullopt, {}};
            try {
                o.result = run_row(id, opt);
            } catch (const Error& e) {
                o.error = std::string(to_string(e.kind())) + ": " + e.what();
            }
            return o;
        }));
    }
    std::vector<RowOutcome> out;
    for (auto& j : jobs) out.push_back(j.get());
    return out;
}

}  // namespace xilab
