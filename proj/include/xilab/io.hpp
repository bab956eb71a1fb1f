#pragma once

// JSON and CSV serialization. Every Real is written as a decimal string at
// full working precision.

#include "xilab/baker_akhiezer.hpp"
#include "xilab/calibration.hpp"
#include "xilab/master_field.hpp"
#include "xilab/pipeline.hpp"
#include "xilab/polynomial.hpp"
#include "xilab/potentials.hpp"
#include "xilab/roots.hpp"
#include "xilab/scaling.hpp"

#include <json.hpp>

#include <ostream>
#include <set>
#include <string>
#include <vector>

namespace xilab {

using Json = nlohmann::ordered_json;

inline Json num(const Real& x) { return to_decimal(x); }

inline Json num_list(const std::vector<Real>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(num(x));
    return a;
}

inline Json complex_json(const Complex& z) { return Json{{"re", num(z.re)}, {"im", num(z.im)}}; }

inline Json metadata(const std::string& command) {
    return Json{{"tool", "xilab"}, {"command", command}, {"precision_digits", working_precision()}};
}

inline Json to_json(const PotentialSpec& s) {
    Json j{{"kind", to_string(s.kind)}};
    if (s.kind == KernelKind::Monomial) j["degree"] = s.degree;
    if (s.kind == KernelKind::Explicit) {
        j["p"] = s.p;
        j["s"] = num_list(s.s);
    }
    j["max_terms"] = s.max_terms;
    j["term_tolerance"] = num(s.tolerance());
    return j;
}

inline Json to_json(const ScaledPotential& sp) {
    return Json{{"p", sp.p}, {"lambda", num(sp.lambda)}, {"a0", num(sp.a0)}, {"s", num_list(sp.s)},
                {"linear_residual", num(sp.linear_residual)}};
}

inline Json to_json(const ModelParams& mp) {
    return Json{{"p", mp.p},          {"N", mp.N}, {"epsilon", num(mp.epsilon)}, {"g", num(mp.g)},
                {"g_mode", to_string(mp.g_mode)}, {"s", num_list(mp.s)}};
}

inline Json to_json(const CharPolynomial& q) { return Json{{"N", q.degree()}, {"coeffs", num_list(q.coeffs)}}; }

inline Json to_json(const RootSet& rs) {
    Json roots = Json::array();
    for (std::size_t i = 0; i < rs.size(); ++i) {
        Json r = complex_json(rs.roots[i]);
        r["real"] = static_cast<bool>(rs.is_real[i]);
        r["pair"] = rs.pair_id[i];
        r["backward_error"] = num(rs.residuals[i]);
        roots.push_back(std::move(r));
    }
    return Json{{"roots", roots},
                {"complex_pairs", rs.complex_pair_count()},
                {"on_critical_line", rs.on_critical_line},
                {"im_tolerance", num(rs.im_tolerance)},
                {"sweeps", rs.sweeps}};
}

inline Json to_json(const ReferenceZeros& z) {
    return Json{{"id", z.id},
                {"provenance", z.provenance == ZeroProvenance::Table ? "table" : "quadrature"},
                {"zeros", num_list(z.zeros)}};
}

inline Json to_json(const Calibration& c) {
    return Json{{"A", num(c.A)},
                {"c", num(c.c)},
                {"anchors", {c.anchors.first, c.anchors.second}},
                {"reference", c.reference_id},
                {"order", to_string(c.order)},
                {"fixed_map", c.fixed_map}};
}

inline Json to_json(const ZeroReportRow& r) {
    Json j{{"id", r.id}, {"function", r.label}, {"U", r.u_description}};
    if (!r.ok()) {
        j["error"] = r.error;
        return j;
    }
    j["z3_estimated"] = r.z3_estimated ? num(*r.z3_estimated) : Json(nullptr);
    j["z3_exact"] = r.z3_exact ? num(*r.z3_exact) : Json(nullptr);
    j["on_critical_line"] = r.on_critical_line;
    j["complex_pairs"] = r.complex_pairs;
    j["A"] = num(r.A);
    j["c"] = num(r.c);
    return j;
}

inline Json to_json(const ZeroReport& rep) {
    Json rows = Json::array();
    for (const auto& r : rep.rows) rows.push_back(to_json(r));
    return Json{{"N", rep.N}, {"rows", rows}};
}

inline Json to_json(const CMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.size(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.size(); ++j) row.push_back(complex_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Json to_json(const MasterResult& r) {
    return Json{{"cost", num(r.cost)},
                {"tau", num(r.tau)},
                {"obstruction", r.obstruction},
                {"iterations", r.iterations},
                {"best_restart", r.best_restart},
                {"restart_costs", num_list(r.restart_costs)},
                {"trace", num_list(r.trace)},
                {"a", to_json(r.state.a)},
                {"b", to_json(r.state.b)}};
}

inline Json to_json(const SaddleResult& r) {
    return Json{{"a", num_list(r.a)},
                {"b", num_list(r.b)},
                {"residual", num(r.residual)},
                {"iterations", r.iterations},
                {"converged", r.converged},
                {"retries", r.retries}};
}

// ---- parsing -------------------------------------------------------------------

inline void reject_unknown_keys(const Json& j, const std::set<std::string>& allowed, const std::string& where) {
    if (!j.is_object()) throw Error(ErrorKind::InvalidArgument, where + " must be a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key()))
            throw Error(ErrorKind::InvalidArgument, "unknown key '" + it.key() + "' in " + where);
}

/// Accepts a number or a decimal string.
inline Real real_from_json(const Json& j, const std::string& what) {
    if (j.is_string()) return parse_real(j.get<std::string>());
    if (j.is_number_integer()) return Real(j.get<long long>());
    if (j.is_number()) return parse_real(j.dump());
    throw Error(ErrorKind::InvalidArgument, what + " must be a number or decimal string");
}

inline int int_from_json(const Json& j, const std::string& what) {
    if (!j.is_number_integer()) throw Error(ErrorKind::InvalidArgument, what + " must be an integer");
    return j.get<int>();
}

/// {kind, p, s, max_terms, term_tolerance} plus `degree` for monomials.
inline PotentialSpec potential_spec_from_json(const Json& j) {
    reject_unknown_keys(j, {"kind", "p", "s", "degree", "max_terms", "term_tolerance"}, "potential spec");
    if (!j.contains("kind")) throw Error(ErrorKind::InvalidArgument, "potential spec needs 'kind'");
    PotentialSpec sp;
    sp.kind = kernel_kind_from_string(j.at("kind").get<std::string>());
    if (j.contains("p")) sp.p = int_from_json(j["p"], "p");
    if (j.contains("degree")) sp.degree = int_from_json(j["degree"], "degree");
    if (j.contains("s")) {
        if (!j["s"].is_array()) throw Error(ErrorKind::InvalidArgument, "s must be an array");
        for (const auto& v : j["s"]) sp.s.push_back(real_from_json(v, "s entry"));
    }
    if (j.contains("max_terms")) sp.max_terms = int_from_json(j["max_terms"], "max_terms");
    if (j.contains("term_tolerance")) sp.term_tolerance = real_from_json(j["term_tolerance"], "term_tolerance");
    if (sp.kind != KernelKind::Explicit && !sp.s.empty())
        throw Error(ErrorKind::InvalidArgument, "'s' is only valid for explicit potentials");
    sp.validate();
    return sp;
}

// ---- CSV -------------------------------------------------------------------------

inline void write_roots_csv(std::ostream& os, const RootSet& rs) {
    os << "index,re,im,real,pair\n";
    for (std::size_t i = 0; i < rs.size(); ++i)
        os << i << ',' << to_decimal(rs.roots[i].re) << ',' << to_decimal(rs.roots[i].im) << ','
           << (rs.is_real[i] ? 1 : 0) << ',' << rs.pair_id[i] << '\n';
}

inline void write_poly_csv(std::ostream& os, const CharPolynomial& q) {
    os << "power,coeff\n";
    for (std::size_t k = 0; k < q.coeffs.size(); ++k) os << k << ',' << to_decimal(q[k]) << '\n';
}

inline void write_psi_csv(std::ostream& os, const std::vector<Real>& z, const std::vector<Complex>& psi) {
    os << "z,re,im\n";
    for (std::size_t i = 0; i < z.size(); ++i)
        os << to_decimal(z[i]) << ',' << to_decimal(psi[i].re) << ',' << to_decimal(psi[i].im) << '\n';
}

inline void write_table_csv(std::ostream& os, const ZeroReport& rep) {
    os << "id,z3_estimated,z3_exact,on_critical_line,complex_pairs,A,c,error\n";
    for (const auto& r : rep.rows) {
        os << r.id << ',';
        if (r.ok()) {
            os << (r.z3_estimated ? to_decimal(*r.z3_estimated) : "") << ','
               << (r.z3_exact ? to_decimal(*r.z3_exact) : "") << ',' << (r.on_critical_line ? 1 : 0) << ','
               << r.complex_pairs << ',' << to_decimal(r.A) << ',' << to_decimal(r.c) << ",\n";
        } else {
            os << ",,,,,,\"" << r.error << "\"\n";
        }
    }
}

inline void write_trace_csv(std::ostream& os, const std::vector<Real>& trace) {
    os << "step,cost\n";
    for (std::size_t i = 0; i < trace.size(); ++i) os << i << ',' << to_decimal(trace[i]) << '\n';
}

}  // namespace xilab
