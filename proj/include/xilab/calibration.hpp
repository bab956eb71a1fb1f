#pragma once

// Linear calibration z = A b + c from polynomial roots to reference zeros,
// and the zero-report rows.

#include "xilab/baker_akhiezer.hpp"
#include "xilab/real.hpp"
#include "xilab/roots.hpp"

#include <algorithm>
#include <cstdio>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace xilab {

/// Auto pairs the ordered real roots with the references in the same direction:
/// ascending roots for increasing references (lowest root to lowest zero),
/// descending roots for decreasing ones (Airy convention).
enum class RootOrder { Auto, Ascending, Descending };

inline std::string to_string(RootOrder o) {
    switch (o) {
    case RootOrder::Auto: return "auto";
    case RootOrder::Ascending: return "ascending";
    case RootOrder::Descending: return "descending";
    }
    return "unknown";
}

inline RootOrder root_order_from_string(const std::string& s) {
    if (s == "auto") return RootOrder::Auto;
    if (s == "ascending") return RootOrder::Ascending;
    if (s == "descending") return RootOrder::Descending;
    throw Error(ErrorKind::InvalidArgument, "unknown root order '" + s + "'");
}

inline RootOrder resolve_order(RootOrder o, const ReferenceZeros& ref) {
    if (o != RootOrder::Auto) return o;
    if (ref.zeros.size() >= 2 && ref.zeros[1] < ref.zeros[0]) return RootOrder::Descending;
    return RootOrder::Ascending;
}

/// Real roots in the requested order; complex roots are dropped.
inline std::vector<Real> ordered_real_roots(const RootSet& rs, RootOrder order) {
    std::vector<Real> r = rs.real_roots();
    if (order == RootOrder::Descending) std::reverse(r.begin(), r.end());
    return r;
}

struct Calibration {
    Real A{1};
    Real c{0};
    std::pair<std::size_t, std::size_t> anchors{0, 1};
    std::string reference_id;
    RootOrder order = RootOrder::Ascending;
    bool fixed_map = false;

    Real map(const Real& b) const { return A * b + c; }
};

/// Fits z_i = A b_i + c through roots[i], roots[j] onto ref[i], ref[j].
inline Calibration fit_linear(const std::vector<Real>& roots, const ReferenceZeros& ref,
                              std::pair<std::size_t, std::size_t> which = {0, 1}) {
    const auto [i, j] = which;
    if (i >= roots.size() || j >= roots.size() || i >= ref.zeros.size() || j >= ref.zeros.size())
        throw Error(ErrorKind::DegenerateFit, "anchor index out of range (too few real roots?)");
    const Real db = roots[j] - roots[i];
    if (i == j || db == 0) throw Error(ErrorKind::DegenerateFit, "anchor roots coincide");
    Calibration cal;
    cal.A = (ref.zeros[j] - ref.zeros[i]) / db;
    cal.c = ref.zeros[i] - cal.A * roots[i];
    cal.anchors = which;
    cal.reference_id = ref.id;
    return cal;
}

/// Anchors addressed by index into an unordered root list; complex anchors are rejected.
inline Calibration fit_linear(const std::vector<Complex>& roots, const ReferenceZeros& ref,
                              std::pair<std::size_t, std::size_t> which) {
    std::vector<Real> re;
    for (const auto& r : roots) re.push_back(r.re);
    for (std::size_t k : {which.first, which.second})
        if (k < roots.size() && roots[k].im != 0)
            throw Error(ErrorKind::ComplexAnchor, "anchor root " + std::to_string(k) + " is complex");
    return fit_linear(re, ref, which);
}

inline Calibration calibrate(const RootSet& rs, const ReferenceZeros& ref, RootOrder order = RootOrder::Auto) {
    const RootOrder o = resolve_order(order, ref);
    Calibration cal = fit_linear(ordered_real_roots(rs, o), ref);
    cal.order = o;
    return cal;
}

/// y = -8 2^{1/6} (sqrt 2 - b): the fixed map of the Hermite roots onto the Airy variable.
inline Calibration airy_fixed_map() {
    Calibration cal;
    const Real k = 8 * pow(Real(2), Real(1) / 6);
    cal.A = k;
    cal.c = -k * sqrt(Real(2));
    cal.reference_id = "airy";
    cal.order = RootOrder::Descending;
    cal.fixed_map = true;
    return cal;
}

inline std::vector<Real> estimate_zeros(const Calibration& cal, const std::vector<Real>& ordered_roots) {
    std::vector<Real> z;
    z.reserve(ordered_roots.size());
    for (const auto& b : ordered_roots) z.push_back(cal.map(b));
    return z;
}

inline std::vector<Real> estimate_zeros(const Calibration& cal, const RootSet& rs) {
    return estimate_zeros(cal, ordered_real_roots(rs, cal.order));
}

struct ZeroReportRow {
    std::string id;
    std::string label;
    std::string u_description;
    std::optional<Real> z3_estimated;
    std::optional<Real> z3_exact;
    bool on_critical_line = false;
    int complex_pairs = 0;
    Real A{0}, c{0};
    std::string error;  // non-empty marks a failed row

    bool ok() const { return error.empty(); }
};

struct ZeroReport {
    std::vector<ZeroReportRow> rows;
    unsigned precision = 0;
    int N = 0;
};

inline std::string format_table(const ZeroReport& rep) {
    auto cell = [](const std::optional<Real>& v) { return v ? to_short(*v) : std::string("-"); };
    std::string out;
    char buf[512];
    std::snprintf(buf, sizeof buf, "%-26s %-32s %12s %12s %6s %6s %12s %12s\n", "function", "U(x)",
                  "z3 (N)", "z3 exact", "on CL", "pairs", "A", "c");
    out += buf;
    for (const auto& r : rep.rows) {
        if (!r.ok()) {
            std::snprintf(buf, sizeof buf, "%-26s %-32s FAILED: %s\n", r.label.c_str(), r.u_description.c_str(),
                          r.error.c_str());
        } else {
            std::snprintf(buf, sizeof buf, "%-26s %-32s %12s %12s %6s %6d %12s %12s\n", r.label.c_str(),
                          r.u_description.c_str(), cell(r.z3_estimated).c_str(), cell(r.z3_exact).c_str(),
                          r.on_critical_line ? "Y" : "N", r.complex_pairs, to_short(r.A).c_str(),
                          to_short(r.c).c_str());
        }
        out += buf;
    }
    return out;
}

}  // namespace xilab
