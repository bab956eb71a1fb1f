#include "helpers.hpp"
#include "xilab/pipeline.hpp"

using namespace xilab;
using testing::rel_err;

namespace {

ReferenceZeros ref_of(std::initializer_list<const char*> z) {
    ReferenceZeros r{"test", {}, ZeroProvenance::Table};
    for (const char* s : z) r.zeros.emplace_back(s);
    return r;
}

RootSet real_set(std::initializer_list<const char*> r) {
    RootSet rs;
    for (const char* s : r) {
        rs.roots.emplace_back(Real(s));
        rs.is_real.push_back(true);
        rs.pair_id.push_back(-1);
        rs.residuals.emplace_back(0);
    }
    rs.on_critical_line = true;
    return rs;
}

}  // namespace

TEST_CASE("two-point linear fit", "[calibration]") {
    PrecisionScope prec(40);
    const Calibration cal = fit_linear(std::vector<Real>{Real(1), Real(3), Real(4)}, ref_of({"5", "9", "11"}));
    REQUIRE(cal.A == 2);
    REQUIRE(cal.c == 3);
    REQUIRE(cal.map(Real(4)) == 11);
    const Calibration cal2 =
        fit_linear(std::vector<Real>{Real(1), Real(3), Real(4)}, ref_of({"5", "9", "11"}), {0, 2});
    REQUIRE(abs(cal2.A - 2) < tiny(35));
}

TEST_CASE("fit errors", "[calibration]") {
    PrecisionScope prec(30);
    auto kind_of = [](auto&& f) {
        try {
            f();
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::InvalidArgument;
    };
    REQUIRE(kind_of([] { fit_linear(std::vector<Real>{Real(1)}, ref_of({"1", "2"})); }) == ErrorKind::DegenerateFit);
    REQUIRE(kind_of([] { fit_linear(std::vector<Real>{Real(1), Real(1)}, ref_of({"1", "2"})); }) ==
            ErrorKind::DegenerateFit);
    const std::vector<Complex> roots = {Complex(Real(1), Real("0.5")), Complex(Real(2))};
    REQUIRE(kind_of([&] { fit_linear(roots, ref_of({"1", "2"}), {0, 1}); }) == ErrorKind::ComplexAnchor);
}

TEST_CASE("root ordering follows the reference direction", "[calibration]") {
    PrecisionScope prec(30);
    const RootSet rs = real_set({"0.5", "-1", "2"});
    REQUIRE(resolve_order(RootOrder::Auto, ref_of({"1", "2"})) == RootOrder::Ascending);
    REQUIRE(resolve_order(RootOrder::Auto, ref_of({"-1", "-2"})) == RootOrder::Descending);
    const auto desc = ordered_real_roots(rs, RootOrder::Descending);
    REQUIRE(desc[0] == 2);
    REQUIRE(desc[2] == -1);
    const Calibration cal = calibrate(rs, ref_of({"-1", "-2", "-3"}));
    REQUIRE(cal.order == RootOrder::Descending);
    REQUIRE(abs(cal.map(Real(2)) + 1) < tiny(25));
    REQUIRE(abs(cal.map(Real("0.5")) + 2) < tiny(25));
    REQUIRE(root_order_from_string("descending") == RootOrder::Descending);
    REQUIRE_THROWS_AS(root_order_from_string("sideways"), Error);
}

TEST_CASE("Airy fixed map", "[calibration]") {
    PrecisionScope prec(40);
    const Calibration cal = airy_fixed_map();
    REQUIRE(cal.fixed_map);
    REQUIRE(abs(cal.map(sqrt(Real(2)))) < tiny(35));
    REQUIRE(abs(cal.A - Real("8.979696386474984")) < Real("1e-14"));
}

TEST_CASE("table formatting marks failed rows", "[calibration]") {
    PrecisionScope prec(30);
    ZeroReport rep;
    ZeroReportRow ok;
    ok.label = "Ai(z)";
    ok.u_description = "i x^3/3";
    ok.z3_estimated = Real("-5.56709");
    ok.A = 1;
    ZeroReportRow bad;
    bad.label = "broken";
    bad.error = "NoConvergence: stalled";
    rep.rows = {ok, bad};
    const std::string t = format_table(rep);
    REQUIRE(t.find("-5.56709") != std::string::npos);
    REQUIRE(t.find("FAILED: NoConvergence: stalled") != std::string::npos);
}

TEST_CASE("published rows", "[pipeline]") {
    PrecisionScope prec(60);
    const auto outcomes = run_rows(all_row_ids());
    for (const auto& o : outcomes) {
        INFO(o.id << " " << o.error);
        REQUIRE(o.result.has_value());
    }
    auto row = [&](const std::string& id) -> const RowResult& {
        for (const auto& o : outcomes)
            if (o.id == id) return *o.result;
        throw std::runtime_error(id);
    };
    REQUIRE(rel_err(row("airy").estimates[2], Real("-5.56709")) < Real("1e-5"));
    REQUIRE(rel_err(row("riemann").estimates[2], Real("26.5505")) < Real("1e-5"));
    REQUIRE(rel_err(row("riemann").cal.A, Real("2.20867")) < Real("1e-5"));
    REQUIRE(rel_err(row("ramanujan").estimates[2], Real("17.6636")) < Real("1e-5"));
    REQUIRE(rel_err(row("kbessel").cal.A, Real("0.193542")) < Real("1e-5"));
    REQUIRE(rel_err(row("eta_gamma").cal.A, Real("2.7621")) < Real("1e-4"));
    for (const char* id : {"airy", "airy7", "airy7_m1_3_0", "airy7_1_3_3", "kbessel"})
        REQUIRE(row(id).roots.on_critical_line);
    for (const char* id : {"riemann", "ramanujan", "eta_gamma"}) REQUIRE(row(id).roots.complex_pair_count() == 1);

    const ZeroReport rep = build_table1(all_row_ids(), outcomes);
    REQUIRE(rep.rows.size() == all_row_ids().size());
    for (const auto& r : rep.rows) REQUIRE(r.ok());
}

TEST_CASE("consistent profile uses the exact kernel", "[pipeline]") {
    PrecisionScope prec(60);
    RowOptions opt;
    opt.profile = Profile::Consistent;
    const RowResult r = run_row("riemann", opt);
    REQUIRE(rel_err(r.potential->coupling(1), Real("7.09865")) < Real("1e-5"));
    REQUIRE(rel_err(r.cal.A, Real("2.31395")) < Real("1e-5"));
    REQUIRE(profile_from_string("consistent") == Profile::Consistent);
    REQUIRE_THROWS_AS(profile_from_string("paper"), Error);
}

TEST_CASE("table assembly errors", "[pipeline]") {
    PrecisionScope prec(30);
    try {
        build_table1({"airy"}, {});
        FAIL("no throw");
    } catch (const Error& e) {
        REQUIRE(e.kind() == ErrorKind::MissingPipeline);
    }
    const ZeroReport rep = build_table1({"kbessel"}, {RowOutcome{"kbessel", std::nullopt, "boom"}});
    REQUIRE_FALSE(rep.rows[0].ok());
    REQUIRE(rep.rows[0].error == "boom");
    try {
        run_rows({"airy", "nope"});
        FAIL("no throw");
    } catch (const Error& e) {
        REQUIRE(e.kind() == ErrorKind::UnknownReference);
    }
}
