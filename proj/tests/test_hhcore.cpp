#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "hhv/hhcore.hpp"

using namespace hhv;

TEST_CASE("deviation spot values") {
    Interval iv(1.0, 2.0);
    ValueWithError d = deviation(parse("1/x"), iv);
    CHECK(d.value == doctest::Approx(-0.39018615277338802392).epsilon(1e-12));
    CHECK(d.err >= 0.0);
    CHECK(d.err < 1e-8);

    ValueWithError de = deviation(parse("exp(x)"), iv);
    CHECK(de.value == doctest::Approx(3.4061759563088524588).epsilon(1e-12));

    // affine f: deviation is slope * (a+b)/4
    ValueWithError dl = deviation(parse("3*x+2"), Interval(1.0, 3.0));
    CHECK(dl.value == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("trapezoid deviation spot values") {
    Interval iv(1.0, 2.0);
    CHECK(trapezoid_deviation(parse("x^2"), iv).value ==
          doctest::Approx(1.0 / 6.0).epsilon(1e-12));
    CHECK(trapezoid_deviation(parse("x*ln(x)"), iv).value ==
          doctest::Approx(0.056852819440054690583).epsilon(1e-10));
}

TEST_CASE("weighted-integral identity for the deviation") {
    const std::vector<std::string> fs = {"1/x", "x^2", "exp(x)", "x*ln(x)", "-ln(x)", "x^4"};
    for (Interval iv : {Interval(1.0, 2.0), Interval(0.5, 3.7)}) {
        for (const std::string& t : fs) {
            CAPTURE(t);
            CAPTURE(iv.a());
            FuncExpr f = parse(t);
            ValueWithError d = deviation(f, iv);
            ValueWithError r = lemma_rhs(f, iv);
            Tolerances tol;
            CHECK(std::fabs(d.value - r.value) <= slack_for(d.err + r.err, tol));
        }
    }
}

TEST_CASE("first deviation bound") {
    BoundValue t1 = bound_theorem1(parse("1/x"), Interval(1.0, 2.0));
    CHECK(t1.value == doctest::Approx(0.484375).epsilon(1e-14));  // 93/192
    CHECK(t1.precondition.passed);  // |f'| = 1/x^2 is convex
    CHECK(t1.precondition.mode == Shape::Convex);

    // and it really dominates the deviation
    CHECK(0.39018615277338802 <= t1.value);
}

TEST_CASE("power-mean deviation bound") {
    Interval iv(1.0, 2.0);
    BoundValue t2 = bound_theorem2(parse("x"), iv, {2.0});
    CHECK(t2.value == doctest::Approx(std::sqrt(7.0 / 3.0) / 2.0).epsilon(1e-13));

    BoundValue t2r = bound_theorem2(parse("1/x"), iv, {2.0});
    const double expect = std::sqrt(7.0 / 3.0) / 8.0 * (7.0 / 4.0 + std::sqrt(19.0) / 4.0);
    CHECK(t2r.value == doctest::Approx(expect).epsilon(1e-13));
    CHECK(t2r.value == doctest::Approx(0.54221889812634436419).epsilon(1e-12));

    CHECK_THROWS_AS(bound_theorem2(parse("x"), iv, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(bound_theorem2(parse("x"), iv, {0.5}), std::invalid_argument);
}

TEST_CASE("arithmetic-mean deviation bound and its q=1 reduction") {
    Interval iv(1.0, 2.0);
    BoundValue t3 = bound_theorem3(parse("1/x"), iv, {1.0});
    CHECK(t3.value == doctest::Approx(0.484375).epsilon(1e-13));

    BoundValue t3sq = bound_theorem3(parse("x^2"), iv, {2.0});
    const double pref = std::sqrt(1.5) / (4.0 * std::sqrt(12.0));
    CHECK(t3sq.value ==
          doctest::Approx(pref * (std::sqrt(120.0) + std::sqrt(228.0))).epsilon(1e-13));

    CHECK_THROWS_AS(bound_theorem3(parse("x"), iv, {0.5}), std::invalid_argument);

    // q = 1 collapses to the first bound for assorted shapes and intervals
    const std::vector<std::string> fs = {"1/x", "x^3", "exp(x)", "x*ln(x)"};
    for (Interval riv : {Interval(1.0, 2.0), Interval(0.5, 2.5), Interval(1.0, 3.0)}) {
        for (const std::string& t : fs) {
            CAPTURE(t);
            CAPTURE(riv.a());
            FuncExpr f = parse(t);
            double v1 = bound_theorem1(f, riv).value;
            double v3 = bound_theorem3(f, riv, {1.0}).value;
            CHECK(std::fabs(v1 - v3) <= 1e-12 * (1.0 + std::fabs(v1)));
        }
    }
}

TEST_CASE("affine functions saturate the first bound") {
    FuncExpr f = parse("x");
    Interval iv(1.0, 3.0);
    ValueWithError d = deviation(f, iv);
    BoundValue t1 = bound_theorem1(f, iv);
    CHECK(std::fabs(std::fabs(d.value) - t1.value) <= 1e-12 * (1.0 + t1.value));
    CHECK(t1.value == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("classical trapezoid bounds") {
    Interval iv(1.0, 2.0);
    CHECK(bound_da(parse("x^2"), iv).value == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(bound_pp(parse("x^2"), iv, 2.0).value ==
          doctest::Approx(std::sqrt(10.0) / 4.0).epsilon(1e-13));
    CHECK(bound_pp_concave(parse("x*ln(x)"), iv).value ==
          doctest::Approx(0.35136627702704109549).epsilon(1e-13));
    CHECK(bound_adk(parse("x^2"), iv, 1.0).value == doctest::Approx(1.5).epsilon(1e-13));

    // prefactor is continuous as q -> 1+
    CHECK(bound_adk(parse("x^2"), iv, 1.0 + 1e-6).value ==
          doctest::Approx(1.5).epsilon(1e-4));

    CHECK_THROWS_AS(bound_pp(parse("x"), iv, 0.9), std::invalid_argument);
    CHECK_THROWS_AS(bound_adk(parse("x"), iv, 0.99), std::invalid_argument);

    // preconditions land on the right shapes
    CHECK(bound_da(parse("x^2"), iv).precondition.passed);
    CHECK(bound_pp_concave(parse("x^2"), iv).precondition.passed);  // 2x concave too
    CHECK_FALSE(bound_pp_concave(parse("x^3"), iv).precondition.passed);  // 3x^2 is not
}

TEST_CASE("endpoint ordering check") {
    HadamardReport h = hadamard_check(parse("1/x"), Interval(1.0, 2.0));
    CHECK(h.verdict == HadamardVerdict::Standard);
    CHECK(h.holds);
    CHECK(h.midpoint_value == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(h.integral_mean == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(h.endpoint_average == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(std::string(to_label(h.verdict)) == "standard");

    HadamardReport hr = hadamard_check(parse("ln(x)"), Interval(1.0, 2.0));
    CHECK(hr.verdict == HadamardVerdict::Reversed);
    CHECK(hr.holds);
    CHECK(hr.midpoint_value >= hr.integral_mean);
    CHECK(hr.integral_mean >= hr.endpoint_average);

    // inflection inside the interval: nothing is asserted
    HadamardReport hi = hadamard_check(parse("x^3-6*x^2"), Interval(1.0, 3.0));
    CHECK(hi.verdict == HadamardVerdict::Inconclusive);
    CHECK(hi.holds);
    CHECK(std::string(to_label(hi.verdict)) == "inconclusive");
}

TEST_CASE("full bound table") {
    BoundReport rep = bound_report(parse("x^2"), Interval(1.0, 2.0), {1.0, 2.0});
    REQUIRE(rep.bounds.size() == 10);
    const std::vector<std::string> labels = {"T1",   "T2",   "T3",   "T3",    "DA11",
                                             "PP12", "PP12", "PP13", "ADK14", "ADK14"};
    for (std::size_t i = 0; i < labels.size(); ++i) {
        CAPTURE(i);
        CHECK(rep.bounds[i].label == labels[i]);
    }
    for (const BoundEntry& e : rep.bounds) {
        CAPTURE(e.label);
        CAPTURE(e.q);
        const bool on_dev = std::string(e.target) == "deviation";
        CHECK((e.label == "T1" || e.label == "T2" || e.label == "T3") == on_dev);
        if (e.label == "T1" || e.label == "DA11" || e.label == "PP13")
            CHECK_FALSE(e.uses_q);
        if (e.applicable) {
            CHECK(e.holds);
            CHECK(e.margin >= 0.0);
        }
    }
    // x^2: every hypothesis passes except |f'|^2 concave (ADK at q = 2)
    int inapplicable = 0;
    for (const BoundEntry& e : rep.bounds) inapplicable += !e.applicable;
    CHECK(inapplicable == 1);
    CHECK_FALSE(rep.bounds[9].applicable);  // ADK14 at q = 2

    CHECK(rep.slack_deviation >= 1e-9);
    CHECK(rep.slack_trapezoid >= 1e-9);
    CHECK(std::fabs(rep.deviation.value - rep.lemma_rhs.value) <= rep.slack_deviation);

    // without the classical family only the deviation bounds remain
    BoundReport lean = bound_report(parse("x^2"), Interval(1.0, 2.0), {2.0}, {}, false);
    REQUIRE(lean.bounds.size() == 3);
    CHECK(lean.bounds[0].label == "T1");
    CHECK(lean.bounds[1].label == "T2");
    CHECK(lean.bounds[2].label == "T3");
}

TEST_CASE("q below the valid range is filtered from the table, not fatal") {
    // q = 1 is valid for T3/PP12/ADK14 but not T2; the table simply has no T2 row
    BoundReport rep = bound_report(parse("1/x"), Interval(1.0, 2.0), {1.0});
    for (const BoundEntry& e : rep.bounds) CHECK(e.label != "T2");
    REQUIRE(rep.bounds.size() == 6);  // T1 T3 DA11 PP12 PP13 ADK14
}

TEST_CASE("tolerances propagate") {
    Tolerances tol;
    tol.quad_rel_tol = 1e-8;
    tol.shape_grid = 32;
    ValueWithError d = deviation(parse("1/x"), Interval(1.0, 2.0), tol);
    CHECK(d.value == doctest::Approx(-0.39018615277338802).epsilon(1e-7));
    BoundValue t1 = bound_theorem1(parse("1/x"), Interval(1.0, 2.0), tol);
    CHECK(t1.precondition.grid_size == 32);
}
