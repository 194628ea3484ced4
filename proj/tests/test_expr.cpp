#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "hhv/expr.hpp"
#include "hhv/interval.hpp"

using namespace hhv;

namespace {

double fd_central(const FuncExpr& df_target, double x) {
    const double h = 1e-6;
    return (df_target.eval(x + h) - df_target.eval(x - h)) / (2.0 * h);
}

}  // namespace

TEST_CASE("parse and evaluate") {
    CHECK(parse("x^2").eval(3.0) == doctest::Approx(9.0).epsilon(1e-15));
    CHECK(parse("1/x").eval(2.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(parse("-ln(x)").eval(std::exp(1.0)) == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(parse("x*ln(x)").eval(2.0) == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-15));
    CHECK(parse("sqrt(x)").eval(4.0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(parse("exp(x)").eval(1.5) == doctest::Approx(4.4816890703380648226).epsilon(1e-15));
    CHECK(parse("e^x").eval(1.5) == doctest::Approx(4.4816890703380648226).epsilon(1e-15));
    CHECK(parse("2*pi").eval(0.0) == doctest::Approx(6.2831853071795864769).epsilon(1e-15));
    CHECK(parse("(x+1)/(x-0.5)").eval(2.0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(parse("x^-2").eval(2.0) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(parse("2e3").eval(0.0) == doctest::Approx(2000.0).epsilon(1e-15));
    CHECK(parse("2.5e-3").eval(0.0) == doctest::Approx(0.0025).epsilon(1e-15));
}

TEST_CASE("precedence and associativity") {
    CHECK(parse("2+3*4").eval(0.0) == doctest::Approx(14.0));
    CHECK(parse("2*3^2").eval(0.0) == doctest::Approx(18.0));
    CHECK(parse("-x^2").eval(3.0) == doctest::Approx(-9.0));       // -(x^2)
    CHECK(parse("2^3^2").eval(0.0) == doctest::Approx(512.0));     // right-assoc
    CHECK(parse("8-4-2").eval(0.0) == doctest::Approx(2.0));       // left-assoc
    CHECK(parse("8/4/2").eval(0.0) == doctest::Approx(1.0));
    CHECK(parse("2^-1*4").eval(0.0) == doctest::Approx(2.0));
}

TEST_CASE("parse errors carry byte offsets") {
    CHECK_THROWS_AS(parse(""), parse_error);
    CHECK_THROWS_AS(parse("2 +"), parse_error);
    CHECK_THROWS_AS(parse("(x"), parse_error);
    CHECK_THROWS_AS(parse("x @ 2"), parse_error);
    CHECK_THROWS_AS(parse("sin(x)"), parse_error);
    CHECK_THROWS_AS(parse("2e"), parse_error);
    CHECK_THROWS_AS(parse("x x"), parse_error);

    try {
        parse("2 +");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.offset() == 3);
    }
    try {
        parse("(x");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.offset() == 2);
    }
    try {
        parse("x @ 2");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.offset() == 2);
    }
}

TEST_CASE("evaluation domain errors") {
    CHECK_THROWS_AS(parse("ln(x)").eval(-1.0), eval_error);
    CHECK_THROWS_AS(parse("ln(x)").eval(0.0), eval_error);
    CHECK_THROWS_AS(parse("1/x").eval(0.0), eval_error);
    CHECK_THROWS_AS(parse("sqrt(x)").eval(-4.0), eval_error);
    CHECK_THROWS_AS(parse("x^0.5").eval(-2.0), eval_error);
    CHECK_THROWS_AS(parse("x^-1").eval(0.0), eval_error);
}

TEST_CASE("print and reparse reproduce the tree") {
    const std::vector<std::string> texts = {
        "x^2",
        "1/x",
        "-ln(x)",
        "exp(0.5*x)",
        "x*ln(x)",
        "(2*x+1)^3",
        "sqrt(x^2+1)",
        "x^-2",
        "-x^2+3*x-1",
        "2^3^2",
        "e^x",
        "pi*x",
        "x/(1+x)",
        "-(x+1)",
        "1/(x*(x+1))",
        "x^1.5",
        "x-(x-1)",
    };
    for (const std::string& t : texts) {
        CAPTURE(t);
        FuncExpr f = parse(t);
        FuncExpr g = parse(to_string(f));
        CHECK(f == g);
        CHECK(to_string(f) == to_string(g));
    }
}

TEST_CASE("factory-built trees round-trip through text") {
    FuncExpr f = add(mul(num(2.0), pow(var_x(), num(3.0))), neg(recip(var_x())));
    FuncExpr g = parse(to_string(f));
    CHECK(f == g);
    CHECK(f.eval(2.0) == doctest::Approx(16.0 - 0.5).epsilon(1e-15));

    FuncExpr h = sub(exp(mul(num(0.5), var_x())), ln(add(var_x(), num(1.0))));
    CHECK(parse(to_string(h)) == h);

    FuncExpr negc = mul(num(-2.0), var_x());
    CHECK(parse(to_string(negc)) == negc);
}

TEST_CASE("structural equality is syntactic") {
    CHECK(parse("x+1") == parse("x + 1"));
    CHECK(parse("x+1") != parse("1+x"));
    CHECK(parse("x^2") != parse("x*x"));
}

TEST_CASE("derivatives match central finite differences") {
    const std::vector<std::string> texts = {
        "x^2",      "1/x",          "-ln(x)",   "exp(0.5*x)", "x*ln(x)",
        "sqrt(x)",  "x^3-2*x+1",    "x^1.5",    "e^x",        "x^-2",
        "(x+1)/(x^2+1)",            "exp(x^2)", "2^x",        "sqrt(x^2+1)",
        "x*exp(-x)",
    };
    const std::vector<double> xs = {0.7, 1.3, 2.1, 3.4};
    for (const std::string& t : texts) {
        FuncExpr f = parse(t);
        FuncExpr df = differentiate(f);
        for (double x : xs) {
            CAPTURE(t);
            CAPTURE(x);
            const double sym = df.eval(x);
            const double fd = fd_central(f, x);
            CHECK(std::fabs(sym - fd) <= 1e-5 * (1.0 + std::fabs(sym)));
        }
    }
}

TEST_CASE("derivative spot checks") {
    CHECK(differentiate(parse("x")).eval(5.0) == doctest::Approx(1.0));
    CHECK(differentiate(parse("7")).eval(5.0) == doctest::Approx(0.0));
    CHECK(differentiate(parse("x^2")).eval(3.0) == doctest::Approx(6.0).epsilon(1e-15));
    CHECK(differentiate(parse("1/x")).eval(2.0) == doctest::Approx(-0.25).epsilon(1e-14));
    CHECK(differentiate(parse("x*ln(x)")).eval(2.0) ==
          doctest::Approx(std::log(2.0) + 1.0).epsilon(1e-14));
    // derivative of a derivative
    FuncExpr d2 = differentiate(differentiate(parse("x^3")));
    CHECK(d2.eval(2.0) == doctest::Approx(12.0).epsilon(1e-13));
}

TEST_CASE("shape check accepts the true shape") {
    Interval iv(1.0, 2.0);
    ShapeReport r = check_shape(parse("x^2"), iv, Shape::Convex);
    CHECK(r.passed);
    CHECK(r.max_violation == 0.0);
    CHECK(r.grid_size == 64);

    CHECK(check_shape(parse("ln(x)"), iv, Shape::Concave).passed);
    CHECK(check_shape(parse("1/x"), iv, Shape::Convex).passed);
    CHECK(check_shape(parse("x"), iv, Shape::Convex).passed);    // affine passes both
    CHECK(check_shape(parse("x"), iv, Shape::Concave).passed);
    CHECK(check_shape(parse("exp(x)"), Interval(0.5, 3.0), Shape::Convex).passed);
}

TEST_CASE("shape check rejects the wrong shape with the chord gap") {
    ShapeReport r = check_shape(parse("sqrt(x)"), Interval(1.0, 4.0), Shape::Convex);
    CHECK_FALSE(r.passed);
    // widest pair (1,4): sqrt(2.5) - (1+2)/2
    CHECK(r.max_violation == doctest::Approx(std::sqrt(2.5) - 1.5).epsilon(1e-12));

    CHECK_FALSE(check_shape(parse("x^2"), Interval(1.0, 2.0), Shape::Concave).passed);
    CHECK_FALSE(check_shape(parse("ln(x)"), Interval(1.0, 4.0), Shape::Convex).passed);
}

TEST_CASE("convex check of g equals concave check of -g bit for bit") {
    const std::vector<std::string> texts = {"x^2", "sqrt(x)", "exp(x^2)", "x*ln(x)", "1/x"};
    Interval iv(0.5, 3.0);
    for (const std::string& t : texts) {
        CAPTURE(t);
        FuncExpr g = parse(t);
        FuncExpr ng{neg(g).root};
        ShapeReport cv = check_shape(g, iv, Shape::Convex);
        ShapeReport cc = check_shape(ng, iv, Shape::Concave);
        CHECK(cv.passed == cc.passed);
        CHECK(cv.max_violation == cc.max_violation);  // exact, not approximate
    }
}

TEST_CASE("shape check rejects tiny grids") {
    CHECK_THROWS_AS(check_shape(parse("x^2"), Interval(1.0, 2.0), Shape::Convex, 4),
                    std::invalid_argument);
}

TEST_CASE("interval validation") {
    CHECK_THROWS_AS(Interval(2.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(Interval(-1.0, 5.0), std::invalid_argument);
    CHECK_THROWS_AS(Interval(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(Interval(3.0, 3.0), std::invalid_argument);
    try {
        Interval(2.0, 1.0);
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("require 0 < a < b") != std::string::npos);
    }
    Interval iv(1.0, 3.0);
    CHECK(iv.width() == doctest::Approx(2.0));
    CHECK(iv.midpoint() == doctest::Approx(2.0));
    CHECK(iv.contains(1.5));
    CHECK_FALSE(iv.contains(3.5));
}
