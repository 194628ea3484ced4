#include "hhv/hhcore.hpp"

#include <cfloat>
#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

namespace hhv {

ValueWithError deviation(const FuncExpr& f, const Interval& iv, const Tolerances& tol) {
    const double a = iv.a();
    const double b = iv.b();
    const double w = iv.width();
    QuadResult q = integrate(f, a, b, tol.quad_rel_tol);
    const double afb = a * f.eval(b);
    const double bfa = b * f.eval(a);
    const double fm = f.eval(iv.midpoint());
    const double v = q.value / w + (afb - bfa) / (2.0 * w) - 0.5 * fm;
    // afb - bfa cancels hard on narrow intervals, so the rounding of the
    // closed-form terms must ride along with the quadrature error.
    const double fp_err =
        8.0 * DBL_EPSILON *
        (std::fabs(q.value) / w + (std::fabs(afb) + std::fabs(bfa)) / (2.0 * w) +
         0.5 * std::fabs(fm));
    return {v, q.err_estimate / w + fp_err};
}

ValueWithError lemma_rhs(const FuncExpr& f, const Interval& iv, const Tolerances& tol) {
    const double a = iv.a();
    const double b = iv.b();
    const double mid = iv.midpoint();
    FuncExpr fd = differentiate(f);
    // weight t*b + (1-t)*a, argument walks from the midpoint down to a
    WeightedIntegrand first(a, b - a, mid, 0.5 * (a - b), fd, iv);
    // weight t*a + (1-t)*b, argument walks from the midpoint up to b
    WeightedIntegrand second(b, a - b, mid, 0.5 * (b - a), fd, iv);
    QuadResult q1 = integrate(first, tol.quad_rel_tol);
    QuadResult q2 = integrate(second, tol.quad_rel_tol);
    const double fp_err =
        8.0 * DBL_EPSILON * 0.25 * (std::fabs(q1.value) + std::fabs(q2.value));
    return {0.25 * (q1.value + q2.value), 0.25 * (q1.err_estimate + q2.err_estimate) + fp_err};
}

ValueWithError trapezoid_deviation(const FuncExpr& f, const Interval& iv, const Tolerances& tol) {
    const double w = iv.width();
    QuadResult q = integrate(f, iv.a(), iv.b(), tol.quad_rel_tol);
    const double ends = 0.5 * (f.eval(iv.a()) + f.eval(iv.b()));
    const double fp_err = 8.0 * DBL_EPSILON * (std::fabs(ends) + std::fabs(q.value) / w);
    return {ends - q.value / w, q.err_estimate / w + fp_err};
}

namespace {

struct DerivAtEnds {
    FuncExpr fd;
    double da;  // |f'(a)|
    double db;  // |f'(b)|
};

DerivAtEnds deriv_at_ends(const FuncExpr& f, const Interval& iv) {
    FuncExpr fd = differentiate(f);
    return {fd, std::fabs(fd.eval(iv.a())), std::fabs(fd.eval(iv.b()))};
}

ShapeReport shape_of_abs_deriv_pow(const FuncExpr& fd, const Interval& iv, double q, Shape mode,
                                   const Tolerances& tol) {
    if (q == 1.0) {
        auto g = [&fd](double x) { return std::fabs(fd.eval(x)); };
        return check_shape(g, iv, mode, tol.shape_grid, tol.shape_tol);
    }
    auto g = [&fd, q](double x) { return std::pow(std::fabs(fd.eval(x)), q); };
    return check_shape(g, iv, mode, tol.shape_grid, tol.shape_tol);
}

double theorem1_value(double a, double b, double da, double db) {
    return (5.0 * a + 7.0 * b) / 48.0 * da + (7.0 * a + 5.0 * b) / 48.0 * db;
}

double theorem2_value(const Interval& iv, double q, double da, double db) {
    const double p = q / (q - 1.0);
    const double lp = gen_log(iv, p);
    const double daq = std::pow(da, q);
    const double dbq = std::pow(db, q);
    const double br1 = std::pow(dbq + 3.0 * daq, 1.0 / q);
    const double br2 = std::pow(daq + 3.0 * dbq, 1.0 / q);
    return lp / std::pow(4.0, 1.0 + 1.0 / q) * (br1 + br2);
}

double theorem3_value(const Interval& iv, double q, double da, double db) {
    const double a = iv.a();
    const double b = iv.b();
    const double daq = std::pow(da, q);
    const double dbq = std::pow(db, q);
    const double br1 = std::pow(dbq * (2.0 * a + b) + daq * (4.0 * a + 5.0 * b), 1.0 / q);
    const double br2 = std::pow(daq * (a + 2.0 * b) + dbq * (5.0 * a + 4.0 * b), 1.0 / q);
    const double amean = 0.5 * (a + b);
    return std::pow(amean, 1.0 - 1.0 / q) / (4.0 * std::pow(12.0, 1.0 / q)) * (br1 + br2);
}

double da_value(const Interval& iv, double da, double db) {
    return iv.width() / 8.0 * (da + db);
}

double pp_value(const Interval& iv, double q, double da, double db) {
    return iv.width() / 4.0 * std::pow(0.5 * (std::pow(da, q) + std::pow(db, q)), 1.0 / q);
}

double pp_concave_value(const Interval& iv, const FuncExpr& fd) {
    return iv.width() / 4.0 * std::fabs(fd.eval(iv.midpoint()));
}

double adk_value(const Interval& iv, const FuncExpr& fd, double q) {
    // the q = 1 prefactor is the 0^0 limit, read as 1
    const double pref = q == 1.0 ? 1.0 : std::pow((q - 1.0) / (2.0 * q - 1.0), 1.0 - 1.0 / q);
    const double g1 = std::fabs(fd.eval((3.0 * iv.a() + iv.b()) / 4.0));
    const double g2 = std::fabs(fd.eval((iv.a() + 3.0 * iv.b()) / 4.0));
    return iv.width() / 4.0 * pref * (g1 + g2);
}

}  // namespace

BoundValue bound_theorem1(const FuncExpr& f, const Interval& iv, const Tolerances& tol) {
    DerivAtEnds d = deriv_at_ends(f, iv);
    BoundValue r;
    r.value = theorem1_value(iv.a(), iv.b(), d.da, d.db);
    r.precondition = shape_of_abs_deriv_pow(d.fd, iv, 1.0, Shape::Convex, tol);
    return r;
}

BoundValue bound_theorem2(const FuncExpr& f, const Interval& iv, BoundParams params,
                          const Tolerances& tol) {
    if (!(params.q > 1.0)) throw std::invalid_argument("bound_theorem2: require q > 1");
    DerivAtEnds d = deriv_at_ends(f, iv);
    BoundValue r;
    r.value = theorem2_value(iv, params.q, d.da, d.db);
    r.precondition = shape_of_abs_deriv_pow(d.fd, iv, params.q, Shape::Convex, tol);
    return r;
}

BoundValue bound_theorem3(const FuncExpr& f, const Interval& iv, BoundParams params,
                          const Tolerances& tol) {
    if (!(params.q >= 1.0)) throw std::invalid_argument("bound_theorem3: require q >= 1");
    DerivAtEnds d = deriv_at_ends(f, iv);
    BoundValue r;
    r.value = theorem3_value(iv, params.q, d.da, d.db);
    r.precondition = shape_of_abs_deriv_pow(d.fd, iv, params.q, Shape::Convex, tol);
    return r;
}

BoundValue bound_da(const FuncExpr& f, const Interval& iv, const Tolerances& tol) {
    DerivAtEnds d = deriv_at_ends(f, iv);
    BoundValue r;
    r.value = da_value(iv, d.da, d.db);
    r.precondition = shape_of_abs_deriv_pow(d.fd, iv, 1.0, Shape::Convex, tol);
    return r;
}

BoundValue bound_pp(const FuncExpr& f, const Interval& iv, double q, const Tolerances& tol) {
    if (!(q >= 1.0)) throw std::invalid_argument("bound_pp: require q >= 1");
    DerivAtEnds d = deriv_at_ends(f, iv);
    BoundValue r;
    r.value = pp_value(iv, q, d.da, d.db);
    r.precondition = shape_of_abs_deriv_pow(d.fd, iv, q, Shape::Convex, tol);
    return r;
}

BoundValue bound_pp_concave(const FuncExpr& f, const Interval& iv, const Tolerances& tol) {
    FuncExpr fd = differentiate(f);
    BoundValue r;
    r.value = pp_concave_value(iv, fd);
    r.precondition = shape_of_abs_deriv_pow(fd, iv, 1.0, Shape::Concave, tol);
    return r;
}

BoundValue bound_adk(const FuncExpr& f, const Interval& iv, double q, const Tolerances& tol) {
    if (!(q >= 1.0)) throw std::invalid_argument("bound_adk: require q >= 1");
    FuncExpr fd = differentiate(f);
    BoundValue r;
    r.value = adk_value(iv, fd, q);
    r.precondition = shape_of_abs_deriv_pow(fd, iv, q, Shape::Concave, tol);
    return r;
}

const char* to_label(HadamardVerdict v) {
    switch (v) {
        case HadamardVerdict::Standard: return "standard";
        case HadamardVerdict::Reversed: return "reversed";
        default: return "inconclusive";
    }
}

HadamardReport hadamard_check(const FuncExpr& f, const Interval& iv, const Tolerances& tol) {
    HadamardReport rep;
    QuadResult q = integrate(f, iv.a(), iv.b(), tol.quad_rel_tol);
    rep.integral_mean = q.value / iv.width();
    rep.err = q.err_estimate / iv.width();
    rep.midpoint_value = f.eval(iv.midpoint());
    rep.endpoint_average = 0.5 * (f.eval(iv.a()) + f.eval(iv.b()));

    const double slack = slack_for(rep.err, tol);
    ShapeReport convex = check_shape(f, iv, Shape::Convex, tol.shape_grid, tol.shape_tol);
    if (convex.passed) {
        rep.shape = convex;
        rep.verdict = HadamardVerdict::Standard;
        rep.holds = rep.midpoint_value <= rep.integral_mean + slack &&
                    rep.integral_mean <= rep.endpoint_average + slack;
        return rep;
    }
    ShapeReport concave = check_shape(f, iv, Shape::Concave, tol.shape_grid, tol.shape_tol);
    if (concave.passed) {
        rep.shape = concave;
        rep.verdict = HadamardVerdict::Reversed;
        rep.holds = rep.midpoint_value + slack >= rep.integral_mean &&
                    rep.integral_mean + slack >= rep.endpoint_average;
        return rep;
    }
    rep.shape = convex;
    rep.verdict = HadamardVerdict::Inconclusive;
    rep.holds = true;
    return rep;
}

BoundReport bound_report(const FuncExpr& f, const Interval& iv, const std::vector<double>& q_list,
                         const Tolerances& tol, bool classical) {
    BoundReport rep;
    rep.deviation = deviation(f, iv, tol);
    rep.lemma_rhs = lemma_rhs(f, iv, tol);
    rep.trapezoid = trapezoid_deviation(f, iv, tol);
    rep.slack_deviation = slack_for(rep.deviation.err, tol);
    rep.slack_trapezoid = slack_for(rep.trapezoid.err, tol);

    DerivAtEnds d = deriv_at_ends(f, iv);
    std::map<std::pair<double, int>, ShapeReport> shape_cache;
    auto shape = [&](double q, Shape mode) -> const ShapeReport& {
        auto key = std::make_pair(q, mode == Shape::Convex ? 0 : 1);
        auto it = shape_cache.find(key);
        if (it == shape_cache.end())
            it = shape_cache.emplace(key, shape_of_abs_deriv_pow(d.fd, iv, q, mode, tol)).first;
        return it->second;
    };

    auto push = [&](std::string label, double q, bool uses_q, bool on_deviation, double value,
                    const ShapeReport& pre) {
        BoundEntry e;
        e.label = std::move(label);
        e.q = q;
        e.uses_q = uses_q;
        e.target = on_deviation ? "deviation" : "trapezoid";
        e.value = value;
        e.precondition = pre;
        e.applicable = pre.passed;
        const double lhs =
            on_deviation ? std::fabs(rep.deviation.value) : std::fabs(rep.trapezoid.value);
        const double slack = on_deviation ? rep.slack_deviation : rep.slack_trapezoid;
        e.holds = lhs <= value + slack;
        e.margin = value - lhs;
        if (e.holds && e.margin < 0.0) e.margin = 0.0;
        rep.bounds.push_back(std::move(e));
    };

    push("T1", 1.0, false, true, theorem1_value(iv.a(), iv.b(), d.da, d.db),
         shape(1.0, Shape::Convex));
    for (double q : q_list)
        if (q > 1.0)
            push("T2", q, true, true, theorem2_value(iv, q, d.da, d.db), shape(q, Shape::Convex));
    for (double q : q_list)
        if (q >= 1.0)
            push("T3", q, true, true, theorem3_value(iv, q, d.da, d.db), shape(q, Shape::Convex));

    if (classical) {
        push("DA11", 1.0, false, false, da_value(iv, d.da, d.db), shape(1.0, Shape::Convex));
        for (double q : q_list)
            if (q >= 1.0)
                push("PP12", q, true, false, pp_value(iv, q, d.da, d.db),
                     shape(q, Shape::Convex));
        push("PP13", 1.0, false, false, pp_concave_value(iv, d.fd), shape(1.0, Shape::Concave));
        for (double q : q_list)
            if (q >= 1.0)
                push("ADK14", q, true, false, adk_value(iv, d.fd, q), shape(q, Shape::Concave));
    }
    return rep;
}

}  // namespace hhv
