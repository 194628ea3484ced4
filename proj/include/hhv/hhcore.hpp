#pragma once

#include <string>
#include <vector>

#include "hhv/expr.hpp"
#include "hhv/interval.hpp"
#include "hhv/means.hpp"
#include "hhv/quad.hpp"

namespace hhv {

struct Tolerances {
    double quad_rel_tol = 1e-10;
    double slack_floor = 1e-9;  // absolute floor for inequality slack
    double shape_tol = 1e-9;
    int shape_grid = 64;
};

// A quantity with the quadrature error that went into it. Closed-form values
// carry err = 0.
struct ValueWithError {
    double value = 0.0;
    double err = 0.0;
};

// Inequality slack: absorb the oracle's error, never report a violation the
// quadrature could have caused.
inline double slack_for(double quad_err, const Tolerances& tol) {
    double s = 10.0 * quad_err;
    return s > tol.slack_floor ? s : tol.slack_floor;
}

// D(f) = (1/(b-a)) int f + (a f(b) - b f(a))/(2(b-a)) - f((a+b)/2)/2.
ValueWithError deviation(const FuncExpr& f, const Interval& iv, const Tolerances& tol = {});

// The same quantity written as the two weighted t-integrals of f' over [0,1];
// agreement with deviation() is a core identity check.
ValueWithError lemma_rhs(const FuncExpr& f, const Interval& iv, const Tolerances& tol = {});

// (f(a)+f(b))/2 - (1/(b-a)) int f, the quantity the classical bounds control.
ValueWithError trapezoid_deviation(const FuncExpr& f, const Interval& iv,
                                   const Tolerances& tol = {});

struct BoundParams {
    double q = 1.0;
    // Hoelder conjugate 1/p + 1/q = 1; meaningful only when q > 1.
    double p() const { return q / (q - 1.0); }
};

struct BoundValue {
    double value = 0.0;
    ShapeReport precondition;  // the shape hypothesis, recorded not enforced
};

// (5a/48 + 7b/48)|f'(a)| + (7a/48 + 5b/48)|f'(b)|; hypothesis |f'| convex.
BoundValue bound_theorem1(const FuncExpr& f, const Interval& iv, const Tolerances& tol = {});

// (1/4^{1+1/q}) L_p(a,b) [(|f'(b)|^q + 3|f'(a)|^q)^{1/q} +
//                         (|f'(a)|^q + 3|f'(b)|^q)^{1/q}], q > 1, p = q/(q-1);
// hypothesis |f'|^q convex.
BoundValue bound_theorem2(const FuncExpr& f, const Interval& iv, BoundParams params,
                          const Tolerances& tol = {});

// A^{1-1/q}/(4*12^{1/q}) { [|f'(b)|^q(2a+b) + |f'(a)|^q(4a+5b)]^{1/q} +
//                          [|f'(a)|^q(a+2b) + |f'(b)|^q(5a+4b)]^{1/q} },
// q >= 1; hypothesis |f'|^q convex. Reduces to bound_theorem1 at q = 1.
BoundValue bound_theorem3(const FuncExpr& f, const Interval& iv, BoundParams params,
                          const Tolerances& tol = {});

// Classical trapezoid-deviation bounds.
// (b-a)/8 [|f'(a)| + |f'(b)|]; hypothesis |f'| convex.
BoundValue bound_da(const FuncExpr& f, const Interval& iv, const Tolerances& tol = {});
// (b-a)/4 ((|f'(a)|^q + |f'(b)|^q)/2)^{1/q}, q >= 1; hypothesis |f'|^q convex.
BoundValue bound_pp(const FuncExpr& f, const Interval& iv, double q, const Tolerances& tol = {});
// (b-a)/4 |f'((a+b)/2)|; hypothesis |f'| concave.
BoundValue bound_pp_concave(const FuncExpr& f, const Interval& iv, const Tolerances& tol = {});
// (b-a)/4 ((q-1)/(2q-1))^{1-1/q} [|f'((3a+b)/4)| + |f'((a+3b)/4)|], q >= 1
// with the q = 1 prefactor read as 1; hypothesis |f'|^q concave.
BoundValue bound_adk(const FuncExpr& f, const Interval& iv, double q, const Tolerances& tol = {});

enum class HadamardVerdict { Standard, Reversed, Inconclusive };

const char* to_label(HadamardVerdict v);

struct HadamardReport {
    double midpoint_value = 0.0;
    double integral_mean = 0.0;
    double endpoint_average = 0.0;
    double err = 0.0;  // on integral_mean
    ShapeReport shape;  // the decisive shape check (convex one if inconclusive)
    HadamardVerdict verdict = HadamardVerdict::Inconclusive;
    bool holds = true;  // double inequality in the verdict direction, within slack
};

// midpoint value <= integral mean <= endpoint average for convex f; reversed
// for concave f; inconclusive (nothing asserted) when neither shape passes.
HadamardReport hadamard_check(const FuncExpr& f, const Interval& iv, const Tolerances& tol = {});

struct BoundEntry {
    std::string label;     // T1, T2, T3, DA11, PP12, PP13, ADK14
    double q = 1.0;
    bool uses_q = false;   // false for the fixed-exponent bounds T1, DA11, PP13
    const char* target = "deviation";  // which deviation the bound controls
    double value = 0.0;
    ShapeReport precondition;
    bool applicable = false;  // precondition passed
    bool holds = false;       // |target| <= value + slack
    double margin = 0.0;      // value - |target|, clamped at 0 when holds
};

struct BoundReport {
    ValueWithError deviation;
    ValueWithError lemma_rhs;
    ValueWithError trapezoid;
    double slack_deviation = 0.0;
    double slack_trapezoid = 0.0;
    std::vector<BoundEntry> bounds;
};

// Evaluates every bound: T1, then T2/T3 per q from q_list, then (with
// classical set) DA11, PP12 per q, PP13, ADK14 per q. Shape checks are shared
// across entries. Bounds with failing preconditions are still computed and
// reported, flagged not applicable.
BoundReport bound_report(const FuncExpr& f, const Interval& iv, const std::vector<double>& q_list,
                         const Tolerances& tol = {}, bool classical = true);

}  // namespace hhv
