#pragma once

#include <functional>

#include "hhv/expr.hpp"
#include "hhv/interval.hpp"

namespace hhv {

struct QuadResult {
    double value = 0.0;
    double err_estimate = 0.0;  // accumulated embedded-pair difference
    int evals = 0;
    bool converged = false;
};

// Adaptive integration of g over [lo, hi] with a Gauss-Kronrod 7/15 pair.
// Panels whose pair difference exceeds their share of the tolerance budget are
// bisected, left half first, so the evaluation sequence is deterministic.
// rel_tol must lie in [1e-14, 1e-3]. The eval cap is respected exactly; when
// it (or the minimum panel width) cuts refinement short, the best value is
// returned with converged = false.
QuadResult integrate(const std::function<double(double)>& g, double lo, double hi,
                     double rel_tol = 1e-10, int max_evals = 200000);
QuadResult integrate(const FuncExpr& g, double lo, double hi, double rel_tol = 1e-10,
                     int max_evals = 200000);

// (w0 + w1*t) * fn(u0 + u1*t) for t in [0,1]. The inner affine map must send
// [0,1] into [a,b]; construction validates this against iv.
struct WeightedIntegrand {
    double w0 = 0.0;
    double w1 = 0.0;
    double u0 = 0.0;
    double u1 = 0.0;
    FuncExpr fn;

    WeightedIntegrand(double weight0, double weight1, double inner0, double inner1, FuncExpr f,
                      const Interval& iv);

    double operator()(double t) const { return (w0 + w1 * t) * fn.eval(u0 + u1 * t); }
};

// Integrates the weighted integrand over its native domain [0,1].
QuadResult integrate(const WeightedIntegrand& g, double rel_tol = 1e-10, int max_evals = 200000);

}  // namespace hhv
