#include "hhv/quad.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <stdexcept>

namespace hhv {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1,1].
// Gauss points are the odd-indexed abscissae plus the center.
const double xgk[7] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
};
const double wgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,  // center
};
const double wg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,  // center
};

struct Panel {
    double value;
    double err;
    double resabs;  // integral of |g|, for the roundoff floor
};

template <class F>
Panel gk15(const F& g, double lo, double hi) {
    const double c = 0.5 * (lo + hi);
    const double h = 0.5 * (hi - lo);
    const double fc = g(c);
    double resg = fc * wg[3];
    double resk = fc * wgk[7];
    double resabs = std::fabs(fc) * wgk[7];
    for (int j = 0; j < 7; ++j) {
        const double absc = h * xgk[j];
        const double f1 = g(c - absc);
        const double f2 = g(c + absc);
        resk += wgk[j] * (f1 + f2);
        resabs += wgk[j] * (std::fabs(f1) + std::fabs(f2));
        if (j % 2 == 1) resg += wg[j / 2] * (f1 + f2);
    }
    return {resk * h, std::fabs((resk - resg) * h), resabs * h};
}

template <class F>
struct AdaptState {
    const F& g;
    double min_width;
    int max_evals;
    int evals = 0;
    double value = 0.0;
    double err = 0.0;
    double resabs = 0.0;
};

// Refines the already-evaluated panel p over [lo, hi]. Both child panels are
// paid for under the parent's eval-cap check, so st.evals never passes the cap.
template <class F>
void adapt(AdaptState<F>& st, double lo, double hi, const Panel& p, double tol) {
    const bool splittable =
        p.err > tol && (hi - lo) > 2.0 * st.min_width && st.evals + 30 <= st.max_evals;
    if (splittable) {
        const double mid = 0.5 * (lo + hi);
        Panel left = gk15(st.g, lo, mid);
        Panel right = gk15(st.g, mid, hi);
        st.evals += 30;
        adapt(st, lo, mid, left, 0.5 * tol);
        adapt(st, mid, hi, right, 0.5 * tol);
        return;
    }
    st.value += p.value;
    st.err += p.err;
    st.resabs += p.resabs;
}

template <class F>
QuadResult integrate_impl(const F& g, double lo, double hi, double rel_tol, int max_evals) {
    if (!(lo < hi)) throw std::invalid_argument("integrate: require lo < hi");
    if (!(rel_tol >= 1e-14 && rel_tol <= 1e-3))
        throw std::invalid_argument("integrate: rel_tol must lie in [1e-14, 1e-3]");
    if (max_evals < 30) throw std::invalid_argument("integrate: eval cap too small");

    // Rough whole-interval pass sizes the absolute budget; the relative
    // tolerance cannot be meaningfully tighter than the roundoff in
    // accumulating integral(|g|).
    Panel rough = gk15(g, lo, hi);
    const double budget =
        std::max(rel_tol * std::fabs(rough.value), 50.0 * DBL_EPSILON * rough.resabs);

    AdaptState<F> st{g, 1e-12 * (hi - lo), max_evals};
    st.evals = 15;
    adapt(st, lo, hi, rough, budget);

    QuadResult r;
    r.value = st.value;
    r.err_estimate = st.err;
    r.evals = st.evals;
    const double final_tol =
        std::max(rel_tol * std::fabs(st.value), 50.0 * DBL_EPSILON * st.resabs);
    r.converged = st.err <= std::max(budget, final_tol);
    return r;
}

}  // namespace

QuadResult integrate(const std::function<double(double)>& g, double lo, double hi, double rel_tol,
                     int max_evals) {
    return integrate_impl(g, lo, hi, rel_tol, max_evals);
}

QuadResult integrate(const FuncExpr& g, double lo, double hi, double rel_tol, int max_evals) {
    auto fn = [&g](double x) { return g.eval(x); };
    return integrate_impl(fn, lo, hi, rel_tol, max_evals);
}

WeightedIntegrand::WeightedIntegrand(double weight0, double weight1, double inner0, double inner1,
                                     FuncExpr f, const Interval& iv)
    : w0(weight0), w1(weight1), u0(inner0), u1(inner1), fn(std::move(f)) {
    const double lo_img = std::min(u0, u0 + u1);
    const double hi_img = std::max(u0, u0 + u1);
    const double slack = 1e-9 * (std::fabs(iv.a()) + std::fabs(iv.b()));
    if (lo_img < iv.a() - slack || hi_img > iv.b() + slack)
        throw std::invalid_argument("weighted integrand: inner map leaves the interval");
}

QuadResult integrate(const WeightedIntegrand& g, double rel_tol, int max_evals) {
    return integrate_impl(g, 0.0, 1.0, rel_tol, max_evals);
}

}  // namespace hhv
