#include "hhv/means.hpp"

#include <cmath>
#include <stdexcept>

namespace hhv {

namespace {

// Mean over [a,b] of (ln x)^k, k = 1..3, via the closed antiderivatives
// x(ln x - 1), x((ln x)^2 - 2 ln x + 2), x((ln x)^3 - 3(ln x)^2 + 6 ln x - 6).
double log_moment(double a, double b, int k) {
    auto anti = [k](double x) {
        double l = std::log(x);
        switch (k) {
            case 1: return x * (l - 1.0);
            case 2: return x * (l * l - 2.0 * l + 2.0);
            default: return x * (l * l * l - 3.0 * l * l + 6.0 * l - 6.0);
        }
    };
    return (anti(b) - anti(a)) / (b - a);
}

}  // namespace

double gen_log(const Interval& iv, double p, bool limit_extension) {
    const double a = iv.a();
    const double b = iv.b();
    if (!limit_extension && (p == 0.0 || p == -1.0))
        throw std::invalid_argument("gen_log: p in {-1, 0} needs the limit extension");

    if (p == 1.0) return 0.5 * (a + b);

    if (std::fabs(p) < 1e-6) {
        // ln L_p is the scaled cumulant generating function of ln X, X uniform
        // on (a,b): ln L_p = k1 + k2 p/2 + k3 p^2/6 + O(p^3).
        const double m1 = log_moment(a, b, 1);
        const double m2 = log_moment(a, b, 2);
        const double m3 = log_moment(a, b, 3);
        const double k2 = m2 - m1 * m1;
        const double k3 = m3 - 3.0 * m1 * m2 + 2.0 * m1 * m1 * m1;
        return std::exp(m1 + p * (k2 / 2.0 + p * k3 / 6.0));
    }

    // (b^eps - a^eps)/(eps (b-a)) with eps = p+1, written as
    // a^eps expm1(eps ln(b/a))/(eps (b-a)) so narrow intervals and small eps
    // never subtract nearby powers; eps = 0 is the ln(b/a)/(b-a) limit.
    const double eps = p + 1.0;
    const double lr = std::log(b / a);
    const double s = eps == 0.0 ? lr / (b - a)
                                : std::pow(a, eps) * std::expm1(eps * lr) / (eps * (b - a));
    return std::pow(s, 1.0 / p);
}

MeanSet mean_set(const Interval& iv) {
    const double a = iv.a();
    const double b = iv.b();
    MeanSet m;
    m.A = 0.5 * (a + b);
    m.G = std::sqrt(a * b);
    m.H = 2.0 * a * b / (a + b);
    m.L = (b - a) / (std::log(b) - std::log(a));
    // log form of (1/e)(b^b/a^a)^{1/(b-a)}; the direct form overflows for
    // moderate b (e.g. b = 200).
    m.I = std::exp((b * std::log(b) - a * std::log(a)) / (b - a) - 1.0);
    return m;
}

MeanSet mean_set(const Interval& iv, double p) {
    MeanSet m = mean_set(iv);
    m.has_Lp = true;
    m.Lp = gen_log(iv, p, true);
    m.Lp_exponent = p;
    return m;
}

}  // namespace hhv
