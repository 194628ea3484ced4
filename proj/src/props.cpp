#include "hhv/props.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hhv {

namespace {

// k in {1,4,7} -> 1/x, {2,5,8} -> x^n, {3,6,9} -> -ln x
int family_of(int k) { return (k - 1) % 3; }
// k in {1,2,3} -> first theorem, {4,5,6} -> second, {7,8,9} -> third
int theorem_of(int k) { return (k - 1) / 3; }

FuncExpr instantiating(int family, int n) {
    switch (family) {
        case 0: return recip(var_x());
        case 1: return pow(var_x(), num(static_cast<double>(n)));
        default: return neg(ln(var_x()));
    }
}

// The propositions' left sides as printed, in mean notation.
double stated_lhs(int family, int n, const Interval& iv) {
    const double a = iv.a();
    const double b = iv.b();
    MeanSet m = mean_set(iv);
    switch (family) {
        case 0: return std::fabs(1.0 / m.L - 1.0 / m.H - 1.0 / (2.0 * m.A));
        case 1: {
            const double lnn = std::pow(gen_log(iv, static_cast<double>(n)), n);
            const double lm1 = std::pow(gen_log(iv, static_cast<double>(n - 1)), n - 1);
            return std::fabs(lnn + (n - 1) * m.G * m.G * lm1 / 2.0 -
                             std::pow(m.A, n) / 2.0);
        }
        default:
            return std::fabs(-std::log(m.I) +
                             (b * std::log(a) - a * std::log(b)) / (2.0 * (b - a)) +
                             0.5 * std::log(m.A));
    }
}

// The propositions' right sides as printed. These are typed from the source
// statements on purpose — they are the objects under test; the derived side
// comes from the bound operations instead.
double stated_rhs(int k, const Interval& iv, int n, double q) {
    const double a = iv.a();
    const double b = iv.b();
    switch (k) {
        case 1:
            return (5.0 * a + 7.0 * b) / 48.0 / (a * a) + (7.0 * a + 5.0 * b) / 48.0 / (b * b);
        case 2: {
            const double an = std::pow(a, n);
            const double bn = std::pow(b, n);
            const double mixed = 0.5 * (b * std::pow(a, n - 1) + a * std::pow(b, n - 1));
            return 5.0 * n / 24.0 * 0.5 * (an + bn) + 7.0 * n / 24.0 * mixed;
        }
        case 3: return 12.0 / 48.0 + 7.0 * b / (48.0 * a) + 5.0 * a / (48.0 * b);
        case 4:
        case 5:
        case 6: {
            const double p = q / (q - 1.0);
            const double lp = gen_log(iv, p);
            double xa, xb;  // the bracket contributions of each endpoint
            if (k == 4) {
                xa = std::pow(a, -2.0 * q);
                xb = std::pow(b, -2.0 * q);
            } else if (k == 5) {
                // n enters the bracket un-exponentiated, exactly as printed
                xa = n * std::pow(a, (n - 1) * q);
                xb = n * std::pow(b, (n - 1) * q);
            } else {
                xa = std::pow(a, -q);
                xb = std::pow(b, -q);
            }
            return lp / std::pow(4.0, 1.0 + 1.0 / q) *
                   (std::pow(xb + 3.0 * xa, 1.0 / q) + std::pow(xa + 3.0 * xb, 1.0 / q));
        }
        default: {  // 7, 8, 9
            double xa, xb;
            if (k == 7) {
                xa = std::pow(a, -2.0 * q);
                xb = std::pow(b, -2.0 * q);
            } else if (k == 8) {
                xa = std::pow(n * std::pow(a, n - 1), q);
                xb = std::pow(n * std::pow(b, n - 1), q);
            } else {
                xa = std::pow(a, -q);
                xb = std::pow(b, -q);
            }
            const double amean = 0.5 * (a + b);
            const double br1 =
                std::pow(xb * (2.0 * a + b) + xa * (4.0 * a + 5.0 * b), 1.0 / q);
            const double br2 =
                std::pow(xa * (a + 2.0 * b) + xb * (5.0 * a + 4.0 * b), 1.0 / q);
            return std::pow(amean, 1.0 - 1.0 / q) / (4.0 * std::pow(12.0, 1.0 / q)) *
                   (br1 + br2);
        }
    }
}

bool differs(double stated, double derived) {
    return std::fabs(stated - derived) > 1e-8 * (1.0 + std::fabs(derived));
}

}  // namespace

PropReport proposition(const PropParams& params, const Tolerances& tol) {
    const int k = params.k;
    if (k < 1 || k > 9) throw std::invalid_argument("proposition: k must be 1..9");
    const int family = family_of(k);
    const int theorem = theorem_of(k);

    int n = 0;
    if (family == 1) {
        if (!params.n) throw std::invalid_argument("proposition: k=" + std::to_string(k) +
                                                   " needs n");
        n = *params.n;
        if (n < 2) throw std::invalid_argument("proposition: require n >= 2");
    }
    double q = 1.0;
    if (theorem > 0) {
        if (!params.q) throw std::invalid_argument("proposition: k=" + std::to_string(k) +
                                                   " needs q");
        q = *params.q;
        if (theorem == 1 && !(q > 1.0))
            throw std::invalid_argument("proposition: require q > 1 for k in {4,5,6}");
        if (theorem == 2 && !(q >= 1.0))
            throw std::invalid_argument("proposition: require q >= 1 for k in {7,8,9}");
    }

    FuncExpr f = instantiating(family, n);

    PropReport rep;
    rep.k = k;
    rep.a = params.iv.a();
    rep.b = params.iv.b();
    if (family == 1) rep.n = n;
    if (theorem > 0) rep.q = q;

    rep.lhs_stated = stated_lhs(family, n, params.iv);
    rep.lhs_true = deviation(f, params.iv, tol);
    rep.rhs_stated = stated_rhs(k, params.iv, n, q);
    switch (theorem) {
        case 0: rep.rhs_derived = bound_theorem1(f, params.iv, tol).value; break;
        case 1: rep.rhs_derived = bound_theorem2(f, params.iv, {q}, tol).value; break;
        default: rep.rhs_derived = bound_theorem3(f, params.iv, {q}, tol).value; break;
    }

    rep.lhs_discrepancy = differs(rep.lhs_stated, std::fabs(rep.lhs_true.value));
    rep.rhs_discrepancy = differs(rep.rhs_stated, rep.rhs_derived);
    rep.holds_derived =
        std::fabs(rep.lhs_true.value) <= rep.rhs_derived + slack_for(rep.lhs_true.err, tol);
    return rep;
}

PropSweep prop_sweep(const std::vector<Interval>& iv_list, const std::vector<int>& n_list,
                     const std::vector<double>& q_list, const Tolerances& tol) {
    PropSweep sweep;
    auto run = [&](int k, const Interval& iv, std::optional<int> n, std::optional<double> q) {
        PropParams p{k, iv, n, q};
        PropReport rep = proposition(p, tol);
        if (rep.lhs_discrepancy) ++sweep.lhs_flags[k];
        if (rep.rhs_discrepancy) ++sweep.rhs_flags[k];
        sweep.rows.push_back(std::move(rep));
    };
    for (const Interval& iv : iv_list) {
        for (int k = 1; k <= 9; ++k) {
            const bool needs_n = family_of(k) == 1;
            const int theorem = theorem_of(k);
            std::vector<std::optional<int>> ns;
            if (needs_n) {
                for (int n : n_list)
                    if (n >= 2) ns.emplace_back(n);
            } else {
                ns.emplace_back(std::nullopt);
            }
            std::vector<std::optional<double>> qs;
            if (theorem == 0) {
                qs.emplace_back(std::nullopt);
            } else {
                for (double q : q_list)
                    if (theorem == 1 ? q > 1.0 : q >= 1.0) qs.emplace_back(q);
            }
            for (const auto& n : ns)
                for (const auto& q : qs) run(k, iv, n, q);
        }
    }
    return sweep;
}

}  // namespace hhv
