#include "hhv/verify.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string_view>

#include "hhv/rng.hpp"

namespace hhv {

namespace {

FuncExpr draw_basis_piece(Rng& rng) {
    switch (rng.pick(0, 7)) {
        case 0: return pow(var_x(), num(2.0));
        case 1: return pow(var_x(), num(3.0));
        case 2: return pow(var_x(), num(4.0));
        case 3: return pow(var_x(), num(5.0));
        case 4: return recip(var_x());
        case 5: return neg(ln(var_x()));
        case 6: return exp(mul(num(rng.uniform(0.2, 1.0)), var_x()));
        default: return mul(var_x(), ln(var_x()));
    }
}

std::string fmt_short(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

}  // namespace

Corpus gen_corpus(std::uint64_t seed, int count, double lo, double hi, const Tolerances& tol) {
    if (count < 1) throw std::invalid_argument("gen_corpus: count must be >= 1");
    if (!(lo > 0.0 && lo < hi)) throw std::invalid_argument("gen_corpus: require 0 < lo < hi");

    Corpus corpus;
    corpus.seed = seed;
    corpus.count = count;
    corpus.lo = lo;
    corpus.hi = hi;

    Rng rng(seed);
    const double min_width = 1e-6 * (hi - lo);
    while (static_cast<int>(corpus.cases.size()) < count) {
        ++corpus.stats.drawn;
        const double a = rng.uniform(lo, hi - min_width);
        double b;
        do {
            b = rng.uniform(a, hi);
        } while (!(b > a + min_width));

        // affine part plus 1..3 positively weighted convex pieces
        FuncExpr f = add(num(rng.uniform(-1.0, 1.0)), mul(num(rng.uniform(-1.0, 1.0)), var_x()));
        const int terms = rng.pick(1, 3);
        for (int t = 0; t < terms; ++t)
            f = add(f, mul(num(rng.uniform(0.1, 2.0)), draw_basis_piece(rng)));

        Interval iv(a, b);
        if (!check_shape(f, iv, Shape::Convex, tol.shape_grid, tol.shape_tol).passed) {
            ++corpus.stats.rejected_not_convex;
            continue;
        }

        CorpusCase c{f, iv, to_string(f)};
        FuncExpr fd = differentiate(f);
        auto abs_fd = [&fd](double x) { return std::fabs(fd.eval(x)); };
        c.fprime_convex =
            check_shape(abs_fd, iv, Shape::Convex, tol.shape_grid, tol.shape_tol).passed;
        c.fprime_concave =
            check_shape(abs_fd, iv, Shape::Concave, tol.shape_grid, tol.shape_tol).passed;
        if (c.fprime_convex) ++corpus.stats.fprime_convex;
        if (c.fprime_concave) ++corpus.stats.fprime_concave;
        corpus.cases.push_back(std::move(c));
    }
    return corpus;
}

std::string fnv_digest(const std::string& s) {
    std::uint64_t h = 14695981039346656037ull;  // FNV-1a 64 offset basis
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[16];
    for (int i = 15; i >= 0; --i) {
        buf[i] = "0123456789abcdef"[h & 0xf];
        h >>= 4;
    }
    return std::string(buf, 16);
}

std::string config_digest(const Corpus& corpus, const std::vector<double>& q_list,
                          const Tolerances& tol) {
    std::string s = "seed=" + std::to_string(corpus.seed) +
                    ";count=" + std::to_string(corpus.count) + ";lo=" + fmt_short(corpus.lo) +
                    ";hi=" + fmt_short(corpus.hi) + ";q=";
    for (double q : q_list) s += fmt_short(q) + ",";
    s += ";rtol=" + fmt_short(tol.quad_rel_tol) + ";floor=" + fmt_short(tol.slack_floor) +
         ";stol=" + fmt_short(tol.shape_tol) + ";grid=" + std::to_string(tol.shape_grid);
    return fnv_digest(s);
}

SuiteReport run_suite(const Corpus& corpus, const std::vector<double>& q_list,
                      const Tolerances& tol) {
    if (corpus.cases.empty()) throw std::invalid_argument("run_suite: empty corpus");

    SuiteReport rep;
    rep.seed = corpus.seed;
    rep.config_digest = config_digest(corpus, q_list, tol);
    rep.cases = static_cast<int>(corpus.cases.size());

    for (int i = 0; i < rep.cases; ++i) {
        const CorpusCase& c = corpus.cases[static_cast<std::size_t>(i)];
        try {
            BoundReport br = bound_report(c.f, c.iv, q_list, tol, true);

            ++rep.checks;
            const double resid = std::fabs(br.deviation.value - br.lemma_rhs.value);
            const double lemma_slack = slack_for(br.deviation.err + br.lemma_rhs.err, tol);
            if (resid > lemma_slack)
                rep.violations.push_back({i, "lemma_identity", br.deviation.value,
                                          br.lemma_rhs.value, resid - lemma_slack});

            for (const BoundEntry& e : br.bounds) {
                if (!e.applicable) continue;  // hypothesis failed: nothing asserted
                ++rep.checks;
                if (!e.holds) {
                    const std::string name =
                        e.uses_q ? e.label + "(q=" + fmt_short(e.q) + ")" : e.label;
                    const bool on_dev = std::string_view(e.target) == "deviation";
                    const double lhs =
                        std::fabs(on_dev ? br.deviation.value : br.trapezoid.value);
                    const double slack = on_dev ? br.slack_deviation : br.slack_trapezoid;
                    rep.violations.push_back({i, name, lhs, e.value, lhs - e.value - slack});
                }
            }

            HadamardReport h = hadamard_check(c.f, c.iv, tol);
            if (h.verdict != HadamardVerdict::Inconclusive) {
                ++rep.checks;
                if (!h.holds)
                    rep.violations.push_back(
                        {i, std::string("hadamard_") + to_label(h.verdict), h.midpoint_value,
                         h.endpoint_average, 0.0});
            }
        } catch (const std::exception& ex) {
            rep.skips.push_back({i, ex.what()});
        }
    }
    return rep;
}

}  // namespace hhv
