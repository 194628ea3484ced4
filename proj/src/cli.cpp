#include "hhv/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string_view>

#include "hhv/hhcore.hpp"
#include "hhv/means.hpp"
#include "hhv/props.hpp"
#include "hhv/verify.hpp"

namespace hhv {

namespace {

constexpr const char* kToolVersion = "0.1.0";

// JSON always carries the full double; text respects --precision.
std::string fmt17(double v) {
    char b[64];
    std::snprintf(b, sizeof b, "%.17g", v);
    return b;
}

std::string fmtp(double v, int prec) {
    char b[64];
    std::snprintf(b, sizeof b, "%.*g", prec, v);
    return b;
}

// Minimal JSON emitter: insertion-ordered keys, fixed number format, no
// whitespace — two runs with equal inputs produce equal bytes.
class JsonWriter {
public:
    JsonWriter& obj() {
        val();
        s_ += '{';
        closer_.push_back('}');
        first_.push_back(true);
        return *this;
    }
    JsonWriter& arr() {
        val();
        s_ += '[';
        closer_.push_back(']');
        first_.push_back(true);
        return *this;
    }
    JsonWriter& end() {
        s_ += closer_.back();
        closer_.pop_back();
        first_.pop_back();
        return *this;
    }
    JsonWriter& key(std::string_view k) {
        sep();
        quote(k);
        s_ += ':';
        after_key_ = true;
        return *this;
    }
    JsonWriter& num(double v) {
        val();
        s_ += std::isfinite(v) ? fmt17(v) : "null";
        return *this;
    }
    JsonWriter& num(int v) {
        val();
        s_ += std::to_string(v);
        return *this;
    }
    JsonWriter& num(std::uint64_t v) {
        val();
        s_ += std::to_string(v);
        return *this;
    }
    JsonWriter& str(std::string_view v) {
        val();
        quote(v);
        return *this;
    }
    JsonWriter& boolean(bool v) {
        val();
        s_ += v ? "true" : "false";
        return *this;
    }
    JsonWriter& null() {
        val();
        s_ += "null";
        return *this;
    }
    const std::string& text() const { return s_; }

private:
    void sep() {
        if (!first_.empty()) {
            if (!first_.back()) s_ += ',';
            first_.back() = false;
        }
    }
    void val() {
        if (after_key_) {
            after_key_ = false;
            return;
        }
        sep();
    }
    void quote(std::string_view v) {
        s_ += '"';
        for (char c : v) {
            switch (c) {
                case '"': s_ += "\\\""; break;
                case '\\': s_ += "\\\\"; break;
                case '\n': s_ += "\\n"; break;
                case '\r': s_ += "\\r"; break;
                case '\t': s_ += "\\t"; break;
                default:
                    if (static_cast<unsigned char>(c) < 0x20) {
                        char b[8];
                        std::snprintf(b, sizeof b, "\\u%04x", c);
                        s_ += b;
                    } else {
                        s_ += c;
                    }
            }
        }
        s_ += '"';
    }

    std::string s_;
    std::string closer_;
    std::vector<bool> first_;
    bool after_key_ = false;
};

struct OutputOpts {
    std::string format = "text";
    int precision = 12;
};

void add_output_opts(CLI::App* sub, OutputOpts& o, bool allow_csv) {
    std::vector<std::string> formats = {"text", "json"};
    if (allow_csv) formats.push_back("csv");
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember(formats));
    sub->add_flag_callback(
        "--json", [&o] { o.format = "json"; }, "shorthand for --format json");
    sub->add_option("--precision", o.precision, "significant digits in text output (default 12)")
        ->check(CLI::Range(1, 17));
}

void add_tol_opts(CLI::App* sub, Tolerances& t) {
    sub->add_option("--rel-tol", t.quad_rel_tol, "quadrature relative tolerance (default 1e-10)")
        ->check(CLI::Range(1e-14, 1e-3));
    sub->add_option("--slack-floor", t.slack_floor,
                    "absolute floor of the inequality slack (default 1e-9)");
    sub->add_option("--shape-tol", t.shape_tol, "convexity check tolerance (default 1e-9)");
    sub->add_option("--shape-grid", t.shape_grid, "convexity check grid size (default 64)")
        ->check(CLI::Range(8, 100000));
}

void emit_tolerances(JsonWriter& w, const Tolerances& t) {
    w.obj()
        .key("quad_rel_tol").num(t.quad_rel_tol)
        .key("slack_floor").num(t.slack_floor)
        .key("shape_tol").num(t.shape_tol)
        .key("shape_grid").num(t.shape_grid)
        .end();
}

void emit_value_err(JsonWriter& w, const ValueWithError& v) {
    w.obj().key("value").num(v.value).key("err").num(v.err).end();
}

void emit_shape(JsonWriter& w, const ShapeReport& s) {
    w.obj()
        .key("mode").str(s.mode == Shape::Convex ? "convex" : "concave")
        .key("grid").num(s.grid_size)
        .key("max_violation").num(s.max_violation)
        .key("passed").boolean(s.passed)
        .end();
}

std::string tol_digest_part(const Tolerances& t) {
    return ";rtol=" + fmt17(t.quad_rel_tol) + ";floor=" + fmt17(t.slack_floor) +
           ";stol=" + fmt17(t.shape_tol) + ";grid=" + std::to_string(t.shape_grid);
}

// ---------------------------------------------------------------------------
// means
// ---------------------------------------------------------------------------

struct MeansOpts {
    double a = 0.0;
    double b = 0.0;
    std::optional<double> p;
    OutputOpts out;
};

int do_means(const MeansOpts& o, std::ostream& out) {
    Interval iv(o.a, o.b);
    MeanSet m = o.p ? mean_set(iv, *o.p) : mean_set(iv);

    if (o.out.format == "json") {
        std::string digest = fnv_digest("means;a=" + fmt17(o.a) + ";b=" + fmt17(o.b) +
                                        ";p=" + (o.p ? fmt17(*o.p) : "none"));
        JsonWriter w;
        w.obj().key("tool_version").str(kToolVersion);
        w.key("config").obj()
            .key("command").str("means")
            .key("a").num(o.a)
            .key("b").num(o.b);
        w.key("p");
        if (o.p) w.num(*o.p); else w.null();
        w.key("digest").str(digest).end();
        w.key("result").obj()
            .key("A").num(m.A)
            .key("G").num(m.G)
            .key("H").num(m.H)
            .key("L").num(m.L)
            .key("I").num(m.I);
        w.key("Lp");
        if (m.has_Lp) w.num(m.Lp); else w.null();
        w.key("Lp_exponent");
        if (m.has_Lp) w.num(m.Lp_exponent); else w.null();
        w.end().end();
        out << w.text() << "\n";
        return 0;
    }

    const int p = o.out.precision;
    out << "A = " << fmtp(m.A, p) << "\n"
        << "G = " << fmtp(m.G, p) << "\n"
        << "H = " << fmtp(m.H, p) << "\n"
        << "L = " << fmtp(m.L, p) << "\n"
        << "I = " << fmtp(m.I, p) << "\n";
    if (m.has_Lp)
        out << "L_" << fmtp(m.Lp_exponent, p) << " = " << fmtp(m.Lp, p) << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// bound
// ---------------------------------------------------------------------------

struct BoundOpts {
    std::string expr;
    double a = 0.0;
    double b = 0.0;
    std::vector<double> q_list;
    bool classical = false;
    Tolerances tol;
    OutputOpts out;
};

int do_bound(const BoundOpts& o, std::ostream& out) {
    Interval iv(o.a, o.b);
    FuncExpr f = parse(o.expr);
    BoundReport rep = bound_report(f, iv, o.q_list, o.tol, o.classical);
    HadamardReport had = hadamard_check(f, iv, o.tol);

    bool violated = false;
    for (const BoundEntry& e : rep.bounds)
        if (e.applicable && !e.holds) violated = true;
    if (had.verdict != HadamardVerdict::Inconclusive && !had.holds) violated = true;

    if (o.out.format == "json") {
        std::string cfg = "bound;f=" + o.expr + ";a=" + fmt17(o.a) + ";b=" + fmt17(o.b) + ";q=";
        for (double q : o.q_list) cfg += fmt17(q) + ",";
        cfg += ";classical=" + std::string(o.classical ? "1" : "0") + tol_digest_part(o.tol);

        JsonWriter w;
        w.obj().key("tool_version").str(kToolVersion);
        w.key("config").obj()
            .key("command").str("bound")
            .key("f").str(o.expr)
            .key("a").num(o.a)
            .key("b").num(o.b);
        w.key("q_list").arr();
        for (double q : o.q_list) w.num(q);
        w.end();
        w.key("classical").boolean(o.classical);
        w.key("tolerances");
        emit_tolerances(w, o.tol);
        w.key("digest").str(fnv_digest(cfg)).end();

        w.key("result").obj();
        w.key("deviation");
        emit_value_err(w, rep.deviation);
        w.key("lemma_rhs");
        emit_value_err(w, rep.lemma_rhs);
        w.key("lemma_residual").num(std::fabs(rep.deviation.value - rep.lemma_rhs.value));
        w.key("trapezoid");
        emit_value_err(w, rep.trapezoid);
        w.key("slack").obj()
            .key("deviation").num(rep.slack_deviation)
            .key("trapezoid").num(rep.slack_trapezoid)
            .end();
        w.key("hadamard").obj()
            .key("midpoint_value").num(had.midpoint_value)
            .key("integral_mean").num(had.integral_mean)
            .key("endpoint_average").num(had.endpoint_average)
            .key("verdict").str(to_label(had.verdict))
            .key("holds").boolean(had.holds);
        w.key("shape");
        emit_shape(w, had.shape);
        w.end();
        w.key("bounds").arr();
        for (const BoundEntry& e : rep.bounds) {
            w.obj()
                .key("label").str(e.label)
                .key("q").num(e.q)
                .key("uses_q").boolean(e.uses_q)
                .key("target").str(e.target)
                .key("value").num(e.value);
            w.key("precondition");
            emit_shape(w, e.precondition);
            w.key("applicable").boolean(e.applicable)
                .key("holds").boolean(e.holds)
                .key("margin").num(e.margin)
                .end();
        }
        w.end();
        w.key("violated").boolean(violated);
        w.end().end();
        out << w.text() << "\n";
        return violated ? 1 : 0;
    }

    const int p = o.out.precision;
    out << "f = " << o.expr << "  on [" << fmtp(o.a, p) << ", " << fmtp(o.b, p) << "]\n";
    out << "deviation     = " << fmtp(rep.deviation.value, p) << "  (err "
        << fmtp(rep.deviation.err, 3) << ")\n";
    out << "lemma rhs     = " << fmtp(rep.lemma_rhs.value, p) << "  (residual "
        << fmtp(std::fabs(rep.deviation.value - rep.lemma_rhs.value), 3) << ")\n";
    out << "trapezoid dev = " << fmtp(rep.trapezoid.value, p) << "  (err "
        << fmtp(rep.trapezoid.err, 3) << ")\n";
    out << "hadamard      : " << to_label(had.verdict) << "  " << fmtp(had.midpoint_value, p)
        << " | " << fmtp(had.integral_mean, p) << " | " << fmtp(had.endpoint_average, p)
        << (had.verdict == HadamardVerdict::Inconclusive ? ""
                                                         : had.holds ? "  ok" : "  VIOLATED")
        << "\n";
    out << "\n";
    char line[256];
    std::snprintf(line, sizeof line, "%-7s %-5s %-10s %-22s %-14s %-6s %s\n", "bound", "q",
                  "target", "value", "precondition", "holds", "margin");
    out << line;
    for (const BoundEntry& e : rep.bounds) {
        std::string qs = e.uses_q ? fmtp(e.q, 6) : "-";
        std::string pre = e.applicable ? "pass" : "fail";
        std::snprintf(line, sizeof line, "%-7s %-5s %-10s %-22s %-14s %-6s %s\n",
                      e.label.c_str(), qs.c_str(), e.target, fmtp(e.value, p).c_str(),
                      pre.c_str(), e.holds ? "yes" : "NO", fmtp(e.margin, p).c_str());
        out << line;
    }
    if (violated) out << "\nVIOLATION: an applicable bound fails beyond slack\n";
    return violated ? 1 : 0;
}

// ---------------------------------------------------------------------------
// props
// ---------------------------------------------------------------------------

struct PropsOpts {
    double a = 0.0;
    double b = 0.0;
    std::optional<int> n;
    std::optional<double> q;
    bool all = false;
    Tolerances tol;
    OutputOpts out;
};

void emit_prop_row_json(JsonWriter& w, const PropReport& r) {
    w.obj().key("k").num(r.k);
    w.key("n");
    if (r.n) w.num(*r.n); else w.null();
    w.key("q");
    if (r.q) w.num(*r.q); else w.null();
    w.key("a").num(r.a).key("b").num(r.b);
    w.key("lhs_stated").num(r.lhs_stated);
    w.key("lhs_true");
    emit_value_err(w, r.lhs_true);
    w.key("rhs_stated").num(r.rhs_stated);
    w.key("rhs_derived").num(r.rhs_derived);
    w.key("lhs_discrepancy").boolean(r.lhs_discrepancy);
    w.key("rhs_discrepancy").boolean(r.rhs_discrepancy);
    w.key("holds_derived").boolean(r.holds_derived);
    w.end();
}

int do_props(const PropsOpts& o, std::ostream& out) {
    Interval iv(o.a, o.b);
    std::vector<PropReport> rows;
    if (o.all) {
        std::vector<int> n_list;
        if (o.n) n_list.push_back(*o.n);
        std::vector<double> q_list;
        if (o.q) q_list.push_back(*o.q);
        PropSweep sweep = prop_sweep({iv}, n_list, q_list, o.tol);
        rows = std::move(sweep.rows);
    } else {
        rows.push_back(proposition(PropParams{1, iv, std::nullopt, std::nullopt}, o.tol));
    }

    int lhs_flags = 0, rhs_flags = 0;
    bool all_hold = true;
    for (const PropReport& r : rows) {
        lhs_flags += r.lhs_discrepancy;
        rhs_flags += r.rhs_discrepancy;
        all_hold = all_hold && r.holds_derived;
    }

    if (o.out.format == "json") {
        std::string cfg = "props;a=" + fmt17(o.a) + ";b=" + fmt17(o.b) +
                          ";n=" + (o.n ? std::to_string(*o.n) : "none") +
                          ";q=" + (o.q ? fmt17(*o.q) : "none") + ";all=" +
                          (o.all ? "1" : "0") + tol_digest_part(o.tol);
        JsonWriter w;
        w.obj().key("tool_version").str(kToolVersion);
        w.key("config").obj()
            .key("command").str("props")
            .key("a").num(o.a)
            .key("b").num(o.b);
        w.key("n");
        if (o.n) w.num(*o.n); else w.null();
        w.key("q");
        if (o.q) w.num(*o.q); else w.null();
        w.key("all").boolean(o.all);
        w.key("tolerances");
        emit_tolerances(w, o.tol);
        w.key("digest").str(fnv_digest(cfg)).end();
        w.key("result").obj();
        w.key("rows").arr();
        for (const PropReport& r : rows) emit_prop_row_json(w, r);
        w.end();
        w.key("lhs_discrepancies").num(lhs_flags);
        w.key("rhs_discrepancies").num(rhs_flags);
        w.key("all_hold_derived").boolean(all_hold);
        w.end().end();
        out << w.text() << "\n";
        return all_hold ? 0 : 1;
    }

    if (o.out.format == "csv") {
        out << "k,n,q,a,b,lhs_stated,lhs_true,lhs_err,rhs_stated,rhs_derived,"
               "lhs_discrepancy,rhs_discrepancy,holds_derived\n";
        for (const PropReport& r : rows) {
            out << r.k << ',' << (r.n ? std::to_string(*r.n) : "") << ','
                << (r.q ? fmt17(*r.q) : "") << ',' << fmt17(r.a) << ',' << fmt17(r.b) << ','
                << fmt17(r.lhs_stated) << ',' << fmt17(r.lhs_true.value) << ','
                << fmt17(r.lhs_true.err) << ',' << fmt17(r.rhs_stated) << ','
                << fmt17(r.rhs_derived) << ',' << (r.lhs_discrepancy ? "true" : "false") << ','
                << (r.rhs_discrepancy ? "true" : "false") << ','
                << (r.holds_derived ? "true" : "false") << "\n";
        }
        return all_hold ? 0 : 1;
    }

    const int p = o.out.precision;
    char line[320];
    std::snprintf(line, sizeof line, "%-3s %-3s %-5s %-20s %-20s %-20s %-20s %-9s %s\n", "k",
                  "n", "q", "lhs_stated", "lhs_true", "rhs_stated", "rhs_derived", "flags",
                  "holds");
    out << line;
    for (const PropReport& r : rows) {
        std::string flags;
        if (r.lhs_discrepancy) flags += "LHS";
        if (r.rhs_discrepancy) flags += flags.empty() ? "RHS" : "+RHS";
        if (flags.empty()) flags = "-";
        std::snprintf(line, sizeof line, "%-3d %-3s %-5s %-20s %-20s %-20s %-20s %-9s %s\n",
                      r.k, r.n ? std::to_string(*r.n).c_str() : "-",
                      r.q ? fmtp(*r.q, 3).c_str() : "-", fmtp(r.lhs_stated, p).c_str(),
                      fmtp(std::fabs(r.lhs_true.value), p).c_str(),
                      fmtp(r.rhs_stated, p).c_str(), fmtp(r.rhs_derived, p).c_str(),
                      flags.c_str(), r.holds_derived ? "yes" : "NO");
        out << line;
    }
    out << "\ndiscrepancies: lhs " << lhs_flags << ", rhs " << rhs_flags << "\n";
    return all_hold ? 0 : 1;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyOpts {
    std::uint64_t seed = 1;
    int count = 50;
    std::vector<double> range = {0.1, 10.0};
    std::vector<double> q_list = {1.0, 1.5, 2.0, 3.0, 5.0};
    Tolerances tol;
    OutputOpts out;
};

int do_verify(const VerifyOpts& o, std::ostream& out) {
    Corpus corpus = gen_corpus(o.seed, o.count, o.range[0], o.range[1], o.tol);
    SuiteReport rep = run_suite(corpus, o.q_list, o.tol);
    const bool pass = rep.violations.empty();

    if (o.out.format == "json") {
        JsonWriter w;
        w.obj().key("tool_version").str(kToolVersion);
        w.key("config").obj()
            .key("command").str("verify")
            .key("seed").num(o.seed)
            .key("count").num(o.count);
        w.key("range").arr().num(o.range[0]).num(o.range[1]).end();
        w.key("q_list").arr();
        for (double q : o.q_list) w.num(q);
        w.end();
        w.key("tolerances");
        emit_tolerances(w, o.tol);
        w.key("digest").str(rep.config_digest).end();
        w.key("result").obj()
            .key("cases").num(rep.cases)
            .key("checks").num(rep.checks);
        w.key("generator").obj()
            .key("drawn").num(corpus.stats.drawn)
            .key("rejected_not_convex").num(corpus.stats.rejected_not_convex)
            .key("fprime_convex").num(corpus.stats.fprime_convex)
            .key("fprime_concave").num(corpus.stats.fprime_concave)
            .end();
        w.key("violations").arr();
        for (const Violation& v : rep.violations) {
            const CorpusCase& c = corpus.cases[static_cast<std::size_t>(v.case_index)];
            w.obj()
                .key("case").num(v.case_index)
                .key("check").str(v.check)
                .key("lhs").num(v.lhs)
                .key("bound").num(v.bound)
                .key("excess").num(v.excess)
                .key("f").str(c.text)
                .key("a").num(c.iv.a())
                .key("b").num(c.iv.b())
                .end();
        }
        w.end();
        w.key("skips").arr();
        for (const Skip& s : rep.skips)
            w.obj().key("case").num(s.case_index).key("reason").str(s.reason).end();
        w.end();
        w.key("pass").boolean(pass);
        w.end().end();
        out << w.text() << "\n";
        return pass ? 0 : 1;
    }

    out << "seed " << o.seed << "  cases " << rep.cases << "  checks " << rep.checks
        << "  violations " << rep.violations.size() << "  skips " << rep.skips.size() << "\n";
    out << "corpus: drawn " << corpus.stats.drawn << ", rejected "
        << corpus.stats.rejected_not_convex << ", |f'| convex " << corpus.stats.fprime_convex
        << ", |f'| concave " << corpus.stats.fprime_concave << "\n";
    out << "digest " << rep.config_digest << "\n";
    for (const Violation& v : rep.violations) {
        const CorpusCase& c = corpus.cases[static_cast<std::size_t>(v.case_index)];
        out << "VIOLATION case " << v.case_index << " [" << c.text << " on "
            << fmt17(c.iv.a()) << "," << fmt17(c.iv.b()) << "] " << v.check << ": |lhs| "
            << fmt17(v.lhs) << " > bound " << fmt17(v.bound) << " (excess " << fmt17(v.excess)
            << ")\n";
    }
    for (const Skip& s : rep.skips)
        out << "skip case " << s.case_index << ": " << s.reason << "\n";
    out << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"deviation-functional and special-means inequality checker"};
    app.name("hhverify");
    app.require_subcommand(1);

    MeansOpts mo;
    CLI::App* means_cmd = app.add_subcommand("means", "special means of an interval");
    means_cmd->add_option("a", mo.a, "left endpoint (> 0)")->required();
    means_cmd->add_option("b", mo.b, "right endpoint (> a)")->required();
    double p_val = 0.0;
    CLI::Option* p_opt =
        means_cmd->add_option("--p", p_val, "also compute the generalized log mean L_p");
    add_output_opts(means_cmd, mo.out, false);

    BoundOpts bo;
    CLI::App* bound_cmd =
        app.add_subcommand("bound", "deviation, identity residual, and every bound for f");
    bound_cmd->add_option("--f", bo.expr, "expression for f, e.g. \"1/x\"")->required();
    bound_cmd->add_option("--a", bo.a, "left endpoint (> 0)")->required();
    bound_cmd->add_option("--b", bo.b, "right endpoint (> a)")->required();
    bound_cmd->add_option("--q", bo.q_list, "exponents for the q-indexed bounds");
    bound_cmd->add_flag("--classical", bo.classical,
                        "include the four classical trapezoid bounds");
    add_tol_opts(bound_cmd, bo.tol);
    add_output_opts(bound_cmd, bo.out, false);

    PropsOpts po;
    CLI::App* props_cmd =
        app.add_subcommand("props", "special-means statements: printed vs derived");
    props_cmd->add_option("--a", po.a, "left endpoint (> 0)")->required();
    props_cmd->add_option("--b", po.b, "right endpoint (> a)")->required();
    int n_val = 0;
    CLI::Option* n_opt = props_cmd->add_option("--n", n_val, "power for the x^n statements");
    double q_val = 0.0;
    CLI::Option* q_opt = props_cmd->add_option("--q", q_val, "exponent for statements 4..9");
    props_cmd->add_flag("--all", po.all, "run every statement the given parameters allow");
    add_tol_opts(props_cmd, po.tol);
    add_output_opts(props_cmd, po.out, true);

    VerifyOpts vo;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "seeded corpus sweep over every inequality");
    verify_cmd->add_option("--seed", vo.seed, "corpus seed (default 1)");
    verify_cmd->add_option("--count", vo.count, "number of cases (default 50)");
    verify_cmd->add_option("--range", vo.range, "interval endpoints drawn from (LO, HI)")
        ->expected(2);
    verify_cmd->add_option("--q-list", vo.q_list, "exponents to sweep (default 1 1.5 2 3 5)");
    add_tol_opts(verify_cmd, vo.tol);
    add_output_opts(verify_cmd, vo.out, false);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    if (p_opt->count() > 0) mo.p = p_val;
    if (n_opt->count() > 0) po.n = n_val;
    if (q_opt->count() > 0) po.q = q_val;

    try {
        if (means_cmd->parsed()) return do_means(mo, out);
        if (bound_cmd->parsed()) return do_bound(bo, out);
        if (props_cmd->parsed()) return do_props(po, out);
        if (verify_cmd->parsed()) return do_verify(vo, out);
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const eval_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace hhv
