#include "hhv/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <vector>

namespace hhv {

namespace {

ExprPtr make(NodeKind k, ExprPtr l = nullptr, ExprPtr r = nullptr) {
    auto n = std::make_shared<ExprNode>();
    n->kind = k;
    n->lhs = std::move(l);
    n->rhs = std::move(r);
    return n;
}

ExprPtr make_number(double c) {
    auto n = std::make_shared<ExprNode>();
    n->kind = NodeKind::Number;
    n->number = c;
    return n;
}

bool is_number(const ExprPtr& n, double v) { return n->kind == NodeKind::Number && n->number == v; }

bool as_constant(const ExprPtr& n, double& out) {
    if (n->kind == NodeKind::Number) {
        out = n->number;
        return true;
    }
    if (n->kind == NodeKind::Neg && n->lhs->kind == NodeKind::Number) {
        out = -n->lhs->number;
        return true;
    }
    return false;
}

}  // namespace

FuncExpr num(double c) {
    if (c < 0.0) return {make(NodeKind::Neg, make_number(-c))};
    if (c == 0.0) c = 0.0;  // normalize -0.0
    return {make_number(c)};
}

FuncExpr var_x() { return {make(NodeKind::Var)}; }
FuncExpr const_e() { return {make(NodeKind::ConstE)}; }
FuncExpr const_pi() { return {make(NodeKind::ConstPi)}; }

FuncExpr neg(const FuncExpr& u) {
    if (u.root->kind == NodeKind::Neg) return {u.root->lhs};
    double c;
    if (as_constant(u.root, c)) return num(-c);
    return {make(NodeKind::Neg, u.root)};
}

FuncExpr add(const FuncExpr& l, const FuncExpr& r) {
    double cl, cr;
    if (as_constant(l.root, cl) && as_constant(r.root, cr)) return num(cl + cr);
    if (is_number(l.root, 0.0)) return r;
    if (is_number(r.root, 0.0)) return l;
    return {make(NodeKind::Add, l.root, r.root)};
}

FuncExpr sub(const FuncExpr& l, const FuncExpr& r) {
    double cl, cr;
    if (as_constant(l.root, cl) && as_constant(r.root, cr)) return num(cl - cr);
    if (is_number(r.root, 0.0)) return l;
    if (is_number(l.root, 0.0)) return neg(r);
    return {make(NodeKind::Sub, l.root, r.root)};
}

FuncExpr mul(const FuncExpr& l, const FuncExpr& r) {
    double cl, cr;
    if (as_constant(l.root, cl) && as_constant(r.root, cr)) return num(cl * cr);
    if (is_number(l.root, 0.0) || is_number(r.root, 0.0)) return num(0.0);
    if (is_number(l.root, 1.0)) return r;
    if (is_number(r.root, 1.0)) return l;
    return {make(NodeKind::Mul, l.root, r.root)};
}

FuncExpr div(const FuncExpr& l, const FuncExpr& r) {
    if (is_number(l.root, 0.0) && !is_number(r.root, 0.0)) return num(0.0);
    if (is_number(r.root, 1.0)) return l;
    return {make(NodeKind::Div, l.root, r.root)};
}

FuncExpr pow(const FuncExpr& base, const FuncExpr& exponent) {
    if (is_number(exponent.root, 1.0)) return base;
    if (is_number(exponent.root, 0.0)) return num(1.0);
    return {make(NodeKind::Pow, base.root, exponent.root)};
}

FuncExpr ln(const FuncExpr& u) { return {make(NodeKind::Ln, u.root)}; }
FuncExpr exp(const FuncExpr& u) { return {make(NodeKind::Exp, u.root)}; }
FuncExpr sqrt(const FuncExpr& u) { return {make(NodeKind::Sqrt, u.root)}; }
// Canonical reciprocal is the Div tree "1/u" so printed text re-parses to the
// identical tree; NodeKind::Recip stays supported for hand-built nodes.
FuncExpr recip(const FuncExpr& u) { return div(num(1.0), u); }

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

namespace {

// Exact for integer exponents |n| <= 64; keeps x^n derivatives exactly
// consistent with repeated multiplication.
double int_pow(double base, long long n) {
    if (n < 0) return 1.0 / int_pow(base, -n);
    double r = 1.0;
    for (long long i = 0; i < n; ++i) r *= base;
    return r;
}

[[noreturn]] void domain_fail(const char* what, const ExprNode& node, double x);

double eval_node(const ExprNode& n, double x) {
    switch (n.kind) {
        case NodeKind::Number: return n.number;
        case NodeKind::Var: return x;
        case NodeKind::ConstE: return 2.718281828459045235360287471352662498;
        case NodeKind::ConstPi: return 3.141592653589793238462643383279502884;
        case NodeKind::Neg: return -eval_node(*n.lhs, x);
        case NodeKind::Add: return eval_node(*n.lhs, x) + eval_node(*n.rhs, x);
        case NodeKind::Sub: return eval_node(*n.lhs, x) - eval_node(*n.rhs, x);
        case NodeKind::Mul: return eval_node(*n.lhs, x) * eval_node(*n.rhs, x);
        case NodeKind::Div: {
            double denom = eval_node(*n.rhs, x);
            if (denom == 0.0) domain_fail("division by zero", n, x);
            return eval_node(*n.lhs, x) / denom;
        }
        case NodeKind::Pow: {
            double b = eval_node(*n.lhs, x);
            double e = eval_node(*n.rhs, x);
            if (e == std::nearbyint(e) && std::fabs(e) <= 64.0) {
                if (b == 0.0 && e < 0.0) domain_fail("zero raised to a negative power", n, x);
                return int_pow(b, static_cast<long long>(e));
            }
            if (b < 0.0) domain_fail("fractional power of a negative base", n, x);
            if (b == 0.0 && e < 0.0) domain_fail("zero raised to a negative power", n, x);
            return std::pow(b, e);
        }
        case NodeKind::Ln: {
            double v = eval_node(*n.lhs, x);
            if (v <= 0.0) domain_fail("ln of a non-positive argument", n, x);
            return std::log(v);
        }
        case NodeKind::Exp: return std::exp(eval_node(*n.lhs, x));
        case NodeKind::Sqrt: {
            double v = eval_node(*n.lhs, x);
            if (v < 0.0) domain_fail("sqrt of a negative argument", n, x);
            return std::sqrt(v);
        }
        case NodeKind::Recip: {
            double v = eval_node(*n.lhs, x);
            if (v == 0.0) domain_fail("reciprocal of zero", n, x);
            return 1.0 / v;
        }
    }
    std::abort();  // unreachable
}

std::string print_node(const ExprNode& n);

[[noreturn]] void domain_fail(const char* what, const ExprNode& node, double x) {
    throw eval_error(std::string(what) + " in '" + print_node(node) + "' at x=" + std::to_string(x));
}

}  // namespace

double FuncExpr::eval(double x) const { return eval_node(*root, x); }

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

namespace {

// Precedence levels: + - (1) < * / (2) < unary - (3) < ^ (4) < atoms (5).
int precedence(NodeKind k) {
    switch (k) {
        case NodeKind::Add:
        case NodeKind::Sub: return 1;
        case NodeKind::Mul:
        case NodeKind::Div: return 2;
        case NodeKind::Neg: return 3;
        case NodeKind::Pow: return 4;
        default: return 5;
    }
}

std::string format_number(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string wrap(const ExprNode& child, bool need_parens) {
    std::string s = print_node(child);
    if (need_parens) return "(" + s + ")";
    return s;
}

std::string print_node(const ExprNode& n) {
    switch (n.kind) {
        case NodeKind::Number: return format_number(n.number);
        case NodeKind::Var: return "x";
        case NodeKind::ConstE: return "e";
        case NodeKind::ConstPi: return "pi";
        case NodeKind::Neg:
            // operand binds looser than unary minus -> parenthesize
            return "-" + wrap(*n.lhs, precedence(n.lhs->kind) < 3);
        case NodeKind::Add:
            return wrap(*n.lhs, precedence(n.lhs->kind) < 1) + " + " +
                   wrap(*n.rhs, precedence(n.rhs->kind) <= 1);
        case NodeKind::Sub:
            return wrap(*n.lhs, precedence(n.lhs->kind) < 1) + " - " +
                   wrap(*n.rhs, precedence(n.rhs->kind) <= 1);
        case NodeKind::Mul:
            return wrap(*n.lhs, precedence(n.lhs->kind) < 2) + "*" +
                   wrap(*n.rhs, precedence(n.rhs->kind) <= 2);
        case NodeKind::Div:
            return wrap(*n.lhs, precedence(n.lhs->kind) < 2) + "/" +
                   wrap(*n.rhs, precedence(n.rhs->kind) <= 2);
        case NodeKind::Pow:
            // ^ is right-associative and binds tighter than unary minus; the
            // exponent may itself be signed or another power.
            return wrap(*n.lhs, precedence(n.lhs->kind) <= 4) + "^" +
                   wrap(*n.rhs, precedence(n.rhs->kind) < 3);
        case NodeKind::Ln: return "ln(" + print_node(*n.lhs) + ")";
        case NodeKind::Exp: return "exp(" + print_node(*n.lhs) + ")";
        case NodeKind::Sqrt: return "sqrt(" + print_node(*n.lhs) + ")";
        case NodeKind::Recip: return "1/(" + print_node(*n.lhs) + ")";
    }
    std::abort();
}

}  // namespace

std::string to_string(const FuncExpr& f) { return print_node(*f.root); }

bool operator==(const FuncExpr& l, const FuncExpr& r) {
    const ExprNode& a = *l.root;
    const ExprNode& b = *r.root;
    if (a.kind != b.kind) return false;
    if (a.kind == NodeKind::Number) return a.number == b.number;
    if (a.lhs && !(FuncExpr{a.lhs} == FuncExpr{b.lhs})) return false;
    if (a.rhs && !(FuncExpr{a.rhs} == FuncExpr{b.rhs})) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

struct Token {
    enum Kind { Num, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End } kind;
    double value = 0.0;       // Num
    std::string text;         // Ident
    std::size_t offset = 0;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        std::size_t start = pos_;
        if (pos_ >= src_.size()) return {Token::End, 0.0, "", start};
        char c = src_[pos_];
        switch (c) {
            case '+': ++pos_; return {Token::Plus, 0.0, "", start};
            case '-': ++pos_; return {Token::Minus, 0.0, "", start};
            case '*': ++pos_; return {Token::Star, 0.0, "", start};
            case '/': ++pos_; return {Token::Slash, 0.0, "", start};
            case '^': ++pos_; return {Token::Caret, 0.0, "", start};
            case '(': ++pos_; return {Token::LParen, 0.0, "", start};
            case ')': ++pos_; return {Token::RParen, 0.0, "", start};
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return lex_number(start);
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ++pos_;
            return {Token::Ident, 0.0, std::string(src_.substr(start, pos_ - start)), start};
        }
        throw parse_error(std::string("unexpected character '") + c + "'", start);
    }

private:
    Token lex_number(std::size_t start) {
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (pos_ < src_.size() && src_[pos_] == '.') {
            ++pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        }
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            std::size_t mark = pos_;
            ++pos_;
            if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
            if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                    ++pos_;
            } else {
                pos_ = mark;  // "2e" where e is the constant: not an exponent
            }
        }
        double v = 0.0;
        auto text = src_.substr(start, pos_ - start);
        auto res = std::from_chars(text.data(), text.data() + text.size(), v);
        if (res.ec != std::errc{}) throw parse_error("malformed number literal", start);
        return {Token::Num, v, "", start};
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    explicit Parser(std::string_view src) : lexer_(src) { advance(); }

    FuncExpr parse_all() {
        FuncExpr e = parse_expr();
        if (tok_.kind != Token::End) throw parse_error("trailing input", tok_.offset);
        return e;
    }

private:
    void advance() { tok_ = lexer_.next(); }

    // expr := term (("+"|"-") term)*
    FuncExpr parse_expr() {
        FuncExpr e = parse_term();
        while (tok_.kind == Token::Plus || tok_.kind == Token::Minus) {
            bool plus = tok_.kind == Token::Plus;
            advance();
            FuncExpr r = parse_term();
            e = {make(plus ? NodeKind::Add : NodeKind::Sub, e.root, r.root)};
        }
        return e;
    }

    // term := unary (("*"|"/") unary)*
    FuncExpr parse_term() {
        FuncExpr e = parse_unary();
        while (tok_.kind == Token::Star || tok_.kind == Token::Slash) {
            bool star = tok_.kind == Token::Star;
            advance();
            FuncExpr r = parse_unary();
            e = {make(star ? NodeKind::Mul : NodeKind::Div, e.root, r.root)};
        }
        return e;
    }

    // unary := "-" unary | power ; "^" binds tighter, so -x^2 = -(x^2)
    FuncExpr parse_unary() {
        if (tok_.kind == Token::Minus) {
            advance();
            FuncExpr u = parse_unary();
            return {make(NodeKind::Neg, u.root)};
        }
        return parse_power();
    }

    // power := primary ("^" unary)?   (right-associative, signed exponents ok)
    FuncExpr parse_power() {
        FuncExpr base = parse_primary();
        if (tok_.kind == Token::Caret) {
            advance();
            FuncExpr e = parse_unary();
            return {make(NodeKind::Pow, base.root, e.root)};
        }
        return base;
    }

    FuncExpr parse_primary() {
        switch (tok_.kind) {
            case Token::Num: {
                double v = tok_.value;
                advance();
                return {make_number(v)};
            }
            case Token::LParen: {
                advance();
                FuncExpr e = parse_expr();
                expect(Token::RParen, "expected ')'");
                return e;
            }
            case Token::Ident: {
                std::string name = tok_.text;
                std::size_t off = tok_.offset;
                advance();
                if (name == "x") return var_x();
                if (name == "e") return const_e();
                if (name == "pi") return const_pi();
                if (name == "ln" || name == "exp" || name == "sqrt") {
                    expect(Token::LParen, "expected '(' after function name");
                    FuncExpr arg = parse_expr();
                    expect(Token::RParen, "expected ')'");
                    NodeKind k = name == "ln"    ? NodeKind::Ln
                                 : name == "exp" ? NodeKind::Exp
                                                 : NodeKind::Sqrt;
                    return {make(k, arg.root)};
                }
                throw parse_error("unknown identifier '" + name + "'", off);
            }
            case Token::End: throw parse_error("unexpected end of input", tok_.offset);
            default: throw parse_error("unexpected token", tok_.offset);
        }
    }

    void expect(Token::Kind k, const char* msg) {
        if (tok_.kind != k) throw parse_error(msg, tok_.offset);
        advance();
    }

    Lexer lexer_;
    Token tok_;
};

}  // namespace

FuncExpr parse(std::string_view text) {
    if (text.empty()) throw parse_error("empty expression", 0);
    return Parser(text).parse_all();
}

// ---------------------------------------------------------------------------
// Differentiation
// ---------------------------------------------------------------------------

namespace {

FuncExpr diff(const ExprNode& n) {
    FuncExpr u = n.lhs ? FuncExpr{n.lhs} : FuncExpr{nullptr};
    FuncExpr v = n.rhs ? FuncExpr{n.rhs} : FuncExpr{nullptr};
    switch (n.kind) {
        case NodeKind::Number:
        case NodeKind::ConstE:
        case NodeKind::ConstPi: return num(0.0);
        case NodeKind::Var: return num(1.0);
        case NodeKind::Neg: return neg(diff(*n.lhs));
        case NodeKind::Add: return add(diff(*n.lhs), diff(*n.rhs));
        case NodeKind::Sub: return sub(diff(*n.lhs), diff(*n.rhs));
        case NodeKind::Mul: return add(mul(diff(*n.lhs), v), mul(u, diff(*n.rhs)));
        case NodeKind::Div:
            return div(sub(mul(diff(*n.lhs), v), mul(u, diff(*n.rhs))), mul(v, v));
        case NodeKind::Pow: {
            double c;
            if (as_constant(n.rhs, c)) {
                // power rule with constant exponent
                return mul(mul(num(c), pow(u, num(c - 1.0))), diff(*n.lhs));
            }
            if (n.lhs->kind == NodeKind::ConstE) {
                return mul(FuncExpr{make(NodeKind::Pow, n.lhs, n.rhs)}, diff(*n.rhs));
            }
            // u^v = exp(v ln u)
            FuncExpr self{make(NodeKind::Pow, n.lhs, n.rhs)};
            return mul(self, add(mul(diff(*n.rhs), ln(u)), div(mul(v, diff(*n.lhs)), u)));
        }
        case NodeKind::Ln: {
            FuncExpr du = diff(*n.lhs);
            if (is_number(du.root, 1.0)) return recip(u);
            return div(du, u);
        }
        case NodeKind::Exp: return mul(FuncExpr{make(NodeKind::Exp, n.lhs)}, diff(*n.lhs));
        case NodeKind::Sqrt:
            return div(diff(*n.lhs), mul(num(2.0), FuncExpr{make(NodeKind::Sqrt, n.lhs)}));
        case NodeKind::Recip: return neg(div(diff(*n.lhs), mul(u, u)));
    }
    std::abort();
}

}  // namespace

FuncExpr differentiate(const FuncExpr& f) { return diff(*f.root); }

// ---------------------------------------------------------------------------
// Shape check
// ---------------------------------------------------------------------------

ShapeReport check_shape(const std::function<double(double)>& g, const Interval& iv, Shape mode,
                        int grid, double tol) {
    if (grid < 8) throw std::invalid_argument("shape grid must be >= 8");

    // Grid points sit at even indices of the half-step grid, so every pair
    // midpoint is itself a half-grid point; each point is evaluated once.
    const int half_n = 2 * grid - 1;
    const double half_h = iv.width() / (2.0 * (grid - 1));
    std::vector<double> vals(static_cast<std::size_t>(half_n));
    for (int k = 0; k < half_n; ++k) {
        double xk = (k == half_n - 1) ? iv.b() : iv.a() + k * half_h;
        vals[static_cast<std::size_t>(k)] = g(xk);
    }

    double worst = 0.0;
    for (int i = 0; i < grid; ++i) {
        for (int j = i + 1; j < grid; ++j) {
            double chord = 0.5 * (vals[static_cast<std::size_t>(2 * i)] +
                                  vals[static_cast<std::size_t>(2 * j)]);
            double mid = vals[static_cast<std::size_t>(i + j)];
            double v = (mode == Shape::Convex) ? mid - chord : chord - mid;
            if (v > worst) worst = v;
        }
    }

    ShapeReport rep;
    rep.mode = mode;
    rep.grid_size = grid;
    rep.max_violation = worst;
    rep.passed = worst <= tol;
    return rep;
}

ShapeReport check_shape(const FuncExpr& g, const Interval& iv, Shape mode, int grid, double tol) {
    return check_shape([&g](double x) { return g.eval(x); }, iv, mode, grid, tol);
}

}  // namespace hhv
