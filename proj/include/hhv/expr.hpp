#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hhv/interval.hpp"

namespace hhv {

// Immutable expression tree for scalar functions of one variable x.
// Nodes are shared and never mutated after construction, so FuncExpr values
// can be copied and evaluated concurrently.

enum class NodeKind {
    Number,   // literal constant
    Var,      // the variable x
    ConstE,   // Euler's number
    ConstPi,  // pi
    Neg,
    Add,
    Sub,
    Mul,
    Div,
    Pow,
    Ln,
    Exp,
    Sqrt,
    Recip,  // multiplicative inverse, 1/u
};

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    NodeKind kind;
    double number = 0.0;  // valid for NodeKind::Number
    ExprPtr lhs;          // unary operand / left operand
    ExprPtr rhs;          // right operand of binary nodes
};

struct FuncExpr {
    ExprPtr root;

    double eval(double x) const;
    double operator()(double x) const { return eval(x); }
};

// Node factories. num() wraps negative constants as Neg(positive literal) so
// that printed expressions re-parse to the identical tree.
FuncExpr num(double c);
FuncExpr var_x();
FuncExpr const_e();
FuncExpr const_pi();
FuncExpr neg(const FuncExpr& u);
FuncExpr add(const FuncExpr& l, const FuncExpr& r);
FuncExpr sub(const FuncExpr& l, const FuncExpr& r);
FuncExpr mul(const FuncExpr& l, const FuncExpr& r);
FuncExpr div(const FuncExpr& l, const FuncExpr& r);
FuncExpr pow(const FuncExpr& base, const FuncExpr& exponent);
FuncExpr ln(const FuncExpr& u);
FuncExpr exp(const FuncExpr& u);
FuncExpr sqrt(const FuncExpr& u);
FuncExpr recip(const FuncExpr& u);

// Raised on malformed input text; offset is the byte position of the problem.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, std::size_t offset)
        : std::runtime_error(msg + " at offset " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Raised when evaluation leaves a primitive's domain (ln/sqrt of a
// non-positive argument, division by zero, fractional power of a negative
// base). The message names the offending subexpression.
class eval_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

FuncExpr parse(std::string_view text);

// Canonical text form; parse(to_string(f)) reproduces the identical tree for
// any tree built from the factories above.
std::string to_string(const FuncExpr& f);

// Structural equality.
bool operator==(const FuncExpr& l, const FuncExpr& r);
inline bool operator!=(const FuncExpr& l, const FuncExpr& r) { return !(l == r); }

// Derivative with conservative simplification (0*u -> 0, 1*u -> u, u+-0 -> u,
// constant folding). No factoring or expansion.
FuncExpr differentiate(const FuncExpr& f);

enum class Shape { Convex, Concave };

struct ShapeReport {
    Shape mode = Shape::Convex;
    int grid_size = 0;
    double max_violation = 0.0;
    bool passed = false;
};

// Midpoint-chord test over all pairs from a uniform grid on [a,b].
// For Convex the violation at a pair (x,y) is g((x+y)/2) - (g(x)+g(y))/2,
// for Concave the negation; max_violation is the largest value clamped below
// at 0 and the check passes when it stays within tol.
ShapeReport check_shape(const std::function<double(double)>& g, const Interval& iv, Shape mode,
                        int grid = 64, double tol = 1e-9);
ShapeReport check_shape(const FuncExpr& g, const Interval& iv, Shape mode, int grid = 64,
                        double tol = 1e-9);

}  // namespace hhv
