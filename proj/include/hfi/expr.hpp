#pragma once

#include <memory>
#include <string>

namespace hfi {

// AST over: variable u, real literals, + - * /, ^ with a literal exponent,
// unary minus, ln, exp. Immutable after construction; safe to share.
enum class ExprKind { number, var, add, sub, mul, div, pow, neg, ln, exp };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    ExprKind kind;
    double number = 0.0;  // literal value, or the exponent for pow nodes
    ExprPtr a, b;         // unary operand in a; binary operands in a, b
};

// Grammar (whitespace insignificant, 1-based columns in errors):
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-' factor | atom ('^' ['-'] number)?
//   atom   := number | 'u' | 'ln' '(' expr ')' | 'exp' '(' expr ')' | '(' expr ')'
// so ^ binds tighter than unary minus: -u^2 parses as -(u^2).
// Throws SyntaxError on malformed input, including unknown identifiers.
ExprPtr parse(const std::string& src);

// Exact symbolic derivative d/du. Only literal-on-literal constant folding is
// applied, no other simplification.
ExprPtr diff(const ExprPtr& e);

// Throws DomainError for ln of a non-positive argument, EvalError when the
// result is non-finite.
double eval(const ExprPtr& e, double u);

// Minimal-parentheses rendering; parse(to_string(e)) is structurally equal
// to e.
std::string to_string(const ExprPtr& e);

bool structurally_equal(const ExprPtr& x, const ExprPtr& y);

}  // namespace hfi
