#pragma once

#include "lfc/alpha.hpp"

#include <memory>
#include <string>

namespace lfc {

// A parsed arithmetic expression in one variable. The language covers
// nonnegative numeric literals, `x`, the fractal-order symbol `a`, the
// binary operators + - * /, right-associative ^, unary minus, and the
// calls exp(...), sin(...), abs(...). Precedence, tightest first:
// ^  then unary minus  then * /  then + -. Whitespace is insignificant.
//
// Trees are immutable and cheap to copy; evaluation is reentrant.
class Expr {
public:
    // Throws ParseError (with byte offset and an expected-token note) on
    // any malformed input; never returns a tree for one.
    static Expr parse(const std::string& src);

    // Evaluates with `x` bound and `a` bound to alpha.value(). Division
    // by zero, fractional powers of negative bases, and non-finite
    // intermediate results raise EvalError naming the subexpression.
    double eval(double x, const Alpha& alpha) const;

    // Canonical text form; parsing it back yields a structurally
    // identical tree.
    std::string print() const;

    bool same_structure(const Expr& other) const;

    // Opaque tree node; defined in the implementation file only.
    struct Node;

private:
    explicit Expr(std::shared_ptr<const Node> root) : root_(std::move(root)) {}
    std::shared_ptr<const Node> root_;
};

}  // namespace lfc
