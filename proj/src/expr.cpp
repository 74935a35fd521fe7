#include "lfc/expr.hpp"

#include "lfc/errors.hpp"
#include "lfc/format.hpp"

#include <charconv>
#include <cmath>
#include <string_view>
#include <utility>

namespace lfc {

struct Expr::Node {
    enum class Kind { Number, VarX, SymA, Add, Sub, Mul, Div, Neg, Pow, Exp, Sin, Abs };

    Kind kind;
    double number = 0.0;
    std::shared_ptr<const Node> a, b;
};

namespace {

using Node = Expr::Node;
using Kind = Node::Kind;
using NodePtr = std::shared_ptr<const Node>;

NodePtr leaf(Kind k, double v = 0.0) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->number = v;
    return n;
}

NodePtr unary(Kind k, NodePtr a) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->a = std::move(a);
    return n;
}

NodePtr binary(Kind k, NodePtr a, NodePtr b) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

// Bounds tree depth; protects the recursive parser from pathological
// nesting like ten thousand open parentheses.
constexpr int kMaxParseDepth = 256;

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    NodePtr run() {
        NodePtr e = parse_sum();
        skip_ws();
        if (pos_ != src_.size()) fail("unexpected trailing input", "end of input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what, std::string expected) {
        throw ParseError("syntax error at offset " + std::to_string(pos_) + ": " + what,
                         pos_, std::move(expected));
    }

    void skip_ws() {
        while (pos_ < src_.size() &&
               (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\n' ||
                src_[pos_] == '\r')) {
            ++pos_;
        }
    }

    // Peeks past whitespace; 0 at end of input.
    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    NodePtr parse_sum() {
        NodePtr e = parse_product();
        for (char c = peek(); c == '+' || c == '-'; c = peek()) {
            ++pos_;
            e = binary(c == '+' ? Kind::Add : Kind::Sub, std::move(e), parse_product());
        }
        return e;
    }

    NodePtr parse_product() {
        NodePtr e = parse_factor();
        for (char c = peek(); c == '*' || c == '/'; c = peek()) {
            ++pos_;
            e = binary(c == '*' ? Kind::Mul : Kind::Div, std::move(e), parse_factor());
        }
        return e;
    }

    NodePtr parse_factor() {
        if (++depth_ > kMaxParseDepth) fail("expression too deeply nested", "shallower nesting");
        NodePtr e;
        if (peek() == '-') {
            ++pos_;
            e = unary(Kind::Neg, parse_factor());
        } else {
            e = parse_power();
        }
        --depth_;
        return e;
    }

    NodePtr parse_power() {
        NodePtr base = parse_atom();
        if (peek() == '^') {
            ++pos_;
            // The exponent is a factor, so ^ is right-associative and may
            // carry its own leading minus.
            return binary(Kind::Pow, std::move(base), parse_factor());
        }
        return base;
    }

    NodePtr parse_atom() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            NodePtr e = parse_sum();
            if (peek() != ')') fail("unclosed parenthesis", "')'");
            ++pos_;
            return e;
        }
        if ((c >= '0' && c <= '9') || c == '.') return parse_number();
        if ((c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z')) return parse_name();
        fail("expected a value", "a number, 'x', 'a', exp/sin/abs or '('");
    }

    NodePtr parse_number() {
        const std::size_t start = pos_;
        auto digits = [&] {
            const std::size_t before = pos_;
            while (pos_ < src_.size() && src_[pos_] >= '0' && src_[pos_] <= '9') ++pos_;
            return pos_ > before;
        };
        const bool int_part = digits();
        if (pos_ < src_.size() && src_[pos_] == '.') {
            const std::size_t dot = pos_;
            ++pos_;
            const bool frac_part = digits();
            if (!frac_part) {
                if (!int_part) {
                    pos_ = start;
                    fail("stray '.'", "digits around the decimal point");
                }
                pos_ = dot;  // "5." reads as the number 5; the dot is not ours
            }
        }
        // Exponent suffix, only when a complete one follows; otherwise the
        // 'e' belongs to a name such as exp.
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            std::size_t p = pos_ + 1;
            if (p < src_.size() && (src_[p] == '+' || src_[p] == '-')) ++p;
            if (p < src_.size() && src_[p] >= '0' && src_[p] <= '9') {
                pos_ = p;
                digits();
            }
        }
        double value = 0.0;
        const auto [ptr, ec] =
            std::from_chars(src_.data() + start, src_.data() + pos_, value);
        if (ec != std::errc() || ptr != src_.data() + pos_) {
            pos_ = start;
            fail("number out of range or malformed", "a representable number");
        }
        return leaf(Kind::Number, value);
    }

    NodePtr parse_name() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() &&
               ((src_[pos_] >= 'A' && src_[pos_] <= 'Z') ||
                (src_[pos_] >= 'a' && src_[pos_] <= 'z'))) {
            ++pos_;
        }
        const std::string_view name = src_.substr(start, pos_ - start);
        if (name == "x") return leaf(Kind::VarX);
        if (name == "a") return leaf(Kind::SymA);
        Kind k;
        if (name == "exp") {
            k = Kind::Exp;
        } else if (name == "sin") {
            k = Kind::Sin;
        } else if (name == "abs") {
            k = Kind::Abs;
        } else {
            pos_ = start;
            fail("unknown name '" + std::string(name) + "'", "'x', 'a', exp, sin or abs");
        }
        if (peek() != '(') fail("function call needs parentheses", "'('");
        ++pos_;
        NodePtr arg = parse_sum();
        if (peek() != ')') fail("unclosed function call", "')'");
        ++pos_;
        return unary(k, std::move(arg));
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int depth_ = 0;
};

int precedence(Kind k) {
    switch (k) {
        case Kind::Add:
        case Kind::Sub:
            return 1;
        case Kind::Mul:
        case Kind::Div:
            return 2;
        case Kind::Neg:
            return 3;
        case Kind::Pow:
            return 4;
        default:
            return 5;
    }
}

void print_node(const Node& n, std::string& out);

void print_child(const Node& child, int parent_prec, bool needs_strict, std::string& out) {
    const int prec = precedence(child.kind);
    const bool parens = needs_strict ? prec <= parent_prec : prec < parent_prec;
    if (parens) out += '(';
    print_node(child, out);
    if (parens) out += ')';
}

void print_node(const Node& n, std::string& out) {
    switch (n.kind) {
        case Kind::Number:
            out += format_double(n.number);
            return;
        case Kind::VarX:
            out += 'x';
            return;
        case Kind::SymA:
            out += 'a';
            return;
        case Kind::Add:
        case Kind::Sub:
        case Kind::Mul:
        case Kind::Div: {
            const int prec = precedence(n.kind);
            print_child(*n.a, prec, false, out);
            out += (n.kind == Kind::Add   ? '+'
                    : n.kind == Kind::Sub ? '-'
                    : n.kind == Kind::Mul ? '*'
                                          : '/');
            print_child(*n.b, prec, true, out);
            return;
        }
        case Kind::Neg:
            out += '-';
            print_child(*n.a, precedence(Kind::Neg), false, out);
            return;
        case Kind::Pow:
            // Right-associative: the left side needs parentheses even at
            // equal precedence, the right side does not.
            print_child(*n.a, precedence(Kind::Pow), true, out);
            out += '^';
            print_child(*n.b, precedence(Kind::Pow), false, out);
            return;
        case Kind::Exp:
        case Kind::Sin:
        case Kind::Abs:
            out += (n.kind == Kind::Exp ? "exp(" : n.kind == Kind::Sin ? "sin(" : "abs(");
            print_node(*n.a, out);
            out += ')';
            return;
    }
}

std::string print_one(const Node& n) {
    std::string out;
    print_node(n, out);
    return out;
}

bool is_integer(double v) { return std::isfinite(v) && v == std::trunc(v); }

double eval_node(const Node& n, double x, double alpha) {
    double v;
    switch (n.kind) {
        case Kind::Number:
            v = n.number;
            break;
        case Kind::VarX:
            v = x;
            break;
        case Kind::SymA:
            v = alpha;
            break;
        case Kind::Add:
            v = eval_node(*n.a, x, alpha) + eval_node(*n.b, x, alpha);
            break;
        case Kind::Sub:
            v = eval_node(*n.a, x, alpha) - eval_node(*n.b, x, alpha);
            break;
        case Kind::Mul:
            v = eval_node(*n.a, x, alpha) * eval_node(*n.b, x, alpha);
            break;
        case Kind::Div: {
            const double num = eval_node(*n.a, x, alpha);
            const double den = eval_node(*n.b, x, alpha);
            if (den == 0.0) throw EvalError("division by zero", print_one(n));
            v = num / den;
            break;
        }
        case Kind::Neg:
            v = -eval_node(*n.a, x, alpha);
            break;
        case Kind::Pow: {
            const double base = eval_node(*n.a, x, alpha);
            const double e = eval_node(*n.b, x, alpha);
            if (base < 0.0 && !is_integer(e)) {
                throw EvalError("negative base with non-integer exponent", print_one(n));
            }
            if (base == 0.0 && e < 0.0) {
                throw EvalError("zero base with negative exponent", print_one(n));
            }
            v = std::pow(base, e);
            break;
        }
        case Kind::Exp:
            v = std::exp(eval_node(*n.a, x, alpha));
            break;
        case Kind::Sin:
            v = std::sin(eval_node(*n.a, x, alpha));
            break;
        case Kind::Abs:
            v = std::abs(eval_node(*n.a, x, alpha));
            break;
        default:
            throw EvalError("unreachable node kind", "?");
    }
    if (!std::isfinite(v)) throw EvalError("non-finite result", print_one(n));
    return v;
}

bool same_node(const Node& a, const Node& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == Kind::Number) return a.number == b.number;
    if (a.a && !same_node(*a.a, *b.a)) return false;
    if (a.b && !same_node(*a.b, *b.b)) return false;
    return true;
}

}  // namespace

Expr Expr::parse(const std::string& src) { return Expr(Parser(src).run()); }

double Expr::eval(double x, const Alpha& alpha) const {
    return eval_node(*root_, x, alpha.value());
}

std::string Expr::print() const { return print_one(*root_); }

bool Expr::same_structure(const Expr& other) const {
    return same_node(*root_, *other.root_);
}

}  // namespace lfc
