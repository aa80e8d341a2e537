#include "pdem/expression.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <numbers>
#include <optional>

#include "pdem/errors.hpp"
#include "pdem/text.hpp"

namespace pdem {

enum class Op { number, variable, add, sub, mul, div, pow, neg, call };
enum class Func { exp, log, sqrt, sech, tanh, cosh, sinh, sin, cos };

struct Expression::Node {
    Op op = Op::number;
    double value = 0.0;
    Func func = Func::exp;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;

constexpr std::array<std::pair<std::string_view, Func>, 9> kFunctions = {{
    {"exp", Func::exp},
    {"log", Func::log},
    {"sqrt", Func::sqrt},
    {"sech", Func::sech},
    {"tanh", Func::tanh},
    {"cosh", Func::cosh},
    {"sinh", Func::sinh},
    {"sin", Func::sin},
    {"cos", Func::cos},
}};

std::string_view func_name(Func f) {
    for (const auto& [name, func] : kFunctions) {
        if (func == f) return name;
    }
    return "?";
}

double apply(Func f, double v) {
    switch (f) {
        case Func::exp: return std::exp(v);
        case Func::log: return std::log(v);
        case Func::sqrt: return std::sqrt(v);
        case Func::sech: return 1.0 / std::cosh(v);
        case Func::tanh: return std::tanh(v);
        case Func::cosh: return std::cosh(v);
        case Func::sinh: return std::sinh(v);
        case Func::sin: return std::sin(v);
        case Func::cos: return std::cos(v);
    }
    return std::nan("");
}

double evaluate(const Expression::Node& n, double x) {
    switch (n.op) {
        case Op::number: return n.value;
        case Op::variable: return x;
        case Op::add: return evaluate(*n.lhs, x) + evaluate(*n.rhs, x);
        case Op::sub: return evaluate(*n.lhs, x) - evaluate(*n.rhs, x);
        case Op::mul: return evaluate(*n.lhs, x) * evaluate(*n.rhs, x);
        case Op::div: return evaluate(*n.lhs, x) / evaluate(*n.rhs, x);
        case Op::pow: {
            const double base = evaluate(*n.lhs, x);
            if (n.rhs->op == Op::number && n.rhs->value == 2.0) return base * base;
            return std::pow(base, evaluate(*n.rhs, x));
        }
        case Op::neg: return -evaluate(*n.lhs, x);
        case Op::call: return apply(n.func, evaluate(*n.lhs, x));
    }
    return std::nan("");
}

bool is_number(const NodePtr& n, double v) { return n->op == Op::number && n->value == v; }

bool depends_on_x(const Expression::Node& n) {
    if (n.op == Op::variable) return true;
    if (n.op == Op::number) return false;
    return (n.lhs && depends_on_x(*n.lhs)) || (n.rhs && depends_on_x(*n.rhs));
}

NodePtr number(double v) {
    auto n = std::make_shared<Expression::Node>();
    n->op = Op::number;
    n->value = v;
    return n;
}

NodePtr variable() {
    auto n = std::make_shared<Expression::Node>();
    n->op = Op::variable;
    return n;
}

// Builders fold constants and drop 0/1 identities so derivative trees stay small.
NodePtr binary(Op op, NodePtr a, NodePtr b) {
    if (a->op == Op::number && b->op == Op::number) {
        Expression::Node tmp;
        tmp.op = op;
        tmp.lhs = a;
        tmp.rhs = b;
        return number(evaluate(tmp, 0.0));
    }
    switch (op) {
        case Op::add:
            if (is_number(a, 0.0)) return b;
            if (is_number(b, 0.0)) return a;
            break;
        case Op::sub:
            if (is_number(b, 0.0)) return a;
            break;
        case Op::mul:
            if (is_number(a, 0.0) || is_number(b, 0.0)) return number(0.0);
            if (is_number(a, 1.0)) return b;
            if (is_number(b, 1.0)) return a;
            break;
        case Op::div:
            if (is_number(a, 0.0)) return number(0.0);
            if (is_number(b, 1.0)) return a;
            break;
        case Op::pow:
            if (is_number(b, 0.0)) return number(1.0);
            if (is_number(b, 1.0)) return a;
            break;
        default:
            break;
    }
    auto n = std::make_shared<Expression::Node>();
    n->op = op;
    n->lhs = std::move(a);
    n->rhs = std::move(b);
    return n;
}

NodePtr negate(NodePtr a) {
    if (a->op == Op::number) return number(-a->value);
    if (a->op == Op::neg) return a->lhs;
    auto n = std::make_shared<Expression::Node>();
    n->op = Op::neg;
    n->lhs = std::move(a);
    return n;
}

NodePtr call(Func f, NodePtr a) {
    if (a->op == Op::number) return number(apply(f, a->value));
    auto n = std::make_shared<Expression::Node>();
    n->op = Op::call;
    n->func = f;
    n->lhs = std::move(a);
    return n;
}

NodePtr add(NodePtr a, NodePtr b) { return binary(Op::add, std::move(a), std::move(b)); }
NodePtr sub(NodePtr a, NodePtr b) { return binary(Op::sub, std::move(a), std::move(b)); }
NodePtr mul(NodePtr a, NodePtr b) { return binary(Op::mul, std::move(a), std::move(b)); }
NodePtr div(NodePtr a, NodePtr b) { return binary(Op::div, std::move(a), std::move(b)); }
NodePtr pow(NodePtr a, NodePtr b) { return binary(Op::pow, std::move(a), std::move(b)); }

NodePtr differentiate(const NodePtr& n) {
    switch (n->op) {
        case Op::number: return number(0.0);
        case Op::variable: return number(1.0);
        case Op::add: return add(differentiate(n->lhs), differentiate(n->rhs));
        case Op::sub: return sub(differentiate(n->lhs), differentiate(n->rhs));
        case Op::mul:
            return add(mul(differentiate(n->lhs), n->rhs), mul(n->lhs, differentiate(n->rhs)));
        case Op::div:
            return div(sub(mul(differentiate(n->lhs), n->rhs), mul(n->lhs, differentiate(n->rhs))),
                       pow(n->rhs, number(2.0)));
        case Op::pow: {
            const NodePtr& base = n->lhs;
            const NodePtr& expo = n->rhs;
            if (!depends_on_x(*expo)) {
                return mul(mul(expo, pow(base, sub(expo, number(1.0)))), differentiate(base));
            }
            // d(u^v) = u^v (v' log u + v u'/u)
            return mul(n, add(mul(differentiate(expo), call(Func::log, base)),
                              div(mul(expo, differentiate(base)), base)));
        }
        case Op::neg: return negate(differentiate(n->lhs));
        case Op::call: {
            const NodePtr& u = n->lhs;
            NodePtr outer;
            switch (n->func) {
                case Func::exp: outer = n; break;
                case Func::log: outer = div(number(1.0), u); break;
                case Func::sqrt: outer = div(number(0.5), n); break;
                case Func::sech: outer = negate(mul(n, call(Func::tanh, u))); break;
                case Func::tanh: outer = pow(call(Func::sech, u), number(2.0)); break;
                case Func::cosh: outer = call(Func::sinh, u); break;
                case Func::sinh: outer = call(Func::cosh, u); break;
                case Func::sin: outer = call(Func::cos, u); break;
                case Func::cos: outer = negate(call(Func::sin, u)); break;
            }
            return mul(outer, differentiate(u));
        }
    }
    return number(0.0);
}

std::string render(const Expression::Node& n) {
    switch (n.op) {
        case Op::number: return format_number(n.value);
        case Op::variable: return "x";
        case Op::add: return "(" + render(*n.lhs) + " + " + render(*n.rhs) + ")";
        case Op::sub: return "(" + render(*n.lhs) + " - " + render(*n.rhs) + ")";
        case Op::mul: return "(" + render(*n.lhs) + " * " + render(*n.rhs) + ")";
        case Op::div: return "(" + render(*n.lhs) + " / " + render(*n.rhs) + ")";
        case Op::pow: return "(" + render(*n.lhs) + " ^ " + render(*n.rhs) + ")";
        case Op::neg: return "(-" + render(*n.lhs) + ")";
        case Op::call: return std::string(func_name(n.func)) + "(" + render(*n.lhs) + ")";
    }
    return "?";
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    NodePtr parse() {
        NodePtr root = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return root;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    NodePtr expr() {
        NodePtr lhs = term();
        while (true) {
            if (accept('+')) lhs = add(lhs, term());
            else if (accept('-')) lhs = sub(lhs, term());
            else return lhs;
        }
    }

    NodePtr term() {
        NodePtr lhs = unary();
        while (true) {
            if (accept('*')) lhs = mul(lhs, unary());
            else if (accept('/')) lhs = div(lhs, unary());
            else return lhs;
        }
    }

    NodePtr unary() {
        if (accept('-')) return negate(unary());
        if (accept('+')) return unary();
        return power();
    }

    NodePtr power() {
        NodePtr base = primary();
        if (accept('^')) return pow(base, unary());
        return base;
    }

    NodePtr primary() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of expression");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            NodePtr inner = expr();
            expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return literal();
        if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
        fail("unexpected '" + std::string(1, c) + "'");
    }

    NodePtr literal() {
        const std::size_t start = pos_;
        auto digits = [&] {
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        };
        digits();
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            digits();
        }
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t look = pos_ + 1;
            if (look < text_.size() && (text_[look] == '+' || text_[look] == '-')) ++look;
            if (look < text_.size() && std::isdigit(static_cast<unsigned char>(text_[look]))) {
                pos_ = look;
                digits();
            }
        }
        try {
            return number(parse_number(text_.substr(start, pos_ - start)));
        } catch (const ParseError&) {
            pos_ = start;
            fail("malformed number");
        }
    }

    NodePtr identifier() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        const std::string_view name = text_.substr(start, pos_ - start);
        if (name == "x") return variable();
        if (name == "pi") return number(std::numbers::pi);
        for (const auto& [fname, func] : kFunctions) {
            if (fname == name) {
                expect('(');
                NodePtr arg = expr();
                expect(')');
                return call(func, arg);
            }
        }
        pos_ = start;
        fail("unknown identifier '" + std::string(name) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Expression Expression::parse(std::string_view text) { return Expression(Parser(text).parse()); }

Expression Expression::constant(double value) { return Expression(number(value)); }

double Expression::operator()(double x) const { return evaluate(*root_, x); }

Expression Expression::derivative() const { return Expression(differentiate(root_)); }

bool Expression::is_constant() const noexcept { return !depends_on_x(*root_); }

std::string Expression::to_string() const { return render(*root_); }

}  // namespace pdem
