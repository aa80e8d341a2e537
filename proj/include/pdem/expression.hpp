#pragma once

#include <memory>
#include <string>
#include <string_view>

namespace pdem {

/// Real-valued function of one variable `x`, parsed from text.
///
/// Grammar (usual precedence, `^` binds tighter than unary minus and is
/// right associative):
///
///     expr    := term (('+' | '-') term)*
///     term    := unary (('*' | '/') unary)*
///     unary   := ('+' | '-') unary | power
///     power   := primary ('^' unary)?
///     primary := number | 'x' | 'pi' | func '(' expr ')' | '(' expr ')'
///     func    := exp | log | sqrt | sech | tanh | cosh | sinh | sin | cos
///
/// derivative() is symbolic, so profiles built from expressions get exact
/// m' and m''.
class Expression {
public:
    struct Node;

    /// Throws ParseError with the offending position.
    static Expression parse(std::string_view text);
    static Expression constant(double value);

    double operator()(double x) const;
    Expression derivative() const;
    bool is_constant() const noexcept;
    std::string to_string() const;

private:
    explicit Expression(std::shared_ptr<const Node> root) : root_(std::move(root)) {}

    std::shared_ptr<const Node> root_;
};

}  // namespace pdem
