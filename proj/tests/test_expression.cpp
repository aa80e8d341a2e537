#include <doctest.h>

#include <cmath>

#include "pdem/errors.hpp"
#include "pdem/expression.hpp"
#include "pdem/profiles.hpp"

using namespace pdem;

TEST_CASE("expression precedence and functions") {
    CHECK(Expression::parse("1 + 2*3")(0.0) == 7.0);
    CHECK(Expression::parse("-x^2")(3.0) == -9.0);
    CHECK(Expression::parse("2^3^2")(0.0) == 512.0);
    CHECK(Expression::parse("(1 + x)^2")(2.0) == 9.0);
    CHECK(Expression::parse("1 + 1/(1 + x^2)")(1.0) == 1.5);
    CHECK(Expression::parse("exp(2*x)")(0.5) == doctest::Approx(std::exp(1.0)));
    CHECK(Expression::parse("sech(x)")(0.3) == doctest::Approx(1.0 / std::cosh(0.3)));
    CHECK(Expression::parse("2.5e-1 * pi")(0.0) == doctest::Approx(0.25 * M_PI));
    CHECK(Expression::parse("x - 2 - 3")(10.0) == 5.0);
    CHECK(Expression::parse("8 / 2 / 2")(0.0) == 2.0);
}

TEST_CASE("expression parse errors carry a position") {
    CHECK_THROWS_AS(Expression::parse(""), ParseError);
    CHECK_THROWS_AS(Expression::parse("1 +"), ParseError);
    CHECK_THROWS_AS(Expression::parse("foo(x)"), ParseError);
    CHECK_THROWS_AS(Expression::parse("(1 + x"), ParseError);
    CHECK_THROWS_AS(Expression::parse("1 2"), ParseError);
    try {
        Expression::parse("1 + y");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("symbolic derivatives match central differences") {
    const char* samples[] = {"1 + 1/(1 + x^2)", "exp(2*x)", "(1 + x)^2", "1 + 0.5*sech(x)^2",
                             "1 + 0.5*exp(-x^2)", "1.5 + 0.5*tanh(x)", "sqrt(2 + sin(x))",
                             "log(3 + cos(x)) * cosh(x) - sinh(x)", "x^x"};
    for (const char* text : samples) {
        CAPTURE(text);
        const Expression f = Expression::parse(text);
        const Expression df = f.derivative();
        const Expression d2f = df.derivative();
        for (double x : {0.3, 0.7, 1.9}) {
            const double h = 1e-4;
            const double fd1 = (f(x + h) - f(x - h)) / (2 * h);
            const double fd2 = (f(x + h) - 2 * f(x) + f(x - h)) / (h * h);
            CHECK(df(x) == doctest::Approx(fd1).epsilon(1e-7));
            CHECK(d2f(x) == doctest::Approx(fd2).epsilon(1e-5));
        }
    }
}

TEST_CASE("constant expressions have vanishing derivatives") {
    const Expression c = Expression::parse("2 * 3 + exp(0)");
    CHECK(c.is_constant());
    CHECK(c(123.0) == 7.0);
    CHECK(c.derivative()(1.0) == 0.0);
    CHECK(c.derivative().is_constant());
    CHECK_FALSE(Expression::parse("x").is_constant());
}

TEST_CASE("named profiles resolve before parsing") {
    CHECK(resolve_mass_expression("lorentzian")(0.0) == 2.0);
    CHECK(resolve_mass_expression(" 4 ")(1.0) == 4.0);
    CHECK(resolve_potential_expression("harmonic")(3.0) == 9.0);
    for (const auto& p : named_mass_profiles()) {
        CAPTURE(p.name);
        CHECK_NOTHROW(Expression::parse(p.expression));
    }
}
