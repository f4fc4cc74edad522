// Expression grammar: precedence, associativity, error positions.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "biham/parse.hpp"

using namespace biham;

namespace {

RationalFunction eval(const std::string& text, const Chart& chart)
{
    return to_rational(parse_expr(text, chart));
}

} // namespace

TEST_CASE("spec examples")
{
    Chart chart = Chart::standard(2);
    RationalFunction x1 = RationalFunction::variable(0);
    RationalFunction x2 = RationalFunction::variable(1);

    // "x1*x2" is the product of the two coordinates
    CHECK(eval("x1*x2", chart) == x1 * x2);
    // Volterra Q diagonal-band entry shape
    CHECK(eval("x1*x2*(x1+x2)", chart) == x1 * x2 * (x1 + x2));
    // parses fine; evaluation raises the division by zero
    ExprAst ast = parse_expr("1/(x1-x1)", chart);
    CHECK_THROWS_AS(to_rational(ast), ZeroDenominator);
}

TEST_CASE("to_rational canonicalizes")
{
    Chart chart = Chart::standard(2);
    CHECK(eval("(x1+x2)-(x2+x1)", chart).is_zero());
    CHECK(eval("x1^2/x1", chart) == RationalFunction::variable(0));
    CHECK(eval("(x1^2-x2^2)/(x1-x2)", chart) ==
          RationalFunction::variable(0) + RationalFunction::variable(1));
}

TEST_CASE("precedence and associativity")
{
    Chart chart = Chart::standard(1);
    RationalFunction x = RationalFunction::variable(0);

    CHECK(eval("2+3*4", chart) == RationalFunction(14L));
    CHECK(eval("2*3+4", chart) == RationalFunction(10L));
    // ^ binds tighter than unary minus
    CHECK(eval("-x1^2", chart) == -(x * x));
    CHECK(eval("(-x1)^2", chart) == x * x);
    // left associativity of subtraction and division
    CHECK(eval("1-2-3", chart) == RationalFunction(-4L));
    CHECK(eval("24/4/2", chart) == RationalFunction(3L));
    CHECK(eval("x1/2/3", chart) == x * rat(1, 6));
    // rational values through the division production
    CHECK(eval("3/2", chart) == RationalFunction(rat(3, 2)));
    CHECK(eval("3/2*x1", chart) == x * rat(3, 2));
    // exponent applies to the base only
    CHECK(eval("2*x1^3", chart) == x * x * x * Rational(2));
    CHECK(eval("x1^0", chart) == RationalFunction(1L));
    // double negation
    CHECK(eval("--x1", chart) == x);
}

TEST_CASE("errors carry positions")
{
    Chart chart = Chart::standard(2);
    CHECK_THROWS_AS(parse_expr("x1*", chart), ParseError);
    CHECK_THROWS_AS(parse_expr("(x1+x2", chart), ParseError);
    CHECK_THROWS_AS(parse_expr("x1^x2", chart), ParseError);
    CHECK_THROWS_AS(parse_expr("x1 x2", chart), ParseError);
    CHECK_THROWS_AS(parse_expr("", chart), ParseError);

    try {
        parse_expr("x1+y7", chart);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 3);
        CHECK(std::string(e.what()).find("y7") != std::string::npos);
    }
}

TEST_CASE("whitespace is insignificant")
{
    Chart chart = Chart::standard(2);
    CHECK(eval("  x1 * ( x2 + 1 )  ", chart) == eval("x1*(x2+1)", chart));
}

TEST_CASE("coordinate names with digits and underscores")
{
    Chart chart(3, {"a", "a_1", "a1b2"});
    CHECK(eval("a*a_1*a1b2", chart) ==
          RationalFunction::variable(0) * RationalFunction::variable(1) *
              RationalFunction::variable(2));
}

TEST_CASE("printer output re-parses to the same value")
{
    Chart chart = Chart::standard(3);
    for (const char* text : {"x1*x2*(x1+x2)", "(x1^2-x2^2)/(2*x3)", "-3/2*x1 + x2^4", "0", "1/7"}) {
        RationalFunction v = eval(text, chart);
        std::string printed = to_string(v, chart.coordinate_names);
        CHECK(eval(printed, chart) == v);
    }
}
