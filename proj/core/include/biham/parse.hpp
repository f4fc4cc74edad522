/*
 * parse.hpp
 * ---------
 * Expression parser for the model file grammar:
 *
 *   expr   := term (('+'|'-') term)*
 *   term   := factor (('*'|'/') factor)*
 *   factor := base ('^' integer)?
 *   base   := rational | coordinate | '(' expr ')' | '-' base
 *
 * Precedence: ^  >  unary -  >  * /  >  + -, left associative within a
 * level.  Rational literals are digit sequences; p/q is covered by the
 * division operator and evaluates to the same exact value.
 */
#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "biham/chart.hpp"
#include "biham/rational.hpp"

namespace biham {

struct ExprNode;
using ExprAst = std::unique_ptr<ExprNode>;

struct ExprNode {
    enum class Kind { Constant, Coordinate, Add, Sub, Mul, Div, Pow, Neg };

    Kind kind;
    Rational value;     // Constant
    int coordinate = -1; // Coordinate
    int exponent = 0;    // Pow
    ExprAst lhs;         // unary operand or left operand
    ExprAst rhs;
    std::size_t position = 0; // offset of the node's first token
};

// Throws ParseError (with character position) on syntax errors and on
// coordinate names that do not resolve in the chart.
ExprAst parse_expr(std::string_view text, const Chart& chart);

// Evaluates the tree in exact rational-function arithmetic.
// Throws ZeroDenominator when a division by a function that simplifies to
// zero occurs.
RationalFunction to_rational(const ExprAst& ast);

} // namespace biham
