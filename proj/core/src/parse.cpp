#include "biham/parse.hpp"

#include <cctype>

namespace biham {

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;
    const Chart& chart;

    explicit Parser(std::string_view t, const Chart& c) : text(t), chart(c) {}

    void skip_ws()
    {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool at_end()
    {
        skip_ws();
        return pos >= text.size();
    }

    char peek()
    {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool consume(char c)
    {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

    ExprAst make(ExprNode::Kind kind, std::size_t at)
    {
        auto n = std::make_unique<ExprNode>();
        n->kind = kind;
        n->position = at;
        return n;
    }

    std::string lex_integer()
    {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        return std::string(text.substr(start, pos - start));
    }

    ExprAst parse_expression()
    {
        ExprAst left = parse_term();
        while (true) {
            std::size_t at = pos;
            if (consume('+')) {
                auto n = make(ExprNode::Kind::Add, at);
                n->lhs = std::move(left);
                n->rhs = parse_term();
                left = std::move(n);
            } else if (consume('-')) {
                auto n = make(ExprNode::Kind::Sub, at);
                n->lhs = std::move(left);
                n->rhs = parse_term();
                left = std::move(n);
            } else {
                return left;
            }
        }
    }

    ExprAst parse_term()
    {
        ExprAst left = parse_unary();
        while (true) {
            std::size_t at = pos;
            if (consume('*')) {
                auto n = make(ExprNode::Kind::Mul, at);
                n->lhs = std::move(left);
                n->rhs = parse_unary();
                left = std::move(n);
            } else if (consume('/')) {
                auto n = make(ExprNode::Kind::Div, at);
                n->lhs = std::move(left);
                n->rhs = parse_unary();
                left = std::move(n);
            } else {
                return left;
            }
        }
    }

    ExprAst parse_unary()
    {
        std::size_t at = pos;
        if (consume('-')) {
            auto n = make(ExprNode::Kind::Neg, at);
            n->lhs = parse_unary();
            return n;
        }
        return parse_power();
    }

    ExprAst parse_power()
    {
        ExprAst base = parse_base();
        skip_ws();
        if (consume('^')) {
            std::size_t at = pos;
            std::string digits = lex_integer();
            if (digits.empty()) fail("expected integer exponent after '^'");
            auto n = make(ExprNode::Kind::Pow, at);
            try {
                n->exponent = std::stoi(digits);
            } catch (const std::out_of_range&) {
                throw ParseError("exponent out of range", at);
            }
            n->lhs = std::move(base);
            return n;
        }
        return base;
    }

    ExprAst parse_base()
    {
        skip_ws();
        std::size_t at = pos;
        if (pos >= text.size()) fail("unexpected end of expression");
        char c = text[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits = lex_integer();
            auto n = make(ExprNode::Kind::Constant, at);
            n->value = rat_from_string(digits);
            return n;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            ++pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
            std::string name(text.substr(start, pos - start));
            auto idx = chart.index_of(name);
            if (!idx) throw ParseError("unknown coordinate '" + name + "'", start);
            auto n = make(ExprNode::Kind::Coordinate, at);
            n->coordinate = *idx;
            return n;
        }
        if (c == '(') {
            ++pos;
            ExprAst inner = parse_expression();
            if (!consume(')')) fail("expected ')'");
            return inner;
        }
        if (c == '-') {
            // '-' base (the grammar admits it here too; same meaning).
            ++pos;
            auto n = make(ExprNode::Kind::Neg, at);
            n->lhs = parse_base();
            return n;
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

} // namespace

ExprAst parse_expr(std::string_view text, const Chart& chart)
{
    Parser p(text, chart);
    ExprAst ast = p.parse_expression();
    if (!p.at_end()) p.fail("trailing input after expression");
    return ast;
}

RationalFunction to_rational(const ExprAst& ast)
{
    switch (ast->kind) {
    case ExprNode::Kind::Constant:
        return RationalFunction(ast->value);
    case ExprNode::Kind::Coordinate:
        return RationalFunction::variable(ast->coordinate);
    case ExprNode::Kind::Add:
        return to_rational(ast->lhs) + to_rational(ast->rhs);
    case ExprNode::Kind::Sub:
        return to_rational(ast->lhs) - to_rational(ast->rhs);
    case ExprNode::Kind::Mul:
        return to_rational(ast->lhs) * to_rational(ast->rhs);
    case ExprNode::Kind::Div:
        return to_rational(ast->lhs) / to_rational(ast->rhs);
    case ExprNode::Kind::Pow:
        return to_rational(ast->lhs).pow(ast->exponent);
    case ExprNode::Kind::Neg:
        return -to_rational(ast->lhs);
    }
    throw Error("corrupt expression tree");
}

} // namespace biham
