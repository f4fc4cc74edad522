#pragma once

#include <stdexcept>
#include <string>

namespace biham {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Syntax or name-resolution failure while parsing an expression.
// `position` is a 0-based character offset into the input text.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Division by a rational function that simplifies to zero.
class ZeroDenominator : public Error {
public:
    explicit ZeroDenominator(const std::string& msg) : Error(msg) {}
};

// A denominator vanishes at the evaluation point.
class EvaluationError : public Error {
public:
    explicit EvaluationError(const std::string& msg) : Error(msg) {}
};

// A constant skew pair fails the corank-one genericity requirement.
class NotGenericError : public Error {
public:
    explicit NotGenericError(const std::string& msg) : Error(msg) {}
};

// Canonical basis construction exhausted its retry budget.
class ConstructionError : public Error {
public:
    explicit ConstructionError(const std::string& msg) : Error(msg) {}
};

// Malformed model file. `line` is 1-based.
class ModelFileError : public Error {
public:
    ModelFileError(const std::string& msg, std::size_t line)
        : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

} // namespace biham
