/*
 * rational.hpp
 * ------------
 * Exact multivariate arithmetic over the rationals: Monomial, Polynomial
 * and RationalFunction (canonical reduced fractions of polynomials).
 *
 * Coefficients are arbitrary-precision rationals (GMP mpq_class); nothing
 * in this layer ever rounds.  Monomials are ordered by graded
 * lexicographic order, which fixes canonical forms everywhere above.
 */
#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "biham/errors.hpp"

namespace biham {

using Rational = mpq_class;

// p/q with canonicalization (mpq_class does not canonicalize on its own).
Rational rat(long p, long q = 1);

// Parses "p" or "p/q" with optional leading '-'. Throws Error on junk.
Rational rat_from_string(const std::string& text);
std::string rat_to_string(const Rational& r);

// A power product of coordinates, stored sparsely as (variable index,
// exponent) pairs sorted by index; exponents are strictly positive.
class Monomial {
public:
    Monomial() = default;
    static Monomial variable(int var, int exponent = 1);

    bool is_one() const { return vars_.empty(); }
    int total_degree() const;
    int exponent_of(int var) const;
    int max_variable() const; // -1 when constant
    const std::vector<std::pair<int, int>>& factors() const { return vars_; }

    Monomial operator*(const Monomial& other) const;
    // nullopt when `other` does not divide `*this`.
    std::optional<Monomial> divided_by(const Monomial& other) const;

    Monomial without_variable(int var) const;

    bool operator==(const Monomial& other) const { return vars_ == other.vars_; }
    // Graded lexicographic: compare total degree first, then exponent
    // vectors lexicographically with lower variable indices weighing more.
    bool operator<(const Monomial& other) const;

    static Monomial from_factors(std::vector<std::pair<int, int>> factors);

private:
    std::vector<std::pair<int, int>> vars_;
};

// Sparse multivariate polynomial over Q. The term map never stores zero
// coefficients, so operator== is canonical-representation equality.
class Polynomial {
public:
    Polynomial() = default; // zero
    explicit Polynomial(const Rational& constant);
    explicit Polynomial(long constant);
    static Polynomial variable(int var);
    static Polynomial term(const Monomial& m, const Rational& coefficient);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Value of a constant polynomial (zero polynomial gives 0).
    Rational constant_value() const;

    int total_degree() const;    // -1 for the zero polynomial
    int degree_in(int var) const;
    int max_variable() const;    // -1 when no variables occur
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    const Monomial& leading_monomial() const;    // grlex-largest; requires nonzero
    const Rational& leading_coefficient() const; // requires nonzero

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial operator*(const Rational& c) const;
    Polynomial operator/(const Rational& c) const;
    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

    Polynomial pow(unsigned e) const;
    Polynomial derivative(int var) const;
    Rational evaluate(std::span<const Rational> point) const;

    // Signed rational content: the unique c with this = c * primitive_part()
    // where the primitive part has coprime integer coefficients and positive
    // leading coefficient. content(0) = 0.
    Rational content() const;
    Polynomial primitive_part() const;

    // Exact division; nullopt when b does not divide a exactly.
    static std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

    void add_term(const Monomial& m, const Rational& c); // accumulating

private:
    std::map<Monomial, Rational> terms_;
};

// A gcd of a and b: primitive, positive leading coefficient. gcd(0,b) is the
// normalized b; gcd of two nonzero constants is 1. Subresultant PRS inside.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);
Polynomial poly_lcm(const Polynomial& a, const Polynomial& b);

// Canonical reduced fraction num/den: gcd(num, den) is a unit and den is
// primitive with integer coefficients and positive leading coefficient
// (so den carries no rational scalar; num absorbs it). Zero is 0/1.
class RationalFunction {
public:
    RationalFunction(); // zero
    RationalFunction(const Rational& constant);
    RationalFunction(long constant);
    explicit RationalFunction(Polynomial numerator);
    // Throws ZeroDenominator when denominator is the zero polynomial.
    RationalFunction(Polynomial numerator, Polynomial denominator);
    static RationalFunction variable(int var);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const;
    Rational constant_value() const;
    bool is_polynomial() const;
    int max_variable() const;

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const; // throws ZeroDenominator
    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    bool operator==(const RationalFunction& o) const
    {
        return num_ == o.num_ && den_ == o.den_;
    }

    RationalFunction pow(int e) const; // negative exponents allowed off the zero function
    RationalFunction derivative(int var) const;
    Rational evaluate(std::span<const Rational> point) const; // throws EvaluationError

private:
    void reduce();
    Polynomial num_;
    Polynomial den_;
};

// Plain-text rendering; `names[i]` is the display name of variable i.
// Output re-parses to the identical canonical object.
std::string to_string(const Monomial& m, std::span<const std::string> names);
std::string to_string(const Polynomial& p, std::span<const std::string> names);
std::string to_string(const RationalFunction& r, std::span<const std::string> names);

} // namespace biham
