#pragma once

#include <span>
#include <string>
#include <vector>

#include "biham/rational.hpp"

namespace biham {

// Dense univariate polynomial over Q; used for the pencil parameter in
// pointwise certificates. Coefficient k belongs to lambda^k; the list
// carries no trailing zeros, the zero polynomial is the empty list.
class UnivariatePolynomial {
public:
    UnivariatePolynomial() = default;
    UnivariatePolynomial(const Rational& constant);
    UnivariatePolynomial(long constant);
    explicit UnivariatePolynomial(std::vector<Rational> coefficients);
    static UnivariatePolynomial lambda_power(int k);

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rational coefficient(int k) const;
    const std::vector<Rational>& coefficients() const { return c_; }

    UnivariatePolynomial operator-() const;
    UnivariatePolynomial operator+(const UnivariatePolynomial& o) const;
    UnivariatePolynomial operator-(const UnivariatePolynomial& o) const;
    UnivariatePolynomial operator*(const UnivariatePolynomial& o) const;
    UnivariatePolynomial& operator+=(const UnivariatePolynomial& o);
    UnivariatePolynomial& operator-=(const UnivariatePolynomial& o);
    UnivariatePolynomial& operator*=(const UnivariatePolynomial& o);
    bool operator==(const UnivariatePolynomial& o) const { return c_ == o.c_; }

    Rational evaluate(const Rational& x) const;
    UnivariatePolynomial monic() const;

    std::string to_string(const std::string& var = "lam") const;

private:
    void trim();
    std::vector<Rational> c_;
};

// Monic gcd over Q (Euclid); gcd(0, p) = monic p, gcd(0, 0) = 0.
UnivariatePolynomial gcd(const UnivariatePolynomial& a, const UnivariatePolynomial& b);

} // namespace biham
