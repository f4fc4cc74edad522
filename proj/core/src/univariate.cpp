#include "biham/univariate.hpp"

#include <cassert>

namespace biham {

UnivariatePolynomial::UnivariatePolynomial(const Rational& constant)
{
    if (constant != 0) c_.push_back(constant);
}

UnivariatePolynomial::UnivariatePolynomial(long constant)
{
    if (constant != 0) c_.push_back(Rational(constant));
}

UnivariatePolynomial::UnivariatePolynomial(std::vector<Rational> coefficients)
    : c_(std::move(coefficients))
{
    trim();
}

UnivariatePolynomial UnivariatePolynomial::lambda_power(int k)
{
    std::vector<Rational> c(static_cast<std::size_t>(k) + 1, Rational(0));
    c.back() = 1;
    return UnivariatePolynomial(std::move(c));
}

void UnivariatePolynomial::trim()
{
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UnivariatePolynomial::coefficient(int k) const
{
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<std::size_t>(k)];
}

UnivariatePolynomial UnivariatePolynomial::operator-() const
{
    UnivariatePolynomial out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
}

UnivariatePolynomial UnivariatePolynomial::operator+(const UnivariatePolynomial& o) const
{
    std::vector<Rational> c(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < c_.size()) c[i] += c_[i];
        if (i < o.c_.size()) c[i] += o.c_[i];
    }
    return UnivariatePolynomial(std::move(c));
}

UnivariatePolynomial UnivariatePolynomial::operator-(const UnivariatePolynomial& o) const
{
    return *this + (-o);
}

UnivariatePolynomial UnivariatePolynomial::operator*(const UnivariatePolynomial& o) const
{
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rational> c(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return UnivariatePolynomial(std::move(c));
}

UnivariatePolynomial& UnivariatePolynomial::operator+=(const UnivariatePolynomial& o)
{
    *this = *this + o;
    return *this;
}

UnivariatePolynomial& UnivariatePolynomial::operator-=(const UnivariatePolynomial& o)
{
    *this = *this - o;
    return *this;
}

UnivariatePolynomial& UnivariatePolynomial::operator*=(const UnivariatePolynomial& o)
{
    *this = *this * o;
    return *this;
}

Rational UnivariatePolynomial::evaluate(const Rational& x) const
{
    Rational acc(0);
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
}

UnivariatePolynomial UnivariatePolynomial::monic() const
{
    if (is_zero()) return {};
    UnivariatePolynomial out = *this;
    Rational lead = out.c_.back();
    for (auto& c : out.c_) c /= lead;
    return out;
}

std::string UnivariatePolynomial::to_string(const std::string& var) const
{
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const Rational& c = c_[k];
        if (c == 0) continue;
        Rational a = c;
        if (out.empty()) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        if (k == 0)
            out += rat_to_string(a);
        else {
            if (a != 1) out += rat_to_string(a) + "*";
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

UnivariatePolynomial gcd(const UnivariatePolynomial& a, const UnivariatePolynomial& b)
{
    UnivariatePolynomial u = a.monic(), v = b.monic();
    while (!v.is_zero()) {
        // u mod v
        UnivariatePolynomial r = u;
        while (!r.is_zero() && r.degree() >= v.degree()) {
            int shift = r.degree() - v.degree();
            Rational f = r.coefficients().back() / v.coefficients().back();
            r -= v * UnivariatePolynomial::lambda_power(shift) * UnivariatePolynomial(f);
        }
        u = v;
        v = r.monic();
    }
    return u;
}

} // namespace biham
