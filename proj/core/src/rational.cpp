#include "biham/rational.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace biham {

Rational rat(long p, long q)
{
    if (q == 0) throw ZeroDenominator("rational with zero denominator");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

Rational rat_from_string(const std::string& text)
{
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            Rational r(text);
            r.canonicalize();
            return r;
        }
        mpz_class p(text.substr(0, slash));
        mpz_class q(text.substr(slash + 1));
        if (q == 0) throw ZeroDenominator("rational with zero denominator: " + text);
        Rational r(p, q);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw Error("malformed rational literal: '" + text + "'");
    }
}

std::string rat_to_string(const Rational& r)
{
    return r.get_str();
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(int var, int exponent)
{
    Monomial m;
    if (exponent != 0) m.vars_.emplace_back(var, exponent);
    return m;
}

Monomial Monomial::from_factors(std::vector<std::pair<int, int>> factors)
{
    std::sort(factors.begin(), factors.end());
    Monomial m;
    for (auto& [v, e] : factors) {
        assert(e >= 0);
        if (e == 0) continue;
        if (!m.vars_.empty() && m.vars_.back().first == v)
            m.vars_.back().second += e;
        else
            m.vars_.emplace_back(v, e);
    }
    return m;
}

int Monomial::total_degree() const
{
    int d = 0;
    for (auto& [v, e] : vars_) d += e;
    return d;
}

int Monomial::exponent_of(int var) const
{
    for (auto& [v, e] : vars_)
        if (v == var) return e;
    return 0;
}

int Monomial::max_variable() const
{
    return vars_.empty() ? -1 : vars_.back().first;
}

Monomial Monomial::operator*(const Monomial& other) const
{
    Monomial out;
    out.vars_.reserve(vars_.size() + other.vars_.size());
    auto a = vars_.begin(), b = other.vars_.begin();
    while (a != vars_.end() || b != other.vars_.end()) {
        if (b == other.vars_.end() || (a != vars_.end() && a->first < b->first))
            out.vars_.push_back(*a++);
        else if (a == vars_.end() || b->first < a->first)
            out.vars_.push_back(*b++);
        else {
            out.vars_.emplace_back(a->first, a->second + b->second);
            ++a, ++b;
        }
    }
    return out;
}

std::optional<Monomial> Monomial::divided_by(const Monomial& other) const
{
    Monomial out;
    auto a = vars_.begin();
    for (auto& [v, e] : other.vars_) {
        while (a != vars_.end() && a->first < v) out.vars_.push_back(*a++);
        if (a == vars_.end() || a->first != v || a->second < e) return std::nullopt;
        if (a->second > e) out.vars_.emplace_back(v, a->second - e);
        ++a;
    }
    while (a != vars_.end()) out.vars_.push_back(*a++);
    return out;
}

Monomial Monomial::without_variable(int var) const
{
    Monomial out;
    for (auto& [v, e] : vars_)
        if (v != var) out.vars_.emplace_back(v, e);
    return out;
}

bool Monomial::operator<(const Monomial& other) const
{
    int da = total_degree(), db = other.total_degree();
    if (da != db) return da < db;
    // Lexicographic tie-break: the first variable index where the exponents
    // differ decides; more weight on that variable means a larger monomial.
    auto a = vars_.begin(), b = other.vars_.begin();
    while (a != vars_.end() && b != other.vars_.end()) {
        if (a->first != b->first) {
            // The one holding the smaller index has positive exponent there,
            // the other has zero: the holder is lex-larger.
            return a->first > b->first;
        }
        if (a->second != b->second) return a->second < b->second;
        ++a, ++b;
    }
    // One is a prefix of the other with equal degree: impossible unless equal.
    return false;
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(const Rational& constant)
{
    if (constant != 0) terms_.emplace(Monomial{}, constant);
}

Polynomial::Polynomial(long constant)
{
    if (constant != 0) terms_.emplace(Monomial{}, Rational(constant));
}

Polynomial Polynomial::variable(int var)
{
    return term(Monomial::variable(var), Rational(1));
}

Polynomial Polynomial::term(const Monomial& m, const Rational& coefficient)
{
    Polynomial p;
    if (coefficient != 0) p.terms_.emplace(m, coefficient);
    return p;
}

bool Polynomial::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_value() const
{
    if (terms_.empty()) return Rational(0);
    assert(is_constant());
    return terms_.begin()->second;
}

int Polynomial::total_degree() const
{
    if (terms_.empty()) return -1;
    return terms_.rbegin()->first.total_degree();
}

int Polynomial::degree_in(int var) const
{
    int d = terms_.empty() ? -1 : 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.exponent_of(var));
    return d;
}

int Polynomial::max_variable() const
{
    int v = -1;
    for (auto& [m, c] : terms_) v = std::max(v, m.max_variable());
    return v;
}

const Monomial& Polynomial::leading_monomial() const
{
    assert(!terms_.empty());
    return terms_.rbegin()->first;
}

const Rational& Polynomial::leading_coefficient() const
{
    assert(!terms_.empty());
    return terms_.rbegin()->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c)
{
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const
{
    Polynomial out;
    for (auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Polynomial Polynomial::operator+(const Polynomial& o) const
{
    Polynomial out = *this;
    out += o;
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const
{
    Polynomial out = *this;
    out -= o;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const
{
    Polynomial out;
    for (auto& [ma, ca] : terms_)
        for (auto& [mb, cb] : o.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& o)
{
    *this = *this * o;
    return *this;
}

Polynomial Polynomial::operator*(const Rational& c) const
{
    Polynomial out;
    if (c == 0) return out;
    for (auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
    return out;
}

Polynomial Polynomial::operator/(const Rational& c) const
{
    assert(c != 0);
    Polynomial out;
    for (auto& [m, k] : terms_) out.terms_.emplace(m, k / c);
    return out;
}

Polynomial Polynomial::pow(unsigned e) const
{
    Polynomial result(1L);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1u) result *= base;
        base = (e >>= 1) ? base * base : base;
    }
    return result;
}

Polynomial Polynomial::derivative(int var) const
{
    Polynomial out;
    for (auto& [m, c] : terms_) {
        int e = m.exponent_of(var);
        if (e == 0) continue;
        auto reduced = m.divided_by(Monomial::variable(var));
        out.add_term(*reduced, c * e);
    }
    return out;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const
{
    Rational total(0);
    for (auto& [m, c] : terms_) {
        Rational v = c;
        for (auto& [var, e] : m.factors()) {
            assert(var < static_cast<int>(point.size()));
            Rational p = point[var];
            for (int k = 0; k < e; ++k) v *= p;
        }
        total += v;
    }
    return total;
}

Rational Polynomial::content() const
{
    if (terms_.empty()) return Rational(0);
    mpz_class num_gcd(0), den_lcm(1);
    for (auto& [m, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational magnitude(num_gcd, den_lcm);
    magnitude.canonicalize();
    return leading_coefficient() < 0 ? Rational(-magnitude) : magnitude;
}

Polynomial Polynomial::primitive_part() const
{
    if (terms_.empty()) return Polynomial();
    return *this / content();
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& a, const Polynomial& b)
{
    assert(!b.is_zero());
    if (b.is_constant()) return a / b.constant_value();
    Polynomial quotient;
    Polynomial rest = a;
    const Monomial& lmb = b.leading_monomial();
    const Rational& lcb = b.leading_coefficient();
    while (!rest.is_zero()) {
        auto m = rest.leading_monomial().divided_by(lmb);
        if (!m) return std::nullopt;
        Rational c = rest.leading_coefficient() / lcb;
        Polynomial t = Polynomial::term(*m, c);
        quotient += t;
        rest -= t * b;
    }
    return quotient;
}

// ---------------------------------------------------------------- poly_gcd
//
// Primitive-part / content reduction with a subresultant polynomial
// remainder sequence, recursing over the main variable (smallest index
// occurring). The base coefficient ring is Q, where every nonzero content
// is a unit.

namespace {

// Dense coefficient list of p viewed as univariate in `var`; index = power.
std::vector<Polynomial> coefficients_in(const Polynomial& p, int var)
{
    std::vector<Polynomial> out(static_cast<std::size_t>(std::max(p.degree_in(var), 0)) + 1);
    for (auto& [m, c] : p.terms())
        out[static_cast<std::size_t>(m.exponent_of(var))].add_term(m.without_variable(var), c);
    while (out.size() > 1 && out.back().is_zero()) out.pop_back();
    return out;
}

Polynomial assemble(const std::vector<Polynomial>& coeffs, int var)
{
    Polynomial out;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        Monomial vk = Monomial::variable(var, static_cast<int>(k));
        for (auto& [m, c] : coeffs[k].terms()) out.add_term(m * vk, c);
    }
    return out;
}

int degree_of(const std::vector<Polynomial>& u)
{
    for (std::size_t k = u.size(); k-- > 0;)
        if (!u[k].is_zero()) return static_cast<int>(k);
    return -1;
}

void trim(std::vector<Polynomial>& u)
{
    std::size_t n = static_cast<std::size_t>(degree_of(u) + 1);
    u.resize(std::max<std::size_t>(n, 1));
}

std::vector<Polynomial> scale(const std::vector<Polynomial>& u, const Polynomial& f)
{
    std::vector<Polynomial> out(u.size());
    for (std::size_t k = 0; k < u.size(); ++k) out[k] = u[k] * f;
    return out;
}

std::vector<Polynomial> divide_all(const std::vector<Polynomial>& u, const Polynomial& f)
{
    std::vector<Polynomial> out(u.size());
    for (std::size_t k = 0; k < u.size(); ++k) {
        if (u[k].is_zero()) continue;
        auto q = Polynomial::divide_exact(u[k], f);
        assert(q && "inexact division in subresultant sequence");
        out[k] = std::move(*q);
    }
    return out;
}

// Pseudo-remainder: lc(v)^(deg u - deg v + 1) * u  mod  v, in one variable.
std::vector<Polynomial> pseudo_remainder(std::vector<Polynomial> r, const std::vector<Polynomial>& v)
{
    int dv = degree_of(v);
    assert(dv >= 0);
    const Polynomial& lv = v[static_cast<std::size_t>(dv)];
    int e = degree_of(r) - dv + 1;
    while (true) {
        int dr = degree_of(r);
        if (dr < dv) break;
        Polynomial lr = r[static_cast<std::size_t>(dr)];
        // r = lv*r - lr * x^(dr-dv) * v
        r = scale(r, lv);
        for (int k = 0; k <= dv; ++k)
            r[static_cast<std::size_t>(dr - dv + k)] -= lr * v[static_cast<std::size_t>(k)];
        trim(r);
        --e;
    }
    Polynomial correction = lv.pow(static_cast<unsigned>(std::max(e, 0)));
    return scale(r, correction);
}

Polynomial normalize_sign_primitive(const Polynomial& p)
{
    if (p.is_zero()) return p;
    return p.primitive_part();
}

Polynomial gcd_with_content(const Polynomial& p, int var, Polynomial* content_out);

// gcd of all coefficients of p viewed in `var`.
Polynomial content_in(const Polynomial& p, int var)
{
    Polynomial c;
    for (const Polynomial& coeff : coefficients_in(p, var)) {
        if (coeff.is_zero()) continue;
        c = c.is_zero() ? normalize_sign_primitive(coeff) : poly_gcd(c, coeff);
        if (c.is_constant()) return Polynomial(1L);
    }
    return c.is_zero() ? Polynomial() : c;
}

} // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero()) return normalize_sign_primitive(b);
    if (b.is_zero()) return normalize_sign_primitive(a);
    if (a.is_constant() || b.is_constant()) return Polynomial(1L);

    // Main variable: the smallest index occurring in either polynomial.
    int var = std::max(a.max_variable(), b.max_variable());
    for (auto& [m, c] : a.terms())
        if (!m.factors().empty()) var = std::min(var, m.factors().front().first);
    for (auto& [m, c] : b.terms())
        if (!m.factors().empty()) var = std::min(var, m.factors().front().first);

    int da = a.degree_in(var), db = b.degree_in(var);
    if (da == 0) return poly_gcd(a, content_in(b, var));
    if (db == 0) return poly_gcd(content_in(a, var), b);

    Polynomial ca = content_in(a, var);
    Polynomial cb = content_in(b, var);
    Polynomial c = poly_gcd(ca, cb);

    auto u = divide_all(coefficients_in(a, var), ca);
    auto v = divide_all(coefficients_in(b, var), cb);
    if (degree_of(u) < degree_of(v)) std::swap(u, v);

    // Subresultant PRS (Brown): divisors g*h^delta keep coefficients small
    // while every division stays exact.
    Polynomial g(1L), h(1L);
    while (true) {
        int delta = degree_of(u) - degree_of(v);
        auto r = pseudo_remainder(u, v);
        if (degree_of(r) < 0) break;
        Polynomial divisor = g * h.pow(static_cast<unsigned>(delta));
        u = std::move(v);
        v = divide_all(r, divisor);
        trim(v);
        g = u[static_cast<std::size_t>(degree_of(u))];
        if (delta > 0) {
            Polynomial gd = g.pow(static_cast<unsigned>(delta));
            if (delta == 1)
                h = gd;
            else {
                auto q = Polynomial::divide_exact(gd, h.pow(static_cast<unsigned>(delta - 1)));
                assert(q);
                h = std::move(*q);
            }
        }
        if (degree_of(v) == 0) {
            // Coprime apart from content.
            return normalize_sign_primitive(c);
        }
    }
    // gcd of the primitive parts = primitive part of the last nonzero
    // remainder, still viewed in `var`.
    Polynomial last = assemble(v, var);
    Polynomial inner = content_in(last, var);
    if (!inner.is_constant()) last = *Polynomial::divide_exact(last, inner);
    return normalize_sign_primitive(c * last);
}

Polynomial poly_lcm(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero() || b.is_zero()) return Polynomial();
    Polynomial g = poly_gcd(a, b);
    auto q = Polynomial::divide_exact(a, g);
    assert(q);
    return normalize_sign_primitive(*q * b);
}

// -------------------------------------------------------- RationalFunction

RationalFunction::RationalFunction() : den_(1L) {}

RationalFunction::RationalFunction(const Rational& constant) : num_(constant), den_(1L) {}

RationalFunction::RationalFunction(long constant) : num_(constant), den_(1L) {}

RationalFunction::RationalFunction(Polynomial numerator)
    : num_(std::move(numerator)), den_(1L)
{
}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator))
{
    if (den_.is_zero()) throw ZeroDenominator("division by the zero polynomial");
    reduce();
}

RationalFunction RationalFunction::variable(int var)
{
    return RationalFunction(Polynomial::variable(var));
}

void RationalFunction::reduce()
{
    if (num_.is_zero()) {
        den_ = Polynomial(1L);
        return;
    }
    if (!den_.is_constant()) {
        Polynomial g = poly_gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = *Polynomial::divide_exact(num_, g);
            den_ = *Polynomial::divide_exact(den_, g);
        }
    }
    // Pin the scalar: denominator becomes primitive with positive leading
    // coefficient; the numerator absorbs the rational factor.
    Rational c = den_.content();
    if (c != 1) {
        den_ = den_ / c;
        num_ = num_ / c;
    }
}

bool RationalFunction::is_constant() const
{
    return num_.is_constant() && den_.is_constant();
}

Rational RationalFunction::constant_value() const
{
    assert(is_constant());
    if (num_.is_zero()) return Rational(0);
    return num_.constant_value() / den_.constant_value();
}

bool RationalFunction::is_polynomial() const
{
    return den_ == Polynomial(1L);
}

int RationalFunction::max_variable() const
{
    return std::max(num_.max_variable(), den_.max_variable());
}

RationalFunction RationalFunction::operator-() const
{
    RationalFunction out;
    out.num_ = -num_;
    out.den_ = den_;
    return out;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const
{
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return RationalFunction(num_ + o.num_, den_);
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const
{
    return *this + (-o);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const
{
    if (is_zero() || o.is_zero()) return RationalFunction();
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const
{
    if (o.is_zero()) throw ZeroDenominator("division by a rational function that is zero");
    if (is_zero()) return RationalFunction();
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o)
{
    *this = *this + o;
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o)
{
    *this = *this - o;
    return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o)
{
    *this = *this * o;
    return *this;
}

RationalFunction RationalFunction::pow(int e) const
{
    if (e == 0) return RationalFunction(1L);
    if (e < 0) {
        if (is_zero()) throw ZeroDenominator("zero raised to a negative power");
        return RationalFunction(1L) / pow(-e);
    }
    return RationalFunction(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
}

RationalFunction RationalFunction::derivative(int var) const
{
    // Quotient rule; reduction happens in the constructor.
    Polynomial n = num_.derivative(var) * den_ - num_ * den_.derivative(var);
    return RationalFunction(std::move(n), den_ * den_);
}

Rational RationalFunction::evaluate(std::span<const Rational> point) const
{
    Rational d = den_.evaluate(point);
    if (d == 0) throw EvaluationError("denominator vanishes at the evaluation point");
    return num_.evaluate(point) / d;
}

// ---------------------------------------------------------------- printing

std::string to_string(const Monomial& m, std::span<const std::string> names)
{
    std::string out;
    for (auto& [v, e] : m.factors()) {
        if (!out.empty()) out += "*";
        assert(v < static_cast<int>(names.size()));
        out += names[static_cast<std::size_t>(v)];
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

std::string to_string(const Polynomial& p, std::span<const std::string> names)
{
    if (p.is_zero()) return "0";
    std::string out;
    // grlex-descending for readability.
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
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
        std::string ms = m.is_one() ? "" : to_string(m, names);
        if (ms.empty())
            out += rat_to_string(a);
        else if (a == 1)
            out += ms;
        else
            out += rat_to_string(a) + "*" + ms;
    }
    return out;
}

std::string to_string(const RationalFunction& r, std::span<const std::string> names)
{
    if (r.is_polynomial()) return to_string(r.num(), names);
    return "(" + to_string(r.num(), names) + ")/(" + to_string(r.den(), names) + ")";
}

} // namespace biham
