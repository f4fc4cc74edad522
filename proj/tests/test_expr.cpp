// Exact arithmetic layer: canonical forms, gcd, differentiation.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "biham/rational.hpp"

using namespace biham;

namespace {

Polynomial X(int i)
{
    return Polynomial::variable(i);
}

// Small random polynomial in `nvars` variables, degree <= 2 per variable.
Polynomial random_poly(std::mt19937_64& rng, int nvars, int max_terms = 4)
{
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> expo(0, 2);
    std::uniform_int_distribution<int> nterms(1, max_terms);
    Polynomial p;
    int t = nterms(rng);
    for (int k = 0; k < t; ++k) {
        std::vector<std::pair<int, int>> factors;
        for (int v = 0; v < nvars; ++v) {
            int e = expo(rng);
            if (e > 0) factors.emplace_back(v, e);
        }
        p.add_term(Monomial::from_factors(factors), Rational(coeff(rng)));
    }
    return p;
}

} // namespace

TEST_CASE("monomial grlex order")
{
    Monomial one;
    Monomial x0 = Monomial::variable(0);
    Monomial x1 = Monomial::variable(1);
    Monomial x0x0 = Monomial::variable(0, 2);
    CHECK(one < x0);
    CHECK(x1 < x0);       // same degree, earlier variable is larger
    CHECK(x0 < x0x0);     // degree dominates
    CHECK(x1 * x1 < x0x0);
    CHECK_FALSE(x0 < x0);
}

TEST_CASE("polynomial arithmetic canonical")
{
    Polynomial p = X(0) + X(1);
    Polynomial q = X(0) - X(1);
    CHECK(p * q == X(0) * X(0) - X(1) * X(1));
    CHECK((p - p).is_zero());
    CHECK(p.total_degree() == 1);
    CHECK((p * q).total_degree() == 2);
}

TEST_CASE("content and primitive part")
{
    Polynomial p = X(0) * Rational(4) + X(1) * Rational(6); // content 2
    CHECK(p.content() == 2);
    CHECK(p.primitive_part() == X(0) * Rational(2) + X(1) * Rational(3));

    Polynomial neg = X(0) * Rational(-4) + X(1) * Rational(6);
    // leading (grlex: x0 beats x1) is -4: content negative
    CHECK(neg.content() == -2);
    CHECK(neg.primitive_part().leading_coefficient() > 0);

    Polynomial frac = X(0) * rat(1, 2) + X(1) * rat(1, 3);
    CHECK(frac.content() == rat(1, 6));
    CHECK(frac.primitive_part() == X(0) * Rational(3) + X(1) * Rational(2));
}

TEST_CASE("exact division")
{
    Polynomial a = (X(0) + X(1)) * (X(0) - X(1));
    auto q = Polynomial::divide_exact(a, X(0) + X(1));
    REQUIRE(q);
    CHECK(*q == X(0) - X(1));
    CHECK_FALSE(Polynomial::divide_exact(a, X(0) + Polynomial(1L)));
}

TEST_CASE("poly_gcd spec examples")
{
    // gcd(x1^2, x1 x2) = x1
    CHECK(poly_gcd(X(0) * X(0), X(0) * X(1)) == X(0));
    // gcd(x1 - x2, x1 + x2) = 1 (coprime)
    CHECK(poly_gcd(X(0) - X(1), X(0) + X(1)) == Polynomial(1L));
    // gcd(x1^2 - x2^2, x1^2 - 2 x1 x2 + x2^2) = x1 - x2
    // oracle: the inputs factor as (x1-x2)(x1+x2) and (x1-x2)^2
    Polynomial d1 = X(0) * X(0) - X(1) * X(1);
    Polynomial d2 = X(0) * X(0) - X(0) * X(1) * Rational(2) + X(1) * X(1);
    CHECK(poly_gcd(d1, d2) == X(0) - X(1));
    // gcd(0, b) = normalized b
    CHECK(poly_gcd(Polynomial(), X(0) * Rational(-2)) == X(0));
    CHECK(poly_gcd(Polynomial(3L), Polynomial(7L)) == Polynomial(1L));
}

TEST_CASE("poly_gcd randomized: g divides both and common factors are found")
{
    std::mt19937_64 rng(20240811);
    for (int trial = 0; trial < 60; ++trial) {
        Polynomial a = random_poly(rng, 3);
        Polynomial b = random_poly(rng, 3);
        Polynomial f = random_poly(rng, 3, 2);
        if (f.is_zero()) continue;
        Polynomial g = poly_gcd(a * f, b * f);
        if ((a * f).is_zero() && (b * f).is_zero()) continue;
        // f divides the gcd, and the gcd divides both products.
        CHECK(Polynomial::divide_exact(g, f.primitive_part()).has_value());
        if (!(a * f).is_zero()) CHECK(Polynomial::divide_exact(a * f, g).has_value());
        if (!(b * f).is_zero()) CHECK(Polynomial::divide_exact(b * f, g).has_value());
        if (!g.is_zero()) {
            CHECK(g.content() == 1);
            CHECK(g.leading_coefficient() > 0);
        }
    }
}

TEST_CASE("rational function canonical forms")
{
    RationalFunction x0 = RationalFunction::variable(0);
    RationalFunction x1 = RationalFunction::variable(1);

    // (x1+x2)-(x2+x1) = 0
    CHECK((x0 + x1 - (x1 + x0)).is_zero());
    // x1^2/x1 = x1
    CHECK(RationalFunction(X(0) * X(0), X(0)) == x0);
    // (x1^2-x2^2)/(x1-x2) = x1+x2; oracle: multiply back
    RationalFunction r(X(0) * X(0) - X(1) * X(1), X(0) - X(1));
    CHECK(r == x0 + x1);
    CHECK(r * RationalFunction(X(0) - X(1)) == RationalFunction(X(0) * X(0) - X(1) * X(1)));

    // canonical scalars: denominator primitive with positive lead
    RationalFunction half_over_x(Polynomial(-3L), X(0) * Rational(2));
    CHECK(half_over_x.den() == X(0));
    CHECK(half_over_x.num() == Polynomial(rat(-3, 2)));

    CHECK_THROWS_AS(RationalFunction(Polynomial(1L), Polynomial()), ZeroDenominator);
}

TEST_CASE("rational function field axioms on random inputs (canonical equality)")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        RationalFunction a{random_poly(rng, 3)};
        RationalFunction b{random_poly(rng, 3)};
        RationalFunction c{random_poly(rng, 3)};
        Polynomial d1 = random_poly(rng, 3, 2);
        Polynomial d2 = random_poly(rng, 3, 2);
        if (!d1.is_zero()) a = a / RationalFunction(d1);
        if (!d2.is_zero()) b = b / RationalFunction(d2);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        // every produced value is reduced with a normalized denominator
        for (const RationalFunction* r : {&a, &b}) {
            if (r->is_zero()) continue;
            CHECK(poly_gcd(r->num(), r->den()).is_constant());
            CHECK(r->den().content() == 1);
        }
    }
}

TEST_CASE("differentiation")
{
    RationalFunction x0 = RationalFunction::variable(0);
    RationalFunction x1 = RationalFunction::variable(1);

    // d(x1*x2)/dx2 = x1
    CHECK((x0 * x1).derivative(1) == x0);
    // d(1/x1)/dx1 = -1/x1^2
    RationalFunction inv(Polynomial(1L), X(0));
    CHECK(inv.derivative(0) == RationalFunction(Polynomial(-1L), X(0) * X(0)));
    // d(x1 x2 (x1+x2))/dx1 = 2 x1 x2 + x2^2 (oracle: expand termwise)
    RationalFunction f = x0 * x1 * (x0 + x1);
    RationalFunction expected = x0 * x1 * Rational(2) + x1 * x1;
    CHECK(f.derivative(0) == expected);
}

TEST_CASE("Leibniz rule on random products")
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        RationalFunction f{random_poly(rng, 3)};
        RationalFunction g{random_poly(rng, 3)};
        Polynomial d = random_poly(rng, 3, 2);
        if (!d.is_zero()) f = f / RationalFunction(d);
        for (int v = 0; v < 3; ++v)
            CHECK((f * g).derivative(v) == f * g.derivative(v) + g * f.derivative(v));
    }
}

TEST_CASE("evaluation")
{
    RationalFunction x0 = RationalFunction::variable(0);
    RationalFunction x1 = RationalFunction::variable(1);
    std::vector<Rational> p23{Rational(2), Rational(3)};
    CHECK((x0 * x1).evaluate(p23) == 6);

    RationalFunction r(Polynomial(-3L), X(0) * Rational(2));
    std::vector<Rational> p2{Rational(2)};
    CHECK(r.evaluate(p2) == rat(-3, 4));

    RationalFunction pole(Polynomial(1L), X(0) - Polynomial(2L));
    CHECK_THROWS_AS(pole.evaluate(p2), EvaluationError);
}

TEST_CASE("derivative agrees with central finite differences (float sanity)")
{
    // exact path is authoritative; this is a cross-check in doubles
    std::mt19937_64 rng(123);
    std::uniform_int_distribution<int> pt(1, 5);
    for (int trial = 0; trial < 10; ++trial) {
        Polynomial p = random_poly(rng, 2);
        RationalFunction f{p};
        RationalFunction df = f.derivative(0);
        std::vector<Rational> x{Rational(pt(rng)), Rational(pt(rng))};
        double h = 1e-4;
        std::vector<Rational> xp{x[0] + rat(1, 10000), x[1]};
        std::vector<Rational> xm{x[0] - rat(1, 10000), x[1]};
        double fd = (f.evaluate(xp).get_d() - f.evaluate(xm).get_d()) / (2 * h);
        double exact = df.evaluate(x).get_d();
        if (std::abs(exact) > 1e-9)
            CHECK(std::abs(fd - exact) / std::abs(exact) < 1e-6);
        else
            CHECK(std::abs(fd - exact) < 1e-6);
    }
}

TEST_CASE("printing round-trips through exact values")
{
    std::vector<std::string> names{"x1", "x2"};
    RationalFunction r(X(0) * X(0) - X(1) * X(1), X(0) * Rational(2));
    std::string s = to_string(r, names);
    CHECK(s == "(1/2*x1^2 - 1/2*x2^2)/(x1)");
}
