// Poisson semantics: bracket, Hamiltonian fields, Schouten vs Jacobiator.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "biham/models.hpp"
#include "biham/poisson.hpp"

using namespace biham;

namespace {

RationalFunction X(int i)
{
    return RationalFunction::variable(i);
}

// Jacobiator oracle on coordinate functions, straight from the bracket.
RationalFunction jacobiator(const SkewBivector& p, int a, int b, int c)
{
    RationalFunction xa = X(a), xb = X(b), xc = X(c);
    return bracket(p, bracket(p, xa, xb), xc) + bracket(p, bracket(p, xb, xc), xa) +
           bracket(p, bracket(p, xc, xa), xb);
}

SkewBivector random_bivector(std::mt19937_64& rng, const Chart& chart, int max_degree = 2)
{
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> expo(0, max_degree);
    SkewBivector p(chart);
    for (int i = 0; i < chart.dim; ++i)
        for (int j = i + 1; j < chart.dim; ++j) {
            Polynomial e;
            for (int t = 0; t < 2; ++t) {
                std::vector<std::pair<int, int>> factors;
                for (int v = 0; v < chart.dim; ++v) {
                    int ex = expo(rng);
                    if (ex > 0 && Monomial::from_factors(factors).total_degree() + ex <= max_degree)
                        factors.emplace_back(v, ex);
                }
                e.add_term(Monomial::from_factors(factors), Rational(coeff(rng)));
            }
            if (!e.is_zero()) p.set_entry(i, j, RationalFunction(e));
        }
    return p;
}

} // namespace

TEST_CASE("bracket examples")
{
    Pencil canonical = models::canonical_pair(1); // dim 3, P^{12} = 1
    const SkewBivector& p = canonical.P;

    RationalFunction f = X(0) * X(1) + X(2);
    CHECK(bracket(p, f, f).is_zero()); // skewness
    CHECK(bracket(p, X(0), X(1)) == RationalFunction(1L));
    CHECK(bracket(p, X(0), X(2)).is_zero());
}

TEST_CASE("bracket satisfies Leibniz on random functions")
{
    std::mt19937_64 rng(17);
    Chart chart = Chart::standard(3);
    for (int trial = 0; trial < 15; ++trial) {
        SkewBivector p = random_bivector(rng, chart);
        RationalFunction f = X(0) * X(1), g = X(1) + X(2), h = X(0) * X(2) + RationalFunction(2L);
        CHECK(bracket(p, f, g * h) == bracket(p, f, g) * h + g * bracket(p, f, h));
    }
}

TEST_CASE("hamiltonian vector fields")
{
    Pencil canonical = models::canonical_pair(1);
    CHECK(hamiltonian_vf(canonical.P, RationalFunction(7L)).is_zero());

    // H = x2 with P^{12} = 1: v^1 = P^{12} d_2 H = 1, other components zero
    // (sign fixed by the single-entry contraction oracle).
    VectorField v = hamiltonian_vf(canonical.P, X(1));
    CHECK(v.components[0] == RationalFunction(1L));
    CHECK(v.components[1].is_zero());
    CHECK(v.components[2].is_zero());

    // Volterra flow: H = sum x_i gives v^i = x_i (x_{i+1} - x_{i-1})
    Pencil volterra = models::volterra(5);
    RationalFunction h;
    for (int i = 0; i < 5; ++i) h += X(i);
    VectorField flow = hamiltonian_vf(volterra.P, h);
    for (int i = 0; i < 5; ++i) {
        int next = (i + 1) % 5, prev = (i + 4) % 5;
        CHECK(flow.components[static_cast<std::size_t>(i)] == X(i) * (X(next) - X(prev)));
    }
}

TEST_CASE("schouten examples")
{
    Chart chart = Chart::standard(3);
    SkewBivector constant_p(chart), constant_q(chart);
    constant_p.set_entry(0, 1, RationalFunction(2L));
    constant_q.set_entry(1, 2, RationalFunction(-1L));
    CHECK(schouten(constant_p, constant_q).is_zero());

    Pencil volterra = models::volterra(5);
    CHECK(schouten(volterra.P, volterra.P).is_zero());

    // P = d1^d2 + x1 d2^d3 fails Jacobi; cross-check against the Jacobiator
    SkewBivector bad(chart);
    bad.set_entry(0, 1, RationalFunction(1L));
    bad.set_entry(1, 2, X(0));
    Trivector s = schouten(bad, bad);
    CHECK_FALSE(s.is_zero());
    CHECK(s.entry(0, 1, 2) == jacobiator(bad, 0, 1, 2) * Rational(2));
}

TEST_CASE("schouten(P,P) = 2 * Jacobiator on random bivectors (dim 3, degree <= 2)")
{
    std::mt19937_64 rng(33);
    Chart chart = Chart::standard(3);
    for (int trial = 0; trial < 40; ++trial) {
        SkewBivector p = random_bivector(rng, chart);
        Trivector s = schouten(p, p);
        CHECK(s.entry(0, 1, 2) == jacobiator(p, 0, 1, 2) * Rational(2));
    }
}

TEST_CASE("mixed schouten equals the mixed Jacobiator (polarization)")
{
    std::mt19937_64 rng(34);
    Chart chart = Chart::standard(3);
    for (int trial = 0; trial < 40; ++trial) {
        SkewBivector p = random_bivector(rng, chart);
        SkewBivector q = random_bivector(rng, chart);
        SkewBivector sum = p + q;
        Trivector mixed = schouten(p, q);
        RationalFunction expected =
            jacobiator(sum, 0, 1, 2) - jacobiator(p, 0, 1, 2) - jacobiator(q, 0, 1, 2);
        CHECK(mixed.entry(0, 1, 2) == expected);
    }
}

TEST_CASE("schouten bilinearity")
{
    std::mt19937_64 rng(35);
    Chart chart = Chart::standard(3);
    SkewBivector p = random_bivector(rng, chart);
    SkewBivector q1 = random_bivector(rng, chart);
    SkewBivector q2 = random_bivector(rng, chart);
    RationalFunction a(2L), b(rat(-3, 2));
    Trivector lhs = schouten(p, q1 * a + q2 * b);
    Trivector r1 = schouten(p, q1);
    Trivector r2 = schouten(p, q2);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            for (int k = j + 1; k < 3; ++k)
                CHECK(lhs.entry(i, j, k) == r1.entry(i, j, k) * a + r2.entry(i, j, k) * b);
}

TEST_CASE("is_poisson")
{
    Chart chart = Chart::standard(3);
    SkewBivector constant(chart);
    constant.set_entry(0, 2, RationalFunction(5L));
    CHECK(is_poisson(constant).ok);

    Pencil volterra = models::volterra(5);
    CHECK(is_poisson(volterra.P).ok);
    CHECK(is_poisson(volterra.Q).ok);

    SkewBivector bad(chart);
    bad.set_entry(0, 1, RationalFunction(1L));
    bad.set_entry(1, 2, RationalFunction::variable(0));
    PoissonCheck check = is_poisson(bad);
    CHECK_FALSE(check.ok);
    REQUIRE(check.witness);
    CHECK(check.witness->value == jacobiator(bad, 0, 1, 2) * Rational(2));
}

TEST_CASE("is_compatible")
{
    Pencil volterra = models::volterra(5);
    CHECK(is_compatible(volterra.P, volterra.P).ok);
    CHECK(is_compatible(volterra.P, volterra.Q).ok);

    SkewBivector mutated = models::mutate_drop_term(volterra.Q, 0, 2);
    CHECK(is_poisson(volterra.P).ok);
    CompatibilityCheck check = is_compatible(volterra.P, mutated);
    CHECK_FALSE(check.ok);
    CHECK(check.witness);
}

TEST_CASE("pencil closure: P + lam Q is Poisson identically in lam")
{
    Pencil volterra = models::volterra(5);
    CHECK(pencil_self_schouten(volterra).is_zero());

    Pencil canonical = models::canonical_pair(2);
    CHECK(pencil_self_schouten(canonical).is_zero());

    // dropping a band term breaks closure
    Pencil broken(volterra.P, models::mutate_drop_term(volterra.Q, 0, 2));
    CHECK_FALSE(pencil_self_schouten(broken).is_zero());
}
