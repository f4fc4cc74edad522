// Tensor operations: divergence, contraction, exterior derivative,
// Pfaffians of the pencil.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "biham/models.hpp"
#include "biham/pfaffian.hpp"
#include "biham/tensor.hpp"

using namespace biham;

namespace {

RationalFunction X(int i)
{
    return RationalFunction::variable(i);
}

// Independent determinant oracle: exact Gaussian elimination, test-only.
Rational det_by_elimination(std::vector<std::vector<Rational>> m)
{
    const std::size_t n = m.size();
    Rational det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m[p][k] == 0) ++p;
        if (p == n) return Rational(0);
        if (p != k) {
            std::swap(m[p], m[k]);
            det = -det;
        }
        det *= m[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            Rational f = m[i][k] / m[k][k];
            for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return det;
}

std::vector<std::vector<Rational>> random_skew(std::mt19937_64& rng, int n)
{
    std::uniform_int_distribution<int> entry(-9, 9);
    std::vector<std::vector<Rational>> m(static_cast<std::size_t>(n),
                                         std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Rational v(entry(rng));
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
            m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = -v;
        }
    return m;
}

} // namespace

TEST_CASE("skewness of stored tensors")
{
    Chart chart = Chart::standard(3);
    SkewBivector p(chart);
    p.set_entry(0, 1, X(0));
    CHECK(p.entry(1, 0) == -X(0));
    CHECK(p.entry(0, 0).is_zero());
    CHECK(p.entry(2, 1).is_zero());

    Trivector t(chart);
    t.set_entry(0, 1, 2, X(0));
    CHECK(t.entry(1, 0, 2) == -X(0));
    CHECK(t.entry(2, 0, 1) == X(0));
    CHECK(t.entry(0, 0, 2).is_zero());
}

TEST_CASE("divergence examples")
{
    // constant entries: zero field
    Chart chart3 = Chart::standard(3);
    SkewBivector c(chart3);
    c.set_entry(0, 1, RationalFunction(2L));
    c.set_entry(1, 2, RationalFunction(-5L));
    CHECK(divergence(c).is_zero());

    // Volterra P has zero divergence (telescoping of the band terms)
    Pencil volterra = models::volterra(5);
    CHECK(divergence(volterra.P).is_zero());

    // P = x1 d1 ^ d2 in dim 3: component 2 picks up d1 P^{21} = -1
    SkewBivector p(chart3);
    p.set_entry(0, 1, X(0));
    VectorField div = divergence(p);
    CHECK(div.components[0].is_zero());
    CHECK(div.components[1] == RationalFunction(-1L));
    CHECK(div.components[2].is_zero());
}

TEST_CASE("apply (bivector contraction with a one-form)")
{
    Pencil volterra = models::volterra(5);
    const Chart& chart = volterra.chart();

    OneForm zero(chart);
    CHECK(apply(volterra.P, zero).is_zero());

    // alpha = -(3/2) sum dx_i/x_i lies in the kernel of the Volterra P
    OneForm alpha(chart);
    for (int i = 0; i < 5; ++i)
        alpha.components[static_cast<std::size_t>(i)] =
            RationalFunction(Polynomial(-3L), Polynomial::variable(i) * Rational(2));
    CHECK(apply(volterra.P, alpha).is_zero());

    // canonical P with alpha = dx^{2n+1}
    Pencil canonical = models::canonical_pair(2);
    OneForm last(canonical.chart());
    last.components[4] = RationalFunction(1L);
    CHECK(apply(canonical.P, last).is_zero());
}

TEST_CASE("exterior derivative examples")
{
    Chart chart = Chart::standard(2);
    // alpha = df for f = x1 x2: d(d f) = 0
    RationalFunction f = X(0) * X(1);
    CHECK(exterior_derivative(gradient(chart, f)).is_zero());

    // the Volterra alpha is closed
    Chart chart5 = Chart::standard(5);
    OneForm alpha(chart5);
    for (int i = 0; i < 5; ++i)
        alpha.components[static_cast<std::size_t>(i)] =
            RationalFunction(Polynomial(-3L), Polynomial::variable(i) * Rational(2));
    CHECK(exterior_derivative(alpha).is_zero());

    // alpha = x2 dx1 has (d alpha)_{12} = -1
    OneForm beta(chart);
    beta.components[0] = X(1);
    TwoForm d = exterior_derivative(beta);
    CHECK(d.entry(0, 1) == RationalFunction(-1L));
}

TEST_CASE("d(df) = 0 on random rational functions")
{
    std::mt19937_64 rng(5150);
    std::uniform_int_distribution<int> coeff(-4, 4);
    Chart chart = Chart::standard(3);
    for (int trial = 0; trial < 25; ++trial) {
        Polynomial n, d;
        for (int t = 0; t < 3; ++t) {
            n.add_term(Monomial::from_factors({{static_cast<int>(rng() % 3), static_cast<int>(rng() % 3)}}),
                       Rational(coeff(rng)));
            d.add_term(Monomial::from_factors({{static_cast<int>(rng() % 3), static_cast<int>(rng() % 2)}}),
                       Rational(coeff(rng)));
        }
        if (d.is_zero()) continue;
        RationalFunction f(n, d);
        CHECK(exterior_derivative(gradient(chart, f)).is_zero());
    }
}

TEST_CASE("deleted pfaffians of the dim-3 canonical-style pair")
{
    // A = e1 ^ e2, B = e1 ^ e3: unsigned deleted Pfaffians are (0, lam, 1)
    Chart chart = Chart::standard(3);
    SkewBivector a(chart), b(chart);
    a.set_entry(0, 1, RationalFunction(1L));
    b.set_entry(0, 2, RationalFunction(1L));
    Pencil pencil(a, b);

    auto p0 = deleted_pfaffian(pencil, 0);
    CHECK(p0.empty()); // identically zero
    auto p1 = deleted_pfaffian(pencil, 1);
    REQUIRE(p1.size() == 2);
    CHECK(p1[0].is_zero());
    CHECK(p1[1] == RationalFunction(1L)); // lam
    auto p2 = deleted_pfaffian(pencil, 2);
    REQUIRE(p2.size() == 1);
    CHECK(p2[0] == RationalFunction(1L));
}

TEST_CASE("Pf^2 = det on random skew matrices (elimination oracle)")
{
    std::mt19937_64 rng(271828);
    for (int n : {2, 4, 6}) {
        for (int trial = 0; trial < 12; ++trial) {
            auto m = random_skew(rng, n);
            std::vector<std::vector<Rational>> mv = m;
            Rational pf = pfaffian(mv);
            CHECK(pf * pf == det_by_elimination(m));
        }
    }
    // odd order: determinant of a skew matrix vanishes
    auto m = random_skew(rng, 5);
    CHECK(det_by_elimination(m) == 0);
}

TEST_CASE("deleted pfaffian: evaluate and specialize commute")
{
    Pencil volterra = models::volterra(5);
    std::vector<Rational> point{Rational(2), Rational(3), Rational(5), Rational(7), Rational(11)};
    for (int i = 0; i < 5; ++i) {
        auto symbolic = deleted_pfaffian(volterra, i);
        UnivariatePolynomial at = deleted_pfaffian_at(volterra, i, point);
        for (int k = 0; k <= std::max<int>(at.degree(), static_cast<int>(symbolic.size()) - 1); ++k) {
            Rational from_symbolic =
                k < static_cast<int>(symbolic.size()) ? symbolic[static_cast<std::size_t>(k)].evaluate(point)
                                                      : Rational(0);
            CHECK(from_symbolic == at.coefficient(k));
        }
    }
}

TEST_CASE("contract_with_volume sign convention")
{
    // dim 3, P = d1 ^ d2, Q = 0, unit density: alpha = +dx3
    Chart chart = Chart::standard(3);
    SkewBivector p(chart), q(chart);
    p.set_entry(0, 1, RationalFunction(1L));
    Pencil pencil(p, q);
    LambdaOneForm alpha = contract_with_volume(pencil, VolumeForm::coordinate_volume(chart));
    REQUIRE(alpha.degree() == 0);
    CHECK(alpha.coefficients[0].components[0].is_zero());
    CHECK(alpha.coefficients[0].components[1].is_zero());
    CHECK(alpha.coefficients[0].components[2] == RationalFunction(1L));
}

TEST_CASE("contract_with_volume: zero Q gives lambda-degree 0")
{
    Pencil volterra = models::volterra(5);
    SkewBivector zero(volterra.chart());
    Pencil frozen(volterra.P, zero);
    LambdaOneForm alpha = contract_with_volume(frozen, VolumeForm::coordinate_volume(volterra.chart()));
    CHECK(alpha.degree() <= 0);
}

TEST_CASE("wedge antisymmetry")
{
    Chart chart = Chart::standard(3);
    OneForm a(chart), b(chart);
    a.components[0] = X(1);
    b.components[2] = X(0);
    TwoForm ab = wedge(a, b);
    TwoForm ba = wedge(b, a);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) CHECK(ab.entry(i, j) == -ba.entry(i, j));
    CHECK(wedge(a, a).is_zero());
}
