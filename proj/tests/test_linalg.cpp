// Exact rational linear algebra.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "biham/linalg.hpp"

using namespace biham;

TEST_CASE("rank")
{
    QMatrix m(3, 3);
    m.at(0, 0) = 1;
    m.at(1, 1) = 1;
    CHECK(rank(m) == 2);
    CHECK(rank(QMatrix::identity(4)) == 4);
    CHECK(rank(QMatrix(2, 5)) == 0);
}

TEST_CASE("solve_linear unique and inconsistent")
{
    QMatrix a(2, 2);
    a.at(0, 0) = 2;
    a.at(1, 1) = 3;
    auto x = solve_linear(a, {Rational(4), Rational(9)});
    REQUIRE(x);
    CHECK((*x)[0] == 2);
    CHECK((*x)[1] == 3);

    QMatrix b(2, 1);
    b.at(0, 0) = 1;
    b.at(1, 0) = 1;
    CHECK_FALSE(solve_linear(b, {Rational(1), Rational(2)}));
    CHECK(solve_linear(b, {Rational(5), Rational(5)}));
}

TEST_CASE("nullspace")
{
    QMatrix a(1, 3); // x + y + z = 0
    a.at(0, 0) = 1;
    a.at(0, 1) = 1;
    a.at(0, 2) = 1;
    auto basis = nullspace(a);
    REQUIRE(basis.size() == 2);
    for (const auto& v : basis) {
        Rational s = v[0] + v[1] + v[2];
        CHECK(s == 0);
    }
}

TEST_CASE("solutions verify on random systems")
{
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> entry(-9, 9);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 3 + static_cast<int>(rng() % 3);
        QMatrix a(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a.at(i, j) = entry(rng);
        std::vector<Rational> xs;
        for (int i = 0; i < n; ++i) xs.emplace_back(entry(rng));
        // b = A x
        std::vector<Rational> b(static_cast<std::size_t>(n), Rational(0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) b[static_cast<std::size_t>(i)] += a.at(i, j) * xs[static_cast<std::size_t>(j)];
        auto sol = solve_linear(a, b);
        REQUIRE(sol);
        // residual zero
        for (int i = 0; i < n; ++i) {
            Rational acc(0);
            for (int j = 0; j < n; ++j) acc += a.at(i, j) * (*sol)[static_cast<std::size_t>(j)];
            CHECK(acc == b[static_cast<std::size_t>(i)]);
        }
    }
}
