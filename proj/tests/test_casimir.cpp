// lambda-Casimir certificates and the kernel/closedness lemma checks.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "biham/casimir.hpp"
#include "biham/models.hpp"
#include "biham/unimod.hpp"

using namespace biham;

namespace {

std::vector<Rational> primes(int n)
{
    std::vector<Rational> out;
    for (int c = 2; static_cast<int>(out.size()) < n; ++c) {
        bool ok = true;
        for (int d = 2; d * d <= c; ++d)
            if (c % d == 0) ok = false;
        if (ok) out.emplace_back(c);
    }
    return out;
}

VolumeForm volterra_volume(const Pencil& volterra)
{
    FlatnessReport report = flatness_verdict(volterra.P, volterra.Q, primes(volterra.chart().dim));
    REQUIRE(report.verdict == FlatnessVerdict::Flat);
    REQUIRE(report.volume);
    return *report.volume;
}

} // namespace

TEST_CASE("lambda_alpha on the dim-3 canonical pair with unit density")
{
    Pencil canonical = models::canonical_pair(1);
    VolumeForm unit = VolumeForm::coordinate_volume(canonical.chart());
    LambdaOneForm alpha = lambda_alpha(canonical.P, canonical.Q, unit);
    // signed components: (0, -lam, 1)
    REQUIRE(alpha.degree() == 1);
    CHECK(alpha.coefficients[0].components[0].is_zero());
    CHECK(alpha.coefficients[0].components[1].is_zero());
    CHECK(alpha.coefficients[0].components[2] == RationalFunction(1L));
    CHECK(alpha.coefficients[1].components[1] == RationalFunction(-1L));
    // and it annihilates the pencil
    CHECK(lambda_kernel_ok(Pencil(canonical.P, canonical.Q), alpha));
}

TEST_CASE("lambda_alpha degree: zero Q gives degree 0, Volterra n=5 gives n=2")
{
    Pencil volterra = models::volterra(5);
    SkewBivector zero(volterra.chart());
    VolumeForm unit = VolumeForm::coordinate_volume(volterra.chart());
    CHECK(lambda_alpha(volterra.P, zero, unit).degree() <= 0);

    VolumeForm vol = volterra_volume(volterra);
    LambdaOneForm alpha = lambda_alpha(volterra.P, volterra.Q, vol);
    CHECK(alpha.degree() == 2); // dim 5 = 2n+1 with n = 2

    // top coefficient equals the contraction of L^n Q alone
    LambdaOneForm top = lambda_alpha(volterra.Q, zero, vol);
    REQUIRE(top.degree() == 0);
    CHECK(alpha.coefficients[2] == top.coefficients[0]);
}

TEST_CASE("verify_lemma2: canonical constant P in dims 3, 5, 7")
{
    for (int n : {1, 2, 3}) {
        Pencil canonical = models::canonical_pair(n);
        VolumeForm unit = VolumeForm::coordinate_volume(canonical.chart());
        Lemma2Result res = verify_lemma2(canonical.P, unit);
        CHECK(res.kernel_ok);
        CHECK(res.closed_ok);
        // alpha = +- dx^{2n+1}
        int dim = 2 * n + 1;
        for (int i = 0; i < dim - 1; ++i)
            CHECK(res.alpha.components[static_cast<std::size_t>(i)].is_zero());
        RationalFunction last = res.alpha.components[static_cast<std::size_t>(dim - 1)];
        CHECK((last == RationalFunction(1L) || last == RationalFunction(-1L)));
    }
}

TEST_CASE("verify_lemma2: rank-deficient P gives alpha = 0")
{
    Chart chart = Chart::standard(5);
    SkewBivector p(chart);
    p.set_entry(0, 1, RationalFunction(1L)); // rank 2 < 4
    VolumeForm unit = VolumeForm::coordinate_volume(chart);
    Lemma2Result res = verify_lemma2(p, unit);
    CHECK(res.alpha.is_zero());
    CHECK(res.kernel_ok);
    CHECK(res.closed_ok);
}

TEST_CASE("verify_lemma2: Volterra P with its reconstructed volume")
{
    Pencil volterra = models::volterra(5);
    VolumeForm vol = volterra_volume(volterra);
    Lemma2Result res = verify_lemma2(volterra.P, vol);
    CHECK(res.kernel_ok);
    CHECK(res.closed_ok);
}

TEST_CASE("casimir certificate: Volterra n=5")
{
    Pencil volterra = models::volterra(5);
    VolumeForm vol = volterra_volume(volterra);
    std::vector<Rational> pt = primes(5);
    CasimirCertificate cert = casimir_certificate(volterra.P, volterra.Q, vol, pt, 12345);
    CHECK(cert.kernel_ok);
    CHECK(cert.closed_ok);
    CHECK(cert.nonvanishing_ok);
    CHECK(cert.valid());
    CHECK(cert.degree == 2);
    // sample-count logic: 2n+3 distinct values, comfortably above degree+1
    CHECK(cert.samples == 2 * 2 + 3);
    CHECK(static_cast<int>(cert.sampled_lambdas.size()) == cert.samples);
    CHECK(cert.samples > cert.degree + 1);
    for (std::size_t a = 0; a < cert.sampled_lambdas.size(); ++a)
        for (std::size_t b = a + 1; b < cert.sampled_lambdas.size(); ++b)
            CHECK(cert.sampled_lambdas[a] != cert.sampled_lambdas[b]);
}

TEST_CASE("casimir certificate: canonical pair")
{
    Pencil canonical = models::canonical_pair(2);
    VolumeForm unit = VolumeForm::coordinate_volume(canonical.chart());
    std::vector<Rational> pt = primes(5);
    CasimirCertificate cert = casimir_certificate(canonical.P, canonical.Q, unit, pt, 1);
    CHECK(cert.valid());
    CHECK(cert.degree == 2);
}

TEST_CASE("casimir certificate: non-invariant density is caught")
{
    // density x1 on the canonical pair is not invariant; the kernel and
    // closedness checks flag it
    Pencil canonical = models::canonical_pair(1);
    VolumeForm crooked;
    crooked.chart = canonical.chart();
    VolumeForm::ExplicitDensity d;
    d.rational_part = RationalFunction();
    d.log_terms.emplace_back(Polynomial::variable(0), Rational(1)); // density = x1
    crooked.explicit_density = d;
    crooked.log_derivative = VolumeForm::density_log_derivative(canonical.chart(), d);

    std::vector<Rational> pt = primes(3);
    CasimirCertificate cert = casimir_certificate(canonical.P, canonical.Q, crooked, pt, 7);
    CHECK_FALSE(cert.valid());
    CHECK_FALSE(cert.closed_ok); // d(x1 * alpha) picks up dx1 ^ alpha != 0
    CHECK(cert.kernel_ok);       // the kernel property is density-insensitive
}

TEST_CASE("lambda form evaluation helper")
{
    Pencil canonical = models::canonical_pair(1);
    VolumeForm unit = VolumeForm::coordinate_volume(canonical.chart());
    LambdaOneForm alpha = lambda_alpha(canonical.P, canonical.Q, unit);
    OneForm at2 = alpha.at_lambda(Rational(2)); // (0, -2, 1)
    CHECK(at2.components[0].is_zero());
    CHECK(at2.components[1] == RationalFunction(-2L));
    CHECK(at2.components[2] == RationalFunction(1L));
}
