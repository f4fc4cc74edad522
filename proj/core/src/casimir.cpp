#include "biham/casimir.hpp"

#include <random>

namespace biham {

LambdaOneForm lambda_alpha(const SkewBivector& p, const SkewBivector& q, const VolumeForm& volume)
{
    Pencil pencil(p, q);
    return contract_with_volume(pencil, volume);
}

namespace {

// Lift a base-chart one-form to the extended chart (indices are shared).
OneForm lift(const OneForm& a, const Chart& ext)
{
    OneForm out(ext);
    for (std::size_t i = 0; i < a.components.size(); ++i) out.components[i] = a.components[i];
    return out;
}

// The rational part of alpha(lambda) as a single one-form on the extended
// chart, with lambda a formal coordinate.
OneForm assemble_on_extended(const LambdaOneForm& alpha, const Chart& ext)
{
    RationalFunction lam = RationalFunction::variable(ext.dim - 1);
    OneForm out(ext);
    RationalFunction power(1L);
    for (const OneForm& coeff : alpha.coefficients) {
        for (std::size_t i = 0; i < coeff.components.size(); ++i)
            out.components[i] += coeff.components[i] * power;
        power *= lam;
    }
    return out;
}

} // namespace

bool lambda_kernel_ok(const Pencil& pencil, const LambdaOneForm& alpha)
{
    // The density is a nowhere-zero scalar, so it drops out of P alpha = 0.
    Chart ext;
    SkewBivector pl = pencil_bivector(pencil, &ext);
    OneForm a = assemble_on_extended(alpha, ext);
    return apply(pl, a).is_zero();
}

bool lambda_closed_ok(const LambdaOneForm& alpha)
{
    // d(D beta) = D (d beta + dlog D ^ beta) with D the density.
    Chart ext = alpha.chart.extended();
    OneForm beta = assemble_on_extended(alpha, ext);
    TwoForm d = exterior_derivative(beta);
    if (!alpha.density_log_derivative.is_zero())
        d = d + wedge(lift(alpha.density_log_derivative, ext), beta);
    // Coefficient-wise closedness reads lambda as a parameter, not a
    // coordinate: only the base-chart block of d is probed.
    for (int i = 0; i < alpha.chart.dim; ++i)
        for (int j = i + 1; j < alpha.chart.dim; ++j)
            if (!d.entry(i, j).is_zero()) return false;
    return true;
}

Lemma2Result verify_lemma2(const SkewBivector& p, const VolumeForm& volume)
{
    SkewBivector zero(p.chart());
    Pencil pencil(p, zero);
    LambdaOneForm alpha = contract_with_volume(pencil, volume);

    Lemma2Result res;
    res.alpha = alpha.coefficients.empty() ? OneForm(p.chart()) : alpha.coefficients.front();
    res.kernel_ok = apply(p, res.alpha).is_zero();

    TwoForm d = exterior_derivative(res.alpha);
    if (!volume.log_derivative.is_zero()) d = d + wedge(volume.log_derivative, res.alpha);
    res.closed_ok = d.is_zero();
    return res;
}

CasimirCertificate casimir_certificate(const SkewBivector& p, const SkewBivector& q,
                                       const VolumeForm& volume, std::span<const Rational> point,
                                       std::uint64_t seed)
{
    Pencil pencil(p, q);
    LambdaOneForm alpha = contract_with_volume(pencil, volume);

    CasimirCertificate cert;
    cert.point.assign(point.begin(), point.end());
    cert.degree = alpha.degree();
    cert.kernel_ok = lambda_kernel_ok(pencil, alpha);
    cert.closed_ok = lambda_closed_ok(alpha);

    // Nonvanishing at the point for 2n+3 distinct rational lambdas: more
    // than degree-many nonzero samples rule out identically-vanishing
    // component polynomials in lambda.
    const int n = (pencil.chart().dim - 1) / 2;
    const int samples = 2 * n + 3;
    cert.samples = samples;
    std::mt19937_64 rng(seed ^ 0x6a09e667f3bcc909ULL);
    std::uniform_int_distribution<long> num(-99, 99);
    std::uniform_int_distribution<long> den(1, 9);
    bool all_nonzero = true;
    while (static_cast<int>(cert.sampled_lambdas.size()) < samples) {
        Rational l0 = rat(num(rng), den(rng));
        bool fresh = true;
        for (const Rational& prev : cert.sampled_lambdas)
            if (prev == l0) fresh = false;
        if (!fresh) continue;
        cert.sampled_lambdas.push_back(l0);

        OneForm at = alpha.at_lambda(l0);
        bool nonzero = false;
        for (const RationalFunction& c : at.components)
            if (!c.is_zero() && c.evaluate(point) != 0) nonzero = true;
        if (!nonzero) all_nonzero = false;
    }
    cert.nonvanishing_ok = all_nonzero;
    return cert;
}

} // namespace biham
