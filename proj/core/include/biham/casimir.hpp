/*
 * casimir.hpp
 * -----------
 * lambda-Casimir certificates: the contraction alpha(lambda) of the n-th
 * exterior power of P + lambda Q with an invariant volume form, the
 * kernel/closedness properties of the single form alpha = omega(L^n P),
 * and the three-property certificate for the pencil family.
 */
#pragma once

#include <cstdint>
#include <span>

#include "biham/tensor.hpp"

namespace biham {

// alpha(lambda) = contraction of L^n(P + lambda Q) with the volume form.
// The density rides along as a symbolic prefactor (see LambdaOneForm).
LambdaOneForm lambda_alpha(const SkewBivector& p, const SkewBivector& q, const VolumeForm& volume);

struct Lemma2Result {
    bool kernel_ok = false; // P alpha = 0 identically
    bool closed_ok = false; // d alpha = 0 identically (density accounted for)
    OneForm alpha;          // the rational part of omega(L^n P)
};

// Checks the two properties of alpha = omega(L^n P) for a single Poisson
// tensor whose invariant volume form is `volume`.
Lemma2Result verify_lemma2(const SkewBivector& p, const VolumeForm& volume);

struct CasimirCertificate {
    bool kernel_ok = false;       // (P + lambda Q) alpha(lambda) = 0 identically in lambda
    bool closed_ok = false;       // d alpha(lambda) = 0 coefficient-wise
    bool nonvanishing_ok = false; // alpha(lambda_0) is a nonzero covector at the point
    int degree = -1;              // lambda-degree of alpha(lambda)
    int samples = 0;              // number of lambda_0 values tested (2n+3)
    std::vector<Rational> sampled_lambdas;
    std::vector<Rational> point;

    bool valid() const { return kernel_ok && closed_ok && nonvanishing_ok; }
};

// All three properties of the family, exactly where possible: the kernel
// and closedness identically in lambda, nonvanishing at the test point for
// 2n+3 seeded distinct rational lambda values. Throws EvaluationError when
// the point hits a denominator zero.
CasimirCertificate casimir_certificate(const SkewBivector& p, const SkewBivector& q,
                                       const VolumeForm& volume, std::span<const Rational> point,
                                       std::uint64_t seed);

// Exact check that (P + lambda Q) alpha(lambda) vanishes identically.
bool lambda_kernel_ok(const Pencil& pencil, const LambdaOneForm& alpha);

// Exact coefficient-wise closedness of density * alpha(lambda):
// d(rational part) + dlog(density) ^ (rational part) = 0.
bool lambda_closed_ok(const LambdaOneForm& alpha);

} // namespace biham
