/*
 * pencil.hpp
 * ----------
 * Pointwise and symbolic analysis of a skew pencil mu A + nu B on an
 * odd-dimensional space: corank computation, the corank-one genericity
 * certificate via deleted Pfaffians, the stratum codimension formula, and
 * the simultaneous canonical basis for generic constant pairs.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "biham/linalg.hpp"
#include "biham/tensor.hpp"
#include "biham/univariate.hpp"

namespace biham {

// Two exact skew matrices on one odd-dimensional space.
struct ConstantSkewPair {
    int dim = 0;
    QMatrix A, B;

    ConstantSkewPair() = default;
    ConstantSkewPair(QMatrix a, QMatrix b); // validates skewness and sizes
};

// Witness that dim Ker(mu A + nu B) = 1 for every (mu:nu), including the
// point at infinity (mu = 0). All deleted Pfaffians p_i(lambda) share a
// complex root iff their gcd over Q is nonconstant; the point at infinity
// degenerates iff every p_i has vanishing top (degree n) coefficient.
struct GenericityCertificate {
    std::vector<Rational> point;
    std::vector<UnivariatePolynomial> deleted_pfaffians; // unsigned, index i
    UnivariatePolynomial gcd_finite;                     // monic; zero iff all p_i vanish
    bool infinity_ok = false;

    bool generic() const
    {
        return !gcd_finite.is_zero() && gcd_finite.is_constant() && infinity_ok;
    }
    // Nonconstant common-root locus in lambda (monic); zero polynomial when
    // the certificate is generic or when only infinity degenerates.
    UnivariatePolynomial degenerate_locus() const
    {
        return gcd_finite.is_constant() ? UnivariatePolynomial() : gcd_finite;
    }
};

// dim - rank(mu A + nu B), exact. (mu, nu) != (0, 0).
int corank_at(const ConstantSkewPair& pair, const Rational& mu, const Rational& nu);

GenericityCertificate genericity_certificate(const ConstantSkewPair& pair);
// Entries evaluated exactly at `point` first; throws EvaluationError when a
// denominator vanishes there.
GenericityCertificate genericity_certificate(const Pencil& pencil, std::span<const Rational> point);

// codim of the stratum of skew forms with corank m in dimension `dim`:
// m(m-1)/2 when m and dim have equal parity and m <= dim; nullopt marks the
// empty stratum.
std::optional<long> stratum_codim(long m, long dim);

// Change of basis T (columns = new basis vectors) with T^t A T and T^t B T
// exactly the canonical matrices below.
struct CanonicalBasisChange {
    int dim = 0;
    QMatrix T;
};

// sum e^i ^ e^{n+i} and sum e^i ^ e^{n+i+1} on dimension 2n+1.
QMatrix jk_canonical_A(int dim);
QMatrix jk_canonical_B(int dim);

// Throws NotGenericError when the pair fails the genericity certificate and
// ConstructionError when the dual-basis completion cannot be verified within
// the retry budget. The returned T is always congruence-verified.
CanonicalBasisChange jk_canonical_basis(const ConstantSkewPair& pair, std::uint64_t seed = 0);

} // namespace biham
