/*
 * unimod.hpp
 * ----------
 * The unimodularity pipeline: assemble the overdetermined linear system
 * P^{ij} alpha_j = -d_j P^{ij} (same for Q), solve it exactly over the
 * function field, test closedness of the solution, reconstruct the
 * invariant volume form, and issue the flatness verdict for a generic
 * bihamiltonian structure.
 */
#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "biham/pencil.hpp"
#include "biham/poisson.hpp"
#include "biham/tensor.hpp"

namespace biham {

// Rows 0..dim-1 encode P^{ij} alpha_j = -div(P)^i, rows dim..2dim-1 the
// same for Q.
struct UnimodularSystem {
    Chart chart;
    std::vector<std::vector<RationalFunction>> matrix; // 2*dim x dim
    std::vector<RationalFunction> rhs;                 // 2*dim
};

UnimodularSystem build_system(const SkewBivector& p, const SkewBivector& q);

struct AlphaSolution {
    enum class Status { Unique, Inconsistent, Underdetermined };

    Status status = Status::Underdetermined;
    std::optional<OneForm> alpha;     // Unique
    int witness_equation = -1;        // Inconsistent: original row index (0-based)
    RationalFunction witness_residue; // Inconsistent: the nonzero value left of a zero row
    int free_column = -1;             // Underdetermined: an unconstrained alpha component
};

// Bareiss-style fraction-free elimination after clearing each row to a
// primitive polynomial form; pivots favour entries with the fewest terms.
AlphaSolution solve_alpha(const UnimodularSystem& system);

struct ClosednessResult {
    bool closed = false;
    int i = -1, j = -1;            // witness component of d(alpha)
    RationalFunction witness;
};

ClosednessResult check_closed(const OneForm& alpha);

// Volume form with log_derivative = alpha. The explicit density
// exp(rational_part) * prod q_k^{c_k} is attached when the restricted
// integrator (log terms over the gcd-coprime denominator factors plus a
// rational exact part by undetermined coefficients) succeeds; the
// decomposition is verified by re-differentiation before acceptance.
// Requires check_closed(alpha).closed.
VolumeForm reconstruct_volume(const OneForm& alpha);

enum class FlatnessVerdict { Flat, NotUnimodular, NotGeneric, NotCompatible, NotPoisson };

std::string to_string(FlatnessVerdict v);

struct FlatnessReport {
    FlatnessVerdict verdict = FlatnessVerdict::NotPoisson;
    PoissonCheck poisson_p, poisson_q;
    CompatibilityCheck compatibility;
    std::optional<GenericityCertificate> genericity;
    std::optional<AlphaSolution> solution;
    std::optional<OneForm> alpha;
    std::optional<ClosednessResult> closedness;
    std::optional<VolumeForm> volume;
    std::vector<Rational> point;
    std::vector<std::string> notes;
};

struct FlatnessOptions {
    // Test hook: add 1 to this rhs equation (0-based) before solving, to
    // drive the not-unimodular path on purpose. Negative = off.
    int debug_perturb_rhs = -1;
};

// Pipeline: is_poisson(P), is_poisson(Q), is_compatible, genericity at the
// point, build/solve/check/reconstruct; the verdict reports the first
// failing stage. Throws EvaluationError when the point hits a denominator
// zero of the structure (supply another point).
FlatnessReport flatness_verdict(const SkewBivector& p, const SkewBivector& q,
                                std::span<const Rational> point, const FlatnessOptions& options = {});

} // namespace biham
