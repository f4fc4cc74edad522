/*
 * poisson.hpp
 * -----------
 * Poisson-bracket semantics for skew bivector fields: the bracket of
 * functions, Hamiltonian vector fields, the Schouten bracket of two
 * bivectors, and the Jacobi / compatibility checks built on it.
 *
 * Convention: schouten(P,P) vanishes identically exactly when the bracket
 * of P satisfies the Jacobi identity (schouten(P,P) equals twice the
 * Jacobiator on coordinate triples).
 */
#pragma once

#include <optional>

#include "biham/tensor.hpp"

namespace biham {

// {f,g} = sum_{ij} P^{ij} d_i f d_j g.
RationalFunction bracket(const SkewBivector& p, const RationalFunction& f, const RationalFunction& g);

// v^i = sum_j P^{ij} d_j H.
VectorField hamiltonian_vf(const SkewBivector& p, const RationalFunction& h);

// Component (i,j,k), i<j<k:
//   sum_l sum_{cyclic (i,j,k)} ( P^{li} d_l Q^{jk} + Q^{li} d_l P^{jk} );
// the cyclic sum is already fully antisymmetric.
Trivector schouten(const SkewBivector& p, const SkewBivector& q);

struct SchoutenWitness {
    int i, j, k;            // 0-based component
    RationalFunction value; // the nonzero entry
};

struct PoissonCheck {
    bool ok = false;
    std::optional<SchoutenWitness> witness;
};

// True iff schouten(P,P) = 0 identically; otherwise carries a witness.
PoissonCheck is_poisson(const SkewBivector& p);

struct CompatibilityCheck {
    bool ok = false;
    std::optional<SchoutenWitness> witness;
};

// True iff schouten(P,Q) = 0 identically. Both members must be Poisson.
// Cross-checked against is_poisson(P+Q); disagreement is an internal error.
CompatibilityCheck is_compatible(const SkewBivector& p, const SkewBivector& q);

// Schouten bracket of the pencil member P + lam Q with itself, with the
// pencil parameter as a formal coordinate; identically zero exactly when
// every pencil member is Poisson.
Trivector pencil_self_schouten(const Pencil& pencil);

} // namespace biham
