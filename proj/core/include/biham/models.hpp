/*
 * models.hpp
 * ----------
 * Built-in structures: the periodic Volterra lattice pair, the canonical
 * constant pair in each odd dimension, and a mutation helper for negative
 * tests.
 */
#pragma once

#include "biham/tensor.hpp"

namespace biham {
namespace models {

// The periodic Volterra pair on the chart (x1..xn), indices cyclic mod n:
//   P_{ij} = (d_{i+1,j} - d_{i,j+1}) x_i x_j
//   Q_{ij} = (d_{i+1,j} - d_{i,j+1}) x_i x_j (x_i + x_j)
//           + d_{i+2,j} x_i x_{i+1} x_{i+2} - d_{i-2,j} x_i x_{i-1} x_{i-2}
// Overlapping delta bands at small n accumulate into the same entry.
// Requires n >= 3; even n yields a valid pair that is nowhere generic.
Pencil volterra(int n);

// Constant pair on dimension 2n+1: P = sum d/dx^i ^ d/dx^{n+i},
// Q = sum d/dx^i ^ d/dx^{n+i+1}. Requires n >= 1.
Pencil canonical_pair(int n);

// Copy of q with entry (i, j) zeroed (0-based, i < j); the entry must be
// nonzero.
SkewBivector mutate_drop_term(const SkewBivector& q, int i, int j);

} // namespace models
} // namespace biham
