#pragma once

#include <vector>

#include "k2forge/algebra/rat.hpp"

namespace k2forge {

using Matrix = std::vector<std::vector<Rat>>;

/// Exact determinant by fraction Gaussian elimination.
Rat determinant(Matrix m);

/// Solves A x = b for square nonsingular A. Throws PreconditionError
/// "singular system" otherwise.
std::vector<Rat> solve(Matrix a, std::vector<Rat> b);

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> rref(Matrix& m);

/// Basis of the right kernel of m.
std::vector<std::vector<Rat>> kernel(Matrix m);

/// Coefficients (b_0, ..., b_{n-1}) of the polynomial of degree < n with
/// p(nodes[i]) = values[i]. Throws "singular Vandermonde" on repeated nodes.
std::vector<Rat> vandermonde_solve(const std::vector<Rat>& nodes, const std::vector<Rat>& values);

}  // namespace k2forge
