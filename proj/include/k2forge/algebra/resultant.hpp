#pragma once

#include "k2forge/algebra/bipoly.hpp"
#include "k2forge/algebra/linalg.hpp"
#include "k2forge/algebra/unipoly.hpp"

namespace k2forge {

/// Sylvester matrix of a and b with formal degrees m >= deg a, n >= deg b.
Matrix sylvester_matrix(const UniPoly& a, int m, const UniPoly& b, int n);

/// Res(a, b) for the actual degrees; zero if either input is zero.
Rat resultant(const UniPoly& a, const UniPoly& b);

/// Res_{m,n}(a, b) with formal degrees m >= deg a, n >= deg b.
Rat resultant_formal(const UniPoly& a, int m, const UniPoly& b, int n);

/// Resultant of p and q with respect to `eliminate`, a polynomial in the
/// other variable. Throws "nothing to eliminate" when both are constant in
/// that variable.
UniPoly resultant(const BiPoly& p, const BiPoly& q, Var eliminate);

/// (-1)^(n(n-1)/2) Res(p, p') / lc(p). Throws for constant p.
Rat discriminant(const UniPoly& p);

}  // namespace k2forge
