#pragma once

#include <vector>

#include "k2forge/algebra/bipoly.hpp"

namespace k2forge {

/// Reduced Groebner basis over Q in lex order with y > x. The basis of the
/// unit ideal is {1}; an ideal with finitely many zeros contains exactly one
/// element free of y, generating the elimination ideal.
std::vector<BiPoly> groebner_lex(std::vector<BiPoly> gens);

/// Leading monomial in lex order with y > x (p nonzero).
Monomial lex_lead(const BiPoly& p);

}  // namespace k2forge
