// Sheeted covers of a quotient complex driven by a permutation action of its
// voltage group. The cover forgets voltages (trivial voltage group); each
// reference with voltage g moves sheet i to the g^-1-image of i, so composite
// references compose like right cosets.
#pragma once

#include "a2zeta/quotient_complex.hpp"

namespace a2zeta {

// action[e] is the permutation of the sheet set for group element e; it must
// be a homomorphism and act transitively on sheets.
QuotientComplex build_cover(const QuotientComplex& base, const std::vector<Permutation>& action);

// Cover along the voltage group's own permutation representation.
QuotientComplex build_natural_cover(const QuotientComplex& base);

}  // namespace a2zeta
