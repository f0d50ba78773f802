#ifndef PRIMEDIV_FACTOR_HPP
#define PRIMEDIV_FACTOR_HPP

#include <vector>

#include <primediv/unipoly.hpp>

namespace primediv
{

struct FactorPower {
    UniPoly factor; // monic irreducible
    unsigned multiplicity;
};

struct Factorization {
    Field::Elem unit;                 // leading coefficient
    std::vector<FactorPower> factors; // sorted by (degree, digits)
};

// Squarefree decomposition followed by Berlekamp splitting. Deterministic;
// throws InvalidInput on the zero polynomial.
Factorization factor(const UniPoly &f);

// Monic squarefree parts with their multiplicities; f = lc * prod g_i^{e_i}.
std::vector<FactorPower> squarefree_decomposition(const UniPoly &f);

// Splits a monic squarefree polynomial into its monic irreducible factors.
std::vector<UniPoly> berlekamp_split(const UniPoly &f);

} // namespace primediv

#endif
