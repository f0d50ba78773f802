#ifndef PRIMEDIV_SMITH_HPP
#define PRIMEDIV_SMITH_HPP

#include <cstdint>
#include <vector>

namespace primediv
{

using IntMatrix = std::vector<std::vector<std::int64_t>>;

// Nonzero diagonal entries d_1 | d_2 | ... of the Smith normal form of a
// rows x cols integer matrix. The row lattice equals Z^cols iff the result
// has cols entries, all equal to 1. Throws InvalidInput on overflow.
std::vector<std::int64_t> elementary_divisors(IntMatrix m);

} // namespace primediv

#endif
