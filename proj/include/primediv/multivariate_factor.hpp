#ifndef PRIMEDIV_MULTIVARIATE_FACTOR_HPP
#define PRIMEDIV_MULTIVARIATE_FACTOR_HPP

#include <cstdint>
#include <optional>
#include <string>

#include <primediv/mpoly.hpp>

namespace primediv
{

struct FactorBudget {
    // Largest accepted total degree.
    std::int64_t max_total_degree = 24;
    // Candidate divisors examined (sub-multisets of univariate factors).
    std::uint64_t max_candidates = 1u << 22;
};

enum class FactorVerdict { irreducible, reducible, undecided };

std::string to_string(FactorVerdict v);

struct FactorSearch {
    FactorVerdict verdict;
    // reducible: f = g * h with g the smallest proper factor (by total
    // degree, then terms), scaled to leading coefficient 1.
    std::optional<MPoly> g;
    std::optional<MPoly> h;
    std::uint64_t candidates = 0; // divisor candidates tested
    std::string transcript;       // one-line summary of the search
};

// Exhaustive search for a proper factor of a polynomial (nonnegative
// exponents). A variable dividing f is reported directly. Otherwise f is
// mapped to K[x] by the Kronecker substitution with radix deg_i(f) + 1, so
// that every divisor of f maps to a divisor of the image; each product of
// univariate irreducible factors of degree at most half the image degree is
// decoded and tried by exact division. Throws InvalidInput on constants and
// Laurent input.
FactorSearch factor_search(const MPoly &f, const FactorBudget &budget = {});

} // namespace primediv

#endif
