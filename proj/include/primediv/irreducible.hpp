#ifndef PRIMEDIV_IRREDUCIBLE_HPP
#define PRIMEDIV_IRREDUCIBLE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include <primediv/field.hpp>
#include <primediv/unipoly.hpp>

namespace primediv
{

// Rabin's test: f | X^{q^d} - X and gcd(f, X^{q^{d/l}} - X) = 1 for every
// prime l | d. Throws InvalidInput for constants.
bool is_irreducible(const UniPoly &f);

// Number of monic irreducibles of degree d over GF(q): (1/d) sum_{e|d} mu(e) q^{d/e}.
std::uint64_t monic_irreducible_count(std::uint64_t q, unsigned d);

// Number of irreducibles of degree d with constant term equal to a fixed
// nonzero value; one per associate class not containing X.
inline std::uint64_t irreducible_count_nonzero_constant(std::uint64_t q, unsigned d)
{
    return monic_irreducible_count(q, d) - (d == 1 ? 1 : 0);
}

// Prescribed low-order coefficients (a_0, ..., a_m) with a_0 != 0.
class CoefficientPrefix
{
public:
    using Elem = Field::Elem;

    // Throws InvalidInput when empty, when a_0 = 0, or on out-of-range codes.
    CoefficientPrefix(const FieldRef &field, std::vector<Elem> values);

    std::span<const Elem> values() const noexcept { return values_; }
    // m, the index of the last prescribed coefficient.
    std::size_t last_index() const noexcept { return values_.size() - 1; }
    Elem operator[](std::size_t i) const noexcept { return values_[i]; }
    bool matches(const UniPoly &f) const noexcept;

private:
    std::vector<Elem> values_;
};

// Number of degree-d candidates carrying the prefix (0 or 1 when d <= m,
// else (q-1) q^{d-m-1}). Throws Undecided when the count does not fit the
// enumeration budget.
std::uint64_t prefix_candidate_count(const FieldRef &field, unsigned degree, const CoefficientPrefix &prefix);

// The candidate with the given index. Indices follow the lexicographic order
// of the coefficient string c_0 c_1 ... c_d, so sorting by index sorts the
// output.
UniPoly prefix_candidate(const FieldRef &field, unsigned degree, const CoefficientPrefix &prefix, std::uint64_t index);

// All irreducibles of exactly this degree whose coefficients at X^0..X^m
// equal the prefix (coefficients above the degree count as zero), in
// lexicographic coefficient order. OpenMP-parallel over candidates; output
// is independent of the thread count.
std::vector<UniPoly> irreducibles_with_prefix(const FieldRef &field, unsigned degree,
                                              const CoefficientPrefix &prefix);

// Single-threaded reference for irreducibles_with_prefix.
std::vector<UniPoly> irreducibles_with_prefix_serial(const FieldRef &field, unsigned degree,
                                                     const CoefficientPrefix &prefix);

// Degrees min_degree..max_degree concatenated (degree-major).
std::vector<UniPoly> enumerate_irreducibles(const FieldRef &field, unsigned min_degree, unsigned max_degree,
                                            const CoefficientPrefix &prefix);

} // namespace primediv

#endif
