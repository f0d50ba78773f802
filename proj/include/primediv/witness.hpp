#ifndef PRIMEDIV_WITNESS_HPP
#define PRIMEDIV_WITNESS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <primediv/affine_monoid.hpp>
#include <primediv/conductor.hpp>
#include <primediv/mpoly.hpp>
#include <primediv/multivariate_factor.hpp>

namespace primediv
{

struct DivisibilityGate {
    unsigned index;             // 1-based N0 coordinate
    bool prime_contains_conductor;
    bool divides;               // X_i | f in K[X, Y^{+-1}]
    bool passes() const noexcept { return !(prime_contains_conductor && divides); }
};

// One entry per height-one prime p_1..p_s.
std::vector<DivisibilityGate> monomial_divisibility_check(const MPoly &f, const AffineMonoid &s,
                                                          const ConductorIdeal &conductor);

struct WitnessBudget {
    std::uint64_t max_specializations = 4096;
    std::uint64_t max_m = 4096;
    FactorBudget factor{};
};

struct WitnessResult {
    MPoly f;
    unsigned m = 0;
    MPoly a;                 // specialization of T, free of X_1
    MPoly g;                 // f + X_1^m...X_s^m + a X_1^{m+1} X_2^m...X_s^m
    MPoly g_normalized;      // g with its Y-content removed, as factored
    FactorSearch irreducibility;
    SupportReport difference_in_conductor; // supp(g - f)
    bool agrees_off_conductor = false;     // same coefficients on S minus the conductor
    std::uint64_t specializations_tried = 0;
    std::vector<std::string> assumptions;
};

// G(T) = f + X_1^m...X_s^m + T X_1^{m+1} X_2^m...X_s^m with m the least integer
// above deg_{X_1} f such that X_1^m...X_s^m lies in the conductor and
// char K does not divide m + 1; T runs over constants, then polynomials in
// X_2..X_s, Y_1..Y_t by increasing total degree and lexicographic
// coefficients. Returns the first specialization certified irreducible.
//
// Throws InvalidInput for s = 0, rank 1, the kainrath branch, exponents of f
// outside N0^s + Z^t, or a failed divisibility gate; Undecided when the
// branch is undecided or the budget runs out.
WitnessResult witness_highdim(const MPoly &f, const AffineMonoid &s, const CicCertificate &cert,
                              const ConductorIdeal &conductor, const WitnessBudget &budget = {});

// Recomputes every certificate of r that does not need a factor search:
// the shape of g, supp(g - f) in the conductor, agreement off the conductor.
bool verify_witness(const WitnessResult &r, const AffineMonoid &s, const CicCertificate &cert);

} // namespace primediv

#endif
