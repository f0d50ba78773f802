#ifndef PRIMEDIV_CONDUCTOR_HPP
#define PRIMEDIV_CONDUCTOR_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <primediv/affine_monoid.hpp>
#include <primediv/numerical_monoid.hpp>

namespace primediv
{

enum class ConductorKind {
    numerical_threshold,  // [threshold, oo)
    affine_generator_set, // exactly the union of g + closure over the generators
    box_certified_partial // generators certified, completeness only inside the box
};

std::string to_string(ConductorKind k);

struct ConductorIdeal {
    ConductorKind kind;
    std::int64_t threshold = 0;     // numerical case: f(S) + 1
    std::vector<IntVec> generators; // affine cases; Z-coordinates are 0
    std::int64_t box = 0;           // partial case: N0 coordinates searched in [0, box]

    bool exact() const noexcept { return kind != ConductorKind::box_certified_partial; }
    // Membership in the union of g + closure over the listed generators
    // (the numerical case compares with the threshold). For the partial kind
    // this is a lower bound of the true conductor.
    bool covers(const IntVec &x, unsigned s) const;
};

ConductorIdeal conductor(const NumericalMonoid &s);

// Exact for direct sums of numerical monoids with Z^t; otherwise box-certified.
ConductorIdeal conductor(const AffineMonoid &s, const CicCertificate &cert, std::int64_t box = 8);

// x lies in the conductor iff x + r is in S for every r in the period box of
// the certificate. Exact given a valid certificate.
bool in_conductor(const AffineMonoid &s, const CicCertificate &cert, const IntVec &x);

// Conductor points with N0 part in [0, box]^s and Z part 0, by testing every
// point independently (OpenMP-parallel). Sorted lexicographically.
std::vector<IntVec> conductor_points(const AffineMonoid &s, const CicCertificate &cert, std::int64_t box);

// Serial reference: greatest fixed point of F -> {x in F : x + h in F or in
// the certified tail, for every closure generator h}, started at S inside
// [0, box]^s x [-box, box]^t; returns the slice with Z part 0.
std::vector<IntVec> conductor_points_fixed_point(const AffineMonoid &s, const CicCertificate &cert,
                                                 std::int64_t box);

// Minimal elements for the order x <= y iff y - x lies in N0^s + Z^t.
std::vector<IntVec> minimal_elements(std::vector<IntVec> points, unsigned s);

enum class Branch { constructive, kainrath, undecided };

std::string to_string(Branch b);

// constructive iff every conductor generator has positive N0 coordinates,
// i.e. every height-one prime contains the conductor.
Branch branch_classify(const NumericalMonoid &s);
Branch branch_classify(const AffineMonoid &s, const ConductorIdeal &f);

} // namespace primediv

#endif
