#ifndef PRIMEDIV_DISTRIBUTION_HPP
#define PRIMEDIV_DISTRIBUTION_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <primediv/class_group.hpp>
#include <primediv/irreducible.hpp>

namespace primediv
{

struct ClassRow {
    ClassLabel label;
    std::vector<std::uint64_t> counts; // counts[d - 1] for degree d
    UniPoly first;                     // least degree, then least coefficient string
};

struct DistributionReport {
    unsigned dmax = 0;
    std::vector<ClassRow> rows;                // hit classes, by label
    std::vector<std::uint64_t> degree_totals;  // irreducibles with f(0) = 1 per degree
    std::vector<ClassLabel> unhit;             // listed when the group is enumerable
    bool unhit_listed = false;
    std::string unhit_count;                   // decimal
};

// Supplies the irreducibles of one degree with constant term 1, in
// lexicographic coefficient order (e.g. from the on-disk cache).
using IrreducibleSource = std::function<std::vector<UniPoly>(unsigned degree)>;

// Classifies every irreducible with constant term 1 (one per associate
// class with f(0) != 0) of degree 1..dmax. The per-degree totals are checked
// against the necklace count; a mismatch throws InvariantViolation. Without a
// source the irreducibles are enumerated directly.
DistributionReport distribution(const ClassGroup &group, unsigned dmax, const IrreducibleSource &source = {});

// Labels of the degree-one irreducibles 1 + aX, a != 0; sorted, distinct.
std::vector<ClassLabel> linear_only_classes(const ClassGroup &group);

struct DegreeDensity {
    unsigned degree;
    std::uint64_t candidates; // polynomials of this degree carrying the prefix
    std::uint64_t hits;       // irreducible ones
    double expected;          // heuristic (I_d - [d = 1]) / q^m
};

struct PrefixSearch {
    std::vector<UniPoly> found;
    std::vector<DegreeDensity> degrees;
    // false when the schedule ran out before `want` polynomials were found;
    // this never claims that no further irreducible exists.
    bool complete = false;
};

// Sweeps degrees min_degree..max_degree in order, collecting irreducibles
// with the prefix in lexicographic order until `want` are found.
PrefixSearch find_with_prefix(const FieldRef &field, const CoefficientPrefix &prefix, std::size_t want,
                              unsigned min_degree, unsigned max_degree);

} // namespace primediv

#endif
