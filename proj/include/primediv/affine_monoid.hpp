#ifndef PRIMEDIV_AFFINE_MONOID_HPP
#define PRIMEDIV_AFFINE_MONOID_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <primediv/numerical_monoid.hpp>

namespace primediv
{

using IntVec = std::vector<std::int64_t>;

// Coordinates 1..s range over N0, coordinates s+1..s+t over Z.
struct Split {
    unsigned s = 0;
    unsigned t = 0;
    friend bool operator==(const Split &, const Split &) = default;
};

enum class LatticePolicy {
    require_full, // construction fails unless the generators span Z^n
    record,       // keep the elementary divisors; cic_verify refutes later
};

enum class Membership { member, non_member, undecided };

struct MembershipBudget {
    std::size_t max_states = 2'000'000;
    // Search radius in Z-coordinates when generators have a pure torus part.
    std::int64_t torus_radius = 64;
};

// Present when every generator lies on a coordinate axis, so that
// S = S_1 + ... + S_s + Z^t with numerical S_i.
struct ProductStructure {
    std::vector<NumericalMonoid> factors;
};

// Finitely generated submonoid of N0^s + Z^t with torsion-free quotient group.
class AffineMonoid
{
public:
    // Canonicalizes generators: lexicographic order, zero and duplicates
    // dropped, redundant generators removed when membership decides them.
    // Throws InvalidInput on rank/split mismatch, a generator outside
    // N0^s + Z^t, or (under require_full) a quotient group other than Z^n.
    static AffineMonoid create(unsigned rank, Split split, std::vector<IntVec> generators,
                               LatticePolicy policy = LatticePolicy::require_full);
    // S as a rank-one affine monoid with split (1, 0).
    static AffineMonoid from_numerical(const NumericalMonoid &s);

    unsigned rank() const noexcept { return rank_; }
    Split split() const noexcept { return split_; }
    const std::vector<IntVec> &generators() const noexcept { return gens_; }
    const std::vector<std::int64_t> &elementary_divisors() const noexcept { return elementary_divisors_; }
    bool full_lattice() const noexcept;
    const std::optional<ProductStructure> &product() const noexcept { return product_; }

    // Exact when every generator has a nonzero N0 part, when S is a product,
    // or when the generators with zero N0 part generate a group; otherwise a
    // bounded search that may answer undecided.
    // Decided answers are memoized; safe for concurrent callers.
    Membership membership(const IntVec &x, const MembershipBudget &budget = {}) const;
    // As membership(), throwing Undecided instead of returning it.
    bool contains(const IntVec &x, const MembershipBudget &budget = {}) const;

private:
    struct Cache;

    AffineMonoid() = default;
    Membership search(const IntVec &x, const MembershipBudget &budget) const;
    bool exact_search_possible() const noexcept;

    unsigned rank_ = 0;
    Split split_{};
    std::vector<IntVec> gens_;
    std::vector<std::int64_t> elementary_divisors_;
    std::optional<ProductStructure> product_;
    std::shared_ptr<Cache> cache_;
};

// Witness that the complete integral closure is N0^s + Z^t: a base point c and
// per-direction periods P with P*d in S and c + n*d in S for n in [0, P-1].
struct CicDirection {
    IntVec direction; // +e_i for N0 axes, +-e_j for Z axes
    std::int64_t period;
};

struct CicCertificate {
    IntVec base;
    std::vector<CicDirection> directions;
};

struct CicRefutation {
    std::string reason;
    // false: exact proof (lattice defect); true: only absent up to the budget.
    bool bounded_only;
    std::vector<std::int64_t> elementary_divisors;
};

struct CicBudget {
    std::int64_t max_period = 64;
    std::int64_t max_base = 24; // coordinate bound for the base point search
    MembershipBudget membership{};
};

using CicOutcome = std::variant<CicCertificate, CicRefutation>;

// Throws Undecided when neither a certificate nor a refutation is found.
CicOutcome cic_verify(const AffineMonoid &s, const CicBudget &budget = {});

// Independent re-check of every claimed element through membership().
bool verify_certificate(const AffineMonoid &s, const CicCertificate &cert);

struct HeightOnePrime {
    unsigned index; // p_i = {a in S : a_i != 0}, 1-based
};

// The s height-one primes p_1..p_s; the certificate is the precondition.
std::vector<HeightOnePrime> height_one_primes(const AffineMonoid &s, const CicCertificate &cert);

} // namespace primediv

#endif
