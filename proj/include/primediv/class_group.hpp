#ifndef PRIMEDIV_CLASS_GROUP_HPP
#define PRIMEDIV_CLASS_GROUP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <primediv/field.hpp>
#include <primediv/numerical_monoid.hpp>
#include <primediv/truncated_unit.hpp>
#include <primediv/unipoly.hpp>

namespace primediv
{

// Canonical coset representative of C/D, recorded by its coefficients at
// the gaps of S in increasing gap order.
struct ClassLabel {
    std::vector<Field::Elem> values;

    bool is_identity() const noexcept;
    // Base-q digits over the gap order; "" for the trivial group.
    std::string digits() const;
    friend bool operator==(const ClassLabel &, const ClassLabel &) = default;
    friend auto operator<=>(const ClassLabel &, const ClassLabel &) = default;
};

// Largest group that label enumeration (census, coset checks) will visit.
inline constexpr std::uint64_t label_enumeration_budget = 1'000'000;

// The divisor class group of K[S] for a numerical monoid S over a finite
// field K, realized as C/D: C the 1-units truncated at m = max(f(S), 0), D
// the units whose nonconstant support lies in S.
//
// A class is canonicalized by walking i in S n [1, m] upwards and
// multiplying by the kernel element 1 - c_i X^i; this clears position i and
// leaves every lower coefficient untouched, so the representative supported
// on the gaps is unique.
class ClassGroup
{
public:
    ClassGroup(NumericalMonoid s, FieldRef field);

    const NumericalMonoid &monoid() const noexcept { return s_; }
    const FieldRef &field() const noexcept { return field_; }
    unsigned m() const noexcept { return m_; }
    const std::vector<unsigned> &gaps() const noexcept { return s_.gaps(); }
    // S n [1, m]: positions where kernel elements may be nonzero.
    const std::vector<unsigned> &kernel_positions() const noexcept { return kernel_positions_; }

    // q^{#gaps}, q^{#kernel positions} and q^m when they fit 64 bits.
    std::optional<std::uint64_t> order() const noexcept;
    std::optional<std::uint64_t> kernel_size() const noexcept;
    // Exact decimal forms, independent of overflow.
    std::string order_decimal() const;
    std::string kernel_size_decimal() const;

    bool in_kernel(const TruncatedUnit &u) const;

    struct Canonical {
        TruncatedUnit representative;
        // Product of the 1 - c_i X^i factors, truncated at degree m; lies in K[S].
        UniPoly multiplier;
    };
    Canonical canonicalize_with_multiplier(const TruncatedUnit &u) const;
    TruncatedUnit canonicalize(const TruncatedUnit &u) const;

    ClassLabel label_of(const TruncatedUnit &u) const;
    // The gap-supported unit carrying this label.
    TruncatedUnit lift(const ClassLabel &label) const;
    // Class of the prime divisor fK[X] n K[S]; throws InvalidInput when f(0) = 0.
    ClassLabel class_of(const UniPoly &f) const;

    ClassLabel identity() const;
    ClassLabel combine(const ClassLabel &a, const ClassLabel &b) const;
    ClassLabel inverse(const ClassLabel &a) const;
    ClassLabel power(const ClassLabel &a, std::uint64_t e) const;

    // Labels indexed as base-q numbers over the gap order (first gap most
    // significant). Throws Undecided above label_enumeration_budget.
    std::uint64_t label_count() const;
    ClassLabel label_at(std::uint64_t index) const;
    std::uint64_t index_of(const ClassLabel &label) const;

private:
    NumericalMonoid s_;
    FieldRef field_;
    unsigned m_;
    std::vector<unsigned> kernel_positions_;
};

// D as a predicate with its exact size; elements materialized on request.
struct KernelSubgroup {
    std::vector<unsigned> positions;
    std::string size_decimal;
    std::optional<std::vector<TruncatedUnit>> elements; // when size <= 10^6
};

KernelSubgroup kernel_subgroup(const ClassGroup &g);

// Element-order census of C/D. order_counts[j] = number of classes of order
// exactly p^j.
struct OrderCensus {
    std::vector<std::uint64_t> order_counts;
};

// OpenMP-parallel over labels; the reduction is order independent.
OrderCensus order_census(const ClassGroup &g);
OrderCensus order_census_serial(const ClassGroup &g);

// Invariant factors (prime powers, ascending) recovered from the census;
// their product is the group order. Empty for the trivial group.
std::vector<std::uint64_t> invariant_factors(const ClassGroup &g);
std::vector<std::uint64_t> invariant_factors_from_census(const OrderCensus &census, unsigned p);

// The epimorphism C_v(K[S]) -> C_v(K[T]) for S inside T. Throws InvalidInput
// when S is not contained in T or the fields differ.
ClassLabel theta(const ClassGroup &from, const ClassGroup &to, const ClassLabel &label);

// g = 1 + l_1 X + ... + l_m X^m with f*g having no terms at degrees 1..m,
// hence f*g in Reg(K[S]). Throws InvalidInput when f(0) = 0.
UniPoly complete_to_regular(const UniPoly &f, const NumericalMonoid &s);

// Regular elements: constant term nonzero and support inside S.
bool is_regular(const UniPoly &f, const NumericalMonoid &s);

// f * b = unit * g * a with a, b regular.
struct SameClassWitness {
    UniPoly a;
    UniPoly b;
    Field::Elem unit;
};

struct DifferentClasses {
    ClassLabel f_label;
    ClassLabel g_label;
};

using SameClassResult = std::variant<SameClassWitness, DifferentClasses>;

// Builds and verifies the witness; throws InvariantViolation if the exact
// check fails and InvalidInput when f(0) or g(0) is zero.
SameClassResult same_class_witness(const UniPoly &f, const UniPoly &g, const ClassGroup &group);

// Decimal q^e.
std::string pow_decimal(std::uint64_t q, unsigned e);

} // namespace primediv

#endif
