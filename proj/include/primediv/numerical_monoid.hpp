#ifndef PRIMEDIV_NUMERICAL_MONOID_HPP
#define PRIMEDIV_NUMERICAL_MONOID_HPP

#include <cstdint>
#include <vector>

namespace primediv
{

// A cofinite submonoid S of (N0, +), held through its minimal generators
// and its Apery set with respect to the multiplicity.
class NumericalMonoid
{
public:
    // Largest accepted generator.
    static constexpr std::uint64_t max_generator = 100000;

    // Canonicalizes (sorts, drops 0, duplicates and redundant generators).
    // Throws InvalidInput for an empty set or gcd != 1; inputs with a common
    // divisor are rejected rather than divided through.
    static NumericalMonoid from_generators(std::vector<std::uint64_t> gens);

    // The monoid {0} u [m+1, oo), whose gap set is [1, m].
    static NumericalMonoid ordinary(unsigned m);

    const std::vector<unsigned> &generators() const noexcept { return gens_; }
    const std::vector<unsigned> &gaps() const noexcept { return gaps_; }
    // -1 for S = N0.
    int frobenius() const noexcept { return frobenius_; }
    // max(f(S), 0): truncation degree for the class group.
    unsigned truncation_degree() const noexcept { return frobenius_ < 0 ? 0u : static_cast<unsigned>(frobenius_); }
    unsigned genus() const noexcept { return static_cast<unsigned>(gaps_.size()); }
    unsigned multiplicity() const noexcept { return gens_.front(); }
    // apery()[r] = least element of S congruent to r mod multiplicity().
    const std::vector<std::uint64_t> &apery() const noexcept { return apery_; }
    // Conductor [f(S)+1, oo) as its threshold.
    unsigned conductor_threshold() const noexcept { return static_cast<unsigned>(frobenius_ + 1); }

    bool contains(std::int64_t n) const noexcept
    {
        return n >= 0 && static_cast<std::uint64_t>(n) >= apery_[static_cast<std::uint64_t>(n) % gens_.front()];
    }
    bool is_subset_of(const NumericalMonoid &other) const noexcept;

    friend bool operator==(const NumericalMonoid &a, const NumericalMonoid &b) noexcept
    {
        return a.gens_ == b.gens_;
    }

private:
    NumericalMonoid() = default;

    std::vector<unsigned> gens_;
    std::vector<unsigned> gaps_;
    std::vector<std::uint64_t> apery_;
    int frobenius_ = -1;
};

} // namespace primediv

#endif
