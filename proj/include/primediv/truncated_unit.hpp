#ifndef PRIMEDIV_TRUNCATED_UNIT_HPP
#define PRIMEDIV_TRUNCATED_UNIT_HPP

#include <cstdint>
#include <vector>

#include <primediv/field.hpp>
#include <primediv/unipoly.hpp>

namespace primediv
{

// 1 + c_1 X + ... + c_m X^m, an element of the group of 1-units modulo X^{m+1}.
class TruncatedUnit
{
public:
    using Elem = Field::Elem;

    // coeffs = (c_1, ..., c_m); m = coeffs.size().
    TruncatedUnit(FieldRef field, std::vector<Elem> coeffs);

    static TruncatedUnit identity(FieldRef field, unsigned m);
    // f / f(0) truncated at degree m; throws InvalidInput when f(0) = 0.
    static TruncatedUnit from_poly(const UniPoly &f, unsigned m);

    const FieldRef &field() const noexcept { return field_; }
    unsigned m() const noexcept { return static_cast<unsigned>(c_.size()); }
    // coeff(0) = 1.
    Elem coeff(unsigned i) const noexcept { return i == 0 ? Elem{1} : c_[i - 1]; }
    void set(unsigned i, Elem v) noexcept { c_[i - 1] = v; }
    bool is_identity() const noexcept;
    // The polynomial 1 + sum c_i X^i.
    UniPoly lift() const;

    friend bool operator==(const TruncatedUnit &a, const TruncatedUnit &b) noexcept
    {
        return same_field(a.field_, b.field_) && a.c_ == b.c_;
    }

private:
    FieldRef field_;
    std::vector<Elem> c_;
};

// Product with terms above X^m discarded. Throws InvalidInput on m or field mismatch.
TruncatedUnit otimes(const TruncatedUnit &u, const TruncatedUnit &v);

// l_1 = -k_1, l_j = -sum_{a+b=j, b != j} k_a l_b.
TruncatedUnit unit_inverse(const TruncatedUnit &u);

TruncatedUnit unit_pow(const TruncatedUnit &u, std::uint64_t e);

} // namespace primediv

#endif
