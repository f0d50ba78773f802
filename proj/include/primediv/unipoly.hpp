#ifndef PRIMEDIV_UNIPOLY_HPP
#define PRIMEDIV_UNIPOLY_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <primediv/field.hpp>

namespace primediv
{

// Dense univariate polynomial over a finite field. Coefficients are stored
// low to high without trailing zeros; the zero polynomial is empty.
class UniPoly
{
public:
    using Elem = Field::Elem;

    explicit UniPoly(FieldRef field, std::vector<Elem> coeffs = {});

    static UniPoly constant(FieldRef field, Elem c);
    static UniPoly monomial(FieldRef field, Elem c, std::size_t degree);
    static UniPoly x(FieldRef field) { return monomial(std::move(field), 1, 1); }

    const FieldRef &field() const noexcept { return field_; }
    // -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    Elem coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : Elem{0}; }
    Elem constant_term() const noexcept { return coeff(0); }
    Elem leading() const noexcept { return c_.empty() ? Elem{0} : c_.back(); }
    std::span<const Elem> coeffs() const noexcept { return c_; }

    // Multiply through by a scalar.
    UniPoly scaled(Elem s) const;
    // Scaled to leading coefficient 1 (zero stays zero).
    UniPoly monic() const;
    // Scaled to constant term 1; requires a nonzero constant term.
    UniPoly normalized_constant() const;
    // Coefficients of degree <= n only.
    UniPoly truncated(std::size_t n) const;
    Elem eval(Elem x) const noexcept;
    UniPoly derivative() const;

    friend UniPoly operator+(const UniPoly &a, const UniPoly &b);
    friend UniPoly operator-(const UniPoly &a, const UniPoly &b);
    friend UniPoly operator*(const UniPoly &a, const UniPoly &b);
    friend bool operator==(const UniPoly &a, const UniPoly &b);

    // Base-q digit string c_0 c_1 ... c_d; "0" for the zero polynomial.
    std::string digits() const;
    static UniPoly from_digits(FieldRef field, std::string_view s);
    // Human-readable form such as "1+X^2+X^3" (coefficients as field codes).
    std::string to_string() const;

private:
    void trim() noexcept;

    FieldRef field_;
    std::vector<Elem> c_;
};

struct DivMod {
    UniPoly quotient;
    UniPoly remainder;
};

// Throws InvalidInput on division by zero or mixed fields.
DivMod divmod(const UniPoly &a, const UniPoly &b);
UniPoly operator%(const UniPoly &a, const UniPoly &b);
// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly &a, const UniPoly &b);
// base^e mod m.
UniPoly powmod(UniPoly base, std::uint64_t e, const UniPoly &m);
UniPoly mulmod(const UniPoly &a, const UniPoly &b, const UniPoly &m);

// Throws InvalidInput when the operands live over different fields.
void require_same_field(const UniPoly &a, const UniPoly &b);

} // namespace primediv

#endif
