#ifndef PRIMEDIV_FIELD_HPP
#define PRIMEDIV_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace primediv
{

class Field;
using FieldRef = std::shared_ptr<const Field>;

// A finite field GF(p^k) with precomputed operation tables.
//
// Elements are encoded as integers in [0, q): the element
// d_0 + d_1*a + ... + d_{k-1}*a^{k-1} (a a root of the modulus) has code
// d_0 + d_1*p + ... + d_{k-1}*p^{k-1}. Code 0 is zero and code 1 is one.
// Enumeration order everywhere in the library is the order of these codes.
//
// Extension fields use a fixed modulus table (Conway polynomials), so that
// element codes and therefore enumeration order are reproducible.
class Field
{
public:
    using Elem = std::uint8_t;

    // Largest supported order; bounded by the single-character digit alphabet.
    static constexpr unsigned max_order = 61;

    static FieldRef make(unsigned p, unsigned k = 1);
    // Accepts any prime power q <= max_order.
    static FieldRef of_order(unsigned q);

    unsigned characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return k_; }
    unsigned order() const noexcept { return q_; }
    // Coefficients (over GF(p), low to high) of the defining modulus; {0, 1}
    // (i.e. X) for prime fields.
    const std::vector<Elem> &modulus() const noexcept { return modulus_; }
    std::string name() const;

    Elem add(Elem a, Elem b) const noexcept { return add_[a * q_ + b]; }
    Elem sub(Elem a, Elem b) const noexcept { return add_[a * q_ + neg_[b]]; }
    Elem mul(Elem a, Elem b) const noexcept { return mul_[a * q_ + b]; }
    Elem neg(Elem a) const noexcept { return neg_[a]; }
    // inv(0) is undefined; callers check.
    Elem inv(Elem a) const noexcept { return inv_[a]; }
    Elem div(Elem a, Elem b) const noexcept { return mul(a, inv_[b]); }
    Elem pow(Elem a, std::uint64_t e) const noexcept;
    // The unique b with b^p = a.
    Elem pth_root(Elem a) const noexcept { return root_[a]; }

    // Base-q digit used in coefficient strings: 0-9, a-z, A-Z.
    static char digit(Elem a);
    // Returns false on a character outside the alphabet or >= q.
    bool parse_digit(char c, Elem &out) const noexcept;

    friend bool operator==(const Field &a, const Field &b) noexcept
    {
        return a.p_ == b.p_ && a.k_ == b.k_;
    }

private:
    Field(unsigned p, unsigned k, std::vector<Elem> modulus);

    unsigned p_;
    unsigned k_;
    unsigned q_;
    std::vector<Elem> modulus_;
    std::vector<Elem> add_;
    std::vector<Elem> mul_;
    std::vector<Elem> neg_;
    std::vector<Elem> inv_;
    std::vector<Elem> root_;
};

bool same_field(const FieldRef &a, const FieldRef &b) noexcept;

// Throws InvalidInput when q is not a supported prime power; returns (p, k).
std::pair<unsigned, unsigned> split_prime_power(unsigned q);

} // namespace primediv

#endif
