#ifndef PRIMEDIV_MPOLY_HPP
#define PRIMEDIV_MPOLY_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <primediv/affine_monoid.hpp>
#include <primediv/field.hpp>
#include <primediv/unipoly.hpp>

namespace primediv
{

// Sparse Laurent polynomial in n variables over a finite field. Terms are
// kept in lexicographic exponent order; zero coefficients are never stored.
class MPoly
{
public:
    using Elem = Field::Elem;
    using Terms = std::map<IntVec, Elem>;

    MPoly(FieldRef field, unsigned nvars);
    static MPoly constant(FieldRef field, unsigned nvars, Elem c);
    static MPoly monomial(FieldRef field, Elem c, IntVec exponent);

    const FieldRef &field() const noexcept { return field_; }
    unsigned nvars() const noexcept { return nvars_; }
    const Terms &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    Elem coeff(const IntVec &e) const;
    // Adds c to the coefficient at e.
    void add_term(const IntVec &e, Elem c);

    // Every exponent nonnegative.
    bool is_polynomial() const noexcept;
    // Largest exponent sum; -1 for zero.
    std::int64_t total_degree() const noexcept;
    // Largest exponent of variable i; requires a nonzero polynomial.
    std::int64_t degree_in(unsigned i) const;
    // Componentwise minimum exponent (zeros for the zero polynomial).
    IntVec min_exponents() const;
    // Lexicographically largest exponent and its coefficient.
    std::pair<IntVec, Elem> leading_term() const;

    MPoly scaled(Elem s) const;
    // Multiplies by X^shift.
    MPoly shifted(const IntVec &shift) const;
    // Scaled so the leading coefficient is 1.
    MPoly monic() const;

    friend MPoly operator+(const MPoly &a, const MPoly &b);
    friend MPoly operator-(const MPoly &a, const MPoly &b);
    friend MPoly operator*(const MPoly &a, const MPoly &b);
    friend bool operator==(const MPoly &a, const MPoly &b) noexcept;

    // Sparse literal "c:e1,...,en;c:e1,...,en" with decimal coefficient
    // codes and signed exponents; "0" for the zero polynomial. Repeated
    // exponents are summed.
    static MPoly parse(FieldRef field, unsigned nvars, std::string_view literal);
    std::string to_literal() const;
    // Readable form such as "1 + X1^2*X2^2"; Y-variables are numbered after
    // the first s.
    std::string to_string(unsigned s) const;

private:
    void require_compatible(const MPoly &other) const;

    FieldRef field_;
    unsigned nvars_;
    Terms terms_;
};

// Quotient when g divides f in the polynomial ring; requires both to be
// polynomials. Throws InvalidInput on g = 0 or a rank mismatch.
std::optional<MPoly> exact_divide(const MPoly &f, const MPoly &g);

// Multiplication by the smallest monomial that makes every exponent
// nonnegative; shift records the monomial so supports can be mapped back.
struct LaurentNormal {
    MPoly poly;
    IntVec shift;
};
LaurentNormal laurent_normalize(const MPoly &f);

// Removes the monomial content in the listed variables (unit variables of
// K[X, Y^{+-1}]), so their minimum exponent becomes 0.
LaurentNormal strip_monomial_content(const MPoly &f, const std::vector<unsigned> &variables);

// f(x) -> f(x, x^{D_1}, x^{D_1 D_2}, ...) with weights given by the caller.
UniPoly kronecker_image(const MPoly &f, const std::vector<std::int64_t> &weights);
// Inverse of kronecker_image for polynomials with deg_i < radix_i.
MPoly kronecker_decode(const UniPoly &u, const std::vector<std::int64_t> &radix);

enum class SupportRegion { monoid, conductor, monoid_minus_conductor };

std::string to_string(SupportRegion r);

struct SupportReport {
    bool contained = true;
    std::vector<IntVec> offending; // lexicographic
};

// Exact per-exponent check against S, its conductor (through the closure
// certificate) or their difference. Undecided membership propagates.
SupportReport support_in(const MPoly &f, const AffineMonoid &s, const CicCertificate &cert, SupportRegion region);

} // namespace primediv

#endif
