#include <primediv/truncated_unit.hpp>

#include <algorithm>
#include <string>

#include <primediv/error.hpp>

namespace primediv
{

TruncatedUnit::TruncatedUnit(FieldRef field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs))
{
    for (auto c : c_) {
        if (c >= field_->order()) {
            throw InvalidInput("coefficient code " + std::to_string(c) + " out of range for " + field_->name());
        }
    }
}

TruncatedUnit TruncatedUnit::identity(FieldRef field, unsigned m)
{
    return TruncatedUnit(std::move(field), std::vector<Elem>(m, 0));
}

TruncatedUnit TruncatedUnit::from_poly(const UniPoly &f, unsigned m)
{
    if (f.constant_term() == 0) {
        throw InvalidInput("constant term must be nonzero (not coprime to the conductor prime)");
    }
    const UniPoly g = f.normalized_constant();
    std::vector<Elem> c(m);
    for (unsigned i = 1; i <= m; ++i) {
        c[i - 1] = g.coeff(i);
    }
    return TruncatedUnit(f.field(), std::move(c));
}

bool TruncatedUnit::is_identity() const noexcept
{
    return std::all_of(c_.begin(), c_.end(), [](Elem c) { return c == 0; });
}

UniPoly TruncatedUnit::lift() const
{
    std::vector<Elem> c(c_.size() + 1);
    c[0] = 1;
    std::copy(c_.begin(), c_.end(), c.begin() + 1);
    return UniPoly(field_, std::move(c));
}

TruncatedUnit otimes(const TruncatedUnit &u, const TruncatedUnit &v)
{
    if (!same_field(u.field(), v.field()) || u.m() != v.m()) {
        throw InvalidInput("truncated units with different fields or truncation degrees");
    }
    const auto &F = *u.field();
    const unsigned m = u.m();
    TruncatedUnit r = TruncatedUnit::identity(u.field(), m);
    for (unsigned i = 1; i <= m; ++i) {
        Field::Elem acc = 0;
        for (unsigned a = 0; a <= i; ++a) {
            acc = F.add(acc, F.mul(u.coeff(a), v.coeff(i - a)));
        }
        r.set(i, acc);
    }
    return r;
}

TruncatedUnit unit_inverse(const TruncatedUnit &u)
{
    const auto &F = *u.field();
    const unsigned m = u.m();
    TruncatedUnit l = TruncatedUnit::identity(u.field(), m);
    for (unsigned j = 1; j <= m; ++j) {
        Field::Elem acc = 0;
        for (unsigned b = 0; b < j; ++b) {
            acc = F.add(acc, F.mul(u.coeff(j - b), l.coeff(b)));
        }
        l.set(j, F.neg(acc));
    }
    return l;
}

TruncatedUnit unit_pow(const TruncatedUnit &u, std::uint64_t e)
{
    TruncatedUnit result = TruncatedUnit::identity(u.field(), u.m());
    TruncatedUnit base = u;
    while (e != 0) {
        if (e & 1u) {
            result = otimes(result, base);
        }
        e >>= 1;
        if (e != 0) {
            base = otimes(base, base);
        }
    }
    return result;
}

} // namespace primediv
