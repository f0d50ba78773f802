#include <primediv/class_group.hpp>

#include <algorithm>
#include <string>

#include <omp.h>

#include <primediv/error.hpp>

namespace primediv
{

namespace
{

std::optional<std::uint64_t> checked_pow(std::uint64_t q, std::size_t e)
{
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (r > UINT64_MAX / q) {
            return std::nullopt;
        }
        r *= q;
    }
    return r;
}

// Exponent j with u^{p^j} in D, u given by its label.
unsigned order_exponent(const ClassGroup &g, const ClassLabel &label)
{
    const unsigned p = g.field()->characteristic();
    TruncatedUnit u = g.lift(label);
    unsigned j = 0;
    while (!g.canonicalize(u).is_identity()) {
        u = unit_pow(u, p);
        ++j;
    }
    return j;
}

} // namespace

bool ClassLabel::is_identity() const noexcept
{
    return std::all_of(values.begin(), values.end(), [](Field::Elem v) { return v == 0; });
}

std::string ClassLabel::digits() const
{
    std::string s;
    s.reserve(values.size());
    for (auto v : values) {
        s.push_back(Field::digit(v));
    }
    return s;
}

std::string pow_decimal(std::uint64_t q, unsigned e)
{
    std::vector<unsigned> d{1}; // little-endian decimal digits
    for (unsigned i = 0; i < e; ++i) {
        std::uint64_t carry = 0;
        for (auto &x : d) {
            const std::uint64_t v = x * q + carry;
            x = static_cast<unsigned>(v % 10);
            carry = v / 10;
        }
        while (carry != 0) {
            d.push_back(static_cast<unsigned>(carry % 10));
            carry /= 10;
        }
    }
    std::string s;
    for (auto it = d.rbegin(); it != d.rend(); ++it) {
        s.push_back(static_cast<char>('0' + *it));
    }
    return s;
}

ClassGroup::ClassGroup(NumericalMonoid s, FieldRef field)
    : s_(std::move(s)), field_(std::move(field)), m_(s_.truncation_degree())
{
    for (unsigned i = 1; i <= m_; ++i) {
        if (s_.contains(i)) {
            kernel_positions_.push_back(i);
        }
    }
}

std::optional<std::uint64_t> ClassGroup::order() const noexcept
{
    return checked_pow(field_->order(), gaps().size());
}

std::optional<std::uint64_t> ClassGroup::kernel_size() const noexcept
{
    return checked_pow(field_->order(), kernel_positions_.size());
}

std::string ClassGroup::order_decimal() const
{
    return pow_decimal(field_->order(), static_cast<unsigned>(gaps().size()));
}

std::string ClassGroup::kernel_size_decimal() const
{
    return pow_decimal(field_->order(), static_cast<unsigned>(kernel_positions_.size()));
}

bool ClassGroup::in_kernel(const TruncatedUnit &u) const
{
    if (u.m() != m_ || !same_field(u.field(), field_)) {
        throw InvalidInput("truncated unit does not belong to this class group");
    }
    for (auto gap : gaps()) {
        if (u.coeff(gap) != 0) {
            return false;
        }
    }
    return true;
}

ClassGroup::Canonical ClassGroup::canonicalize_with_multiplier(const TruncatedUnit &u) const
{
    if (u.m() != m_ || !same_field(u.field(), field_)) {
        throw InvalidInput("truncated unit does not belong to this class group");
    }
    const auto &F = *field_;
    TruncatedUnit r = u;
    TruncatedUnit d = TruncatedUnit::identity(field_, m_);
    for (auto i : kernel_positions_) {
        const auto c = r.coeff(i);
        if (c == 0) {
            continue;
        }
        TruncatedUnit k = TruncatedUnit::identity(field_, m_);
        k.set(i, F.neg(c));
        r = otimes(r, k);
        d = otimes(d, k);
    }
    return {std::move(r), d.lift()};
}

TruncatedUnit ClassGroup::canonicalize(const TruncatedUnit &u) const
{
    return canonicalize_with_multiplier(u).representative;
}

ClassLabel ClassGroup::label_of(const TruncatedUnit &u) const
{
    const TruncatedUnit r = canonicalize(u);
    ClassLabel l;
    l.values.reserve(gaps().size());
    for (auto gap : gaps()) {
        l.values.push_back(r.coeff(gap));
    }
    return l;
}

TruncatedUnit ClassGroup::lift(const ClassLabel &label) const
{
    if (label.values.size() != gaps().size()) {
        throw InvalidInput("label has " + std::to_string(label.values.size()) + " entries, expected " +
                           std::to_string(gaps().size()));
    }
    TruncatedUnit u = TruncatedUnit::identity(field_, m_);
    for (std::size_t i = 0; i < label.values.size(); ++i) {
        if (label.values[i] >= field_->order()) {
            throw InvalidInput("label entry out of range for " + field_->name());
        }
        u.set(gaps()[i], label.values[i]);
    }
    return u;
}

ClassLabel ClassGroup::class_of(const UniPoly &f) const
{
    if (!same_field(f.field(), field_)) {
        throw InvalidInput("polynomial over " + f.field()->name() + ", class group over " + field_->name());
    }
    return label_of(TruncatedUnit::from_poly(f, m_));
}

ClassLabel ClassGroup::identity() const
{
    return ClassLabel{std::vector<Field::Elem>(gaps().size(), 0)};
}

ClassLabel ClassGroup::combine(const ClassLabel &a, const ClassLabel &b) const
{
    return label_of(otimes(lift(a), lift(b)));
}

ClassLabel ClassGroup::inverse(const ClassLabel &a) const
{
    return label_of(unit_inverse(lift(a)));
}

ClassLabel ClassGroup::power(const ClassLabel &a, std::uint64_t e) const
{
    return label_of(unit_pow(lift(a), e));
}

std::uint64_t ClassGroup::label_count() const
{
    const auto n = order();
    if (!n || *n > label_enumeration_budget) {
        throw Undecided("class group of order " + order_decimal() + " exceeds the enumeration budget of " +
                        std::to_string(label_enumeration_budget));
    }
    return *n;
}

ClassLabel ClassGroup::label_at(std::uint64_t index) const
{
    const unsigned q = field_->order();
    ClassLabel l = identity();
    for (std::size_t i = l.values.size(); i > 0; --i) {
        l.values[i - 1] = static_cast<Field::Elem>(index % q);
        index /= q;
    }
    if (index != 0) {
        throw InvalidInput("label index out of range");
    }
    return l;
}

std::uint64_t ClassGroup::index_of(const ClassLabel &label) const
{
    std::uint64_t index = 0;
    for (auto v : label.values) {
        index = index * field_->order() + v;
    }
    return index;
}

KernelSubgroup kernel_subgroup(const ClassGroup &g)
{
    KernelSubgroup d{g.kernel_positions(), g.kernel_size_decimal(), std::nullopt};
    const auto size = g.kernel_size();
    if (!size || *size > label_enumeration_budget) {
        return d;
    }
    const unsigned q = g.field()->order();
    std::vector<TruncatedUnit> elems;
    elems.reserve(*size);
    for (std::uint64_t idx = 0; idx < *size; ++idx) {
        TruncatedUnit u = TruncatedUnit::identity(g.field(), g.m());
        std::uint64_t r = idx;
        for (std::size_t i = g.kernel_positions().size(); i > 0; --i) {
            u.set(g.kernel_positions()[i - 1], static_cast<Field::Elem>(r % q));
            r /= q;
        }
        elems.push_back(std::move(u));
    }
    d.elements = std::move(elems);
    return d;
}

OrderCensus order_census_serial(const ClassGroup &g)
{
    const std::uint64_t n = g.label_count();
    std::vector<std::uint64_t> counts(g.m() + 2, 0);
    for (std::uint64_t i = 0; i < n; ++i) {
        ++counts[order_exponent(g, g.label_at(i))];
    }
    while (counts.size() > 1 && counts.back() == 0) {
        counts.pop_back();
    }
    return {counts};
}

OrderCensus order_census(const ClassGroup &g)
{
    const std::uint64_t n = g.label_count();
    const std::size_t width = g.m() + 2;
    std::vector<std::uint64_t> counts(width, 0);
#pragma omp parallel
    {
        std::vector<std::uint64_t> local(width, 0);
#pragma omp for schedule(static)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
            ++local[order_exponent(g, g.label_at(static_cast<std::uint64_t>(i)))];
        }
#pragma omp critical
        for (std::size_t j = 0; j < width; ++j) {
            counts[j] += local[j];
        }
    }
    while (counts.size() > 1 && counts.back() == 0) {
        counts.pop_back();
    }
    return {counts};
}

std::vector<std::uint64_t> invariant_factors_from_census(const OrderCensus &census, unsigned p)
{
    auto log_p = [p](std::uint64_t n) {
        unsigned e = 0;
        while (n > 1) {
            if (n % p != 0) {
                throw InvariantViolation("census count " + std::to_string(n) + " is not a power of " +
                                         std::to_string(p));
            }
            n /= p;
            ++e;
        }
        return e;
    };
    // r[j] = number of cyclic factors of order >= p^j.
    std::vector<unsigned> r(census.order_counts.size() + 1, 0);
    std::uint64_t cumulative = 0;
    unsigned prev = 0;
    for (std::size_t j = 0; j < census.order_counts.size(); ++j) {
        cumulative += census.order_counts[j];
        const unsigned e = log_p(cumulative);
        if (j > 0) {
            r[j] = e - prev;
        }
        prev = e;
    }
    std::vector<std::uint64_t> factors;
    for (std::size_t j = 1; j + 1 < r.size(); ++j) {
        const unsigned count = r[j] - r[j + 1];
        std::uint64_t order = 1;
        for (std::size_t i = 0; i < j; ++i) {
            order *= p;
        }
        factors.insert(factors.end(), count, order);
    }
    return factors;
}

std::vector<std::uint64_t> invariant_factors(const ClassGroup &g)
{
    const auto factors = invariant_factors_from_census(order_census(g), g.field()->characteristic());
    std::uint64_t product = 1;
    for (auto f : factors) {
        product *= f;
    }
    if (product != g.label_count()) {
        throw InvariantViolation("invariant factors multiply to " + std::to_string(product) + ", group order is " +
                                 g.order_decimal());
    }
    return factors;
}

ClassLabel theta(const ClassGroup &from, const ClassGroup &to, const ClassLabel &label)
{
    if (!same_field(from.field(), to.field())) {
        throw InvalidInput("theta between class groups over different fields");
    }
    if (!from.monoid().is_subset_of(to.monoid())) {
        throw InvalidInput("theta requires S to be contained in T");
    }
    return to.class_of(from.lift(label).lift());
}

UniPoly complete_to_regular(const UniPoly &f, const NumericalMonoid &s)
{
    return unit_inverse(TruncatedUnit::from_poly(f, s.truncation_degree())).lift();
}

bool is_regular(const UniPoly &f, const NumericalMonoid &s)
{
    if (f.constant_term() == 0) {
        return false;
    }
    const auto c = f.coeffs();
    for (std::size_t i = 1; i < c.size(); ++i) {
        if (c[i] != 0 && !s.contains(static_cast<std::int64_t>(i))) {
            return false;
        }
    }
    return true;
}

SameClassResult same_class_witness(const UniPoly &f, const UniPoly &g, const ClassGroup &group)
{
    if (f.constant_term() == 0 || g.constant_term() == 0) {
        throw InvalidInput("constant term must be nonzero (not coprime to the conductor prime)");
    }
    const auto &F = *group.field();
    const unsigned m = group.m();
    const auto uf = group.canonicalize_with_multiplier(TruncatedUnit::from_poly(f, m));
    const auto ug = group.canonicalize_with_multiplier(TruncatedUnit::from_poly(g, m));
    if (!(uf.representative == ug.representative)) {
        return DifferentClasses{group.class_of(f), group.class_of(g)};
    }
    const auto unit = F.div(f.constant_term(), g.constant_term());
    const UniPoly one = UniPoly::constant(group.field(), 1);
    SameClassWitness w{one, one, unit};
    if (!(f.normalized_constant() == g.normalized_constant())) {
        // f~ d_f and g~ d_g agree mod X^{m+1}; h completes both to regular elements.
        const UniPoly h = unit_inverse(uf.representative).lift();
        const UniPoly rf = f.normalized_constant() * uf.multiplier * h;
        const UniPoly rg = g.normalized_constant() * ug.multiplier * h;
        w.a = rf * ug.multiplier;
        w.b = rg * uf.multiplier;
    }
    const auto &s = group.monoid();
    if (!is_regular(w.a, s) || !is_regular(w.b, s) || !(f * w.b == (g * w.a).scaled(unit))) {
        throw InvariantViolation("same-class witness failed verification for f=" + f.to_string() +
                                 ", g=" + g.to_string());
    }
    return w;
}

} // namespace primediv
