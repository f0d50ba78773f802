#include <primediv/mpoly.hpp>

#include <algorithm>
#include <charconv>
#include <limits>

#include <primediv/conductor.hpp>
#include <primediv/error.hpp>

namespace primediv
{

namespace
{

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) {
            return out;
        }
        start = pos + 1;
    }
}

std::int64_t parse_int(std::string_view s, std::string_view what)
{
    s = trim(s);
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw InvalidInput("malformed " + std::string(what) + " '" + std::string(s) + "' in polynomial literal");
    }
    return v;
}

} // namespace

MPoly::MPoly(FieldRef field, unsigned nvars) : field_(std::move(field)), nvars_(nvars)
{
}

MPoly MPoly::constant(FieldRef field, unsigned nvars, Elem c)
{
    MPoly p(std::move(field), nvars);
    p.add_term(IntVec(nvars, 0), c);
    return p;
}

MPoly MPoly::monomial(FieldRef field, Elem c, IntVec exponent)
{
    MPoly p(std::move(field), static_cast<unsigned>(exponent.size()));
    p.add_term(exponent, c);
    return p;
}

bool MPoly::is_constant() const noexcept
{
    if (terms_.empty()) {
        return true;
    }
    if (terms_.size() > 1) {
        return false;
    }
    const auto &e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](std::int64_t x) { return x == 0; });
}

MPoly::Elem MPoly::coeff(const IntVec &e) const
{
    const auto it = terms_.find(e);
    return it == terms_.end() ? Elem{0} : it->second;
}

void MPoly::add_term(const IntVec &e, Elem c)
{
    if (e.size() != nvars_) {
        throw InvalidInput("exponent of length " + std::to_string(e.size()) + " in a polynomial of " +
                           std::to_string(nvars_) + " variables");
    }
    if (c >= field_->order()) {
        throw InvalidInput("coefficient code " + std::to_string(c) + " out of range for " + field_->name());
    }
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second = field_->add(it->second, c);
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

bool MPoly::is_polynomial() const noexcept
{
    return std::all_of(terms_.begin(), terms_.end(), [](const auto &t) {
        return std::all_of(t.first.begin(), t.first.end(), [](std::int64_t x) { return x >= 0; });
    });
}

std::int64_t MPoly::total_degree() const noexcept
{
    std::int64_t d = -1;
    for (const auto &[e, c] : terms_) {
        std::int64_t s = 0;
        for (auto x : e) {
            s += x;
        }
        d = std::max(d, s);
    }
    return d;
}

std::int64_t MPoly::degree_in(unsigned i) const
{
    if (terms_.empty()) {
        throw InvalidInput("degree of the zero polynomial");
    }
    std::int64_t d = std::numeric_limits<std::int64_t>::min();
    for (const auto &[e, c] : terms_) {
        d = std::max(d, e[i]);
    }
    return d;
}

IntVec MPoly::min_exponents() const
{
    if (terms_.empty()) {
        return IntVec(nvars_, 0);
    }
    IntVec lo = terms_.begin()->first;
    for (const auto &[e, c] : terms_) {
        for (unsigned i = 0; i < nvars_; ++i) {
            lo[i] = std::min(lo[i], e[i]);
        }
    }
    return lo;
}

std::pair<IntVec, MPoly::Elem> MPoly::leading_term() const
{
    if (terms_.empty()) {
        throw InvalidInput("leading term of the zero polynomial");
    }
    return *terms_.rbegin();
}

MPoly MPoly::scaled(Elem s) const
{
    MPoly r(field_, nvars_);
    if (s == 0) {
        return r;
    }
    for (const auto &[e, c] : terms_) {
        r.terms_.emplace_hint(r.terms_.end(), e, field_->mul(c, s));
    }
    return r;
}

MPoly MPoly::shifted(const IntVec &shift) const
{
    MPoly r(field_, nvars_);
    for (const auto &[e, c] : terms_) {
        IntVec x = e;
        for (unsigned i = 0; i < nvars_; ++i) {
            x[i] += shift[i];
        }
        r.terms_.emplace(std::move(x), c);
    }
    return r;
}

MPoly MPoly::monic() const
{
    if (terms_.empty()) {
        return *this;
    }
    return scaled(field_->inv(terms_.rbegin()->second));
}

void MPoly::require_compatible(const MPoly &other) const
{
    if (!same_field(field_, other.field_)) {
        throw InvalidInput("polynomials over " + field_->name() + " and " + other.field_->name());
    }
    if (nvars_ != other.nvars_) {
        throw InvalidInput("polynomials in " + std::to_string(nvars_) + " and " + std::to_string(other.nvars_) +
                           " variables");
    }
}

MPoly operator+(const MPoly &a, const MPoly &b)
{
    a.require_compatible(b);
    MPoly r = a;
    for (const auto &[e, c] : b.terms_) {
        r.add_term(e, c);
    }
    return r;
}

MPoly operator-(const MPoly &a, const MPoly &b)
{
    a.require_compatible(b);
    MPoly r = a;
    for (const auto &[e, c] : b.terms_) {
        r.add_term(e, a.field_->neg(c));
    }
    return r;
}

MPoly operator*(const MPoly &a, const MPoly &b)
{
    a.require_compatible(b);
    MPoly r(a.field_, a.nvars_);
    IntVec x(a.nvars_);
    for (const auto &[ea, ca] : a.terms_) {
        for (const auto &[eb, cb] : b.terms_) {
            for (unsigned i = 0; i < a.nvars_; ++i) {
                x[i] = ea[i] + eb[i];
            }
            r.add_term(x, a.field_->mul(ca, cb));
        }
    }
    return r;
}

bool operator==(const MPoly &a, const MPoly &b) noexcept
{
    return same_field(a.field_, b.field_) && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

MPoly MPoly::parse(FieldRef field, unsigned nvars, std::string_view literal)
{
    MPoly p(field, nvars);
    literal = trim(literal);
    if (literal.empty()) {
        throw InvalidInput("empty polynomial literal");
    }
    if (literal == "0") {
        return p;
    }
    for (auto term : split(literal, ';')) {
        term = trim(term);
        const auto colon = term.find(':');
        if (colon == std::string_view::npos) {
            throw InvalidInput("term '" + std::string(term) + "' lacks the 'coefficient:exponents' form");
        }
        const auto c = parse_int(term.substr(0, colon), "coefficient");
        if (c < 0 || c >= static_cast<std::int64_t>(field->order())) {
            throw InvalidInput("coefficient code " + std::to_string(c) + " out of range for " + field->name());
        }
        IntVec e;
        for (auto x : split(term.substr(colon + 1), ',')) {
            e.push_back(parse_int(x, "exponent"));
        }
        if (e.size() != nvars) {
            throw InvalidInput("term '" + std::string(term) + "' has " + std::to_string(e.size()) +
                               " exponents, expected " + std::to_string(nvars));
        }
        p.add_term(e, static_cast<Elem>(c));
    }
    return p;
}

std::string MPoly::to_literal() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string s;
    for (const auto &[e, c] : terms_) {
        if (!s.empty()) {
            s += ';';
        }
        s += std::to_string(c) + ':';
        for (unsigned i = 0; i < nvars_; ++i) {
            s += (i ? "," : "") + std::to_string(e[i]);
        }
    }
    return s;
}

std::string MPoly::to_string(unsigned s) const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    for (const auto &[e, c] : terms_) {
        std::string mono;
        for (unsigned i = 0; i < nvars_; ++i) {
            if (e[i] == 0) {
                continue;
            }
            if (!mono.empty()) {
                mono += '*';
            }
            mono += (i < s ? "X" + std::to_string(i + 1) : "Y" + std::to_string(i - s + 1));
            if (e[i] != 1) {
                mono += '^' + std::to_string(e[i]);
            }
        }
        std::string term;
        if (mono.empty()) {
            term = std::to_string(c);
        } else if (c == 1) {
            term = mono;
        } else {
            term = std::to_string(c) + '*' + mono;
        }
        out += (out.empty() ? "" : " + ") + term;
    }
    return out;
}

std::optional<MPoly> exact_divide(const MPoly &f, const MPoly &g)
{
    if (g.nvars() != f.nvars() || !same_field(f.field(), g.field())) {
        throw InvalidInput("exact_divide on polynomials of different rings");
    }
    if (g.is_zero()) {
        throw InvalidInput("division by the zero polynomial");
    }
    if (!f.is_polynomial() || !g.is_polynomial()) {
        throw InvalidInput("exact_divide requires nonnegative exponents");
    }
    const unsigned n = f.nvars();
    MPoly q(f.field(), n);
    if (f.is_zero()) {
        return q;
    }
    // deg_i(q) = deg_i(f) - deg_i(g) for a true quotient.
    IntVec bound(n);
    for (unsigned i = 0; i < n; ++i) {
        bound[i] = f.degree_in(i) - g.degree_in(i);
        if (bound[i] < 0) {
            return std::nullopt;
        }
    }
    const auto &F = *f.field();
    const auto [lg, cg] = g.leading_term();
    const auto inv = F.inv(cg);
    MPoly r = f;
    while (!r.is_zero()) {
        const auto [lr, cr] = r.leading_term();
        IntVec d(n);
        for (unsigned i = 0; i < n; ++i) {
            d[i] = lr[i] - lg[i];
            if (d[i] < 0 || d[i] > bound[i]) {
                return std::nullopt;
            }
        }
        const auto t = MPoly::monomial(f.field(), F.mul(cr, inv), d);
        q = q + t;
        r = r - t * g;
    }
    return q;
}

LaurentNormal laurent_normalize(const MPoly &f)
{
    IntVec shift = f.min_exponents();
    for (auto &x : shift) {
        x = x < 0 ? -x : 0;
    }
    return {f.shifted(shift), shift};
}

LaurentNormal strip_monomial_content(const MPoly &f, const std::vector<unsigned> &variables)
{
    const IntVec lo = f.min_exponents();
    IntVec shift(f.nvars(), 0);
    for (auto i : variables) {
        shift[i] = -lo[i];
    }
    return {f.shifted(shift), shift};
}

UniPoly kronecker_image(const MPoly &f, const std::vector<std::int64_t> &weights)
{
    std::vector<Field::Elem> c;
    for (const auto &[e, v] : f.terms()) {
        std::int64_t idx = 0;
        for (unsigned i = 0; i < f.nvars(); ++i) {
            if (e[i] < 0) {
                throw InvalidInput("Kronecker image of a Laurent polynomial");
            }
            idx += e[i] * weights[i];
        }
        if (static_cast<std::size_t>(idx) >= c.size()) {
            c.resize(static_cast<std::size_t>(idx) + 1, 0);
        }
        c[static_cast<std::size_t>(idx)] = f.field()->add(c[static_cast<std::size_t>(idx)], v);
    }
    return UniPoly(f.field(), std::move(c));
}

MPoly kronecker_decode(const UniPoly &u, const std::vector<std::int64_t> &radix)
{
    const unsigned n = static_cast<unsigned>(radix.size());
    MPoly p(u.field(), n);
    const auto c = u.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) {
            continue;
        }
        IntVec e(n);
        auto idx = static_cast<std::int64_t>(k);
        for (unsigned i = 0; i + 1 < n; ++i) {
            e[i] = idx % radix[i];
            idx /= radix[i];
        }
        if (n > 0) {
            e[n - 1] = idx;
        }
        p.add_term(e, c[k]);
    }
    return p;
}

std::string to_string(SupportRegion r)
{
    switch (r) {
    case SupportRegion::monoid:
        return "S";
    case SupportRegion::conductor:
        return "conductor";
    case SupportRegion::monoid_minus_conductor:
        return "S-minus-conductor";
    }
    return "?";
}

SupportReport support_in(const MPoly &f, const AffineMonoid &s, const CicCertificate &cert, SupportRegion region)
{
    if (f.nvars() != s.rank()) {
        throw InvalidInput("polynomial rank differs from monoid rank");
    }
    SupportReport rep;
    for (const auto &[e, c] : f.terms()) {
        bool ok = false;
        switch (region) {
        case SupportRegion::monoid:
            ok = s.contains(e);
            break;
        case SupportRegion::conductor:
            ok = in_conductor(s, cert, e);
            break;
        case SupportRegion::monoid_minus_conductor:
            ok = s.contains(e) && !in_conductor(s, cert, e);
            break;
        }
        if (!ok) {
            rep.contained = false;
            rep.offending.push_back(e);
        }
    }
    return rep;
}

} // namespace primediv
