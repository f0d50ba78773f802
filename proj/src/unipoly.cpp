#include <primediv/unipoly.hpp>

#include <algorithm>
#include <utility>

#include <primediv/error.hpp>

namespace primediv
{

UniPoly::UniPoly(FieldRef field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs))
{
    if (!field_) {
        throw InvalidInput("polynomial needs a field");
    }
    for (auto c : c_) {
        if (c >= field_->order()) {
            throw InvalidInput("coefficient code " + std::to_string(c) + " out of range for " + field_->name());
        }
    }
    trim();
}

void UniPoly::trim() noexcept
{
    while (!c_.empty() && c_.back() == 0) {
        c_.pop_back();
    }
}

UniPoly UniPoly::constant(FieldRef field, Elem c)
{
    return UniPoly(std::move(field), {c});
}

UniPoly UniPoly::monomial(FieldRef field, Elem c, std::size_t degree)
{
    std::vector<Elem> v(degree + 1, 0);
    v[degree] = c;
    return UniPoly(std::move(field), std::move(v));
}

void require_same_field(const UniPoly &a, const UniPoly &b)
{
    if (!same_field(a.field(), b.field())) {
        throw InvalidInput("polynomials over different fields: " + a.field()->name() + " vs " + b.field()->name());
    }
}

UniPoly UniPoly::scaled(Elem s) const
{
    if (s == 0) {
        return UniPoly(field_);
    }
    UniPoly r(*this);
    for (auto &c : r.c_) {
        c = field_->mul(c, s);
    }
    return r;
}

UniPoly UniPoly::monic() const
{
    if (c_.empty() || c_.back() == 1) {
        return *this;
    }
    return scaled(field_->inv(c_.back()));
}

UniPoly UniPoly::normalized_constant() const
{
    if (constant_term() == 0) {
        throw InvalidInput("constant term must be nonzero");
    }
    return scaled(field_->inv(constant_term()));
}

UniPoly UniPoly::truncated(std::size_t n) const
{
    UniPoly r(*this);
    if (r.c_.size() > n + 1) {
        r.c_.resize(n + 1);
        r.trim();
    }
    return r;
}

UniPoly::Elem UniPoly::eval(Elem x) const noexcept
{
    Elem acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = field_->add(field_->mul(acc, x), *it);
    }
    return acc;
}

UniPoly UniPoly::derivative() const
{
    if (c_.size() <= 1) {
        return UniPoly(field_);
    }
    std::vector<Elem> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) {
        // Codes below p are exactly the prime subfield, so i mod p is i * 1.
        d[i - 1] = field_->mul(static_cast<Elem>(i % field_->characteristic()), c_[i]);
    }
    return UniPoly(field_, std::move(d));
}

UniPoly operator+(const UniPoly &a, const UniPoly &b)
{
    require_same_field(a, b);
    const auto &F = *a.field_;
    std::vector<UniPoly::Elem> r(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] = F.add(a.coeff(i), b.coeff(i));
    }
    return UniPoly(a.field_, std::move(r));
}

UniPoly operator-(const UniPoly &a, const UniPoly &b)
{
    require_same_field(a, b);
    const auto &F = *a.field_;
    std::vector<UniPoly::Elem> r(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] = F.sub(a.coeff(i), b.coeff(i));
    }
    return UniPoly(a.field_, std::move(r));
}

UniPoly operator*(const UniPoly &a, const UniPoly &b)
{
    require_same_field(a, b);
    if (a.is_zero() || b.is_zero()) {
        return UniPoly(a.field_);
    }
    const auto &F = *a.field_;
    std::vector<UniPoly::Elem> r(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            r[i + j] = F.add(r[i + j], F.mul(a.c_[i], b.c_[j]));
        }
    }
    return UniPoly(a.field_, std::move(r));
}

bool operator==(const UniPoly &a, const UniPoly &b)
{
    return same_field(a.field_, b.field_) && a.c_ == b.c_;
}

std::string UniPoly::digits() const
{
    if (c_.empty()) {
        return "0";
    }
    std::string s;
    s.reserve(c_.size());
    for (auto c : c_) {
        s.push_back(Field::digit(c));
    }
    return s;
}

UniPoly UniPoly::from_digits(FieldRef field, std::string_view s)
{
    std::vector<Elem> c;
    c.reserve(s.size());
    for (char ch : s) {
        Elem e{};
        if (!field->parse_digit(ch, e)) {
            throw InvalidInput(std::string("bad coefficient digit '") + ch + "' for " + field->name());
        }
        c.push_back(e);
    }
    return UniPoly(std::move(field), std::move(c));
}

std::string UniPoly::to_string() const
{
    if (c_.empty()) {
        return "0";
    }
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) {
            continue;
        }
        if (!s.empty()) {
            s += "+";
        }
        if (i == 0 || c_[i] != 1) {
            s += std::to_string(c_[i]);
            if (i > 0) {
                s += "*";
            }
        }
        if (i == 1) {
            s += "X";
        } else if (i > 1) {
            s += "X^" + std::to_string(i);
        }
    }
    return s;
}

DivMod divmod(const UniPoly &a, const UniPoly &b)
{
    require_same_field(a, b);
    if (b.is_zero()) {
        throw InvalidInput("division by the zero polynomial");
    }
    const auto &F = *a.field();
    if (a.degree() < b.degree()) {
        return {UniPoly(a.field()), a};
    }
    std::vector<Field::Elem> r(a.coeffs().begin(), a.coeffs().end());
    const auto bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    const auto lead_inv = F.inv(bc.back());
    std::vector<Field::Elem> q(r.size() - db, 0);
    for (std::size_t i = r.size(); i-- > db;) {
        auto c = r[i];
        if (c == 0) {
            continue;
        }
        auto t = F.mul(c, lead_inv);
        q[i - db] = t;
        for (std::size_t j = 0; j <= db; ++j) {
            r[i - db + j] = F.sub(r[i - db + j], F.mul(t, bc[j]));
        }
    }
    r.resize(db);
    return {UniPoly(a.field(), std::move(q)), UniPoly(a.field(), std::move(r))};
}

UniPoly operator%(const UniPoly &a, const UniPoly &b)
{
    return divmod(a, b).remainder;
}

UniPoly gcd(const UniPoly &a, const UniPoly &b)
{
    require_same_field(a, b);
    UniPoly x = a;
    UniPoly y = b;
    while (!y.is_zero()) {
        UniPoly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

UniPoly mulmod(const UniPoly &a, const UniPoly &b, const UniPoly &m)
{
    return (a * b) % m;
}

UniPoly powmod(UniPoly base, std::uint64_t e, const UniPoly &m)
{
    UniPoly result = UniPoly::constant(base.field(), 1) % m;
    base = base % m;
    while (e != 0) {
        if (e & 1u) {
            result = mulmod(result, base, m);
        }
        e >>= 1;
        if (e != 0) {
            base = mulmod(base, base, m);
        }
    }
    return result;
}

} // namespace primediv
