#include <primediv/irreducible.hpp>

#include <algorithm>
#include <limits>
#include <string>

#include <omp.h>

#include <primediv/error.hpp>

namespace primediv
{

namespace
{

std::vector<unsigned> prime_divisors(unsigned n)
{
    std::vector<unsigned> out;
    for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) {
                n /= d;
            }
        }
    }
    if (n > 1) {
        out.push_back(n);
    }
    return out;
}

int moebius(unsigned n)
{
    int mu = 1;
    for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            n /= d;
            if (n % d == 0) {
                return 0;
            }
            mu = -mu;
        }
    }
    if (n > 1) {
        mu = -mu;
    }
    return mu;
}

// Refuse to enumerate more than this many candidates in one degree.
constexpr std::uint64_t candidate_budget = std::uint64_t{1} << 34;

} // namespace

bool is_irreducible(const UniPoly &f)
{
    const int d = f.degree();
    if (d < 1) {
        throw InvalidInput("irreducibility is undefined for constants");
    }
    if (d == 1) {
        return true;
    }
    const UniPoly g = f.monic();
    const auto &F = g.field();
    const std::uint64_t q = F->order();
    const UniPoly x = UniPoly::x(F) % g;

    // frob[i] = X^{q^i} mod g.
    std::vector<UniPoly> frob;
    frob.reserve(static_cast<std::size_t>(d) + 1);
    frob.push_back(x);
    for (int i = 1; i <= d; ++i) {
        frob.push_back(powmod(frob.back(), q, g));
    }
    if (!(frob[static_cast<std::size_t>(d)] == x)) {
        return false;
    }
    for (unsigned l : prime_divisors(static_cast<unsigned>(d))) {
        const auto &h = frob[static_cast<std::size_t>(d) / l];
        if (!gcd(g, h - x).is_one()) {
            return false;
        }
    }
    return true;
}

std::uint64_t monic_irreducible_count(std::uint64_t q, unsigned d)
{
    if (d == 0) {
        return 0;
    }
    // Signed accumulation; q^d stays below 2^63 for the supported ranges.
    long double check = 1;
    for (unsigned i = 0; i < d; ++i) {
        check *= static_cast<long double>(q);
    }
    if (check > static_cast<long double>(std::numeric_limits<std::int64_t>::max())) {
        throw InvalidInput("q^d too large for an exact irreducible count");
    }
    std::int64_t sum = 0;
    for (unsigned e = 1; e <= d; ++e) {
        if (d % e != 0) {
            continue;
        }
        int mu = moebius(e);
        if (mu == 0) {
            continue;
        }
        std::int64_t pw = 1;
        for (unsigned i = 0; i < d / e; ++i) {
            pw *= static_cast<std::int64_t>(q);
        }
        sum += mu * pw;
    }
    return static_cast<std::uint64_t>(sum / static_cast<std::int64_t>(d));
}

CoefficientPrefix::CoefficientPrefix(const FieldRef &field, std::vector<Elem> values) : values_(std::move(values))
{
    if (values_.empty()) {
        throw InvalidInput("coefficient prefix must contain a_0");
    }
    if (values_[0] == 0) {
        throw InvalidInput("constant term must be nonzero");
    }
    for (auto v : values_) {
        if (v >= field->order()) {
            throw InvalidInput("prefix coefficient " + std::to_string(v) + " out of range for " + field->name());
        }
    }
}

bool CoefficientPrefix::matches(const UniPoly &f) const noexcept
{
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (f.coeff(i) != values_[i]) {
            return false;
        }
    }
    return true;
}

std::uint64_t prefix_candidate_count(const FieldRef &field, unsigned degree, const CoefficientPrefix &prefix)
{
    const std::size_t m = prefix.last_index();
    if (degree == 0) {
        return 0;
    }
    if (degree <= m) {
        // Fully determined by the prefix; valid iff it really has this degree.
        if (prefix[degree] == 0) {
            return 0;
        }
        for (std::size_t i = degree + 1; i <= m; ++i) {
            if (prefix[i] != 0) {
                return 0;
            }
        }
        return 1;
    }
    const std::uint64_t q = field->order();
    std::uint64_t count = q - 1;
    for (std::size_t i = m + 1; i < degree; ++i) {
        if (count > candidate_budget / q) {
            throw Undecided("degree " + std::to_string(degree) + " over " + field->name()
                            + " exceeds the enumeration budget");
        }
        count *= q;
    }
    return count;
}

UniPoly prefix_candidate(const FieldRef &field, unsigned degree, const CoefficientPrefix &prefix, std::uint64_t index)
{
    const std::size_t m = prefix.last_index();
    std::vector<Field::Elem> c(std::max<std::size_t>(degree, m) + 1, 0);
    std::copy(prefix.values().begin(), prefix.values().end(), c.begin());
    if (degree <= m) {
        return UniPoly(field, std::move(c));
    }
    const std::uint64_t q = field->order();
    // Leading coefficient is the least significant digit (range 1..q-1),
    // c_{m+1} the most significant.
    c[degree] = static_cast<Field::Elem>(1 + index % (q - 1));
    index /= (q - 1);
    for (std::size_t i = degree; i-- > m + 1;) {
        c[i] = static_cast<Field::Elem>(index % q);
        index /= q;
    }
    return UniPoly(field, std::move(c));
}

std::vector<UniPoly> irreducibles_with_prefix_serial(const FieldRef &field, unsigned degree,
                                                     const CoefficientPrefix &prefix)
{
    const std::uint64_t n = prefix_candidate_count(field, degree, prefix);
    std::vector<UniPoly> out;
    for (std::uint64_t i = 0; i < n; ++i) {
        auto f = prefix_candidate(field, degree, prefix, i);
        if (is_irreducible(f)) {
            out.push_back(std::move(f));
        }
    }
    return out;
}

std::vector<UniPoly> irreducibles_with_prefix(const FieldRef &field, unsigned degree, const CoefficientPrefix &prefix)
{
    const std::uint64_t n = prefix_candidate_count(field, degree, prefix);
    if (n < 256) {
        return irreducibles_with_prefix_serial(field, degree, prefix);
    }
    std::vector<std::vector<std::uint64_t>> hits(static_cast<std::size_t>(omp_get_max_threads()));
    const auto total = static_cast<std::int64_t>(n);

#pragma omp parallel
    {
        auto &local = hits[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 64)
        for (std::int64_t i = 0; i < total; ++i) {
            if (is_irreducible(prefix_candidate(field, degree, prefix, static_cast<std::uint64_t>(i)))) {
                local.push_back(static_cast<std::uint64_t>(i));
            }
        }
    }

    std::vector<std::uint64_t> all;
    for (const auto &h : hits) {
        all.insert(all.end(), h.begin(), h.end());
    }
    std::sort(all.begin(), all.end());
    std::vector<UniPoly> out;
    out.reserve(all.size());
    for (auto i : all) {
        out.push_back(prefix_candidate(field, degree, prefix, i));
    }
    return out;
}

std::vector<UniPoly> enumerate_irreducibles(const FieldRef &field, unsigned min_degree, unsigned max_degree,
                                            const CoefficientPrefix &prefix)
{
    if (min_degree == 0) {
        min_degree = 1;
    }
    std::vector<UniPoly> out;
    for (unsigned d = min_degree; d <= max_degree; ++d) {
        auto part = irreducibles_with_prefix(field, d, prefix);
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
}

} // namespace primediv
