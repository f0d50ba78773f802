#include <primediv/affine_monoid.hpp>

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <unordered_map>
#include <unordered_set>

#include <primediv/error.hpp>
#include <primediv/smith.hpp>

namespace primediv
{

namespace
{

struct VecHash {
    std::size_t operator()(const IntVec &v) const noexcept
    {
        std::size_t h = 1469598103934665603ull;
        for (auto x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

std::string vec_string(const IntVec &v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + std::to_string(v[i]);
    }
    return s + ")";
}

bool is_zero(const IntVec &v)
{
    return std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; });
}

IntVec add(IntVec a, const IntVec &b, std::int64_t scale = 1)
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] += scale * b[i];
    }
    return a;
}

std::optional<ProductStructure> detect_product(unsigned rank, Split split, const std::vector<IntVec> &gens)
{
    std::vector<std::vector<std::int64_t>> per_axis(rank);
    for (const auto &g : gens) {
        std::size_t nonzero = 0, axis = 0;
        for (std::size_t i = 0; i < rank; ++i) {
            if (g[i] != 0) {
                ++nonzero;
                axis = i;
            }
        }
        if (nonzero != 1) {
            return std::nullopt;
        }
        per_axis[axis].push_back(g[axis]);
    }
    ProductStructure p;
    for (unsigned i = 0; i < rank; ++i) {
        const auto &vals = per_axis[i];
        std::int64_t g = 0;
        bool pos = false, neg = false;
        for (auto v : vals) {
            g = std::gcd(g, std::llabs(v));
            pos = pos || v > 0;
            neg = neg || v < 0;
        }
        if (g != 1) {
            return std::nullopt;
        }
        if (i < split.s) {
            std::vector<std::uint64_t> u(vals.begin(), vals.end());
            p.factors.push_back(NumericalMonoid::from_generators(std::move(u)));
        } else if (!(pos && neg)) {
            return std::nullopt; // a half-line, not Z
        }
    }
    return p;
}


// Echelon basis of the row lattice: pivots strictly increase and are positive.
std::vector<IntVec> echelon(std::vector<IntVec> rows, std::size_t cols)
{
    std::vector<IntVec> out;
    for (std::size_t c = 0; c < cols && !rows.empty(); ++c) {
        while (true) {
            auto best = rows.end();
            for (auto it = rows.begin(); it != rows.end(); ++it) {
                if ((*it)[c] != 0 && (best == rows.end() || std::llabs((*it)[c]) < std::llabs((*best)[c]))) {
                    best = it;
                }
            }
            if (best == rows.end()) {
                break;
            }
            const IntVec piv = *best;
            bool others = false;
            for (auto it = rows.begin(); it != rows.end(); ++it) {
                if (it != best && (*it)[c] != 0) {
                    *it = add(*it, piv, -((*it)[c] / piv[c]));
                    others = true;
                }
            }
            if (!others) {
                IntVec r = piv;
                if (r[c] < 0) {
                    r = add(IntVec(cols, 0), r, -1);
                }
                out.push_back(std::move(r));
                rows.erase(best);
                break;
            }
        }
        rows.erase(std::remove_if(rows.begin(), rows.end(), is_zero), rows.end());
    }
    return out;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

// Canonical representative of v modulo the lattice with this echelon basis.
IntVec reduce_mod(IntVec v, const std::vector<IntVec> &basis)
{
    for (const auto &row : basis) {
        std::size_t c = 0;
        while (row[c] == 0) {
            ++c;
        }
        v = add(std::move(v), row, -floor_div(v[c], row[c]));
    }
    return v;
}

} // namespace

struct AffineMonoid::Cache {
    mutable std::shared_mutex mtx;
    std::unordered_map<IntVec, bool, VecHash> decided;
    // Generators with zero N0 part, restricted to the Z coordinates; when
    // they generate a group, membership reduces to a lattice test.
    std::once_flag torus_once;
    bool torus_group = false;
    std::vector<IntVec> torus_basis;
};


AffineMonoid AffineMonoid::create(unsigned rank, Split split, std::vector<IntVec> generators, LatticePolicy policy)
{
    if (rank == 0) {
        throw InvalidInput("affine monoid rank must be positive");
    }
    if (split.s + split.t != rank) {
        throw InvalidInput("split (" + std::to_string(split.s) + "," + std::to_string(split.t)
                           + ") does not add up to rank " + std::to_string(rank));
    }
    for (const auto &g : generators) {
        if (g.size() != rank) {
            throw InvalidInput("generator " + vec_string(g) + " does not have rank " + std::to_string(rank));
        }
        for (unsigned i = 0; i < split.s; ++i) {
            if (g[i] < 0) {
                throw InvalidInput("generator " + vec_string(g) + " has a negative N0 coordinate");
            }
        }
        for (auto x : g) {
            if (std::llabs(x) > 1'000'000) {
                throw InvalidInput("generator " + vec_string(g) + " has an oversized coordinate");
            }
        }
    }
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    generators.erase(std::remove_if(generators.begin(), generators.end(), is_zero), generators.end());

    AffineMonoid m;
    m.rank_ = rank;
    m.split_ = split;
    m.cache_ = std::make_shared<Cache>();

    // Drop a generator when the remaining ones provably reach it.
    std::vector<IntVec> kept = generators;
    for (const auto &g : generators) {
        AffineMonoid others;
        others.rank_ = rank;
        others.split_ = split;
        others.cache_ = std::make_shared<Cache>();
        for (const auto &h : kept) {
            if (h != g) {
                others.gens_.push_back(h);
            }
        }
        if (others.gens_.empty()) {
            continue;
        }
        MembershipBudget small;
        small.max_states = 100'000;
        if (others.search(g, small) == Membership::member) {
            kept = std::move(others.gens_);
        }
    }
    m.gens_ = std::move(kept);

    IntMatrix mat;
    for (const auto &g : m.gens_) {
        mat.push_back(g);
    }
    m.elementary_divisors_ = primediv::elementary_divisors(mat);
    if (policy == LatticePolicy::require_full && !m.full_lattice()) {
        std::string ed;
        for (auto d : m.elementary_divisors_) {
            ed += (ed.empty() ? "" : ",") + std::to_string(d);
        }
        throw InvalidInput("generators do not span Z^" + std::to_string(rank) + " (elementary divisors [" + ed + "])");
    }
    if (m.full_lattice()) {
        m.product_ = detect_product(rank, split, m.gens_);
    }
    return m;
}

AffineMonoid AffineMonoid::from_numerical(const NumericalMonoid &s)
{
    std::vector<IntVec> gens;
    for (auto g : s.generators()) {
        gens.push_back({static_cast<std::int64_t>(g)});
    }
    return create(1, Split{1, 0}, std::move(gens));
}

bool AffineMonoid::full_lattice() const noexcept
{
    return elementary_divisors_.size() == rank_
           && std::all_of(elementary_divisors_.begin(), elementary_divisors_.end(), [](auto d) { return d == 1; });
}

bool AffineMonoid::exact_search_possible() const noexcept
{
    return std::all_of(gens_.begin(), gens_.end(), [&](const IntVec &g) {
        for (unsigned i = 0; i < split_.s; ++i) {
            if (g[i] != 0) {
                return true;
            }
        }
        return false;
    });
}

Membership AffineMonoid::search(const IntVec &x, const MembershipBudget &budget) const
{
    if (x.size() != rank_) {
        throw InvalidInput("vector " + vec_string(x) + " does not have rank " + std::to_string(rank_));
    }
    for (unsigned i = 0; i < split_.s; ++i) {
        if (x[i] < 0) {
            return Membership::non_member;
        }
    }
    if (is_zero(x)) {
        return Membership::member;
    }
    if (product_) {
        for (unsigned i = 0; i < split_.s; ++i) {
            if (!product_->factors[i].contains(x[i])) {
                return Membership::non_member;
            }
        }
        return Membership::member;
    }
    if (gens_.empty()) {
        return Membership::non_member;
    }

    if (exact_search_possible()) {
        // Every generator raises the N0 coordinate sum, so a representation
        // of y uses at most sum_N0(y) generators; Z coordinates are bounded
        // by that count times the largest generator entry.
        std::vector<std::int64_t> maxabs(rank_, 0);
        for (const auto &g : gens_) {
            for (unsigned j = 0; j < rank_; ++j) {
                maxabs[j] = std::max<std::int64_t>(maxabs[j], std::llabs(g[j]));
            }
        }
        std::unordered_map<IntVec, bool, VecHash> memo;
        std::size_t states = 0;

        auto feasible = [&](const IntVec &y) {
            std::int64_t steps = 0;
            for (unsigned i = 0; i < split_.s; ++i) {
                if (y[i] < 0) {
                    return false;
                }
                steps += y[i];
            }
            for (unsigned j = split_.s; j < rank_; ++j) {
                if (std::llabs(y[j]) > steps * maxabs[j]) {
                    return false;
                }
            }
            return true;
        };

        // member(y) = y == 0 or member(y - g) for some generator g.
        // Returns 1 / 0, or -1 when the state budget runs out.
        auto rec = [&](auto &self, const IntVec &y) -> int {
            if (auto it = memo.find(y); it != memo.end()) {
                return it->second ? 1 : 0;
            }
            {
                std::shared_lock lock(cache_->mtx);
                if (auto it = cache_->decided.find(y); it != cache_->decided.end()) {
                    return it->second ? 1 : 0;
                }
            }
            if (++states > budget.max_states) {
                return -1;
            }
            for (const auto &g : gens_) {
                IntVec z = add(y, g, -1);
                if (is_zero(z)) {
                    memo[y] = true;
                    return 1;
                }
                if (!feasible(z)) {
                    continue;
                }
                const int r = self(self, z);
                if (r < 0) {
                    return -1;
                }
                if (r == 1) {
                    memo[y] = true;
                    return 1;
                }
            }
            memo[y] = false;
            return 0;
        };
        if (!feasible(x)) {
            return Membership::non_member;
        }
        const int r = rec(rec, x);
        if (r < 0) {
            return Membership::undecided;
        }
        {
            std::unique_lock lock(cache_->mtx);
            cache_->decided.insert(memo.begin(), memo.end());
        }
        return r == 1 ? Membership::member : Membership::non_member;
    }

    std::call_once(cache_->torus_once, [&] {
        std::vector<IntVec> tor;
        for (const auto &g : gens_) {
            if (std::all_of(g.begin(), g.begin() + split_.s, [](auto v) { return v == 0; })) {
                tor.emplace_back(g.begin() + split_.s, g.end());
            }
        }
        // The torus part is a group iff every -g is reachable inside it.
        bool group = true;
        for (const auto &g : tor) {
            const IntVec target = add(IntVec(split_.t, 0), g, -1);
            std::unordered_set<IntVec, VecHash> seen{IntVec(split_.t, 0)};
            std::deque<IntVec> frontier{IntVec(split_.t, 0)};
            bool hit = false;
            while (!frontier.empty() && !hit && seen.size() < 100'000) {
                const IntVec y = std::move(frontier.front());
                frontier.pop_front();
                for (const auto &h : tor) {
                    IntVec z = add(y, h);
                    if (z == target) {
                        hit = true;
                        break;
                    }
                    const bool inside = std::all_of(z.begin(), z.end(), [&](auto v) {
                        return std::llabs(v) <= budget.torus_radius;
                    });
                    if (inside && seen.insert(z).second) {
                        frontier.push_back(std::move(z));
                    }
                }
            }
            group = group && hit;
        }
        cache_->torus_group = group;
        cache_->torus_basis = echelon(std::move(tor), split_.t);
    });

    if (cache_->torus_group) {
        // x = y + z with y a combination of the generators carrying N0 mass
        // (finitely many for a fixed N0 part) and z in the torus lattice.
        std::vector<IntVec> mixed;
        for (const auto &g : gens_) {
            if (!std::all_of(g.begin(), g.begin() + split_.s, [](auto v) { return v == 0; })) {
                mixed.push_back(g);
            }
        }
        const auto &basis = cache_->torus_basis;
        std::map<IntVec, std::set<IntVec>> reach;
        std::size_t states = 0;
        bool exhausted = false;
        // reach[r] = Z parts modulo the lattice of combinations with N0 part r.
        auto rec = [&](auto &self, const IntVec &r) -> const std::set<IntVec> & {
            if (auto it = reach.find(r); it != reach.end()) {
                return it->second;
            }
            std::set<IntVec> out;
            if (is_zero(r)) {
                out.insert(IntVec(split_.t, 0));
            }
            for (const auto &g : mixed) {
                if (exhausted) {
                    break;
                }
                IntVec rest = r;
                bool fits = true;
                for (unsigned i = 0; i < split_.s; ++i) {
                    rest[i] -= g[i];
                    fits = fits && rest[i] >= 0;
                }
                if (!fits) {
                    continue;
                }
                const IntVec gz(g.begin() + split_.s, g.end());
                for (const auto &z : self(self, rest)) {
                    out.insert(reduce_mod(add(z, gz), basis));
                }
            }
            states += out.size() + 1;
            exhausted = exhausted || states > budget.max_states;
            return reach.emplace(r, std::move(out)).first->second;
        };
        const IntVec n0(x.begin(), x.begin() + split_.s);
        const auto &classes = rec(rec, n0);
        if (exhausted) {
            return Membership::undecided;
        }
        return classes.count(reduce_mod(IntVec(x.begin() + split_.s, x.end()), basis)) ? Membership::member
                                                                                        : Membership::non_member;
    }

    // Bounded breadth-first search from 0; only a hit is conclusive.
    std::unordered_set<IntVec, VecHash> seen{IntVec(rank_, 0)};
    std::deque<IntVec> frontier{IntVec(rank_, 0)};
    while (!frontier.empty()) {
        IntVec y = std::move(frontier.front());
        frontier.pop_front();
        for (const auto &g : gens_) {
            IntVec z = add(y, g);
            if (z == x) {
                return Membership::member;
            }
            bool inside = true;
            for (unsigned i = 0; i < split_.s && inside; ++i) {
                inside = z[i] <= x[i];
            }
            for (unsigned j = split_.s; j < rank_ && inside; ++j) {
                inside = std::llabs(z[j] - x[j]) <= budget.torus_radius + std::llabs(x[j]);
            }
            if (!inside || seen.count(z)) {
                continue;
            }
            if (seen.size() >= budget.max_states) {
                return Membership::undecided;
            }
            seen.insert(z);
            frontier.push_back(std::move(z));
        }
    }
    return Membership::undecided;
}

Membership AffineMonoid::membership(const IntVec &x, const MembershipBudget &budget) const
{
    {
        std::shared_lock lock(cache_->mtx);
        if (auto it = cache_->decided.find(x); it != cache_->decided.end()) {
            return it->second ? Membership::member : Membership::non_member;
        }
    }
    const Membership r = search(x, budget);
    if (r != Membership::undecided) {
        std::unique_lock lock(cache_->mtx);
        cache_->decided.emplace(x, r == Membership::member);
    }
    return r;
}

bool AffineMonoid::contains(const IntVec &x, const MembershipBudget &budget) const
{
    switch (membership(x, budget)) {
    case Membership::member:
        return true;
    case Membership::non_member:
        return false;
    default:
        throw Undecided("membership of " + vec_string(x) + " undecided within budget");
    }
}

CicOutcome cic_verify(const AffineMonoid &s, const CicBudget &budget)
{
    if (!s.full_lattice()) {
        return CicRefutation{"quotient group is not Z^" + std::to_string(s.rank()), false, s.elementary_divisors()};
    }
    const auto [ns, nt] = s.split();
    const unsigned n = s.rank();

    std::vector<IntVec> dirs;
    for (unsigned i = 0; i < n; ++i) {
        IntVec e(n, 0);
        e[i] = 1;
        dirs.push_back(e);
        if (i >= ns) {
            e[i] = -1;
            dirs.push_back(e);
        }
    }

    CicCertificate cert;
    for (const auto &d : dirs) {
        std::int64_t period = 0;
        for (std::int64_t p = 1; p <= budget.max_period; ++p) {
            IntVec v = d;
            for (auto &x : v) {
                x *= p;
            }
            if (s.contains(v, budget.membership)) {
                period = p;
                break;
            }
        }
        if (period == 0) {
            return CicRefutation{"no multiple n*" + vec_string(d) + " with n <= " + std::to_string(budget.max_period)
                                     + " lies in S",
                                 true, s.elementary_divisors()};
        }
        cert.directions.push_back({d, period});
    }

    // Base points in [0, B]^s x [-B, B]^t by (L1 norm, lexicographic).
    std::vector<IntVec> candidates;
    IntVec c(n, 0);
    for (unsigned j = ns; j < n; ++j) {
        c[j] = -budget.max_base;
    }
    while (true) {
        candidates.push_back(c);
        unsigned k = 0;
        for (; k < n; ++k) {
            if (c[k] < budget.max_base) {
                ++c[k];
                break;
            }
            c[k] = k < ns ? 0 : -budget.max_base;
        }
        if (k == n) {
            break;
        }
    }
    auto l1 = [](const IntVec &v) {
        std::int64_t a = 0;
        for (auto x : v) {
            a += std::llabs(x);
        }
        return a;
    };
    std::stable_sort(candidates.begin(), candidates.end(), [&](const IntVec &a, const IntVec &b) {
        const auto la = l1(a), lb = l1(b);
        return la != lb ? la < lb : a < b;
    });

    for (const auto &base : candidates) {
        bool ok = true;
        for (const auto &dir : cert.directions) {
            for (std::int64_t k = 0; k < dir.period && ok; ++k) {
                ok = s.contains(add(base, dir.direction, k), budget.membership);
            }
            if (!ok) {
                break;
            }
        }
        if (ok) {
            cert.base = base;
            return cert;
        }
    }
    throw Undecided("no base point for the closure certificate within coordinate bound "
                    + std::to_string(budget.max_base));
}

bool verify_certificate(const AffineMonoid &s, const CicCertificate &cert)
{
    if (!s.full_lattice() || cert.base.size() != s.rank()) {
        return false;
    }
    const auto [ns, nt] = s.split();
    // Every required direction must be present exactly once.
    std::vector<IntVec> required;
    for (unsigned i = 0; i < s.rank(); ++i) {
        IntVec e(s.rank(), 0);
        e[i] = 1;
        required.push_back(e);
        if (i >= ns) {
            e[i] = -1;
            required.push_back(e);
        }
    }
    if (required.size() != cert.directions.size()) {
        return false;
    }
    for (const auto &dir : cert.directions) {
        if (std::find(required.begin(), required.end(), dir.direction) == required.end() || dir.period < 1) {
            return false;
        }
        IntVec pv = dir.direction;
        for (auto &x : pv) {
            x *= dir.period;
        }
        if (!s.contains(pv)) {
            return false;
        }
        for (std::int64_t k = 0; k < dir.period; ++k) {
            if (!s.contains(add(cert.base, dir.direction, k))) {
                return false;
            }
        }
    }
    return true;
}

std::vector<HeightOnePrime> height_one_primes(const AffineMonoid &s, const CicCertificate &cert)
{
    if (cert.base.size() != s.rank()) {
        throw InvalidInput("closure certificate does not match the monoid rank");
    }
    std::vector<HeightOnePrime> out;
    for (unsigned i = 1; i <= s.split().s; ++i) {
        out.push_back({i});
    }
    return out;
}

} // namespace primediv
