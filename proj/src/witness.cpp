#include <primediv/witness.hpp>

#include <algorithm>
#include <set>

#include <primediv/error.hpp>

namespace primediv
{

namespace
{

// Exponent vectors of total degree <= d in the given variables (inside
// rank-n space), ordered by degree and then lexicographically.
std::vector<IntVec> monomials_up_to(unsigned n, const std::vector<unsigned> &vars, std::int64_t d)
{
    std::vector<IntVec> out;
    IntVec e(n, 0);
    auto rec = [&](auto &&self, std::size_t k, std::int64_t left) -> void {
        if (k == vars.size()) {
            out.push_back(e);
            return;
        }
        for (std::int64_t x = 0; x <= left; ++x) {
            e[vars[k]] = x;
            self(self, k + 1, left - x);
        }
        e[vars[k]] = 0;
    };
    rec(rec, 0, d);
    std::stable_sort(out.begin(), out.end(), [](const IntVec &a, const IntVec &b) {
        std::int64_t da = 0, db = 0;
        for (auto x : a) {
            da += x;
        }
        for (auto x : b) {
            db += x;
        }
        return da != db ? da < db : a < b;
    });
    return out;
}

std::int64_t degree_of(const IntVec &e)
{
    std::int64_t d = 0;
    for (auto x : e) {
        d += x;
    }
    return d;
}

} // namespace

std::vector<DivisibilityGate> monomial_divisibility_check(const MPoly &f, const AffineMonoid &s,
                                                          const ConductorIdeal &conductor)
{
    std::vector<DivisibilityGate> gates;
    for (unsigned i = 0; i < s.split().s; ++i) {
        DivisibilityGate g{i + 1, true, !f.is_zero()};
        for (const auto &c : conductor.generators) {
            g.prime_contains_conductor = g.prime_contains_conductor && c[i] > 0;
        }
        for (const auto &[e, v] : f.terms()) {
            g.divides = g.divides && e[i] >= 1;
        }
        gates.push_back(g);
    }
    return gates;
}

WitnessResult witness_highdim(const MPoly &f, const AffineMonoid &s, const CicCertificate &cert,
                              const ConductorIdeal &conductor, const WitnessBudget &budget)
{
    const auto [ns, nt] = s.split();
    const unsigned n = s.rank();
    if (ns == 0) {
        throw InvalidInput("witness construction needs at least one N0 coordinate (s = 0)");
    }
    if (n < 2) {
        throw InvalidInput("witness construction needs s + t >= 2");
    }
    if (f.nvars() != n) {
        throw InvalidInput("polynomial has " + std::to_string(f.nvars()) + " variables, monoid rank is " +
                           std::to_string(n));
    }
    if (f.is_zero()) {
        throw InvalidInput("witness for the zero polynomial");
    }
    switch (branch_classify(s, conductor)) {
    case Branch::kainrath:
        throw InvalidInput("monoid is in the kainrath branch: some height-one prime does not contain the "
                           "conductor, no constructive witness");
    case Branch::undecided:
        throw Undecided("branch undecided from a partial conductor");
    case Branch::constructive:
        break;
    }
    for (const auto &[e, v] : f.terms()) {
        for (unsigned i = 0; i < ns; ++i) {
            if (e[i] < 0) {
                throw InvalidInput("f has a negative exponent in X" + std::to_string(i + 1));
            }
        }
    }
    for (const auto &gate : monomial_divisibility_check(f, s, conductor)) {
        if (!gate.passes()) {
            throw InvalidInput("X" + std::to_string(gate.index) + " divides f");
        }
    }

    const auto &F = *f.field();
    const unsigned p = F.characteristic();
    const std::int64_t deg1 = f.degree_in(0);
    unsigned m = static_cast<unsigned>(std::max<std::int64_t>(deg1, -1) + 1);
    auto diagonal = [&](unsigned mm) {
        IntVec e(n, 0);
        for (unsigned i = 0; i < ns; ++i) {
            e[i] = mm;
        }
        return e;
    };
    while ((m + 1) % p == 0 || !in_conductor(s, cert, diagonal(m))) {
        if (++m > budget.max_m) {
            throw Undecided("no admissible m up to " + std::to_string(budget.max_m));
        }
    }
    const auto field = f.field();
    const MPoly base = f + MPoly::monomial(field, 1, diagonal(m));
    IntVec tail = diagonal(m);
    tail[0] += 1;
    const MPoly step = MPoly::monomial(field, 1, tail);

    std::vector<unsigned> spec_vars, y_vars;
    for (unsigned i = 1; i < n; ++i) {
        spec_vars.push_back(i);
    }
    for (unsigned i = ns; i < n; ++i) {
        y_vars.push_back(i);
    }

    const unsigned q = F.order();
    std::uint64_t tried = 0;
    std::uint64_t undecided = 0;
    for (std::int64_t d = 0;; ++d) {
        const auto monos = monomials_up_to(n, spec_vars, d);
        const std::size_t top = static_cast<std::size_t>(
            std::find_if(monos.begin(), monos.end(), [d](const IntVec &e) { return degree_of(e) == d; }) -
            monos.begin());
        std::vector<Field::Elem> coeffs(monos.size(), 0);
        // Odometer over coefficient vectors; first monomial most significant.
        while (true) {
            const bool has_top = d == 0 || std::any_of(coeffs.begin() + static_cast<std::ptrdiff_t>(top),
                                                       coeffs.end(), [](Field::Elem c) { return c != 0; });
            if (has_top) {
                if (tried == budget.max_specializations) {
                    throw Undecided("no irreducible specialization among the first " + std::to_string(tried) +
                                    " candidates (" + std::to_string(undecided) +
                                    " undecided factor searches); m = " + std::to_string(m));
                }
                ++tried;
                MPoly a(field, n);
                for (std::size_t k = 0; k < monos.size(); ++k) {
                    a.add_term(monos[k], coeffs[k]);
                }
                MPoly g = base + a * step;
                LaurentNormal norm = strip_monomial_content(g, y_vars);
                if (!norm.poly.is_constant()) {
                    FactorSearch fs = factor_search(norm.poly, budget.factor);
                    if (fs.verdict == FactorVerdict::undecided) {
                        ++undecided;
                    } else if (fs.verdict == FactorVerdict::irreducible) {
                        WitnessResult r{f, m, a, g, norm.poly, fs, {}, false, tried, {}};
                        r.difference_in_conductor = support_in(g - f, s, cert, SupportRegion::conductor);
                        r.agrees_off_conductor = verify_witness(r, s, cert);
                        r.assumptions.push_back(
                            "f K[S^] meets Reg(K[S]) (not decided for dimension >= 2; taken as given)");
                        if (!r.difference_in_conductor.contained || !r.agrees_off_conductor) {
                            throw InvariantViolation("witness g = " + g.to_literal() +
                                                     " fails its conductor certificate");
                        }
                        return r;
                    }
                }
            }
            std::size_t k = coeffs.size();
            while (k > 0 && coeffs[k - 1] == q - 1) {
                coeffs[k - 1] = 0;
                --k;
            }
            if (k == 0) {
                break;
            }
            ++coeffs[k - 1];
        }
    }
}

bool verify_witness(const WitnessResult &r, const AffineMonoid &s, const CicCertificate &cert)
{
    const unsigned ns = s.split().s;
    const unsigned n = s.rank();
    for (const auto &[e, v] : r.a.terms()) {
        if (e[0] != 0) {
            return false;
        }
    }
    IntVec diag(n, 0);
    for (unsigned i = 0; i < ns; ++i) {
        diag[i] = r.m;
    }
    IntVec tail = diag;
    tail[0] += 1;
    const auto field = r.f.field();
    if (!(r.g == r.f + MPoly::monomial(field, 1, diag) + r.a * MPoly::monomial(field, 1, tail))) {
        return false;
    }
    if (!support_in(r.g - r.f, s, cert, SupportRegion::conductor).contained) {
        return false;
    }
    std::set<IntVec> support;
    for (const auto &[e, v] : r.f.terms()) {
        support.insert(e);
    }
    for (const auto &[e, v] : r.g.terms()) {
        support.insert(e);
    }
    for (const auto &e : support) {
        if (s.contains(e) && !in_conductor(s, cert, e) && r.f.coeff(e) != r.g.coeff(e)) {
            return false;
        }
    }
    return true;
}

} // namespace primediv
