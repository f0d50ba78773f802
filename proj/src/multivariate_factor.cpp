#include <primediv/multivariate_factor.hpp>

#include <primediv/error.hpp>
#include <primediv/factor.hpp>

namespace primediv
{

namespace
{

bool factor_less(const MPoly &a, const MPoly &b)
{
    if (a.total_degree() != b.total_degree()) {
        return a.total_degree() < b.total_degree();
    }
    if (a.terms().size() != b.terms().size()) {
        return a.terms().size() < b.terms().size();
    }
    return a.terms() < b.terms();
}

} // namespace

std::string to_string(FactorVerdict v)
{
    switch (v) {
    case FactorVerdict::irreducible:
        return "irreducible";
    case FactorVerdict::reducible:
        return "reducible";
    case FactorVerdict::undecided:
        return "undecided";
    }
    return "?";
}

FactorSearch factor_search(const MPoly &f, const FactorBudget &budget)
{
    if (!f.is_polynomial()) {
        throw InvalidInput("factor search needs nonnegative exponents; clear Laurent units first");
    }
    if (f.is_constant()) {
        throw InvalidInput("factor search on a constant");
    }
    FactorSearch out{FactorVerdict::undecided, std::nullopt, std::nullopt, 0, {}};
    if (f.total_degree() > budget.max_total_degree) {
        out.transcript = "total degree " + std::to_string(f.total_degree()) + " exceeds budget " +
                         std::to_string(budget.max_total_degree);
        return out;
    }

    const unsigned n = f.nvars();
    // A variable dividing every term is a factor of total degree 1 with one
    // term, hence the smallest possible.
    const IntVec content = f.min_exponents();
    std::optional<MPoly> var_factor;
    for (unsigned i = 0; i < n; ++i) {
        if (content[i] > 0) {
            IntVec e(n, 0);
            e[i] = 1;
            MPoly x = MPoly::monomial(f.field(), 1, e);
            if (!var_factor || factor_less(x, *var_factor)) {
                var_factor = std::move(x);
            }
        }
    }
    if (var_factor) {
        auto h = exact_divide(f, *var_factor);
        if (!h) {
            throw InvariantViolation("monomial content does not divide " + f.to_literal());
        }
        if (h->is_constant()) {
            out.verdict = FactorVerdict::irreducible;
            out.transcript = "a variable times a constant";
            return out;
        }
        out.verdict = FactorVerdict::reducible;
        out.g = std::move(var_factor);
        out.h = std::move(h);
        out.transcript = "monomial content " + out.g->to_literal();
        return out;
    }

    std::vector<std::int64_t> radix(n), weight(n);
    std::int64_t w = 1;
    for (unsigned i = 0; i < n; ++i) {
        radix[i] = f.degree_in(i) + 1;
        weight[i] = w;
        w *= radix[i];
    }
    const UniPoly image = kronecker_image(f, weight);
    const Factorization fac = factor(image);

    std::uint64_t combos = 1;
    for (const auto &fp : fac.factors) {
        combos *= fp.multiplicity + 1;
        if (combos > budget.max_candidates) {
            out.transcript = "image of degree " + std::to_string(image.degree()) + " has more than " +
                             std::to_string(budget.max_candidates) + " divisor candidates";
            return out;
        }
    }

    // Mixed-radix walk over exponent vectors e_j <= multiplicity_j.
    const std::size_t k = fac.factors.size();
    std::vector<unsigned> e(k, 0);
    const int half = image.degree() / 2;
    std::optional<MPoly> best;
    for (std::uint64_t c = 1; c < combos; ++c) {
        std::size_t j = 0;
        while (e[j] == fac.factors[j].multiplicity) {
            e[j] = 0;
            ++j;
        }
        ++e[j];
        int deg = 0;
        for (std::size_t i = 0; i < k; ++i) {
            deg += static_cast<int>(e[i]) * fac.factors[i].factor.degree();
        }
        if (deg > half) {
            continue;
        }
        UniPoly u = UniPoly::constant(f.field(), 1);
        for (std::size_t i = 0; i < k; ++i) {
            for (unsigned r = 0; r < e[i]; ++r) {
                u = u * fac.factors[i].factor;
            }
        }
        ++out.candidates;
        MPoly g = kronecker_decode(u, radix);
        bool in_box = true;
        for (const auto &[x, v] : g.terms()) {
            for (unsigned i = 0; i < n; ++i) {
                in_box = in_box && x[i] < radix[i];
            }
        }
        if (!in_box || g.is_constant()) {
            continue;
        }
        g = g.monic();
        // Divisors with image degree above half are cofactors of ones below.
        if (auto h = exact_divide(f, g); h && !h->is_constant()) {
            for (auto cand : {g, h->monic()}) {
                if (!best || factor_less(cand, *best)) {
                    best = std::move(cand);
                }
            }
        }
    }

    out.transcript = "Kronecker image of degree " + std::to_string(image.degree()) + " with " +
                     std::to_string(fac.factors.size()) + " distinct irreducible factors; " +
                     std::to_string(out.candidates) + " divisor candidates tested";
    if (!best) {
        out.verdict = FactorVerdict::irreducible;
        return out;
    }
    auto h = exact_divide(f, *best);
    if (!h || !(*best * *h == f)) {
        throw InvariantViolation("factor " + best->to_literal() + " does not divide " + f.to_literal());
    }
    out.verdict = FactorVerdict::reducible;
    out.g = std::move(best);
    out.h = std::move(h);
    return out;
}

} // namespace primediv
