#include <gtest/gtest.h>

#include <random>

#include <primediv/error.hpp>
#include <primediv/irreducible.hpp>
#include <primediv/multivariate_factor.hpp>

#include "oracles.hpp"

using namespace primediv;

namespace
{

MPoly M(const FieldRef &f, unsigned n, const char *lit)
{
    return MPoly::parse(f, n, lit);
}

MPoly random_mpoly(std::mt19937 &rng, const FieldRef &f, unsigned n, int max_exp, int terms)
{
    std::uniform_int_distribution<int> ex(0, max_exp);
    std::uniform_int_distribution<unsigned> co(1, f->order() - 1);
    MPoly p(f, n);
    for (int i = 0; i < terms; ++i) {
        IntVec e(n);
        for (auto &x : e) {
            x = ex(rng);
        }
        p.add_term(e, static_cast<Field::Elem>(co(rng)));
    }
    return p;
}

void expect_consistent(const MPoly &f, const FactorSearch &r)
{
    if (r.verdict == FactorVerdict::reducible) {
        ASSERT_TRUE(r.g && r.h);
        EXPECT_FALSE(r.g->is_constant());
        EXPECT_FALSE(r.h->is_constant());
        EXPECT_EQ(r.g->leading_term().second, 1);
        EXPECT_EQ(*r.g * *r.h, f);
    } else {
        EXPECT_FALSE(r.g.has_value());
    }
}

} // namespace

TEST(FactorSearch, Examples)
{
    const auto f2 = Field::of_order(2);
    const auto irr = factor_search(M(f2, 2, "1:0,0;1:2,2;1:3,2"));
    EXPECT_EQ(irr.verdict, FactorVerdict::irreducible);

    // 1 + X1^2 X2^2 = (1 + X1 X2)^2 in characteristic 2.
    const auto sq = factor_search(M(f2, 2, "1:0,0;1:2,2"));
    ASSERT_EQ(sq.verdict, FactorVerdict::reducible);
    EXPECT_EQ(*sq.g, M(f2, 2, "1:0,0;1:1,1"));

    // X1 + X1 X2 = X1 (1 + X2): the smallest factor is reported.
    const auto mono = factor_search(M(f2, 2, "1:1,0;1:1,1"));
    ASSERT_EQ(mono.verdict, FactorVerdict::reducible);
    EXPECT_EQ(*mono.g, M(f2, 2, "1:1,0"));
    EXPECT_EQ(to_string(FactorVerdict::undecided), "undecided");

    EXPECT_THROW(factor_search(M(f2, 2, "1:0,0")), InvalidInput);
    EXPECT_THROW(factor_search(M(f2, 2, "1:0,0;1:0,-1")), InvalidInput);
}

TEST(FactorSearch, BudgetYieldsUndecided)
{
    const auto f2 = Field::of_order(2);
    FactorBudget tight;
    tight.max_total_degree = 3;
    EXPECT_EQ(factor_search(M(f2, 2, "1:0,0;1:2,2"), tight).verdict, FactorVerdict::undecided);
}

TEST(FactorSearchProperty, AgreesWithUnivariateIrreducibility)
{
    std::mt19937 rng(31);
    for (unsigned q : {2u, 3u, 5u}) {
        const auto f = Field::of_order(q);
        for (int i = 0; i < 150; ++i) {
            const auto u = oracle::random_poly(rng, f, 10, false);
            if (u.degree() < 1) {
                continue;
            }
            MPoly p(f, 1);
            for (std::size_t k = 0; k < u.coeffs().size(); ++k) {
                p.add_term({static_cast<std::int64_t>(k)}, u.coeffs()[k]);
            }
            const auto r = factor_search(p);
            expect_consistent(p, r);
            EXPECT_EQ(r.verdict == FactorVerdict::irreducible, is_irreducible(u)) << u.to_string();
        }
    }
}

TEST(FactorSearchProperty, AgreesWithExhaustiveDivisorSearch)
{
    std::mt19937 rng(37);
    int compared = 0;
    for (unsigned q : {2u, 3u}) {
        const auto f = Field::of_order(q);
        for (int i = 0; i < 300; ++i) {
            const unsigned n = 2 + i % 2;
            const auto p = random_mpoly(rng, f, n, 2, 1 + i % 4);
            if (p.is_constant()) {
                continue;
            }
            const auto naive = oracle::naive_factor(p);
            const auto r = factor_search(p);
            expect_consistent(p, r);
            if (!naive) {
                continue;
            }
            ++compared;
            EXPECT_EQ(r.verdict == FactorVerdict::irreducible, naive->irreducible) << p.to_literal();
        }
    }
    EXPECT_GT(compared, 200);
}

TEST(FactorSearchProperty, ProductsAreReducible)
{
    std::mt19937 rng(41);
    for (unsigned q : {2u, 3u, 4u}) {
        const auto f = Field::of_order(q);
        for (int i = 0; i < 80; ++i) {
            const auto a = random_mpoly(rng, f, 3, 2, 3);
            const auto b = random_mpoly(rng, f, 3, 2, 3);
            if (a.is_zero() || b.is_zero() || a.is_constant() || b.is_constant()) {
                continue;
            }
            const auto p = a * b;
            const auto r = factor_search(p);
            expect_consistent(p, r);
            EXPECT_EQ(r.verdict, FactorVerdict::reducible) << p.to_literal() << " " << r.transcript;
        }
    }
}
