#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include <primediv/error.hpp>
#include <primediv/factor.hpp>
#include <primediv/field.hpp>
#include <primediv/irreducible.hpp>
#include <primediv/unipoly.hpp>

#include "oracles.hpp"

using namespace primediv;

namespace
{

UniPoly P(const FieldRef &f, std::vector<Field::Elem> c)
{
    return UniPoly(f, std::move(c));
}

const std::vector<unsigned> kFieldOrders{2, 3, 4, 5, 7, 8, 9, 25};

} // namespace

TEST(Field, AxiomsHoldForEveryTabledField)
{
    for (unsigned q : kFieldOrders) {
        const auto f = Field::of_order(q);
        ASSERT_EQ(f->order(), q);
        for (unsigned a = 0; a < q; ++a) {
            const auto x = static_cast<Field::Elem>(a);
            EXPECT_EQ(f->add(x, f->neg(x)), 0);
            EXPECT_EQ(f->mul(x, 1), x);
            if (x != 0) {
                EXPECT_EQ(f->mul(x, f->inv(x)), 1) << f->name() << " " << a;
            }
            EXPECT_EQ(f->pow(f->pth_root(x), f->characteristic()), x);
            for (unsigned b = 0; b < q; ++b) {
                const auto y = static_cast<Field::Elem>(b);
                EXPECT_EQ(f->add(x, y), f->add(y, x));
                EXPECT_EQ(f->mul(x, y), f->mul(y, x));
                for (unsigned c = 0; c < q; c += 3) {
                    const auto z = static_cast<Field::Elem>(c);
                    EXPECT_EQ(f->mul(x, f->add(y, z)), f->add(f->mul(x, y), f->mul(x, z)));
                }
            }
        }
    }
}

TEST(Field, RejectsUnsupportedOrders)
{
    EXPECT_THROW(Field::of_order(6), InvalidInput);
    EXPECT_THROW(Field::of_order(1), InvalidInput);
    EXPECT_THROW(Field::of_order(64), InvalidInput);
    EXPECT_EQ(split_prime_power(49), (std::pair<unsigned, unsigned>{7, 2}));
}

TEST(Field, MultiplicativeGroupIsCyclicOfOrderQMinusOne)
{
    for (unsigned q : kFieldOrders) {
        const auto f = Field::of_order(q);
        bool has_generator = false;
        for (unsigned a = 1; a < q && !has_generator; ++a) {
            unsigned ord = 1;
            auto x = static_cast<Field::Elem>(a);
            while (x != 1) {
                x = f->mul(x, static_cast<Field::Elem>(a));
                ++ord;
            }
            has_generator = ord == q - 1;
        }
        EXPECT_TRUE(has_generator) << f->name();
    }
}

TEST(UniPoly, ArithmeticExamples)
{
    const auto f2 = Field::of_order(2);
    const auto f3 = Field::of_order(3);
    EXPECT_EQ(P(f2, {1, 1}) * P(f2, {1, 1}), P(f2, {1, 0, 1}));
    // X^2 - 1 and X - 1 over GF(3).
    EXPECT_EQ(gcd(P(f3, {2, 0, 1}), P(f3, {2, 1})), P(f3, {2, 1}));
    EXPECT_EQ(P(f2, {1, 1, 0, 1}) % P(f2, {1, 1}), P(f2, {1}));
    EXPECT_EQ(P(f2, {}).degree(), -1);
    EXPECT_EQ(P(f2, {1, 0, 0}).degree(), 0);
}

TEST(UniPoly, ErrorsOnMixedFieldsAndZeroDivisor)
{
    const auto f2 = Field::of_order(2);
    const auto f3 = Field::of_order(3);
    EXPECT_THROW(P(f2, {1}) + P(f3, {1}), InvalidInput);
    EXPECT_THROW(divmod(P(f2, {1, 1}), P(f2, {})), InvalidInput);
}

TEST(UniPoly, DigitRoundTrip)
{
    const auto f = Field::of_order(25);
    const auto p = P(f, {1, 0, 24, 13});
    EXPECT_EQ(UniPoly::from_digits(f, p.digits()), p);
    EXPECT_EQ(P(f, {}).digits(), "0");
    EXPECT_THROW(UniPoly::from_digits(Field::of_order(2), "12"), InvalidInput);
}

TEST(UniPolyProperty, DivmodReconstructs)
{
    std::mt19937 rng(11);
    for (unsigned q : {2u, 3u, 4u, 5u}) {
        const auto f = Field::of_order(q);
        for (int i = 0; i < 200; ++i) {
            const auto a = oracle::random_poly(rng, f, 10, false);
            auto b = oracle::random_poly(rng, f, 5, false);
            if (b.is_zero()) {
                continue;
            }
            const auto [quo, rem] = divmod(a, b);
            EXPECT_EQ(quo * b + rem, a);
            EXPECT_LT(rem.degree(), b.degree());
        }
    }
}

TEST(Irreducible, Examples)
{
    const auto f2 = Field::of_order(2);
    EXPECT_TRUE(is_irreducible(P(f2, {1, 1, 1})));
    EXPECT_FALSE(is_irreducible(P(f2, {1, 0, 1})));
    EXPECT_TRUE(is_irreducible(P(f2, {1, 0, 0, 1, 1})));
    EXPECT_THROW(is_irreducible(P(f2, {1})), InvalidInput);
}

TEST(IrreducibleProperty, RabinAgreesWithTrialDivision)
{
    std::mt19937 rng(5);
    for (unsigned q : {2u, 3u, 4u, 5u}) {
        const auto f = Field::of_order(q);
        int checked = 0;
        while (checked < 150) {
            const auto p = oracle::random_poly(rng, f, 6, false);
            if (p.degree() < 1) {
                continue;
            }
            EXPECT_EQ(is_irreducible(p), oracle::irreducible_by_trial_division(p)) << p.to_string();
            ++checked;
        }
    }
}

TEST(IrreducibleProperty, NecklaceCountsUpToDegreeEight)
{
    for (unsigned q : {2u, 3u}) {
        const auto f = Field::of_order(q);
        for (unsigned d = 1; d <= 8; ++d) {
            std::uint64_t monic = 0;
            for (const auto &p : oracle::monic_of_degree(f, d)) {
                monic += is_irreducible(p) ? 1 : 0;
            }
            EXPECT_EQ(monic, monic_irreducible_count(q, d)) << "q=" << q << " d=" << d;
            const auto with_one = irreducibles_with_prefix(f, d, CoefficientPrefix(f, {1}));
            EXPECT_EQ(with_one.size(), irreducible_count_nonzero_constant(q, d));
        }
    }
}

TEST(Irreducible, MoebiusFormulaValues)
{
    EXPECT_EQ(monic_irreducible_count(2, 1), 2u);
    EXPECT_EQ(monic_irreducible_count(2, 4), 3u);
    EXPECT_EQ(monic_irreducible_count(2, 6), 9u);
    EXPECT_EQ(monic_irreducible_count(3, 2), 3u);
    EXPECT_EQ(monic_irreducible_count(4, 3), 20u);
}

TEST(Enumerate, PrefixExamples)
{
    const auto f2 = Field::of_order(2);
    auto digits = [](const std::vector<UniPoly> &v) {
        std::vector<std::string> out;
        for (const auto &p : v) {
            out.push_back(p.to_string());
        }
        return out;
    };
    EXPECT_EQ(digits(enumerate_irreducibles(f2, 1, 3, CoefficientPrefix(f2, {1}))),
              (std::vector<std::string>{"1+X", "1+X+X^2", "1+X^2+X^3", "1+X+X^3"}));
    EXPECT_EQ(digits(enumerate_irreducibles(f2, 1, 3, CoefficientPrefix(f2, {1, 0, 1}))),
              (std::vector<std::string>{"1+X^2+X^3"}));
    const auto f5 = Field::of_order(5);
    EXPECT_EQ(enumerate_irreducibles(f5, 1, 1, CoefficientPrefix(f5, {1})).size(), 4u);
}

TEST(Enumerate, RejectsZeroConstantTerm)
{
    const auto f2 = Field::of_order(2);
    try {
        CoefficientPrefix(f2, {0, 1});
        FAIL();
    } catch (const InvalidInput &e) {
        EXPECT_NE(std::string(e.what()).find("constant term must be nonzero"), std::string::npos);
    }
    EXPECT_THROW(CoefficientPrefix(f2, {}), InvalidInput);
}

TEST(EnumerateProperty, PrefixEnumerationEqualsFilteredEnumeration)
{
    for (unsigned q : {2u, 3u, 4u}) {
        const auto f = Field::of_order(q);
        const std::vector<std::vector<Field::Elem>> prefixes{
            {1}, {1, 0}, {1, 1, 0}, {static_cast<Field::Elem>(q - 1), 1}, {1, 0, 1, 1}};
        for (const auto &pv : prefixes) {
            const CoefficientPrefix prefix(f, pv);
            for (unsigned d = 1; d <= (q == 2 ? 6u : 4u); ++d) {
                std::vector<UniPoly> filtered;
                for (const auto &m : oracle::monic_of_degree(f, d)) {
                    for (unsigned s = 1; s < q; ++s) {
                        const auto p = m.scaled(static_cast<Field::Elem>(s));
                        if (prefix.matches(p) && oracle::irreducible_by_trial_division(p)) {
                            filtered.push_back(p);
                        }
                    }
                }
                std::sort(filtered.begin(), filtered.end(), [](const UniPoly &a, const UniPoly &b) {
                    return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(),
                                                        b.coeffs().end());
                });
                EXPECT_EQ(irreducibles_with_prefix(f, d, prefix), filtered) << "q=" << q << " d=" << d;
            }
        }
    }
}

TEST(EnumerateProperty, ParallelKernelMatchesSerialReference)
{
    for (unsigned q : {2u, 3u, 4u}) {
        const auto f = Field::of_order(q);
        for (unsigned d = 1; d <= (q == 2 ? 13u : 7u); ++d) {
            const CoefficientPrefix prefix(f, {1});
            EXPECT_EQ(irreducibles_with_prefix(f, d, prefix), irreducibles_with_prefix_serial(f, d, prefix));
        }
    }
}

TEST(Factor, ReconstructsAndFactorsAreIrreducible)
{
    std::mt19937 rng(9);
    for (unsigned q : {2u, 3u, 4u, 5u, 9u}) {
        const auto f = Field::of_order(q);
        for (int i = 0; i < 120; ++i) {
            const auto p = oracle::random_poly(rng, f, 12, false);
            if (p.degree() < 1) {
                continue;
            }
            const auto fac = factor(p);
            UniPoly prod = UniPoly::constant(f, fac.unit);
            for (const auto &fp : fac.factors) {
                EXPECT_TRUE(is_irreducible(fp.factor));
                EXPECT_EQ(fp.factor.leading(), 1);
                for (unsigned k = 0; k < fp.multiplicity; ++k) {
                    prod = prod * fp.factor;
                }
            }
            EXPECT_EQ(prod, p);
        }
    }
}

TEST(Factor, CharacteristicPowers)
{
    const auto f2 = Field::of_order(2);
    // (1 + X)^4 (1 + X + X^2)^2
    const auto a = P(f2, {1, 1});
    const auto b = P(f2, {1, 1, 1});
    const auto fac = factor(a * a * a * a * b * b);
    ASSERT_EQ(fac.factors.size(), 2u);
    EXPECT_EQ(fac.factors[0].factor, a);
    EXPECT_EQ(fac.factors[0].multiplicity, 4u);
    EXPECT_EQ(fac.factors[1].factor, b);
    EXPECT_EQ(fac.factors[1].multiplicity, 2u);
}
