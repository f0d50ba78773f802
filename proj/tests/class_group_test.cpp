#include <gtest/gtest.h>

#include <random>
#include <set>

#include <primediv/class_group.hpp>
#include <primediv/error.hpp>
#include <primediv/truncated_unit.hpp>

#include "oracles.hpp"

using namespace primediv;

namespace
{

UniPoly P(const FieldRef &f, std::vector<Field::Elem> c)
{
    return UniPoly(f, std::move(c));
}

TruncatedUnit U(const FieldRef &f, std::vector<Field::Elem> c)
{
    return TruncatedUnit(f, std::move(c));
}

NumericalMonoid S(std::vector<std::uint64_t> g)
{
    return NumericalMonoid::from_generators(std::move(g));
}

ClassLabel L(std::vector<Field::Elem> v)
{
    return ClassLabel{std::move(v)};
}

const std::vector<std::vector<std::uint64_t>> kSuite{{2, 3}, {2, 5}, {3, 4, 5}, {4, 5, 6, 7}};
const std::vector<unsigned> kOrders{2, 3, 4, 5};

} // namespace

TEST(TruncatedUnit, OtimesExamples)
{
    const auto f2 = Field::of_order(2);
    EXPECT_EQ(otimes(U(f2, {1, 0}), U(f2, {1, 0})), U(f2, {0, 1}));
    const auto u = U(f2, {1, 1});
    EXPECT_EQ(otimes(u, TruncatedUnit::identity(f2, 2)), u);
    const auto f3 = Field::of_order(3);
    EXPECT_TRUE(otimes(U(f3, {1}), U(f3, {2})).is_identity());
    EXPECT_THROW(otimes(U(f2, {1}), U(f2, {1, 0})), InvalidInput);
    EXPECT_THROW(otimes(U(f2, {1}), U(f3, {1})), InvalidInput);
}

TEST(TruncatedUnit, InverseExamples)
{
    const auto f2 = Field::of_order(2);
    EXPECT_TRUE(unit_inverse(TruncatedUnit::identity(f2, 3)).is_identity());
    EXPECT_EQ(unit_inverse(U(f2, {1, 0})), U(f2, {1, 1}));
    const auto f5 = Field::of_order(5);
    EXPECT_EQ(unit_inverse(U(f5, {2})), U(f5, {3}));
}

TEST(TruncatedUnitProperty, GroupAxioms)
{
    std::mt19937 rng(21);
    for (unsigned q : kOrders) {
        const auto f = Field::of_order(q);
        for (unsigned m : {1u, 3u, 6u}) {
            for (int i = 0; i < 500; ++i) {
                const auto a = oracle::random_unit(rng, f, m);
                const auto b = oracle::random_unit(rng, f, m);
                const auto c = oracle::random_unit(rng, f, m);
                ASSERT_EQ(otimes(otimes(a, b), c), otimes(a, otimes(b, c)));
                ASSERT_EQ(otimes(a, b), otimes(b, a));
                ASSERT_TRUE(otimes(a, unit_inverse(a)).is_identity());
            }
        }
    }
}

TEST(CompleteToRegular, Examples)
{
    const auto f2 = Field::of_order(2);
    const auto s23 = S({2, 3});
    const auto g = complete_to_regular(P(f2, {1, 1}), s23);
    EXPECT_EQ(g, P(f2, {1, 1}));
    EXPECT_EQ(P(f2, {1, 1}) * g, P(f2, {1, 0, 1}));
    EXPECT_EQ(complete_to_regular(P(f2, {1, 0, 1}), s23), P(f2, {1}));

    const auto f3 = Field::of_order(3);
    const auto g25 = complete_to_regular(P(f3, {1, 1}), S({2, 5}));
    EXPECT_EQ(g25, P(f3, {1, 2, 1, 2}));
    // Tail pinned by direct multiplication: (1 + X)(1 + 2X + X^2 + 2X^3) = 1 + 2X^4.
    EXPECT_EQ(P(f3, {1, 1}) * g25, P(f3, {1, 0, 0, 0, 2}));

    try {
        complete_to_regular(P(f2, {0, 1}), s23);
        FAIL();
    } catch (const InvalidInput &e) {
        EXPECT_NE(std::string(e.what()).find("not coprime to the conductor prime"), std::string::npos);
    }
}

TEST(CompleteToRegularProperty, ProductAvoidsTheGaps)
{
    std::mt19937 rng(33);
    for (const auto &gens : kSuite) {
        const auto s = S(gens);
        for (unsigned q : kOrders) {
            const auto f = Field::of_order(q);
            for (int i = 0; i < 300; ++i) {
                const auto p = oracle::random_poly(rng, f, 8, true);
                const auto g = complete_to_regular(p, s);
                EXPECT_LE(g.degree(), s.frobenius());
                EXPECT_TRUE(is_regular(p * g, s)) << p.to_string();
            }
        }
    }
}

TEST(ClassOf, Examples)
{
    const auto f2 = Field::of_order(2);
    const ClassGroup g345(S({3, 4, 5}), f2);
    EXPECT_EQ(g345.class_of(P(f2, {1, 0, 1, 1})), L({0, 1}));
    EXPECT_EQ(g345.class_of(P(f2, {1, 0, 0, 1, 1})), L({0, 0}));
    const ClassGroup g25(S({2, 5}), f2);
    EXPECT_EQ(g25.class_of(P(f2, {1, 0, 1, 1})), L({0, 1}));
    EXPECT_EQ(g25.class_of(P(f2, {1, 0, 1, 1})).digits(), "01");
    EXPECT_THROW(g25.class_of(P(f2, {0, 1})), InvalidInput);
}

TEST(ClassOf, ScalarMultiplesShareTheClass)
{
    const auto f5 = Field::of_order(5);
    const ClassGroup g(S({3, 4, 5}), f5);
    const auto p = P(f5, {2, 3, 1, 4});
    for (Field::Elem c = 1; c < 5; ++c) {
        EXPECT_EQ(g.class_of(p.scaled(c)), g.class_of(p));
    }
}

TEST(Canonicalization, IdempotentAndWithinTheCoset)
{
    std::mt19937 rng(8);
    for (const auto &gens : kSuite) {
        for (unsigned q : kOrders) {
            const auto f = Field::of_order(q);
            const ClassGroup g(S(gens), f);
            for (int i = 0; i < 200; ++i) {
                const auto u = oracle::random_unit(rng, f, g.m());
                const auto c = g.canonicalize_with_multiplier(u);
                EXPECT_EQ(g.canonicalize(c.representative), c.representative);
                EXPECT_TRUE(g.in_kernel(otimes(unit_inverse(c.representative), u)));
                EXPECT_TRUE(is_regular(c.multiplier, g.monoid()));
                EXPECT_EQ(otimes(u, TruncatedUnit::from_poly(c.multiplier, g.m())), c.representative);
                for (auto k : g.kernel_positions()) {
                    EXPECT_EQ(c.representative.coeff(k), 0);
                }
            }
        }
    }
}

TEST(KernelSubgroup, Examples)
{
    const auto f2 = Field::of_order(2);
    const auto d345 = kernel_subgroup(ClassGroup(S({3, 4, 5}), Field::of_order(3)));
    ASSERT_TRUE(d345.elements.has_value());
    EXPECT_EQ(d345.elements->size(), 1u);
    const auto d25 = kernel_subgroup(ClassGroup(S({2, 5}), f2));
    ASSERT_TRUE(d25.elements.has_value());
    EXPECT_EQ(d25.size_decimal, "2");
    EXPECT_EQ((*d25.elements)[1].lift(), P(f2, {1, 0, 1}));
    const ClassGroup n0(S({1}), f2);
    EXPECT_EQ(n0.m(), 0u);
    EXPECT_EQ(n0.order(), 1u);
    EXPECT_EQ(kernel_subgroup(n0).size_decimal, "1");
}

TEST(KernelSubgroup, ClosedUnderProductsAndInverses)
{
    const auto f = Field::of_order(3);
    const ClassGroup g(S({3, 5, 7}), f);
    const auto d = kernel_subgroup(g);
    ASSERT_TRUE(d.elements.has_value());
    for (const auto &a : *d.elements) {
        EXPECT_TRUE(g.in_kernel(unit_inverse(a)));
        for (const auto &b : *d.elements) {
            EXPECT_TRUE(g.in_kernel(otimes(a, b)));
        }
    }
}

TEST(KernelSubgroup, LargeKernelIsDescribedNotListed)
{
    const ClassGroup g(S({2, 41}), Field::of_order(5));
    const auto d = kernel_subgroup(g);
    EXPECT_FALSE(d.elements.has_value());
    EXPECT_EQ(d.positions.size(), 19u);
    EXPECT_EQ(d.size_decimal, "19073486328125");
}

TEST(ClassGroup, OrderFormulaAgainstCosetEnumeration)
{
    for (const auto &gens : kSuite) {
        for (unsigned q : kOrders) {
            const auto f = Field::of_order(q);
            const ClassGroup g(S(gens), f);
            EXPECT_EQ(g.order().value(), oracle::coset_count(g.monoid(), f));
        }
    }
}

TEST(ClassGroup, InvariantFactorExamples)
{
    EXPECT_EQ(invariant_factors(ClassGroup(S({2, 3}), Field::of_order(3))), (std::vector<std::uint64_t>{3}));
    EXPECT_EQ(invariant_factors(ClassGroup(S({3, 4, 5}), Field::of_order(2))), (std::vector<std::uint64_t>{4}));
    EXPECT_TRUE(invariant_factors(ClassGroup(S({1}), Field::of_order(2))).empty());
    // <4,5,6,7> truncates at X^4; 1-units mod X^4 over GF(2) are Z/4 x Z/2.
    EXPECT_EQ(invariant_factors(ClassGroup(S({4, 5, 6, 7}), Field::of_order(2))),
              (std::vector<std::uint64_t>{2, 4}));
    // GF(4) is GF(2)^2 additively, so <2,3> gives (Z/2)^2.
    EXPECT_EQ(invariant_factors(ClassGroup(S({2, 3}), Field::of_order(4))), (std::vector<std::uint64_t>{2, 2}));
}

TEST(ClassGroupProperty, CensusKernelsAgreeAndFactorsMultiplyToOrder)
{
    for (const auto &gens : kSuite) {
        for (unsigned q : kOrders) {
            const ClassGroup g(S(gens), Field::of_order(q));
            EXPECT_EQ(order_census(g).order_counts, order_census_serial(g).order_counts);
            std::uint64_t prod = 1;
            for (auto x : invariant_factors(g)) {
                prod *= x;
            }
            EXPECT_EQ(prod, g.order().value());
        }
    }
}

TEST(ClassGroup, CensusBudgetIsEnforced)
{
    const ClassGroup g(NumericalMonoid::ordinary(13), Field::of_order(3));
    EXPECT_THROW(order_census(g), Undecided);
}

TEST(ClassGroupProperty, ClassMapIsAHomomorphism)
{
    std::mt19937 rng(44);
    for (const auto &gens : kSuite) {
        for (unsigned q : kOrders) {
            const auto f = Field::of_order(q);
            const ClassGroup g(S(gens), f);
            for (int i = 0; i < 500; ++i) {
                const auto a = oracle::random_poly(rng, f, 8, true);
                const auto b = oracle::random_poly(rng, f, 8, true);
                ASSERT_EQ(g.class_of(a * b), g.combine(g.class_of(a), g.class_of(b)));
            }
        }
    }
}

TEST(ClassGroupProperty, LabelIndexingRoundTrips)
{
    const ClassGroup g(S({4, 5, 6, 7}), Field::of_order(3));
    std::set<ClassLabel> seen;
    for (std::uint64_t i = 0; i < g.label_count(); ++i) {
        const auto l = g.label_at(i);
        EXPECT_EQ(g.index_of(l), i);
        EXPECT_EQ(g.label_of(g.lift(l)), l);
        seen.insert(l);
        EXPECT_EQ(g.combine(l, g.inverse(l)), g.identity());
    }
    EXPECT_EQ(seen.size(), 27u);
}

TEST(Theta, Examples)
{
    const auto f2 = Field::of_order(2);
    const ClassGroup from(NumericalMonoid::ordinary(3), f2);
    const ClassGroup to(S({2, 3}), f2);
    std::set<ClassLabel> image;
    for (std::uint64_t i = 0; i < from.label_count(); ++i) {
        image.insert(theta(from, to, from.label_at(i)));
    }
    EXPECT_EQ(from.label_count(), 8u);
    EXPECT_EQ(image.size(), 2u);
    EXPECT_EQ(theta(from, to, from.identity()), to.identity());

    const ClassGroup s4567(S({4, 5, 6, 7}), f2);
    const auto p = P(f2, {1, 1, 0, 1});
    EXPECT_EQ(theta(s4567, to, s4567.class_of(p)), to.class_of(p));

    EXPECT_THROW(theta(to, from, to.identity()), InvalidInput);
    EXPECT_THROW(theta(from, ClassGroup(S({2, 3}), Field::of_order(3)), from.identity()), InvalidInput);
}

TEST(ThetaProperty, CompatibleHomomorphicAndSurjective)
{
    const std::vector<std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>> pairs{
        {{4, 5, 6, 7}, {2, 3}}, {{4, 5, 6, 7}, {3, 4, 5}}, {{3, 4, 5}, {2, 3}}, {{2, 5}, {2, 3}},
        {{4, 5, 6, 7}, {2, 5}}};
    std::mt19937 rng(55);
    for (const auto &[sg, tg] : pairs) {
        for (unsigned q : kOrders) {
            const auto f = Field::of_order(q);
            const ClassGroup from(S(sg), f);
            const ClassGroup to(S(tg), f);
            for (int i = 0; i < 500; ++i) {
                const auto p = oracle::random_poly(rng, f, 8, true);
                ASSERT_EQ(theta(from, to, from.class_of(p)), to.class_of(p));
            }
            std::set<ClassLabel> image;
            for (std::uint64_t i = 0; i < from.label_count(); ++i) {
                const auto a = from.label_at(i);
                image.insert(theta(from, to, a));
                const auto b = from.label_at((i * 7 + 3) % from.label_count());
                ASSERT_EQ(theta(from, to, from.combine(a, b)), to.combine(theta(from, to, a), theta(from, to, b)));
            }
            EXPECT_EQ(image.size(), to.label_count());
        }
    }
}

TEST(SameClassWitness, Examples)
{
    const auto f2 = Field::of_order(2);
    const ClassGroup g23(S({2, 3}), f2);
    const auto f = P(f2, {1, 1});
    const auto same = same_class_witness(f, f, g23);
    ASSERT_TRUE(std::holds_alternative<SameClassWitness>(same));
    EXPECT_TRUE(std::get<SameClassWitness>(same).a.is_one());
    EXPECT_TRUE(std::get<SameClassWitness>(same).b.is_one());

    const auto r = same_class_witness(f, P(f2, {1, 1, 1}), g23);
    ASSERT_TRUE(std::holds_alternative<SameClassWitness>(r));
    const auto &w = std::get<SameClassWitness>(r);
    EXPECT_EQ(f * w.b, (P(f2, {1, 1, 1}) * w.a).scaled(w.unit));

    const ClassGroup g345(S({3, 4, 5}), f2);
    const auto d = same_class_witness(P(f2, {1, 0, 1, 1}), P(f2, {1, 1, 1}), g345);
    ASSERT_TRUE(std::holds_alternative<DifferentClasses>(d));
    EXPECT_EQ(std::get<DifferentClasses>(d).f_label, L({0, 1}));
    EXPECT_EQ(std::get<DifferentClasses>(d).g_label, L({1, 1}));

    const auto e = same_class_witness(P(f2, {1, 0, 1, 1}), P(f2, {1, 0, 1, 1, 1}), g345);
    ASSERT_TRUE(std::holds_alternative<SameClassWitness>(e));
    EXPECT_THROW(same_class_witness(P(f2, {0, 1}), f, g23), InvalidInput);
}

TEST(SameClassWitnessProperty, WitnessesVerifyForEqualLabels)
{
    std::mt19937 rng(66);
    for (const auto &gens : kSuite) {
        for (unsigned q : {2u, 3u, 5u}) {
            const auto f = Field::of_order(q);
            const ClassGroup g(S(gens), f);
            int found = 0;
            for (int i = 0; i < 400 && found < 40; ++i) {
                const auto a = oracle::random_poly(rng, f, 6, true);
                const auto b = oracle::random_poly(rng, f, 6, true);
                const auto r = same_class_witness(a, b, g);
                if (const auto *w = std::get_if<SameClassWitness>(&r)) {
                    ++found;
                    EXPECT_TRUE(is_regular(w->a, g.monoid()));
                    EXPECT_TRUE(is_regular(w->b, g.monoid()));
                    EXPECT_EQ(a * w->b, (b * w->a).scaled(w->unit));
                } else {
                    EXPECT_NE(g.class_of(a), g.class_of(b));
                }
            }
        }
    }
}
