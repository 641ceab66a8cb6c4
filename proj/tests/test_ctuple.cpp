#include <gtest/gtest.h>

#include <random>
#include <set>

#include "friezemod/ctuple.hpp"
#include "friezemod/errors.hpp"
#include "friezemod/solution.hpp"
#include "oracle.hpp"

using namespace friezemod;

TEST(CTuple, ConstructionAndParsing) {
    const Modulus m(11);
    EXPECT_THROW(CTuple(m, std::vector<std::int64_t>{}), InputError);
    const CTuple t = parse_tuple(m, " 2, -2 ,+13,9");
    EXPECT_EQ(t, CTuple(m, {2, 9, 2, 9}));
    EXPECT_EQ(format_tuple(t), "2,9,2,9");
    EXPECT_EQ(format_tuple(t, true), "2,-2,2,-2");
    EXPECT_THROW(parse_tuple(m, "1,,2"), InputError);
    EXPECT_THROW(parse_tuple(m, "1,x"), InputError);
    EXPECT_THROW(parse_tuple(m, ""), InputError);
    EXPECT_EQ(CTuple::alternating(m, 2, 4), t);
    EXPECT_EQ(CTuple::constant(m, 3, 3), CTuple(m, {3, 3, 3}));
}

TEST(CTuple, DihedralHelpers) {
    const Modulus m(5);
    const CTuple t(m, {1, 2, 3});
    EXPECT_EQ(t.rotated(1), CTuple(m, {2, 3, 1}));
    EXPECT_EQ(t.reversed(), CTuple(m, {3, 2, 1}));
    EXPECT_EQ(t.negated(), CTuple(m, {4, 3, 2}));
    EXPECT_EQ((DihedralTransform{1, true}.apply(t)), CTuple(m, {2, 1, 3}));
}

TEST(Oplus, Examples) {
    const Modulus m(11);
    EXPECT_EQ(oplus(CTuple(m, {1, 2, 3}), CTuple(m, {4, 1, 3, 2})), CTuple(m, {3, 2, 7, 1, 3}));
    EXPECT_EQ(oplus(CTuple(m, {4, 0, 1, 2}), CTuple(m, {-1, 0, 1})), CTuple(m, {5, 0, 1, 1, 0}));
    const CTuple a(m, {3, 1, 4, 1, 5});
    const CTuple zero(m, {0, 0});
    EXPECT_EQ(oplus(a, zero), a);
    // literal formula on the left: (a_n, a_1, ..., a_{n-1}), the same class as a
    EXPECT_EQ(oplus(zero, a), a.rotated(a.size() - 1));
    EXPECT_TRUE(equivalent(oplus(zero, a), a));
    EXPECT_THROW(oplus(CTuple(m, {1}), a), InputError);
    EXPECT_THROW(oplus(a, CTuple(Modulus(7), {1, 1, 1})), ModulusMismatch);
}

TEST(Oplus, NeitherCommutativeNorAssociative) {
    const Modulus m(11);
    const CTuple a(m, {1, 2, 3}), b(m, {4, 1, 3, 2}), c(m, {5, 6, 7});
    EXPECT_NE(oplus(a, b), oplus(b, a));
    EXPECT_NE(oplus(oplus(a, b), c), oplus(a, oplus(b, c)));
}

TEST(OplusProperty, MatchesOracleAndPreservesSolutionStatus) {
    std::mt19937_64 rng(21);
    for (std::int64_t n : {5, 7, 11}) {
        const Modulus m(n);
        WorkBudget budget;
        std::vector<CTuple> sols;
        for (std::size_t len = 3; len <= 4; ++len) {
            for (auto& t : enumerate_solutions(m, len, false, budget)) sols.push_back(t);
        }
        for (int i = 0; i < 350; ++i) {
            std::vector<std::int64_t> a(2 + rng() % 6);
            for (auto& v : a) v = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(n));
            const CTuple ta(m, a);
            const CTuple& b = sols[rng() % sols.size()];
            const CTuple sum = oplus(ta, b);
            std::vector<std::int64_t> bv(b.reps().begin(), b.reps().end());
            ASSERT_EQ(std::vector<std::int64_t>(sum.reps().begin(), sum.reps().end()), oracle::oplus(a, bv, n));
            ASSERT_EQ(is_solution(sum), is_solution(ta));
        }
    }
}

TEST(Equivalence, Examples) {
    const Modulus m5(5), m11(11);
    const auto cls = equivalence_class(CTuple(m5, {1, 2, 3}));
    EXPECT_EQ(cls.size(), 6u);
    EXPECT_EQ(equivalence_class(CTuple(m5, {2, 2, 2})).size(), 1u);
    EXPECT_EQ(equivalence_class(CTuple(m11, {2, 9, 2, 9})).size(), 2u);
    EXPECT_EQ(canonical_form(CTuple(m5, {3, 1, 2})), CTuple(m5, {1, 2, 3}));
    EXPECT_EQ(canonical_form(CTuple(m11, {9, 2, 9, 2})), CTuple(m11, {2, 9, 2, 9}));
    EXPECT_EQ(canonical_form(CTuple(m5, {4, 4, 4, 4})), CTuple(m5, {4, 4, 4, 4}));
    EXPECT_TRUE(equivalent(CTuple(m5, {1, 2, 3, 4}), CTuple(m5, {2, 1, 4, 3})));
    EXPECT_FALSE(equivalent(CTuple(m5, {1, 2, 3, 4}), CTuple(m5, {1, 3, 2, 4})));
}

TEST(EquivalenceProperty, TransformsReproduceMembers) {
    std::mt19937_64 rng(22);
    const Modulus m(7);
    for (int i = 0; i < 300; ++i) {
        std::vector<std::int64_t> v(1 + rng() % 8);
        for (auto& x : v) x = static_cast<std::int64_t>(rng() % 7);
        const CTuple t(m, v);
        const auto members = equivalence_class_with_transforms(t);
        ASSERT_EQ((2 * t.size()) % members.size(), 0u);
        ASSERT_TRUE(std::is_sorted(members.begin(), members.end(),
                                   [](const ClassMember& a, const ClassMember& b) { return a.tuple < b.tuple; }));
        for (const auto& mem : members) {
            ASSERT_EQ(mem.transform.apply(t), mem.tuple);
            ASSERT_EQ(canonical_form(mem.tuple), canonical_form(t));
        }
    }
}
