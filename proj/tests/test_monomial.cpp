#include <gtest/gtest.h>

#include "friezemod/errors.hpp"
#include "friezemod/monomial.hpp"
#include "friezemod/number_theory.hpp"
#include "oracle.hpp"

using namespace friezemod;

TEST(MonomialSize, Examples) {
    EXPECT_EQ(minimal_monomial_size(Modulus(23), 5).size, 4u);
    EXPECT_EQ(minimal_monomial_size(Modulus(41), 17).size, 4u);
    for (std::int64_t n : {5, 11, 47, 100}) EXPECT_EQ(minimal_monomial_size(Modulus(n), 1).size, 3u);
    EXPECT_EQ(minimal_monomial_size(Modulus(11), 2).size, 11u);
    EXPECT_EQ(minimal_monomial_size(Modulus(11), 0).size, 2u);
    EXPECT_EQ(minimal_monomial_size(Modulus(11), -2).size, 11u);
}

TEST(MonomialSizeProperty, MatchesOracleAndBound) {
    for (std::int64_t n = 2; n <= 100; ++n) {
        const Modulus m(n);
        for (std::int64_t k = 0; k < n; ++k) {
            const MonomialRecord r = minimal_monomial_size(m, k);
            ASSERT_LE(r.size, static_cast<std::size_t>(3 * n));
            if (n <= 40) ASSERT_EQ(r.size, oracle::min_constant_size(n, k)) << k << " mod " << n;
            ASSERT_TRUE(is_solution(r.tuple()));
        }
    }
}

TEST(MonomialTheorems, PrimeSizes) {
    for (std::int64_t p : primes_between(3, 199)) EXPECT_TRUE(check_prime_monomial_sizes(p)) << p;
    EXPECT_THROW(check_prime_monomial_sizes(15), InputError);
    EXPECT_THROW(check_prime_monomial_sizes(2), InputError);
}

TEST(MonomialTheorems, Symmetry) {
    for (std::int64_t n = 2; n <= 60; ++n) EXPECT_TRUE(check_monomial_symmetry(Modulus(n)));
}

TEST(MonomialTheorems, HalfModulus) {
    for (std::int64_t n = 4; n <= 200; n += 2) {
        const MonomialRecord r = half_modulus_analysis(Modulus(n));
        EXPECT_EQ(r.size, (n % 4 == 0) ? 4u : 6u) << n;
        EXPECT_EQ(r.verdict, ReductionVerdict::irreducible);
    }
    EXPECT_THROW(half_modulus_analysis(Modulus(9)), InputError);
    EXPECT_THROW(half_modulus_analysis(Modulus(2)), InputError);
}

TEST(MonomialTheorems, DivisorFamily) {
    EXPECT_TRUE(check_divisor_monomial(Modulus(9), 3));
    EXPECT_TRUE(check_divisor_monomial(Modulus(50), 5));
    EXPECT_TRUE(check_divisor_monomial(Modulus(36), 6));
    EXPECT_TRUE(check_divisor_monomial(Modulus(16), 2));
    EXPECT_THROW(check_divisor_monomial(Modulus(12), 3), InputError);
}

TEST(MonomialTheorems, ContinuantAtDivisor) {
    // K_{p-1}(N/p, ..., N/p) = (-1)^((p-1)/2) mod N when p^2 | N.
    for (std::int64_t p : {3, 5, 7}) {
        for (std::int64_t n = p * p; n <= 600; n += p * p) {
            const Modulus m(n);
            const std::vector<std::int64_t> t(static_cast<std::size_t>(p - 1), n / p);
            const std::int64_t expected = ((p - 1) / 2) % 2 == 0 ? 1 : n - 1;
            ASSERT_EQ(continuant(m, t).rep(), expected) << p << " " << n;
        }
    }
}

TEST(PrimePower, Examples) {
    const ReductionResult r27 = prime_power_reduction(Modulus(27), 3);
    ASSERT_EQ(r27.verdict, ReductionVerdict::reducible);
    EXPECT_EQ(r27.witness->right.size(), 8u);
    EXPECT_EQ(r27.witness->left.size(), 12u);
    EXPECT_TRUE(validate_witness(prime_power_tuple(3, 3), *r27.witness).ok);

    const ReductionResult r9 = prime_power_reduction(Modulus(9), 3);
    ASSERT_EQ(r9.verdict, ReductionVerdict::reducible);
    EXPECT_EQ(r9.witness->right, CTuple(Modulus(9), {-3, 3, 3, -3}));
    EXPECT_EQ(r9.witness->left, CTuple(Modulus(9), {6, 3, 3, 6}));

    EXPECT_EQ(prime_power_reduction(Modulus(8), 2).verdict, ReductionVerdict::irreducible);
    WorkBudget budget;
    EXPECT_EQ(find_reduction(CTuple::constant(Modulus(8), 2, 8), budget).verdict, ReductionVerdict::irreducible);
    EXPECT_THROW(prime_power_reduction(Modulus(12), 3), InputError);
    EXPECT_THROW(prime_power_reduction(Modulus(3), 3), InputError);
}

TEST(PrimePowerProperty, WitnessesValidate) {
    for (std::int64_t l : {3, 4, 5}) {
        std::int64_t n = l * l;
        for (std::int64_t e = 2; n <= 3000; ++e, n *= l) {
            const ReductionResult r = prime_power_reduction(Modulus(n), l);
            ASSERT_EQ(r.verdict, ReductionVerdict::reducible) << l << "^" << e;
            ASSERT_TRUE(validate_witness(prime_power_tuple(l, e), *r.witness).ok) << l << "^" << e;
        }
    }
}

TEST(AnalyzeMonomial, VerdictSources) {
    WorkBudget budget;
    auto run = [&](std::int64_t n, std::int64_t k) { return analyze_monomial(Modulus(n), k, budget); };
    EXPECT_EQ(run(11, 0).verdict, ReductionVerdict::not_applicable);
    EXPECT_EQ(run(11, 1).verdict_source, "size 3");
    EXPECT_EQ(run(11, 3).verdict_source, "prime-modulus theorem");
    EXPECT_EQ(run(15, 2).verdict_source, "k=2 theorem");
    EXPECT_EQ(run(14, 7).verdict_source, "half-modulus theorem");
    const MonomialRecord d = run(45, 15);
    EXPECT_EQ(d.verdict_source, "divisor theorem");
    EXPECT_EQ(d.verdict, ReductionVerdict::reducible);
    EXPECT_TRUE(validate_witness(d.tuple(), *d.witness).ok);
    const MonomialRecord pp = run(27, 3);
    EXPECT_EQ(pp.verdict, ReductionVerdict::reducible);
    EXPECT_TRUE(validate_witness(pp.tuple(), *pp.witness).ok);
    const MonomialRecord s = run(15, 4);
    EXPECT_NE(s.verdict, ReductionVerdict::unknown);
}

TEST(AnalyzeMonomialProperty, TheoremVerdictsAgreeWithSearch) {
    // Every theorem-based verdict on small moduli is confirmed by the generic search.
    for (std::int64_t n = 3; n <= 16; ++n) {
        for (std::int64_t k = 0; k < n; ++k) {
            WorkBudget b1;
            const MonomialRecord r = analyze_monomial(Modulus(n), k, b1);
            if (r.verdict == ReductionVerdict::not_applicable) continue;
            WorkBudget b2;
            const ReductionResult s = find_reduction(r.tuple(), b2);
            ASSERT_EQ(r.verdict, s.verdict) << k << " mod " << n << " via " << r.verdict_source;
            if (r.witness) ASSERT_TRUE(validate_witness(r.tuple(), *r.witness).ok);
        }
    }
}
