#include <gtest/gtest.h>

#include <random>

#include "friezemod/errors.hpp"
#include "friezemod/number_theory.hpp"
#include "oracle.hpp"

using namespace friezemod;

TEST(Primes, MatchTrialDivision) {
    for (std::int64_t n = -3; n < 5000; ++n) ASSERT_EQ(is_prime(n), oracle::is_prime_trial(n)) << n;
    EXPECT_TRUE(is_prime(1'000'000'007));
    EXPECT_FALSE(is_prime(3'215'031'751));  // strong pseudoprime to bases 2, 3, 5, 7
    EXPECT_EQ(primes_between(10, 30), (std::vector<std::int64_t>{11, 13, 17, 19, 23, 29}));
    EXPECT_EQ(factor(360), (std::vector<std::int64_t>{2, 2, 2, 3, 3, 5}));
}

TEST(Squares, Examples) {
    EXPECT_TRUE(is_square(Residue(Modulus(19), 6)));
    EXPECT_FALSE(is_square(Residue(Modulus(17), 12)));
    for (std::int64_t n : {2, 9, 12, 97}) EXPECT_TRUE(is_square(Residue(Modulus(n), 0)));
    for (std::int64_t n = 2; n < 60; ++n) {
        for (std::int64_t a = 0; a < n; ++a) ASSERT_EQ(is_square(Residue(Modulus(n), a)), oracle::is_square_scan(a, n));
    }
}

TEST(Squares, SquareRootModPrime) {
    for (std::int64_t p : primes_between(3, 400)) {
        for (std::int64_t a = 0; a < p; ++a) {
            const auto r = sqrt_mod_prime(a, p);
            ASSERT_EQ(r.has_value(), oracle::is_square_scan(a, p)) << a << " mod " << p;
            if (r) ASSERT_EQ(*r * *r % p, a);
        }
    }
}

TEST(Legendre, Examples) {
    EXPECT_EQ(legendre(17, 97), LegendreValue::minus_one);
    EXPECT_EQ(legendre(12, 17), LegendreValue::minus_one);
    EXPECT_EQ(legendre(1, 101), LegendreValue::plus_one);
    EXPECT_EQ(legendre_via_reciprocity(17, 97), LegendreValue::minus_one);
    EXPECT_EQ(legendre_via_reciprocity(3, 13), LegendreValue::plus_one);
    EXPECT_EQ(legendre_via_reciprocity(-1, 5), LegendreValue::plus_one);
}

TEST(Legendre, RejectsBadInput) {
    EXPECT_THROW(legendre(3, 9), InputError);
    EXPECT_THROW(legendre(3, 2), InputError);
    EXPECT_THROW(legendre(14, 7), InputError);
    EXPECT_THROW(legendre_via_reciprocity(0, 7), InputError);
}

TEST(LegendreProperty, ThreeRoutesAgreeUpTo200) {
    for (std::int64_t p : primes_between(3, 200)) {
        for (std::int64_t a = 1; a < p; ++a) {
            const int euler = to_int(legendre(a, p));
            ASSERT_EQ(euler, to_int(legendre_via_reciprocity(a, p))) << a << "/" << p;
            ASSERT_EQ(euler, oracle::legendre_scan(a, p)) << a << "/" << p;
            ASSERT_EQ(euler, to_int(legendre_via_reciprocity(a - p, p)));
        }
    }
}

TEST(LegendreProperty, Multiplicative) {
    std::mt19937_64 rng(7);
    const auto primes = primes_between(3, 2000);
    for (int i = 0; i < 1000; ++i) {
        const std::int64_t p = primes[rng() % primes.size()];
        const std::int64_t a = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(p - 1));
        const std::int64_t b = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(p - 1));
        ASSERT_EQ(to_int(legendre(a * b, p)), to_int(legendre(a, p)) * to_int(legendre(b, p)));
        ASSERT_EQ(to_int(legendre_via_reciprocity(a * b, p)),
                  to_int(legendre_via_reciprocity(a, p)) * to_int(legendre_via_reciprocity(b, p)));
    }
}

TEST(ThreeIsSquare, ThreeWayUpTo500) {
    EXPECT_TRUE(three_is_square(11));
    EXPECT_FALSE(three_is_square(5));
    EXPECT_TRUE(three_is_square(3));
    EXPECT_THROW(three_is_square(9), InputError);
    for (std::int64_t p : primes_between(2, 500)) {
        const bool rule = p == 2 || p == 3 || p % 12 == 1 || p % 12 == 11;
        ASSERT_EQ(three_is_square(p), rule) << p;
        ASSERT_EQ(is_square(Residue(Modulus(p), 3)), rule) << p;
    }
}

TEST(Binomial, Values) {
    EXPECT_EQ(binomial(4, 2), 6);
    EXPECT_EQ(binomial(18, 2), 153);
    EXPECT_EQ(binomial(5, 7), 0);
    EXPECT_EQ(binomial(5, -1), 0);
    EXPECT_EQ(binomial(0, 0), 1);
    EXPECT_EQ(binomial(100, 50), BigInt("100891344545564193334812497256"));
    EXPECT_THROW(binomial(-1, 0), InputError);
}

TEST(Binomial, DivisibilityExamples) {
    EXPECT_TRUE(check_binomial_divisibility(6, 4));
    EXPECT_TRUE(check_binomial_divisibility(5, 5));
    EXPECT_TRUE(check_binomial_divisibility(8, 2));
    EXPECT_THROW(check_binomial_divisibility(5, 0), InputError);
    EXPECT_TRUE(check_prime_power_binomial_divisibility(3, 4, 2));
    EXPECT_TRUE(check_prime_power_binomial_divisibility(2, 3, 2));
    EXPECT_TRUE(check_prime_power_binomial_divisibility(5, 4, 3));
    EXPECT_THROW(check_prime_power_binomial_divisibility(3, 4, 4), InputError);
    EXPECT_THROW(check_prime_power_binomial_divisibility(3, 2, 2), InputError);
}

TEST(BinomialProperty, DivisibilityRanges) {
    for (std::int64_t n = 1; n <= 60; ++n) {
        for (std::int64_t k = 1; k <= n; ++k) ASSERT_TRUE(check_binomial_divisibility(n, k)) << n << "," << k;
    }
    for (std::int64_t l = 2; l <= 7; ++l) {
        for (std::int64_t n = 3; n <= 7; ++n) {
            for (std::int64_t j = 2; j <= n - 1; ++j) {
                ASSERT_TRUE(check_prime_power_binomial_divisibility(l, n, j)) << l << "," << n << "," << j;
            }
        }
    }
}
