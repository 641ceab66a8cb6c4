#include <gtest/gtest.h>

#include <random>

#include "friezemod/errors.hpp"
#include "friezemod/residue.hpp"
#include "oracle.hpp"

using namespace friezemod;

TEST(Modulus, RejectsValuesBelowTwo) {
    EXPECT_THROW(Modulus(1), InputError);
    EXPECT_THROW(Modulus(0), InputError);
    EXPECT_THROW(Modulus(-7), InputError);
    EXPECT_NO_THROW(Modulus(2));
}

TEST(Modulus, CachesPrimality) {
    EXPECT_TRUE(Modulus(11).is_prime());
    EXPECT_FALSE(Modulus(12).is_prime());
    EXPECT_TRUE(Modulus(2).is_prime());
}

TEST(Residue, NormalizesOnConstruction) {
    const Modulus m(11);
    EXPECT_EQ(Residue(m, -2).rep(), 9);
    EXPECT_EQ(Residue(m, 24).rep(), 2);
    EXPECT_EQ(Residue(m, -2), Residue(m, 9));
    EXPECT_EQ(Residue(m, 9).balanced(), -2);
    EXPECT_EQ(Residue(Modulus(10), 5).balanced(), 5);
}

TEST(Residue, BasicOperations) {
    const Modulus m(11);
    EXPECT_EQ(res_add(Residue(m, 6), Residue(m, 7)).rep(), 2);
    EXPECT_EQ(res_mul(Residue(m, 6), Residue(m, 7)).rep(), 9);
    EXPECT_EQ(res_neg(Residue(Modulus(14), 7)).rep(), 7);
    EXPECT_EQ((Residue(m, 3) - Residue(m, 5)).rep(), 9);
    EXPECT_EQ(Residue(m, 2).pow(10).rep(), 1);
}

TEST(Residue, Inverse) {
    EXPECT_EQ(res_inv(Residue(Modulus(11), 6)).rep(), 2);
    EXPECT_EQ(res_inv(Residue(Modulus(7), 1)).rep(), 1);
    try {
        res_inv(Residue(Modulus(12), 8));
        FAIL() << "expected NoInverse";
    } catch (const NoInverse& e) {
        EXPECT_EQ(e.gcd(), 4);
    }
    EXPECT_THROW(res_inv(Residue(Modulus(5), 0)), NoInverse);
}

TEST(Residue, MixedModuliAreRejected) {
    const Residue a(Modulus(5), 1), b(Modulus(7), 1);
    EXPECT_THROW(a + b, ModulusMismatch);
    EXPECT_THROW(a * b, ModulusMismatch);
    EXPECT_FALSE(a == b);
}

TEST(ResidueProperty, AgreesWithWideIntegers) {
    std::mt19937_64 rng(20241019);
    std::uniform_int_distribution<std::int64_t> mod_dist(2, (std::int64_t{1} << 62));
    std::uniform_int_distribution<std::int64_t> val(std::numeric_limits<std::int64_t>::min() / 2,
                                                    std::numeric_limits<std::int64_t>::max() / 2);
    for (int i = 0; i < 20000; ++i) {
        const std::int64_t n = (i % 2 == 0) ? mod_dist(rng) : 2 + static_cast<std::int64_t>(rng() % 1000);
        const Modulus m(n);
        const std::int64_t x = val(rng), y = val(rng);
        const Residue rx(m, x), ry(m, y);
        const oracle::Big bx(x), by(y);
        ASSERT_EQ((rx + ry).rep(), oracle::mod(bx + by, n));
        ASSERT_EQ((rx - ry).rep(), oracle::mod(bx - by, n));
        ASSERT_EQ((rx * ry).rep(), oracle::mod(bx * by, n));
        ASSERT_EQ((-rx).rep(), oracle::mod(-bx, n));
        if (oracle::mod(bx, n) != 0 && gcd(rx.rep(), n) == 1) {
            ASSERT_EQ((res_inv(rx) * rx).rep(), 1 % n);
        }
    }
}
