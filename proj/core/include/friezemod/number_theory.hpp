#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <vector>

#include "friezemod/residue.hpp"

namespace friezemod {

using BigInt = boost::multiprecision::cpp_int;

// Quadratic character of a unit modulo an odd prime.
enum class LegendreValue : int { minus_one = -1, plus_one = 1 };

inline int to_int(LegendreValue v) noexcept { return static_cast<int>(v); }

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::int64_t n) noexcept;

// Primes in [lo, hi], ascending.
std::vector<std::int64_t> primes_between(std::int64_t lo, std::int64_t hi);

// Prime factorization by trial division, ascending with multiplicity. n >= 1.
std::vector<std::int64_t> factor(std::int64_t n);

std::int64_t pow_mod(std::int64_t base, std::uint64_t exponent, const Modulus& m) noexcept;

// Whether x is a square in Z/NZ. Prime moduli use Euler's criterion; composite
// moduli scan every residue.
bool is_square(const Residue& x);

// A square root of a modulo an odd prime p (Tonelli-Shanks), or nullopt for a non-square.
std::optional<std::int64_t> sqrt_mod_prime(std::int64_t a, std::int64_t p);

// Euler's criterion: a^((p-1)/2) mod p. Requires p an odd prime and p not dividing a.
LegendreValue legendre(std::int64_t a, std::int64_t p);

// Same symbol computed by factoring a and applying multiplicativity, the two
// supplementary laws and quadratic reciprocity. The second supplement
// (2/p) = (-1)^((p^2-1)/8) is the standard fact; it is not derived here.
LegendreValue legendre_via_reciprocity(std::int64_t a, std::int64_t p);

// 3 is a square mod p  <=>  p in {2, 3} or p = +-1 (mod 12).
bool three_is_square(std::int64_t p);

// Exact C(n, k); zero when k lies outside [0, n].
BigInt binomial(std::int64_t n, std::int64_t k);

// n / gcd(n, k) divides C(n, k), for n >= 1 and 1 <= k <= n.
bool check_binomial_divisibility(std::int64_t n, std::int64_t k);

// l^(n-j) divides C(2 l^(n-2), j), for l >= 2, n >= 3 and 2 <= j <= n-1.
bool check_prime_power_binomial_divisibility(std::int64_t l, std::int64_t n, std::int64_t j);

}  // namespace friezemod
