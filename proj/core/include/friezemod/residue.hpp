#pragma once

/**
 * @file residue.hpp
 * @brief Exact arithmetic in Z/NZ.
 *
 * A Modulus is a validated N >= 2 that also caches whether N is prime. A
 * Residue carries its modulus and a canonical representative in [0, N-1];
 * every operation renormalizes, so two residues compare equal exactly when
 * their moduli and representatives do.
 *
 * Products go through 128-bit intermediates, so any 63-bit modulus is safe.
 */

#include <compare>
#include <cstdint>
#include <iosfwd>

namespace friezemod {

class Modulus {
public:
    explicit Modulus(std::int64_t value);

    std::int64_t value() const noexcept { return value_; }
    bool is_prime() const noexcept { return prime_; }

    // Canonical representative of x + NZ.
    std::int64_t reduce(std::int64_t x) const noexcept {
        std::int64_t r = x % value_;
        return r < 0 ? r + value_ : r;
    }

    // The following assume canonical operands.
    std::int64_t add(std::int64_t a, std::int64_t b) const noexcept {
        std::int64_t s = a - (value_ - b);
        return s < 0 ? s + value_ : s;
    }
    std::int64_t sub(std::int64_t a, std::int64_t b) const noexcept {
        std::int64_t s = a - b;
        return s < 0 ? s + value_ : s;
    }
    std::int64_t neg(std::int64_t a) const noexcept { return a == 0 ? 0 : value_ - a; }
    std::int64_t mul(std::int64_t a, std::int64_t b) const noexcept {
        return static_cast<std::int64_t>(static_cast<__int128>(a) * b % value_);
    }

    // Representative in (-N/2, N/2].
    std::int64_t balanced(std::int64_t canonical) const noexcept {
        return canonical > value_ / 2 ? canonical - value_ : canonical;
    }

    friend bool operator==(const Modulus& a, const Modulus& b) noexcept { return a.value_ == b.value_; }

private:
    std::int64_t value_;
    bool prime_;
};

class Residue {
public:
    Residue(Modulus modulus, std::int64_t value) : modulus_(modulus), rep_(modulus.reduce(value)) {}

    const Modulus& modulus() const noexcept { return modulus_; }
    std::int64_t rep() const noexcept { return rep_; }
    std::int64_t balanced() const noexcept { return modulus_.balanced(rep_); }
    bool is_zero() const noexcept { return rep_ == 0; }

    Residue pow(std::uint64_t exponent) const;

    friend Residue operator+(const Residue& x, const Residue& y);
    friend Residue operator-(const Residue& x, const Residue& y);
    friend Residue operator*(const Residue& x, const Residue& y);
    friend Residue operator-(const Residue& x);

    Residue& operator+=(const Residue& y) { return *this = *this + y; }
    Residue& operator-=(const Residue& y) { return *this = *this - y; }
    Residue& operator*=(const Residue& y) { return *this = *this * y; }

    friend bool operator==(const Residue& x, const Residue& y) noexcept {
        return x.modulus_ == y.modulus_ && x.rep_ == y.rep_;
    }

private:
    Modulus modulus_;
    std::int64_t rep_;
};

Residue res_add(const Residue& x, const Residue& y);
Residue res_mul(const Residue& x, const Residue& y);
Residue res_neg(const Residue& x);

// Throws NoInverse (carrying gcd(x, N)) when x is not a unit.
Residue res_inv(const Residue& x);

// Throws ModulusMismatch unless both operands live in the same ring.
void require_same_modulus(const Modulus& a, const Modulus& b);

std::int64_t gcd(std::int64_t a, std::int64_t b) noexcept;

std::ostream& operator<<(std::ostream& os, const Residue& x);

}  // namespace friezemod
