#include "friezemod/number_theory.hpp"

#include <array>

#include "friezemod/errors.hpp"

namespace friezemod {

namespace {

std::uint64_t mul_mod_u(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod_u(std::uint64_t base, std::uint64_t e, std::uint64_t m) noexcept {
    std::uint64_t result = 1 % m;
    base %= m;
    while (e > 0) {
        if (e & 1) result = mul_mod_u(result, base, m);
        base = mul_mod_u(base, base, m);
        e >>= 1;
    }
    return result;
}

void require_odd_prime_unit(std::int64_t a, std::int64_t p) {
    if (p < 3 || !is_prime(p)) {
        throw InputError("Legendre symbol needs an odd prime, got " + std::to_string(p));
    }
    if (a % p == 0) {
        throw InputError("Legendre symbol undefined: " + std::to_string(p) + " divides " +
                         std::to_string(a));
    }
}

int minus_one_power(std::int64_t e) noexcept { return (e % 2 == 0) ? 1 : -1; }

// (a/p) for 0 < a < p, p an odd prime.
int reciprocity_symbol(std::int64_t a, std::int64_t p) {
    int result = 1;
    std::int64_t previous = 0;
    int multiplicity = 0;
    auto flush = [&](std::int64_t q, int count) {
        if (count % 2 == 0) return;  // squares contribute +1
        if (q == 2) {
            // second supplement
            const std::int64_t r = p % 8;
            result *= (r == 1 || r == 7) ? 1 : -1;
        } else {
            // reciprocity: (q/p)(p/q) = (-1)^((p-1)/2 * (q-1)/2)
            const int flip = minus_one_power(((p - 1) / 2) * ((q - 1) / 2));
            result *= flip * reciprocity_symbol(p % q, q);
        }
    };
    for (std::int64_t q : factor(a)) {
        if (q == previous) {
            ++multiplicity;
            continue;
        }
        if (previous != 0) flush(previous, multiplicity);
        previous = q;
        multiplicity = 1;
    }
    if (previous != 0) flush(previous, multiplicity);
    return result;
}

}  // namespace

bool is_prime(std::int64_t n) noexcept {
    if (n < 2) return false;
    constexpr std::array<std::uint64_t, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (std::uint64_t b : bases) {
        if (static_cast<std::uint64_t>(n) == b) return true;
        if (static_cast<std::uint64_t>(n) % b == 0) return false;
    }
    const auto m = static_cast<std::uint64_t>(n);
    std::uint64_t d = m - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t b : bases) {
        std::uint64_t x = pow_mod_u(b, d, m);
        if (x == 1 || x == m - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod_u(x, x, m);
            if (x == m - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::int64_t> primes_between(std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> out;
    for (std::int64_t n = lo < 2 ? 2 : lo; n <= hi; ++n) {
        if (is_prime(n)) out.push_back(n);
    }
    return out;
}

std::vector<std::int64_t> factor(std::int64_t n) {
    if (n < 1) throw InputError("factor: expected a positive integer");
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d <= n / d; ++d) {
        while (n % d == 0) {
            out.push_back(d);
            n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::int64_t pow_mod(std::int64_t base, std::uint64_t exponent, const Modulus& m) noexcept {
    return static_cast<std::int64_t>(
        pow_mod_u(static_cast<std::uint64_t>(m.reduce(base)), exponent,
                  static_cast<std::uint64_t>(m.value())));
}

bool is_square(const Residue& x) {
    const Modulus& m = x.modulus();
    if (x.is_zero()) return true;
    if (m.is_prime()) {
        if (m.value() == 2) return true;
        return pow_mod(x.rep(), static_cast<std::uint64_t>((m.value() - 1) / 2), m) == 1;
    }
    for (std::int64_t y = 0; y < m.value(); ++y) {
        if (m.mul(y, y) == x.rep()) return true;
    }
    return false;
}

std::optional<std::int64_t> sqrt_mod_prime(std::int64_t a, std::int64_t p) {
    const Modulus m(p);
    a = m.reduce(a);
    if (a == 0) return 0;
    if (p == 2) return a;
    const auto half = static_cast<std::uint64_t>((p - 1) / 2);
    if (pow_mod(a, half, m) != 1) return std::nullopt;
    // p - 1 = q 2^s with q odd
    std::int64_t q = p - 1;
    int s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    std::int64_t z = 2;
    while (pow_mod(z, half, m) != p - 1) ++z;
    std::int64_t c = pow_mod(z, static_cast<std::uint64_t>(q), m);
    std::int64_t x = pow_mod(a, static_cast<std::uint64_t>((q + 1) / 2), m);
    std::int64_t t = pow_mod(a, static_cast<std::uint64_t>(q), m);
    int level = s;
    while (t != 1) {
        int i = 0;
        std::int64_t t2 = t;
        while (t2 != 1) {
            t2 = m.mul(t2, t2);
            ++i;
        }
        std::int64_t b = c;
        for (int j = 0; j < level - i - 1; ++j) b = m.mul(b, b);
        x = m.mul(x, b);
        c = m.mul(b, b);
        t = m.mul(t, c);
        level = i;
    }
    return x;
}

LegendreValue legendre(std::int64_t a, std::int64_t p) {
    require_odd_prime_unit(a, p);
    const Modulus m(p);
    const std::int64_t e = pow_mod(a, static_cast<std::uint64_t>((p - 1) / 2), m);
    return e == 1 ? LegendreValue::plus_one : LegendreValue::minus_one;
}

LegendreValue legendre_via_reciprocity(std::int64_t a, std::int64_t p) {
    require_odd_prime_unit(a, p);
    int sign = 1;
    if (a < 0) {
        // first supplement: (-1/p) = (-1)^((p-1)/2)
        sign = minus_one_power((p - 1) / 2);
        a = -(a % p);
    }
    a %= p;
    const int value = sign * reciprocity_symbol(a, p);
    return value == 1 ? LegendreValue::plus_one : LegendreValue::minus_one;
}

bool three_is_square(std::int64_t p) {
    if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
    if (p == 2 || p == 3) return true;
    const std::int64_t r = p % 12;
    return r == 1 || r == 11;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (n < 0) throw InputError("binomial: n must be non-negative");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

bool check_binomial_divisibility(std::int64_t n, std::int64_t k) {
    if (n < 1 || k < 1 || k > n) {
        throw InputError("check_binomial_divisibility: need n >= 1 and 1 <= k <= n");
    }
    const BigInt divisor = n / gcd(n, k);
    return binomial(n, k) % divisor == 0;
}

bool check_prime_power_binomial_divisibility(std::int64_t l, std::int64_t n, std::int64_t j) {
    if (l < 2 || n < 3 || j < 2 || j > n - 1) {
        throw InputError("need l >= 2, n >= 3 and 2 <= j <= n-1");
    }
    const BigInt top = 2 * boost::multiprecision::pow(BigInt(l), static_cast<unsigned>(n - 2));
    const BigInt divisor = boost::multiprecision::pow(BigInt(l), static_cast<unsigned>(n - j));
    // C(top, j) with a big top: multiply the falling factorial, divide by j! at each step.
    BigInt c = 1;
    for (std::int64_t i = 1; i <= j; ++i) {
        c *= top - j + i;
        c /= i;
    }
    return c % divisor == 0;
}

}  // namespace friezemod
