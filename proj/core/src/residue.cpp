#include "friezemod/residue.hpp"

#include <ostream>

#include "friezemod/errors.hpp"
#include "friezemod/number_theory.hpp"

namespace friezemod {

Modulus::Modulus(std::int64_t value) : value_(value), prime_(false) {
    if (value < 2) {
        throw InputError("modulus must be at least 2, got " + std::to_string(value));
    }
    prime_ = friezemod::is_prime(value);
}

void require_same_modulus(const Modulus& a, const Modulus& b) {
    if (!(a == b)) throw ModulusMismatch(a.value(), b.value());
}

Residue Residue::pow(std::uint64_t exponent) const {
    return Residue(modulus_, pow_mod(rep_, exponent, modulus_));
}

Residue operator+(const Residue& x, const Residue& y) {
    require_same_modulus(x.modulus_, y.modulus_);
    return Residue(x.modulus_, x.modulus_.add(x.rep_, y.rep_));
}

Residue operator-(const Residue& x, const Residue& y) {
    require_same_modulus(x.modulus_, y.modulus_);
    return Residue(x.modulus_, x.modulus_.sub(x.rep_, y.rep_));
}

Residue operator*(const Residue& x, const Residue& y) {
    require_same_modulus(x.modulus_, y.modulus_);
    return Residue(x.modulus_, x.modulus_.mul(x.rep_, y.rep_));
}

Residue operator-(const Residue& x) { return Residue(x.modulus_, x.modulus_.neg(x.rep_)); }

Residue res_add(const Residue& x, const Residue& y) { return x + y; }
Residue res_mul(const Residue& x, const Residue& y) { return x * y; }
Residue res_neg(const Residue& x) { return -x; }

std::int64_t gcd(std::int64_t a, std::int64_t b) noexcept {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b != 0) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Residue res_inv(const Residue& x) {
    const std::int64_t n = x.modulus().value();
    // Extended Euclid on (rep, N), tracking only the coefficient of rep.
    __int128 old_r = x.rep(), r = n;
    __int128 old_s = 1, s = 0;
    while (r != 0) {
        __int128 q = old_r / r;
        __int128 t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1) {
        throw NoInverse(x.rep(), n, static_cast<std::int64_t>(old_r));
    }
    return Residue(x.modulus(), static_cast<std::int64_t>(old_s % n));
}

std::ostream& operator<<(std::ostream& os, const Residue& x) { return os << x.rep(); }

}  // namespace friezemod
