#include "friezemod/mat2.hpp"

#include <ostream>
#include <vector>

#include "friezemod/errors.hpp"
#include "friezemod/number_theory.hpp"

namespace friezemod {

Mat2::Mat2(Modulus modulus, std::int64_t a11, std::int64_t a12, std::int64_t a21, std::int64_t a22)
    : modulus_(modulus),
      e_{modulus.reduce(a11), modulus.reduce(a12), modulus.reduce(a21), modulus.reduce(a22)} {}

Mat2 Mat2::identity(Modulus modulus) { return Mat2(modulus, 1, 0, 0, 1); }

Mat2 Mat2::step(Modulus modulus, std::int64_t a) { return Mat2(modulus, a, -1, 1, 0); }

Mat2 mat_mul(const Mat2& x, const Mat2& y) {
    require_same_modulus(x.modulus(), y.modulus());
    const Modulus& m = x.modulus();
    return Mat2(m, m.add(m.mul(x.at(0, 0), y.at(0, 0)), m.mul(x.at(0, 1), y.at(1, 0))),
                m.add(m.mul(x.at(0, 0), y.at(0, 1)), m.mul(x.at(0, 1), y.at(1, 1))),
                m.add(m.mul(x.at(1, 0), y.at(0, 0)), m.mul(x.at(1, 1), y.at(1, 0))),
                m.add(m.mul(x.at(1, 0), y.at(0, 1)), m.mul(x.at(1, 1), y.at(1, 1))));
}

Mat2 mat_step_left(const Mat2& x, std::int64_t a) {
    // [[a, -1], [1, 0]] * [[p, q], [r, s]] = [[a p - r, a q - s], [p, q]]
    const Modulus& m = x.modulus();
    const std::int64_t ar = m.reduce(a);
    return Mat2(m, m.sub(m.mul(ar, x.at(0, 0)), x.at(1, 0)), m.sub(m.mul(ar, x.at(0, 1)), x.at(1, 1)),
                x.at(0, 0), x.at(0, 1));
}

Mat2 mat_identity(Modulus modulus) { return Mat2::identity(modulus); }

Mat2 mat_neg(const Mat2& x) {
    const Modulus& m = x.modulus();
    return Mat2(m, m.neg(x.at(0, 0)), m.neg(x.at(0, 1)), m.neg(x.at(1, 0)), m.neg(x.at(1, 1)));
}

Residue mat_det(const Mat2& x) {
    const Modulus& m = x.modulus();
    return Residue(m, m.sub(m.mul(x.at(0, 0), x.at(1, 1)), m.mul(x.at(0, 1), x.at(1, 0))));
}

Mat2 mat_inverse_sl2(const Mat2& x) {
    if (mat_det(x).rep() != 1 % x.modulus().value()) {
        throw InputError("mat_inverse_sl2: determinant is not 1");
    }
    const Modulus& m = x.modulus();
    return Mat2(m, x.at(1, 1), m.neg(x.at(0, 1)), m.neg(x.at(1, 0)), x.at(0, 0));
}

Mat2 mat_pow(const Mat2& x, std::uint64_t e) {
    Mat2 result = Mat2::identity(x.modulus());
    for (std::uint64_t i = 0; i < e; ++i) result = mat_mul(x, result);
    return result;
}

PlusMinusId classify_pm_id(const Mat2& x) {
    PlusMinusId out;
    if (x.is_identity()) {
        out.sign = PmSign::plus;
        out.ambiguous = x.modulus().value() == 2;
    } else if (x.is_minus_identity()) {
        out.sign = PmSign::minus;
    }
    return out;
}

Mat2 m_n(const Modulus& modulus, std::span<const std::int64_t> entries) {
    if (entries.empty()) throw InputError("M_n needs at least one entry");
    Mat2 acc = Mat2::identity(modulus);
    for (std::int64_t a : entries) acc = mat_step_left(acc, a);
    if (mat_det(acc).rep() != 1 % modulus.value()) {
        throw InternalError("M_n product lost determinant one");
    }
    return acc;
}

Residue continuant(const Modulus& modulus, std::span<const std::int64_t> entries) {
    std::int64_t prev = 0;                     // K_{-1}
    std::int64_t cur = modulus.reduce(1);      // K_0
    for (std::int64_t a : entries) {
        const std::int64_t next = modulus.sub(modulus.mul(modulus.reduce(a), cur), prev);
        prev = cur;
        cur = next;
    }
    return Residue(modulus, cur);
}

Residue continuant_constant_closed_form(const Modulus& modulus, const Residue& x, std::int64_t n) {
    if (n < 0) throw InputError("continuant length must be non-negative");
    require_same_modulus(modulus, x.modulus());
    const BigInt big_n = modulus.value();
    std::int64_t sum = 0;
    for (std::int64_t k = 0; 2 * k <= n; ++k) {
        const auto c = static_cast<std::int64_t>(binomial(n - k, k) % big_n);
        std::int64_t term = modulus.mul(c, pow_mod(x.rep(), static_cast<std::uint64_t>(n - 2 * k), modulus));
        sum = (k % 2 == 0) ? modulus.add(sum, term) : modulus.sub(sum, term);
    }
    return Residue(modulus, sum);
}

Mat2 m_n_via_continuants(const Modulus& modulus, std::span<const std::int64_t> entries) {
    if (entries.empty()) throw InputError("M_n needs at least one entry");
    const std::size_t n = entries.size();
    const std::int64_t k_full = continuant(modulus, entries).rep();
    const std::int64_t k_tail = continuant(modulus, entries.subspan(1)).rep();
    const std::int64_t k_head = continuant(modulus, entries.first(n - 1)).rep();
    // K_{n-2}(a_2..a_{n-1}); for n = 1 this is the sentinel K_{-1} = 0.
    const std::int64_t k_mid = n >= 2 ? continuant(modulus, entries.subspan(1, n - 2)).rep() : 0;
    return Mat2(modulus, k_full, modulus.neg(k_tail), k_head, modulus.neg(k_mid));
}

bool continuant_sign_flip_holds(const Modulus& modulus, std::span<const std::int64_t> entries) {
    std::vector<std::int64_t> negated;
    negated.reserve(entries.size());
    for (std::int64_t a : entries) negated.push_back(modulus.neg(modulus.reduce(a)));
    const Residue lhs = continuant(modulus, entries);
    Residue rhs = continuant(modulus, negated);
    if (entries.size() % 2 == 1) rhs = -rhs;
    return lhs == rhs;
}

std::ostream& operator<<(std::ostream& os, const Mat2& x) {
    return os << "[[" << x.at(0, 0) << ',' << x.at(0, 1) << "],[" << x.at(1, 0) << ',' << x.at(1, 1)
              << "]]";
}

}  // namespace friezemod
